#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torusforge/matrix.hpp"

namespace torusforge {

/// Univariate polynomial over Q, coefficients stored lowest degree first with
/// no trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly monomial(const Rational& c, std::size_t degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Poly monic() const;
    Poly derivative() const;
    Rational operator()(const Rational& x) const;
    RatMatrix operator()(const RatMatrix& m) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
/// p / gcd(p, p'), made monic.
Poly squarefree_part(const Poly& p);

}  // namespace torusforge
