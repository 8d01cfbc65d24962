#include "torusforge/rational.hpp"

#include <cctype>

#include "torusforge/error.hpp"

namespace torusforge {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// No leading zeros, no "-0".
bool is_canonical_integer(std::string_view s, bool allow_sign) {
    if (!is_integer_literal(s, allow_sign)) return false;
    std::string_view digits = (s[0] == '-') ? s.substr(1) : s;
    if (digits.size() > 1 && digits[0] == '0') return false;
    if (s[0] == '-' && digits == "0") return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::parse_canonical(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_canonical_integer(num, true))
        throw Error(ErrorCode::ParseError, "non-canonical rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!is_canonical_integer(den, false))
            throw Error(ErrorCode::ParseError, "non-canonical rational '" + std::string(text) + "'");
    }
    Rational r = parse(text);
    if (r.str() != text)
        throw Error(ErrorCode::ParseError, "non-canonical rational '" + std::string(text) + "'");
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::ValidationError: return "VALIDATION_ERROR";
        case ErrorCode::GradingError: return "GRADING_ERROR";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::IrrationalSpectrum: return "IRRATIONAL_SPECTRUM";
        case ErrorCode::NotNilpotent: return "NOT_NILPOTENT";
        case ErrorCode::NotAnIdeal: return "NOT_AN_IDEAL";
        case ErrorCode::NotDerivation: return "NOT_DERIVATION";
        case ErrorCode::NotCommuting: return "NOT_COMMUTING";
        case ErrorCode::NotTriangular: return "NOT_TRIANGULAR";
        case ErrorCode::JacobiFailure: return "JACOBI_FAILURE";
        case ErrorCode::WrongKind: return "WRONG_KIND";
        case ErrorCode::DimensionGuard: return "DIMENSION_GUARD";
        case ErrorCode::ZeroTorus: return "ZERO_TORUS";
        case ErrorCode::InconsistentCorrection: return "INCONSISTENT_CORRECTION";
        case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
        case ErrorCode::Usage: return "USAGE";
    }
    return "UNKNOWN";
}

}  // namespace torusforge
