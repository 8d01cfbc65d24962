#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torusforge/algebra.hpp"
#include "torusforge/construct.hpp"

namespace torusforge {

// Algfile: {"name", "kind", "even_basis", "odd_basis", "brackets": [{"left", "right", "value": [[coef, name]]}]}

Algebra parse_algebra(std::string_view text, bool require_valid = true);
Algebra load_algebra(const std::string& path, bool require_valid = true);
/// Canonical text: two-space indent, keys in storage order, trailing newline.
std::string serialize_algebra(const Algebra& a);

RatMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const RatMatrix& m);
std::vector<RatMatrix> parse_matrix_list(std::string_view text);
std::string serialize_matrix_list(const std::vector<RatMatrix>& ms);

// {"name", "kind": "comm-assoc", "basis", "products": [{"left", "right", "value"}]}
CommAssocAlgebra parse_comm_assoc(std::string_view text);
std::string serialize_comm_assoc(const CommAssocAlgebra& c);

/// {"action": [{"left", "right", "value"}]} with one side from A, the other from B, value in B.
CrossAction parse_cross_action(std::string_view text, const Algebra& a, const Algebra& b);
std::string serialize_cross_action(const CrossAction& action, const Algebra& a, const Algebra& b);

/// {"vectors": [[[coef, name], ...], ...]}
std::vector<RatVector> parse_vectors(std::string_view text, const Algebra& a);
std::string serialize_vectors(const std::vector<RatVector>& vs, const Algebra& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// FNV-1a 64-bit, 16 lowercase hex digits.
std::string digest(std::string_view bytes);

}  // namespace torusforge
