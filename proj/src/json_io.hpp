#pragma once

#include <string>

#include "json.hpp"
#include "torusforge/algebra.hpp"

namespace torusforge::io {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
Json to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, bool require_valid);
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, const std::string& where);
Json to_json(const RatVector& v);
Json terms_json(const TermList& t, const std::vector<std::string>& names);
Json vector_terms_json(const RatVector& v, const std::vector<std::string>& names);
std::string dump(const Json& j);

}  // namespace torusforge::io
