#include "torusforge/algfile.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json_io.hpp"
#include "torusforge/error.hpp"

namespace torusforge {

namespace io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::string string_of(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> names_of(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of names");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(string_of(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (auto a : allowed) ok = ok || it.key() == a;
        if (!ok) fail(where, "unknown key \"" + it.key() + "\"");
    }
}

Rational coefficient(const Json& j, const std::string& where) {
    std::string s = string_of(j, where);
    try {
        return Rational::parse_canonical(s);
    } catch (const Error&) {
        fail(where, "non-canonical coefficient \"" + s + "\"");
    }
}

using NameIndex = std::map<std::string, std::size_t>;

NameIndex index_names(const std::vector<std::string>& names, const std::string& where) {
    NameIndex idx;
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k].empty()) fail(where, "empty basis name");
        if (!idx.emplace(names[k], k).second) fail(where, "duplicate basis name \"" + names[k] + "\"");
    }
    return idx;
}

std::size_t lookup(const NameIndex& idx, const Json& j, const std::string& where) {
    std::string s = string_of(j, where);
    auto it = idx.find(s);
    if (it == idx.end()) fail(where, "unknown basis name \"" + s + "\"");
    return it->second;
}

TermList terms_from_json(const Json& j, const NameIndex& idx, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of [coefficient, name]");
    TermList out;
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::string w = where + "[" + std::to_string(k) + "]";
        if (!j[k].is_array() || j[k].size() != 2) fail(w, "expected [coefficient, name]");
        Rational c = coefficient(j[k][0], w);
        if (c.is_zero()) fail(w, "zero coefficient");
        std::size_t i = lookup(idx, j[k][1], w);
        if (!seen.insert(i).second) fail(w, "repeated basis name in one value");
        out.push_back({c, i});
    }
    return out;
}

struct PairEntry {
    std::size_t left, right;
    TermList value;
};

std::vector<PairEntry> pairs_from_json(const Json& j, const NameIndex& left_idx, const NameIndex& right_idx,
                                       const NameIndex& value_idx, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    std::vector<PairEntry> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::string w = where + "[" + std::to_string(k) + "]";
        check_keys(j[k], {"left", "right", "value"}, w);
        std::size_t l = lookup(left_idx, field(j[k], "left", w), w + ".left");
        std::size_t r = lookup(right_idx, field(j[k], "right", w), w + ".right");
        out.push_back({l, r, terms_from_json(field(j[k], "value", w), value_idx, w + ".value")});
    }
    return out;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json terms_json(const TermList& t, const std::vector<std::string>& names) {
    Json v = Json::array();
    for (const auto& term : t) v.push_back(Json::array({term.coeff.str(), names[term.index]}));
    return v;
}

Json vector_terms_json(const RatVector& v, const std::vector<std::string>& names) {
    return terms_json(to_terms(v), names);
}

Json to_json(const Algebra& a) {
    Json j;
    j["name"] = a.name();
    j["kind"] = to_string(a.kind());
    j["even_basis"] = a.even_basis();
    j["odd_basis"] = a.odd_basis();
    Json br = Json::array();
    for (const auto& [key, value] : a.table()) {
        Json e;
        e["left"] = a.basis_name(key.first);
        e["right"] = a.basis_name(key.second);
        e["value"] = terms_json(value, a.basis_names());
        br.push_back(std::move(e));
    }
    j["brackets"] = std::move(br);
    return j;
}

Algebra algebra_from_json(const Json& j, bool require_valid) {
    const std::string root = "algfile";
    if (!j.is_object()) fail(root, "expected an object");
    check_keys(j, {"name", "kind", "even_basis", "odd_basis", "brackets"}, root);
    std::string name = string_of(field(j, "name", root), "name");
    std::string kind_s = string_of(field(j, "kind", root), "kind");
    AlgebraKind kind;
    if (kind_s == "lie")
        kind = AlgebraKind::Lie;
    else if (kind_s == "lie-super")
        kind = AlgebraKind::LieSuper;
    else
        fail("kind", "expected \"lie\" or \"lie-super\"");
    auto even = names_of(field(j, "even_basis", root), "even_basis");
    std::vector<std::string> odd;
    if (j.contains("odd_basis")) odd = names_of(j["odd_basis"], "odd_basis");
    if (kind == AlgebraKind::Lie && !odd.empty())
        throw Error(ErrorCode::GradingError, "odd_basis: a plain Lie algebra has no odd part");
    std::vector<std::string> all = even;
    all.insert(all.end(), odd.begin(), odd.end());
    NameIndex idx = index_names(all, "basis");
    Algebra a(name, kind, even, odd);

    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto entries = pairs_from_json(field(j, "brackets", root), idx, idx, idx, "brackets");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        std::string w = "brackets[" + std::to_string(k) + "]";
        if (e.left == e.right && a.parity(e.left) == 0)
            fail(w, "diagonal bracket of an even element (antisymmetry forces zero)");
        auto key = std::minmax(e.left, e.right);
        if (!seen.insert(key).second) fail(w, "pair already given (duplicate or both orientations)");
        a.set_bracket(e.left, e.right, e.value);
    }
    if (require_valid) {
        auto rep = validate(a);
        if (!rep.valid()) throw Error(ErrorCode::ValidationError, rep.violations.front().describe(a));
    }
    return a;
}

Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const RatVector& v) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(x.str());
    return row;
}

RatMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<RatVector> rs;
    for (std::size_t r = 0; r < rows; ++r) {
        std::string w = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array()) fail(w, "expected a row array");
        if (r == 0) cols = j[r].size();
        if (j[r].size() != cols) fail(w, "ragged matrix");
        RatVector row;
        for (std::size_t c = 0; c < cols; ++c) row.push_back(coefficient(j[r][c], w + "[" + std::to_string(c) + "]"));
        rs.push_back(std::move(row));
    }
    return RatMatrix::from_rows(rs, cols);
}

}  // namespace io

using namespace io;

Algebra parse_algebra(std::string_view text, bool require_valid) {
    return algebra_from_json(parse_json(text), require_valid);
}

Algebra load_algebra(const std::string& path, bool require_valid) { return parse_algebra(read_file(path), require_valid); }

std::string serialize_algebra(const Algebra& a) { return dump(to_json(a)); }

RatMatrix parse_matrix(std::string_view text) { return matrix_from_json(parse_json(text), "matrix"); }

std::string serialize_matrix(const RatMatrix& m) { return dump(to_json(m)); }

std::vector<RatMatrix> parse_matrix_list(std::string_view text) {
    Json j = parse_json(text);
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrices: expected an array of matrices");
    std::vector<RatMatrix> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(matrix_from_json(j[k], "matrices[" + std::to_string(k) + "]"));
    return out;
}

std::string serialize_matrix_list(const std::vector<RatMatrix>& ms) {
    Json j = Json::array();
    for (const auto& m : ms) j.push_back(to_json(m));
    return dump(j);
}

CommAssocAlgebra parse_comm_assoc(std::string_view text) {
    Json j = parse_json(text);
    const std::string root = "comm-assoc";
    check_keys(j, {"name", "kind", "basis", "products"}, root);
    if (string_of(field(j, "kind", root), "kind") != "comm-assoc") fail("kind", "expected \"comm-assoc\"");
    std::string name = string_of(field(j, "name", root), "name");
    auto basis = names_of(field(j, "basis", root), "basis");
    NameIndex idx = index_names(basis, "basis");
    std::map<std::pair<std::size_t, std::size_t>, TermList> products;
    auto entries = pairs_from_json(field(j, "products", root), idx, idx, idx, "products");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        auto key = std::minmax(entries[k].left, entries[k].right);
        if (!products.emplace(key, entries[k].value).second)
            fail("products[" + std::to_string(k) + "]", "pair already given");
    }
    return CommAssocAlgebra(name, basis, products);
}

std::string serialize_comm_assoc(const CommAssocAlgebra& c) {
    Json j;
    j["name"] = c.name();
    j["kind"] = "comm-assoc";
    j["basis"] = c.basis_names();
    Json pr = Json::array();
    for (const auto& [key, value] : c.table()) {
        Json e;
        e["left"] = c.basis_names()[key.first];
        e["right"] = c.basis_names()[key.second];
        e["value"] = terms_json(value, c.basis_names());
        pr.push_back(std::move(e));
    }
    j["products"] = std::move(pr);
    return dump(j);
}

CrossAction parse_cross_action(std::string_view text, const Algebra& a, const Algebra& b) {
    Json j = parse_json(text);
    check_keys(j, {"action"}, "cross-action");
    NameIndex both, ai = index_names(a.basis_names(), "acting basis"), bi = index_names(b.basis_names(), "acted basis");
    // Left/right may come from either side; names are resolved into the union, A first.
    for (const auto& [k, v] : ai) both.emplace(k, v);
    for (const auto& [k, v] : bi)
        if (!both.emplace(k, a.dim() + v).second) fail("cross-action", "basis name \"" + k + "\" occurs in both algebras");
    auto entries = pairs_from_json(field(j, "action", "cross-action"), both, both, bi, "action");
    CrossAction out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        auto e = entries[k];
        std::string w = "action[" + std::to_string(k) + "]";
        const bool l_in_a = e.left < a.dim(), r_in_a = e.right < a.dim();
        if (l_in_a == r_in_a) fail(w, "an entry needs one element of each algebra");
        if (l_in_a) {
            out.push_back({e.left, e.right - a.dim(), e.value});
        } else {
            // [b, a] = -(-1)^{|a||b|} [a, b]
            std::size_t ia = e.right, ib = e.left - a.dim();
            Rational s = (a.parity(ia) && b.parity(ib)) ? Rational(1) : Rational(-1);
            for (auto& t : e.value) t.coeff *= s;
            out.push_back({ia, ib, e.value});
        }
    }
    return out;
}

std::string serialize_cross_action(const CrossAction& action, const Algebra& a, const Algebra& b) {
    Json arr = Json::array();
    for (const auto& e : action) {
        Json x;
        x["left"] = a.basis_name(e.acting);
        x["right"] = b.basis_name(e.acted);
        x["value"] = terms_json(e.value, b.basis_names());
        arr.push_back(std::move(x));
    }
    Json j;
    j["action"] = std::move(arr);
    return dump(j);
}

std::vector<RatVector> parse_vectors(std::string_view text, const Algebra& a) {
    Json j = parse_json(text);
    check_keys(j, {"vectors"}, "vectors");
    const Json& vs = field(j, "vectors", "vectors");
    if (!vs.is_array()) fail("vectors", "expected an array");
    NameIndex idx = index_names(a.basis_names(), "basis");
    std::vector<RatVector> out;
    for (std::size_t k = 0; k < vs.size(); ++k)
        out.push_back(to_vector(terms_from_json(vs[k], idx, "vectors[" + std::to_string(k) + "]"), a.dim()));
    return out;
}

std::string serialize_vectors(const std::vector<RatVector>& vs, const Algebra& a) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(vector_terms_json(v, a.basis_names()));
    Json j;
    j["vectors"] = std::move(arr);
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot read file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Usage, path + ": cannot write file");
    out << text;
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace torusforge
