#include "torusforge/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "torusforge/algfile.hpp"
#include "torusforge/cohom.hpp"
#include "torusforge/construct.hpp"
#include "torusforge/deriv.hpp"
#include "torusforge/dld.hpp"
#include "torusforge/error.hpp"
#include "torusforge/torus.hpp"

namespace torusforge {

namespace {

using io::Json;

struct Options {
    std::string command;
    std::vector<std::string> inputs;
    std::string output;
    std::string torus_file;
    std::string batch_dir;
    std::string ideal_file;
    std::string action_file;
    std::string names;
    std::string name;
    std::optional<unsigned> degree;
    std::optional<std::size_t> nilradical_dim;
};

struct Outcome {
    int exit = 0;
    Json report;
    std::string log;
};

Json names_json(const Algebra& a, const std::vector<std::size_t>& idx) {
    Json j = Json::array();
    for (auto i : idx) j.push_back(a.basis_name(i));
    return j;
}

Json matrices_json(const std::vector<RatMatrix>& ms) {
    Json j = Json::array();
    for (const auto& m : ms) j.push_back(io::to_json(m));
    return j;
}

Json header(const Options& o, const std::string& input, const std::string& bytes) {
    Json j;
    j["command"] = o.command;
    j["input"] = input;
    j["input_digest"] = digest(bytes);
    return j;
}

Json subspace_json(const Subspace& s, const Algebra& a) {
    Json j = Json::array();
    for (const auto& v : s.basis()) j.push_back(io::vector_terms_json(v, a.basis_names()));
    return j;
}

Json sizes_json(const std::vector<std::size_t>& v) {
    Json j = Json::array();
    for (auto x : v) j.push_back(x);
    return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json fingerprint_json(const Fingerprint& f) {
    Json j;
    j["dim"] = f.dim;
    j["lower_central"] = sizes_json(f.lower_central);
    j["derived"] = sizes_json(f.derived);
    j["center"] = f.center;
    j["der_even"] = f.der_even;
    j["der_odd"] = f.der_odd;
    j["inner"] = f.inner;
    j["h1"] = optional_json(f.h1);
    j["h2"] = optional_json(f.h2);
    j["nilradical_rank"] = optional_json(f.nilradical_rank);
    return j;
}

Json root_json(const Root& r) { return io::to_json(r); }

std::vector<RatMatrix> torus_from_option(const Options& o, const Algebra& a) {
    if (o.torus_file.empty()) return diagonal_torus(a).basis;
    return parse_matrix_list(read_file(o.torus_file));
}

Outcome cmd_validate(const Options& o, const std::string& path, const std::string& bytes) {
    Algebra a = parse_algebra(bytes, false);
    auto rep = validate(a);
    Outcome out;
    out.report = header(o, path, bytes);
    out.report["dim"] = a.dim();
    out.report["valid"] = rep.valid();
    Json vs = Json::array();
    for (const auto& v : rep.violations) {
        Json x;
        x["kind"] = v.kind == Violation::Kind::Jacobi ? "jacobi" : v.kind == Violation::Kind::Grading ? "grading" : "antisymmetry";
        std::vector<std::size_t> idx{v.i, v.j};
        if (v.kind == Violation::Kind::Jacobi) idx.push_back(v.k);
        x["basis"] = names_json(a, idx);
        x["defect"] = io::vector_terms_json(v.defect, a.basis_names());
        x["message"] = v.describe(a);
        vs.push_back(std::move(x));
    }
    out.report["violations"] = std::move(vs);
    out.exit = rep.valid() ? 0 : 1;
    out.log = rep.valid() ? "valid" : std::to_string(rep.violations.size()) + " violation(s)";
    return out;
}

Outcome cmd_analyze(const Options& o, const std::string& path, const std::string& bytes) {
    Algebra a = parse_algebra(bytes);
    Outcome out;
    Json& r = out.report = header(o, path, bytes);
    r["name"] = a.name();
    r["kind"] = to_string(a.kind());
    r["dim"] = a.dim();
    r["even_dim"] = a.even_dim();
    r["odd_dim"] = a.odd_dim();
    auto s = series(a);
    Json sj;
    sj["lower_central"] = sizes_json(s.lower_central);
    sj["derived"] = sizes_json(s.derived);
    sj["nilpotent"] = s.nilpotent;
    sj["solvable"] = s.solvable;
    sj["nilindex"] = optional_json(s.nilindex);
    r["series"] = std::move(sj);
    r["center"] = subspace_json(center(a), a);
    r["generators"] = s.nilpotent ? names_json(a, generators(a)) : Json(nullptr);
    r["super_lie_condition"] = a.is_super() ? Json(super_lie_condition(a)) : Json(nullptr);
    r["fingerprint"] = fingerprint_json(fingerprint(a));
    out.log = "dim " + std::to_string(a.dim()) + (s.nilpotent ? ", nilpotent" : s.solvable ? ", solvable" : "");
    if (o.nilradical_dim) {
        auto nr = verify_nilradical(a, *o.nilradical_dim);
        Json n;
        n["dim"] = *o.nilradical_dim;
        n["is_ideal"] = nr.is_ideal;
        n["nilpotent"] = nr.nilpotent;
        n["solvable"] = nr.solvable;
        n["nil_independent"] = nr.nil_independent;
        n["ok"] = nr.ok();
        n["diagnosis"] = nr.diagnosis;
        n["rank"] = nr.is_ideal && nr.nilpotent ? Json(rank_of(leading_subalgebra(a, *o.nilradical_dim))) : Json(nullptr);
        r["nilradical"] = std::move(n);
        if (!nr) {
            out.exit = 1;
            out.log += "; nilradical check fails: " + nr.diagnosis;
        }
    }
    return out;
}

Outcome cmd_der(const Options& o, const std::string& path, const std::string& bytes) {
    Algebra a = parse_algebra(bytes);
    auto d = derivation_space(a);
    auto inner = inner_derivations(a);
    Outcome out;
    Json& r = out.report = header(o, path, bytes);
    r["dim_even"] = d.even.size();
    r["dim_odd"] = d.odd.size();
    r["dim_inner"] = inner.size();
    r["dim_outer"] = d.dim() - inner.size();
    r["even_basis"] = matrices_json(d.even);
    r["odd_basis"] = matrices_json(d.odd);
    out.log = "dim Der = " + std::to_string(d.dim());
    return out;
}

Outcome cmd_torus(const Options& o, const std::string& path, const std::string& bytes) {
    Algebra a = parse_algebra(bytes);
    auto s = build_s_system(a);
    auto t = diagonal_torus(a);
    Outcome out;
    Json& r = out.report = header(o, path, bytes);
    Json sj;
    sj["variables"] = s.variables;
    Json eqs = Json::array(), rows = Json::array();
    for (std::size_t k = 0; k < s.rows.size(); ++k) {
        eqs.push_back(s.row_string(k));
        Json row = Json::array();
        for (auto v : s.rows[k]) row.push_back(std::to_string(v));
        rows.push_back(std::move(row));
    }
    sj["equations"] = std::move(eqs);
    sj["rows"] = std::move(rows);
    sj["rank"] = s.rank();
    r["s_system"] = std::move(sj);
    r["dim"] = t.dim();
    Json basis = Json::array();
    for (const auto& m : t.basis) basis.push_back(io::to_json(m.diagonal_entries()));
    r["torus_diagonals"] = std::move(basis);
    r["rank_formula_holds"] = t.dim() + s.rank() == a.dim();
    out.log = "torus dim " + std::to_string(t.dim()) + ", S-system rank " + std::to_string(s.rank());
    return out;
}

Outcome cmd_roots(const Options& o, const std::string& path, const std::string& bytes) {
    Algebra a = parse_algebra(bytes);
    Torus t{torus_from_option(o, a)};
    auto rd = root_decomposition(a, t);
    Outcome out;
    Json& r = out.report = header(o, path, bytes);
    r["torus_dim"] = t.dim();
    Json table = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json e;
        e["basis"] = a.basis_name(i);
        e["root"] = root_json(rd.root_of[i]);
        table.push_back(std::move(e));
    }
    r["root_of"] = std::move(table);
    Json w = Json::array();
    for (std::size_t k = 0; k < rd.roots.size(); ++k) {
        Json e;
        e["root"] = root_json(rd.roots[k]);
        e["basis"] = names_json(a, rd.spaces[k]);
        w.push_back(std::move(e));
    }
    r["W"] = std::move(w);
    Json psi = Json::array(), psi1 = Json::array();
    for (const auto& x : rd.simple) psi.push_back(root_json(x));
    for (const auto& x : rd.primitive) psi1.push_back(root_json(x));
    r["simple"] = rd.generators_known ? std::move(psi) : Json(nullptr);
    r["primitive"] = rd.generators_known ? std::move(psi1) : Json(nullptr);
    r["zero_root"] = rd.has_zero_root();
    r["lattice_integral"] = rd.lattice_integral;
    out.log = std::to_string(rd.roots.size()) + " roots";
    return out;
}

Json dld_json(const Algebra& a, const DldReport& d) {
    Json r;
    Json ci;
    ci["pass"] = d.condition_i;
    ci["diagonal_span_dim"] = d.diagonal_span_dim;
    ci["torus_dim"] = d.torus_dim;
    ci["non_derivation"] = optional_json(d.i_non_derivation);
    r["condition_i"] = std::move(ci);
    Json cii;
    cii["pass"] = d.condition_ii;
    Json ws = Json::array();
    auto der = d.ii_witnesses.empty() ? std::vector<RatMatrix>{} : derivation_space(a).all();
    for (const auto& w : d.ii_witnesses) {
        Json x;
        x["derivation"] = w.derivation;
        x["root"] = root_json(w.root);
        x["entry"] = Json::array({a.basis_name(w.row), a.basis_name(w.col)});
        x["value"] = w.value.str();
        x["matrix"] = io::to_json(der[w.derivation]);
        ws.push_back(std::move(x));
    }
    cii["witnesses"] = std::move(ws);
    r["condition_ii"] = std::move(cii);
    Json ciii;
    ciii["pass"] = d.condition_iii;
    ciii["zero_root_basis"] = names_json(a, d.zero_root_indices);
    r["condition_iii"] = std::move(ciii);
    r["overall"] = d.overall();
    return r;
}

Outcome cmd_dld(const Options& o, const std::string& path, const std::string& bytes) {
    Algebra a = parse_algebra(bytes);
    if (!is_nilpotent(a)) throw Error(ErrorCode::NotNilpotent, "dld: algebra is not nilpotent");
    auto d = dld_check(a);
    Outcome out;
    out.report = header(o, path, bytes);
    out.report.update(dld_json(a, d));
    out.exit = d.overall() ? 0 : 1;
    std::string failed;
    if (!d.condition_i) failed += " (i)";
    if (!d.condition_ii) failed += " (ii)";
    if (!d.condition_iii) failed += " (iii)";
    out.log = d.overall() ? "d-locally diagonalizable" : "fails" + failed;
    return out;
}

Outcome cmd_extend(const Options& o, const std::string& /*path*/, const std::string& bytes) {
    Algebra a = parse_algebra(bytes);
    ExtensionWitness w = o.torus_file.empty() ? build_maximal_extension(a) : build_extension(a, torus_from_option(o, a));
    if (!o.name.empty()) w.algebra.set_name(o.name);
    Outcome out;
    out.report = io::to_json(w.algebra);
    out.log = "extension of dim " + std::to_string(w.algebra.dim()) + " (nilradical dim " +
              std::to_string(w.nilradical_dim) + ")";
    return out;
}

Outcome cmd_normalize(const Options& o, const std::string& path, const std::string& bytes) {
    if (!o.nilradical_dim) throw Error(ErrorCode::Usage, "normalize requires --nilradical-dim");
    Algebra a = parse_algebra(bytes);
    auto n = normalize_extension(a, *o.nilradical_dim);
    Outcome out;
    Json& r = out.report = header(o, path, bytes);
    r["nilradical_dim"] = *o.nilradical_dim;
    r["identity"] = n.iso == RatMatrix::identity(a.dim());
    r["isomorphism"] = io::to_json(n.iso);
    r["algebra"] = io::to_json(n.algebra);
    out.log = n.iso == RatMatrix::identity(a.dim()) ? "already normalized" : "normalized";
    return out;
}

Outcome cmd_cohomology(const Options& o, const std::string& path, const std::string& bytes) {
    if (!o.degree) throw Error(ErrorCode::Usage, "cohomology requires --degree");
    Algebra a = parse_algebra(bytes);
    std::size_t d = cohomology_dim(a, *o.degree);
    Outcome out;
    Json& r = out.report = header(o, path, bytes);
    r["degree"] = *o.degree;
    r["dim"] = d;
    out.log = "dim H^" + std::to_string(*o.degree) + " = " + std::to_string(d);
    return out;
}

Outcome cmd_compare(const Options& o) {
    if (o.inputs.size() != 2) throw Error(ErrorCode::Usage, "compare takes two algfiles");
    std::string ba = read_file(o.inputs[0]), bb = read_file(o.inputs[1]);
    Algebra a = parse_algebra(ba), b = parse_algebra(bb);
    auto fa = fingerprint(a), fb = fingerprint(b);
    auto c = compare(fa, fb);
    Outcome out;
    Json& r = out.report;
    r["command"] = o.command;
    r["inputs"] = o.inputs;
    r["input_digests"] = Json::array({digest(ba), digest(bb)});
    r["result"] = c.distinguished ? "distinguished" : "inconclusive";
    r["field"] = c.distinguished ? Json(c.field) : Json(nullptr);
    r["left"] = fingerprint_json(fa);
    r["right"] = fingerprint_json(fb);
    out.log = c.distinguished ? "distinguished by " + c.field : "inconclusive";
    return out;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

Outcome cmd_construct(const Options& o) {
    if (o.inputs.empty()) throw Error(ErrorCode::Usage, "construct needs a mode: tensor, quotient, semidirect or assemble");
    const std::string& mode = o.inputs[0];
    std::vector<std::string> files(o.inputs.begin() + 1, o.inputs.end());
    Algebra result;
    std::string log;
    if (mode == "tensor") {
        if (files.size() != 2) throw Error(ErrorCode::Usage, "construct tensor L.alg C.json");
        result = tensor_current(load_algebra(files[0]), parse_comm_assoc(read_file(files[1])), o.name);
    } else if (mode == "quotient") {
        if (files.size() != 1 || o.ideal_file.empty()) throw Error(ErrorCode::Usage, "construct quotient A.alg --ideal gens.json");
        Algebra a = load_algebra(files[0]);
        Subspace ideal = ideal_closure(a, parse_vectors(read_file(o.ideal_file), a));
        log = "ideal closure of dim " + std::to_string(ideal.dim()) + "; ";
        result = quotient(a, ideal, o.name);
    } else if (mode == "semidirect") {
        if (files.size() != 1 || o.torus_file.empty()) throw Error(ErrorCode::Usage, "construct semidirect N.alg --torus D.json");
        Algebra n = load_algebra(files[0]);
        auto ds = parse_matrix_list(read_file(o.torus_file));
        auto names = o.names.empty() ? complement_names(n, ds.size()) : split_names(o.names);
        result = semidirect_by_derivations(n, ds, names, o.name.empty() ? n.name() + "_ext" : o.name);
    } else if (mode == "assemble") {
        if (files.size() != 2 || o.action_file.empty())
            throw Error(ErrorCode::Usage, "construct assemble A.alg B.alg --action action.json");
        Algebra a = load_algebra(files[0]), b = load_algebra(files[1]);
        result = assemble(a, b, parse_cross_action(read_file(o.action_file), a, b), {}, o.name);
    } else {
        throw Error(ErrorCode::Usage, "unknown construct mode \"" + mode + "\"");
    }
    Outcome out;
    out.report = io::to_json(result);
    out.log = log + "built " + result.name() + " of dim " + std::to_string(result.dim());
    return out;
}

int exit_for(ErrorCode c) { return c == ErrorCode::ZeroTorus ? 1 : 2; }

Outcome run_file(const Options& o, const std::string& path) {
    std::string bytes = read_file(path);
    const auto& c = o.command;
    if (c == "validate") return cmd_validate(o, path, bytes);
    if (c == "analyze") return cmd_analyze(o, path, bytes);
    if (c == "der") return cmd_der(o, path, bytes);
    if (c == "torus") return cmd_torus(o, path, bytes);
    if (c == "roots") return cmd_roots(o, path, bytes);
    if (c == "dld") return cmd_dld(o, path, bytes);
    if (c == "extend") return cmd_extend(o, path, bytes);
    if (c == "normalize") return cmd_normalize(o, path, bytes);
    if (c == "cohomology") return cmd_cohomology(o, path, bytes);
    throw Error(ErrorCode::Usage, "unknown command " + c);
}

Outcome guarded(const Options& o, const std::string& label, const std::function<Outcome()>& f) {
    try {
        return f();
    } catch (const Error& e) {
        Outcome out;
        out.report["command"] = o.command;
        out.report["input"] = label;
        out.report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        out.exit = exit_for(e.code());
        out.log = std::string(to_string(e.code())) + ": " + e.what();
        return out;
    }
}

int emit(const Options& o, const Outcome& r, std::ostream& out) {
    std::string text = io::dump(r.report);
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);
    return r.exit;
}

int run_batch(const Options& o, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(o.batch_dir, ec))
        if (e.is_regular_file() && e.path().extension() == ".alg") files.push_back(e.path().string());
    if (ec) throw Error(ErrorCode::Usage, o.batch_dir + ": cannot list directory");
    std::sort(files.begin(), files.end());
    std::vector<std::future<Outcome>> jobs;
    for (const auto& f : files)
        jobs.push_back(std::async(std::launch::async, [&o, f] { return guarded(o, f, [&] { return run_file(o, f); }); }));
    Json batch = Json::object();
    int code = 0;
    for (std::size_t k = 0; k < files.size(); ++k) {
        Outcome r = jobs[k].get();
        err << "torusforge " << o.command << " " << files[k] << ": " << r.log << "\n";
        std::string key = r.report.contains("input_digest") ? r.report["input_digest"].get<std::string>()
                                                            : digest(read_file(files[k]));
        Json e;
        e["file"] = files[k];
        e["exit"] = r.exit;
        e["report"] = std::move(r.report);
        batch[key] = std::move(e);
        code = std::max(code, r.exit);
    }
    Outcome all;
    all.report["command"] = o.command;
    all.report["batch"] = std::move(batch);
    all.exit = code;
    return emit(o, all, out);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for nilpotent Lie algebras, maximal tori and solvable extensions", "torusforge"};
    app.require_subcommand(1);
    Options o;
    unsigned degree = 0;
    std::size_t m = 0;

    struct Spec {
        const char* name;
        const char* help;
        int inputs;  // 1 = one algfile, -1 = several
    };
    const Spec specs[] = {
        {"validate", "check antisymmetry, grading and the Jacobi identity", 1},
        {"analyze", "series, center, generators and invariants", 1},
        {"der", "derivation algebra", 1},
        {"torus", "S-system and diagonal torus", 1},
        {"roots", "root decomposition", 1},
        {"dld", "d-local diagonalizability", 1},
        {"extend", "maximal solvable extension", 1},
        {"normalize", "normal form of an extension", 1},
        {"cohomology", "adjoint cohomology dimension", 1},
        {"compare", "separate two algebras by invariants", -1},
        {"construct", "tensor | quotient | semidirect | assemble", -1},
    };
    std::vector<CLI::App*> subs;
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        subs.push_back(sub);
        sub->add_option("inputs", o.inputs, "input files");
        sub->add_option("--output", o.output, "write the JSON output to a file");
        if (s.inputs == 1) sub->add_option("--batch", o.batch_dir, "process every .alg file in a directory");
        std::string n = s.name;
        if (n == "cohomology") sub->add_option("--degree", degree, "cohomology degree (0-3)")->required();
        if (n == "normalize" || n == "analyze") sub->add_option("--nilradical-dim", m, "dimension of the nilradical block");
        if (n == "roots" || n == "extend" || n == "construct") sub->add_option("--torus", o.torus_file, "JSON list of matrices");
        if (n == "construct") {
            sub->add_option("--ideal", o.ideal_file, "ideal generators");
            sub->add_option("--action", o.action_file, "cross action");
            sub->add_option("--names", o.names, "comma-separated complement names");
        }
        if (n == "construct" || n == "extend") sub->add_option("--name", o.name, "name of the result");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "torusforge: " << e.what() << "\n";
        return 2;
    }
    for (auto* sub : subs)
        if (sub->parsed()) {
            o.command = sub->get_name();
            if (auto* opt = sub->get_option_no_throw("--degree"); opt && opt->count()) o.degree = degree;
            if (auto* opt = sub->get_option_no_throw("--nilradical-dim"); opt && opt->count()) o.nilradical_dim = m;
        }

    try {
        if (!o.batch_dir.empty()) {
            if (!o.inputs.empty()) throw Error(ErrorCode::Usage, "--batch takes no positional inputs");
            return run_batch(o, out, err);
        }
        Outcome r;
        if (o.command == "compare")
            r = guarded(o, "", [&] { return cmd_compare(o); });
        else if (o.command == "construct")
            r = guarded(o, "", [&] { return cmd_construct(o); });
        else {
            if (o.inputs.size() != 1) throw Error(ErrorCode::Usage, o.command + " takes exactly one algfile");
            r = guarded(o, o.inputs[0], [&] { return run_file(o, o.inputs[0]); });
        }
        err << "torusforge " << o.command << (o.inputs.empty() ? "" : " " + o.inputs[0]) << ": " << r.log << "\n";
        return emit(o, r, out);
    } catch (const Error& e) {
        err << "torusforge: " << to_string(e.code()) << ": " << e.what() << "\n";
        return 2;
    }
}

}  // namespace torusforge
