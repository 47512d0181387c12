// Batch front end: every query takes files/flags in, emits deterministic
// JSON out. Exit codes: 0 success/equivalent/true, 1 distinct/false,
// 2 unknown (bounds exhausted), 64 usage, 65 validation/domain errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "outcat/bratteli.hpp"
#include "outcat/group_category.hpp"
#include "outcat/instances.hpp"
#include "outcat/intertwine.hpp"
#include "outcat/matcat.hpp"
#include "outcat/permgrp.hpp"
#include "outcat/quotient.hpp"

namespace {

using nlohmann::json;
using namespace outcat;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitValidation = 65;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + out_path);
        out << text;
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write " + out_path);
        out << text;
    }
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

json witness_json(const IntertwiningWitness& w) {
    json j;
    j["d_indices"] = w.d_indices;
    j["e_indices"] = w.e_indices;
    j["down"] = json::array();
    for (const auto& m : w.downs) j["down"].push_back(matrix_json(m));
    j["up"] = json::array();
    for (const auto& m : w.ups) j["up"].push_back(matrix_json(m));
    return j;
}

json perm_json(const Perm& p) {
    json j;
    j["cycles"] = p.cycles();
    json img = json::array();
    for (int i = 0; i < p.degree(); ++i) img.push_back(p.apply(i) + 1);
    j["images"] = img;
    return j;
}

json hom_json(const GroupHom& h) {
    json j;
    j["source"] = h.source()->type().label();
    j["target"] = h.target().label();
    json gi = json::array();
    for (const Perm& p : h.generator_images()) gi.push_back(p.cycles());
    j["generator_images"] = gi;
    return j;
}

int cmd_compose(const std::string& left, const std::string& right, const std::string& out) {
    auto f = load_morphism_json(read_file(left));
    auto g = load_morphism_json(read_file(right));
    auto fg = compose(f, g);
    json j = json::parse(save_morphism_json(fg));
    j["unital"] = fg.unital();
    emit(j, out);
    return kExitTrue;
}

int cmd_hom_exists(const std::string& src, const std::string& tgt, bool unital, bool no_zero,
                   const std::string& out) {
    AlgebraObject a(parse_int_list(src)), b(parse_int_list(tgt));
    bool exists = hom_exists(a, b, unital, !no_zero);
    json j;
    j["source"] = a.sizes;
    j["target"] = b.sizes;
    j["unital"] = unital;
    j["allow_zero"] = !no_zero;
    j["exists"] = exists;
    emit(j, out);
    return exists ? kExitTrue : kExitFalse;
}

int cmd_enumerate_homs(const std::string& src, const std::string& tgt, bool unital, bool no_zero,
                       const std::string& out) {
    AlgebraObject a(parse_int_list(src)), b(parse_int_list(tgt));
    auto homs = enumerate_homs(a, b, unital, !no_zero);
    json j;
    j["source"] = a.sizes;
    j["target"] = b.sizes;
    j["unital"] = unital;
    j["allow_zero"] = !no_zero;
    j["count"] = homs.size();
    j["homs"] = json::array();
    for (const auto& h : homs) j["homs"].push_back(matrix_json(h.matrix));
    emit(j, out);
    return kExitTrue;
}

int cmd_telescope(const std::string& diagram, const std::string& indices, const std::string& out) {
    auto d = load_diagram_json(read_file(diagram));
    std::vector<int> idx;
    for (long long v : parse_int_list(indices)) idx.push_back(static_cast<int>(v));
    auto t = telescope(d, idx);
    emit(json::parse(save_diagram_json(t)), out);
    return kExitTrue;
}

int cmd_equiv(const std::string& left, const std::string& right, const SearchBounds& bounds,
              const std::string& out) {
    auto d = load_diagram_json(read_file(left));
    auto e = load_diagram_json(read_file(right));
    Verdict v = equivalent(d, e, bounds);
    json j;
    j["bounds"] = {{"depth", bounds.depth},
                   {"entry_bound", bounds.entry_bound},
                   {"level_bound", bounds.level_bound}};
    switch (v.kind) {
        case Verdict::Kind::equivalent:
            j["verdict"] = "equivalent";
            j["witness"] = witness_json(*v.witness);
            emit(j, out);
            return kExitTrue;
        case Verdict::Kind::distinct: {
            const auto& c = *v.certificate;
            j["verdict"] = "distinct";
            j["certificate"] = {{"prime", c.prime},
                                {"d_base_exp", c.d_base_exp},
                                {"d_mult_exp", c.d_mult_exp},
                                {"e_base_exp", c.e_base_exp},
                                {"e_mult_exp", c.e_mult_exp},
                                {"reason", c.reason}};
            emit(j, out);
            return kExitFalse;
        }
        case Verdict::Kind::unknown:
            j["verdict"] = "unknown";
            emit(j, out);
            return kExitUnknown;
    }
    return kExitUnknown;
}

const char* tri_name(TriState t, const char* yes, const char* no) {
    switch (t) {
        case TriState::yes: return yes;
        case TriState::no: return no;
        default: return "unknown";
    }
}

int tri_exit(TriState t) {
    switch (t) {
        case TriState::yes: return kExitTrue;
        case TriState::no: return kExitFalse;
        default: return kExitUnknown;
    }
}

int cmd_k0_eq(const std::string& diagram, int xl, const std::string& xv, int yl, const std::string& yv,
              int depth, const std::string& out) {
    auto d = load_diagram_json(read_file(diagram));
    K0Element x{xl, parse_int_list(xv)}, y{yl, parse_int_list(yv)};
    TriState t = k0_equal(d, x, y, depth);
    json j;
    j["depth"] = depth;
    j["x"] = {{"level", x.level}, {"vector", x.vec}};
    j["y"] = {{"level", y.level}, {"vector", y.vec}};
    j["result"] = tri_name(t, "equal", "distinct");
    emit(j, out);
    return tri_exit(t);
}

int cmd_k0_pos(const std::string& diagram, int level, const std::string& vec, int depth,
               const std::string& out) {
    auto d = load_diagram_json(read_file(diagram));
    K0Element x{level, parse_int_list(vec)};
    TriState t = k0_positive(d, x, depth);
    json j;
    j["depth"] = depth;
    j["element"] = {{"level", x.level}, {"vector", x.vec}};
    j["result"] = tri_name(t, "positive", "never");
    emit(j, out);
    return tri_exit(t);
}

int cmd_dot(const std::string& diagram, const std::string& out) {
    auto d = load_diagram_json(read_file(diagram));
    emit_text(to_dot(d), out);
    return kExitTrue;
}

int cmd_intertwine(const std::string& group, const std::string& f1_conj, const std::string& twist,
                   int max_iter, const std::string& out) {
    int degree;
    if (group == "a3")
        degree = 3;
    else if (group == "a4")
        degree = 4;
    else if (group == "a5")
        degree = 5;
    else
        throw ValidationError("unsupported group (a3, a4, a5)");
    auto g = FiniteGroup::alternating(degree);
    auto cat = GroupCategory::build({g});
    GroupHom f1h = GroupHom::identity(g);
    if (!f1_conj.empty()) f1h = f1h.then_conjugation(Perm::from_cycles(f1_conj, degree));
    GroupHom g1h = f1h.inverse_automorphism();
    if (!twist.empty()) g1h = g1h.then_conjugation(Perm::from_cycles(twist, degree));
    IntertwiningProblem p{0, 0, cat.morid_of(0, 0, f1h), cat.morid_of(0, 0, g1h), max_iter, true};
    json j;
    j["group"] = g->type().label();
    j["f1"] = hom_json(f1h);
    j["g1"] = hom_json(g1h);
    j["max_iterations"] = max_iter;
    auto outcome = approximate_intertwine(cat.spec(), cat, p);
    auto trace_json = [](const std::vector<IntertwineStep>& trace) {
        json arr = json::array();
        for (const auto& s : trace)
            arr.push_back({{"step", s.index},
                           {"epsilon", s.epsilon.str()},
                           {"residual", s.residual.str()},
                           {"delta", s.delta.str()}});
        return arr;
    };
    if (const auto* s = std::get_if<IntertwineSuccess>(&outcome)) {
        j["status"] = "converged";
        j["f_infinity"] = hom_json(cat.hom_of(s->f_infinity));
        j["g_infinity"] = hom_json(cat.hom_of(s->g_infinity));
        j["checks"] = {{"fg_is_identity", s->fg_is_identity},
                       {"gf_is_identity", s->gf_is_identity},
                       {"f_in_class_of_f1", s->f_in_class_of_f1},
                       {"g_in_class_of_g1", s->g_in_class_of_g1}};
        j["trace"] = trace_json(s->trace);
        emit(j, out);
        return kExitTrue;
    }
    const auto& f = std::get<IntertwineFailure>(outcome);
    j["status"] = "cap_exceeded";
    j["f_last"] = hom_json(cat.hom_of(f.f_last));
    j["g_last"] = hom_json(cat.hom_of(f.g_last));
    j["residual_a"] = f.residual_a.str();
    j["residual_b"] = f.residual_b.str();
    j["trace"] = trace_json(f.trace);
    emit(j, out);
    return kExitUnknown;
}

int cmd_verify_counterexample(const std::string& out) {
    auto rep = verify_nonclosure_a3_a6_a7();
    json j;
    j["e1"] = hom_json(rep.e1);
    j["e2"] = hom_json(rep.e2);
    j["sigma"] = hom_json(rep.sigma);
    j["sigma_image_of_123"] = perm_json(rep.sigma.eval(Perm::from_cycles("(1 2 3)", 6)));
    j["straight_image_of_123"] = perm_json(rep.straight.eval(Perm::from_cycles("(1 2 3)", 3)));
    j["twisted_image_of_123"] = perm_json(rep.twisted.eval(Perm::from_cycles("(1 2 3)", 3)));
    j["straight_cycle_type"] = rep.straight_cycle_type;
    j["twisted_cycle_type"] = rep.twisted_cycle_type;
    j["twisted_factor_in_class"] = rep.twisted_factor_in_class;
    j["twisted_equals_multiplicity_two_embedding"] = rep.twisted_equals_multiplicity_two;
    j["conjugators_searched"] = rep.conjugators_searched;
    j["conjugator_found"] = rep.conjugator_found;
    bool verified = !rep.conjugator_found && rep.twisted_factor_in_class &&
                    rep.twisted_equals_multiplicity_two &&
                    rep.straight_cycle_type != rep.twisted_cycle_type;
    j["verified"] = verified;
    emit(j, out);
    return verified ? kExitTrue : kExitFalse;
}

int cmd_quotient_check(const std::string& spec_path, const std::string& out) {
    auto spec = load_category_json(read_file(spec_path));
    json j;
    auto slash = spec_path.find_last_of('/');
    j["spec"] = slash == std::string::npos ? spec_path : spec_path.substr(slash + 1);
    bool closed = inner_is_closed(*spec);
    j["inner_closure_applied"] = !closed;
    std::shared_ptr<const FiniteCategorySpec> work = spec;
    if (!closed) work = inner_closure(*spec);
    auto violations = verify_inner_axiom(*work);
    json vj = json::array();
    for (const auto& v : violations)
        vj.push_back({{"f", work->morphism_name(v.f)}, {"h", work->morphism_name(v.h)}});
    j["axiom_violations"] = vj;
    if (!violations.empty()) {
        j["verdict"] = "axiom_violated";
        emit(j, out);
        return kExitFalse;
    }
    auto q = quotient(*work);
    j["classes"] = q.class_count();
    auto ss = is_super_strong(*work, q);
    json ssj = json::array();
    for (MorId f : ss) ssj.push_back(work->morphism_name(f));
    j["super_strong_violations"] = ssj;
    j["verdict"] = ss.empty() ? "ok" : "super_strong_violated";
    emit(j, out);
    return ss.empty() ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classifying-category toolkit"};
    app.require_subcommand(1);

    std::string left, right, out, src, tgt, diagram, indices, vec, xv, yv, spec_path;
    std::string group = "a5", f1_conj = "(1 2)", twist = "(1 2 3 4 5)";
    bool unital = false, no_zero = false;
    int depth_k0 = 8, xl = 0, yl = 0, level = 0, max_iter = 64;
    SearchBounds bounds;

    auto* c_compose = app.add_subcommand("compose", "compose two multiplicity morphisms (left then right)");
    c_compose->add_option("--left", left, "JSON file of the first morphism")->required();
    c_compose->add_option("--right", right, "JSON file of the second morphism")->required();
    c_compose->add_option("-o,--out", out, "output file (default stdout)");

    auto* c_he = app.add_subcommand("hom-exists", "decide existence of an admissible multiplicity matrix");
    c_he->add_option("--source", src, "source sizes, e.g. 1,2")->required();
    c_he->add_option("--target", tgt, "target sizes")->required();
    c_he->add_flag("--unital", unital, "require unitality");
    c_he->add_flag("--no-zero", no_zero, "exclude the zero morphism");
    c_he->add_option("-o,--out", out);

    auto* c_eh = app.add_subcommand("enumerate-homs", "list all admissible multiplicity matrices");
    c_eh->add_option("--source", src)->required();
    c_eh->add_option("--target", tgt)->required();
    c_eh->add_flag("--unital", unital);
    c_eh->add_flag("--no-zero", no_zero);
    c_eh->add_option("-o,--out", out);

    auto* c_tel = app.add_subcommand("telescope", "contract a diagram along selected levels");
    c_tel->add_option("--diagram", diagram, "diagram JSON file")->required();
    c_tel->add_option("--indices", indices, "strictly increasing level indices, e.g. 0,2,4")->required();
    c_tel->add_option("-o,--out", out);

    auto* c_eq = app.add_subcommand("equiv", "decide diagram equivalence (witness / certificate / unknown)");
    c_eq->add_option("--left", left)->required();
    c_eq->add_option("--right", right)->required();
    c_eq->add_option("--depth", bounds.depth, "required zig-zag segments (default 3)");
    c_eq->add_option("--level-bound", bounds.level_bound, "largest level index (default 8)");
    c_eq->add_option("--entry-bound", bounds.entry_bound, "largest matrix entry (default 16)");
    c_eq->add_option("-o,--out", out);

    auto* c_keq = app.add_subcommand("k0-eq", "equality of dimension-group elements at finite stages");
    c_keq->add_option("--diagram", diagram)->required();
    c_keq->add_option("--x-level", xl)->required();
    c_keq->add_option("--x", xv, "integer vector, e.g. 1,0")->required();
    c_keq->add_option("--y-level", yl)->required();
    c_keq->add_option("--y", yv)->required();
    c_keq->add_option("--depth", depth_k0, "deepest level to compare (default 8)");
    c_keq->add_option("-o,--out", out);

    auto* c_kpos = app.add_subcommand("k0-pos", "positivity of a dimension-group element");
    c_kpos->add_option("--diagram", diagram)->required();
    c_kpos->add_option("--level", level)->required();
    c_kpos->add_option("--vector", vec)->required();
    c_kpos->add_option("--depth", depth_k0);
    c_kpos->add_option("-o,--out", out);

    auto* c_dot = app.add_subcommand("dot", "layered DOT rendering of a diagram");
    c_dot->add_option("--diagram", diagram)->required();
    c_dot->add_option("-o,--out", out);

    auto* c_int = app.add_subcommand("intertwine", "run the triangle-correction loop on a group instance");
    c_int->add_option("--group", group, "a3|a4|a5 (default a5)");
    c_int->add_option("--f1-conj", f1_conj, "f1 = conjugation by these cycles (may be odd; default (1 2))");
    c_int->add_option("--twist", twist, "g1 = f1^-1 then conjugation by these cycles");
    c_int->add_option("--max-iter", max_iter, "iteration cap (default 64)");
    c_int->add_option("-o,--out", out);

    auto* c_ver = app.add_subcommand("verify-counterexample",
                                     "the A3 -> A6 -> A7 class-product counterexample report");
    c_ver->add_option("-o,--out", out);

    auto* c_qc = app.add_subcommand("quotient-check",
                                    "validate a category spec, check the inner axiom, build the quotient");
    c_qc->add_option("--spec", spec_path, "category spec JSON file")->required();
    c_qc->add_option("-o,--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_compose->parsed()) return cmd_compose(left, right, out);
        if (c_he->parsed()) return cmd_hom_exists(src, tgt, unital, no_zero, out);
        if (c_eh->parsed()) return cmd_enumerate_homs(src, tgt, unital, no_zero, out);
        if (c_tel->parsed()) return cmd_telescope(diagram, indices, out);
        if (c_eq->parsed()) return cmd_equiv(left, right, bounds, out);
        if (c_keq->parsed()) return cmd_k0_eq(diagram, xl, xv, yl, yv, depth_k0, out);
        if (c_kpos->parsed()) return cmd_k0_pos(diagram, level, vec, depth_k0, out);
        if (c_dot->parsed()) return cmd_dot(diagram, out);
        if (c_int->parsed()) return cmd_intertwine(group, f1_conj, twist, max_iter, out);
        if (c_ver->parsed()) return cmd_verify_counterexample(out);
        if (c_qc->parsed()) return cmd_quotient_check(spec_path, out);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
