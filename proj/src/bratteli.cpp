#include "outcat/bratteli.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace outcat {

void BratteliDiagram::validate(bool classical) const {
    if (levels.empty()) throw ValidationError("diagram needs at least one level");
    if (steps.size() + 1 != levels.size()) throw ValidationError("need exactly one step between consecutive levels");
    for (size_t k = 0; k < steps.size(); ++k) {
        // constructor re-checks admissibility
        MultiplicityMorphism step(levels[k], levels[k + 1], steps[k]);
        if (classical) {
            for (int c = 0; c < steps[k].cols; ++c) {
                bool nonzero = false;
                for (int r = 0; r < steps[k].rows; ++r) nonzero |= steps[k].at(r, c) != 0;
                if (!nonzero)
                    throw ValidationError("classical mode: step " + std::to_string(k) +
                                          " has an all-zero column");
            }
        }
    }
    if (stationary) {
        const IntMatrix& s = *stationary;
        int n = levels.back().summands();
        if (s.rows != n || s.cols != n)
            throw ValidationError("stationary matrix must be square of the final level's size");
        for (long long v : s.a)
            if (v < 0) throw ValidationError("stationary entries must be nonnegative");
        // extended levels must stay strictly positive
        auto image = s.apply(levels.back().sizes);
        for (long long v : image)
            if (v < 1) throw ValidationError("stationary extension produces an empty summand");
    }
}

std::vector<long long> BratteliDiagram::level_sizes(int j) const {
    if (j < 0) throw ValidationError("negative level");
    if (j < truncation_length()) return levels[static_cast<size_t>(j)].sizes;
    if (!stationary) throw ValidationError("level beyond truncation and no stationary extension");
    std::vector<long long> v = levels.back().sizes;
    for (int t = truncation_length() - 1; t < j; ++t) v = stationary->apply(v);
    return v;
}

IntMatrix BratteliDiagram::step_matrix(int j) const {
    if (j < 0) throw ValidationError("negative level");
    if (j + 1 < truncation_length()) return steps[static_cast<size_t>(j)];
    if (!stationary) throw ValidationError("step beyond truncation and no stationary extension");
    return *stationary;
}

BratteliDiagram telescope(const BratteliDiagram& d, const std::vector<int>& indices) {
    d.validate();
    if (indices.empty()) throw ValidationError("telescope needs at least one index");
    for (size_t k = 0; k + 1 < indices.size(); ++k)
        if (indices[k] >= indices[k + 1]) throw ValidationError("telescope indices must strictly increase");
    if (indices.front() < 0 || indices.back() >= d.truncation_length())
        throw ValidationError("telescope indices out of range");
    BratteliDiagram out;
    for (int i : indices) out.levels.push_back(d.levels[static_cast<size_t>(i)]);
    for (size_t k = 0; k + 1 < indices.size(); ++k)
        out.steps.push_back(path_product(d, indices[k], indices[k + 1]).matrix);
    // A stationary extension survives when the selection ends at the last
    // stored level with a uniform gap g: the telescoped tail is stationary
    // with matrix stationary^g.
    if (d.stationary && indices.back() == d.truncation_length() - 1 && indices.size() >= 2) {
        int gap = indices[1] - indices[0];
        bool uniform = true;
        for (size_t k = 0; k + 1 < indices.size(); ++k) uniform &= (indices[k + 1] - indices[k]) == gap;
        if (uniform) {
            IntMatrix power = IntMatrix::identity(d.stationary->rows);
            for (int t = 0; t < gap; ++t) power = d.stationary->mul(power);
            out.stationary = power;
        }
    } else if (d.stationary && indices.size() == 1 && indices[0] == d.truncation_length() - 1) {
        out.stationary = d.stationary;
    }
    return out;
}

MultiplicityMorphism path_product(const BratteliDiagram& d, int from, int to) {
    if (from > to) throw ValidationError("path product needs from <= to");
    if (!d.level_available(from) || !d.level_available(to))
        throw ValidationError("path product out of range");
    AlgebraObject src{d.level_sizes(from)};
    IntMatrix acc = IntMatrix::identity(src.summands());
    for (int j = from; j < to; ++j) acc = d.step_matrix(j).mul(acc);
    return MultiplicityMorphism(src, AlgebraObject{d.level_sizes(to)}, acc);
}

CheckResult check_intertwining(const BratteliDiagram& d, const BratteliDiagram& e,
                               const IntertwiningWitness& w) {
    using Status = CheckResult::Status;
    if (w.downs.empty()) return {Status::shape_mismatch, "witness has no down matrices"};
    if (w.d_indices.size() != w.ups.size() + 1 || w.e_indices.size() != w.downs.size())
        return {Status::shape_mismatch, "index sequences do not match matrix counts"};
    if (w.downs.size() != w.ups.size() && w.downs.size() != w.ups.size() + 1)
        return {Status::shape_mismatch, "downs must number ups or ups+1"};
    for (size_t k = 0; k + 1 < w.d_indices.size(); ++k)
        if (w.d_indices[k] >= w.d_indices[k + 1])
            return {Status::shape_mismatch, "D indices must strictly increase"};
    for (size_t k = 0; k + 1 < w.e_indices.size(); ++k)
        if (w.e_indices[k] >= w.e_indices[k + 1])
            return {Status::shape_mismatch, "E indices must strictly increase"};
    if (w.ups.empty()) {
        // degenerate convention: top of a telescoped identity
        if (w.d_indices[0] != 0 || w.e_indices[0] != 0)
            return {Status::shape_mismatch, "zero-segment witness must start at level 0"};
        if (d.level_sizes(0) != e.level_sizes(0))
            return {Status::shape_mismatch, "zero-segment witness needs identical initial levels"};
        if (!(w.downs[0] == IntMatrix::identity(static_cast<int>(d.level_sizes(0).size()))))
            return {Status::equation_failed, "zero-segment witness must carry the identity"};
        return {Status::ok, ""};
    }
    // shapes and admissibility
    auto shape_ok = [&](const IntMatrix& m, const std::vector<long long>& src,
                        const std::vector<long long>& tgt) {
        if (m.cols != static_cast<int>(src.size()) || m.rows != static_cast<int>(tgt.size())) return false;
        auto img = m.apply(src);
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] > tgt[i]) return false;
        for (long long v : m.a)
            if (v < 0) return false;
        return true;
    };
    for (size_t k = 0; k < w.downs.size(); ++k)
        if (!shape_ok(w.downs[k], d.level_sizes(w.d_indices[k]), e.level_sizes(w.e_indices[k])))
            return {Status::shape_mismatch, "down matrix " + std::to_string(k) + " has bad shape"};
    for (size_t k = 0; k < w.ups.size(); ++k)
        if (!shape_ok(w.ups[k], e.level_sizes(w.e_indices[k]), d.level_sizes(w.d_indices[k + 1])))
            return {Status::shape_mismatch, "up matrix " + std::to_string(k) + " has bad shape"};
    for (size_t k = 0; k < w.ups.size(); ++k) {
        IntMatrix lhs = w.ups[k].mul(w.downs[k]);
        IntMatrix want = path_product(d, w.d_indices[k], w.d_indices[k + 1]).matrix;
        if (!(lhs == want))
            return {Status::equation_failed, "triangle S_" + std::to_string(k) + " R_" + std::to_string(k) +
                                                 " != D-path"};
        if (k + 1 < w.downs.size()) {
            IntMatrix lhs2 = w.downs[k + 1].mul(w.ups[k]);
            IntMatrix want2 = path_product(e, w.e_indices[k], w.e_indices[k + 1]).matrix;
            if (!(lhs2 == want2))
                return {Status::equation_failed, "triangle R_" + std::to_string(k + 1) + " S_" +
                                                     std::to_string(k) + " != E-path"};
        }
    }
    return {Status::ok, ""};
}

// ---------------------------------------------------------------------------
// Backtracking search.

namespace {

// Ascending-lex enumeration of nonnegative matrices X (rows x cols) with
// X * src <= tgt componentwise, entries <= bound, and optionally
// X * known == want (matrix equation rows: X.row(r) . known == want.row(r)).
struct MatrixEnum {
    int rows, cols;
    const std::vector<long long>& src;
    const std::vector<long long>& tgt;
    long long bound;
    const IntMatrix* known; // may be null
    const IntMatrix* want;

    template <typename Fn>
    bool enumerate(Fn&& fn) {
        IntMatrix m(rows, cols);
        return row(0, m, fn);
    }

private:
    template <typename Fn>
    bool row(int r, IntMatrix& m, Fn&& fn) {
        if (r == rows) return fn(m);
        return entry(r, 0, 0, m, fn);
    }

    template <typename Fn>
    bool entry(int r, int c, long long used, IntMatrix& m, Fn&& fn) {
        if (c == cols) {
            if (known) {
                for (int j = 0; j < known->cols; ++j) {
                    long long dot = 0;
                    for (int i = 0; i < cols; ++i) dot += m.at(r, i) * known->at(i, j);
                    if (dot != want->at(r, j)) return false;
                }
            }
            return row(r + 1, m, fn);
        }
        long long cap = std::min(bound, src[static_cast<size_t>(c)] > 0
                                            ? (tgt[static_cast<size_t>(r)] - used) / src[static_cast<size_t>(c)]
                                            : bound);
        for (long long v = 0; v <= cap; ++v) {
            m.at(r, c) = v;
            if (entry(r, c + 1, used + v * src[static_cast<size_t>(c)], m, fn)) return true;
        }
        m.at(r, c) = 0;
        return false;
    }
};

struct Searcher {
    const BratteliDiagram& d;
    const BratteliDiagram& e;
    const SearchBounds& bounds;
    IntertwiningWitness w;
    std::optional<IntertwiningWitness> found;

    bool level_usable(const BratteliDiagram& g, int j) const {
        return j <= bounds.level_bound && g.level_available(j);
    }

    // choose j_k and R_k (k = w.downs.size())
    bool place_down() {
        if (static_cast<int>(w.ups.size()) >= bounds.depth) {
            found = w;
            return true;
        }
        size_t k = w.downs.size();
        int i_k = w.d_indices[k];
        int j_lo = k == 0 ? 0 : w.e_indices[k - 1] + 1;
        for (int j = j_lo; level_usable(e, j); ++j) {
            auto dsz = d.level_sizes(i_k);
            auto esz = e.level_sizes(j);
            std::optional<IntMatrix> eq_known, eq_want;
            if (k > 0) {
                eq_known = w.ups[k - 1];
                eq_want = path_product(e, w.e_indices[k - 1], j).matrix;
            }
            MatrixEnum en{static_cast<int>(esz.size()),
                          static_cast<int>(dsz.size()),
                          dsz,
                          esz,
                          bounds.entry_bound,
                          eq_known ? &*eq_known : nullptr,
                          eq_want ? &*eq_want : nullptr};
            w.e_indices.push_back(j);
            bool done = en.enumerate([&](const IntMatrix& m) {
                w.downs.push_back(m);
                bool ok = place_up();
                w.downs.pop_back();
                return ok;
            });
            w.e_indices.pop_back();
            if (done) return true;
        }
        return false;
    }

    // choose i_{k+1} and S_k (k = w.ups.size())
    bool place_up() {
        size_t k = w.ups.size();
        int j_k = w.e_indices[k];
        for (int i = w.d_indices[k] + 1; level_usable(d, i); ++i) {
            auto esz = e.level_sizes(j_k);
            auto dsz = d.level_sizes(i);
            IntMatrix eq_known = w.downs[k];
            IntMatrix eq_want = path_product(d, w.d_indices[k], i).matrix;
            MatrixEnum en{static_cast<int>(dsz.size()),
                          static_cast<int>(esz.size()),
                          esz,
                          dsz,
                          bounds.entry_bound,
                          &eq_known,
                          &eq_want};
            w.d_indices.push_back(i);
            bool done = en.enumerate([&](const IntMatrix& m) {
                w.ups.push_back(m);
                bool ok = place_down();
                w.ups.pop_back();
                return ok;
            });
            w.d_indices.pop_back();
            if (done) return true;
        }
        return false;
    }
};

} // namespace

std::optional<IntertwiningWitness> find_intertwining(const BratteliDiagram& d,
                                                     const BratteliDiagram& e,
                                                     const SearchBounds& bounds) {
    d.validate();
    e.validate();
    if (bounds.depth < 1 || bounds.level_bound < 0 || bounds.entry_bound < 1)
        throw ValidationError("search bounds must be positive");
    Searcher s{d, e, bounds, {}, {}};
    s.w.d_indices.push_back(0);
    s.place_down();
    return s.found;
}

// ---------------------------------------------------------------------------
// Supernatural-number obstruction for 1x1 stationary diagrams.

namespace {

long long exp_of(long long v, long long p) {
    long long e = 0;
    while (v % p == 0 && v > 0) {
        v /= p;
        ++e;
    }
    return e;
}

bool is_one_by_one_stationary(const BratteliDiagram& g) {
    if (!g.stationary || g.stationary->rows != 1) return false;
    for (const auto& l : g.levels)
        if (l.summands() != 1) return false;
    // the stored steps must agree with the stationary multiplier, otherwise
    // the tail is not literally stationary
    for (const auto& s : g.steps)
        if (!(s == *g.stationary)) return false;
    return true;
}

} // namespace

bool check_certificate(const BratteliDiagram& d, const BratteliDiagram& e,
                       const DistinctnessCertificate& cert) {
    if (!is_one_by_one_stationary(d) || !is_one_by_one_stationary(e)) return false;
    long long p = cert.prime;
    if (p < 2) return false;
    long long db = d.levels[0].sizes[0], dm = d.stationary->at(0, 0);
    long long eb = e.levels[0].sizes[0], em = e.stationary->at(0, 0);
    if (exp_of(db, p) != cert.d_base_exp || exp_of(dm, p) != cert.d_mult_exp) return false;
    if (exp_of(eb, p) != cert.e_base_exp || exp_of(em, p) != cert.e_mult_exp) return false;
    // re-verify the exponent trail on explicit path products over a window
    for (int k = 0; k <= 3; ++k) {
        long long dl = path_product(d, 0, k).matrix.at(0, 0) * db;
        long long el = path_product(e, 0, k).matrix.at(0, 0) * eb;
        if (exp_of(dl, p) != cert.d_base_exp + k * cert.d_mult_exp) return false;
        if (exp_of(el, p) != cert.e_base_exp + k * cert.e_mult_exp) return false;
    }
    // the profiles must actually disagree: unbounded on one side with
    // bounded (or slower) growth on the other, or bounded with different
    // constants
    bool d_unbounded = cert.d_mult_exp > 0;
    bool e_unbounded = cert.e_mult_exp > 0;
    if (d_unbounded != e_unbounded) return true;
    if (!d_unbounded) return cert.d_base_exp != cert.e_base_exp;
    return false; // both unbounded: no disagreement witnessed by p
}

Verdict equivalent(const BratteliDiagram& d, const BratteliDiagram& e, const SearchBounds& bounds) {
    d.validate();
    e.validate();
    Verdict v{Verdict::Kind::unknown, std::nullopt, std::nullopt, bounds};
    if (is_one_by_one_stationary(d) && is_one_by_one_stationary(e)) {
        long long db = d.levels[0].sizes[0], dm = d.stationary->at(0, 0);
        long long eb = e.levels[0].sizes[0], em = e.stationary->at(0, 0);
        // compare prime exponent profiles of base * mult^infinity
        std::vector<long long> primes;
        for (long long v0 : {db, dm, eb, em}) {
            long long v = v0;
            for (long long p = 2; p <= v; ++p)
                if (v % p == 0) {
                    primes.push_back(p);
                    while (v % p == 0) v /= p;
                }
        }
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (long long p : primes) {
            DistinctnessCertificate cert{p, exp_of(db, p), exp_of(dm, p), exp_of(eb, p), exp_of(em, p), ""};
            bool d_unb = cert.d_mult_exp > 0, e_unb = cert.e_mult_exp > 0;
            bool disagree = (d_unb != e_unb) || (!d_unb && !e_unb && cert.d_base_exp != cert.e_base_exp);
            if (disagree) {
                cert.reason = std::to_string(p) + "-divisibility of the level sizes differs: D has " +
                              (d_unb ? std::string("unbounded") : "constant exponent " + std::to_string(cert.d_base_exp)) +
                              ", E has " +
                              (e_unb ? std::string("unbounded") : "constant exponent " + std::to_string(cert.e_base_exp));
                v.kind = Verdict::Kind::distinct;
                v.certificate = cert;
                return v;
            }
        }
    }
    if (auto w = find_intertwining(d, e, bounds)) {
        v.kind = Verdict::Kind::equivalent;
        v.witness = std::move(w);
        return v;
    }
    return v;
}

// ---------------------------------------------------------------------------
// K0 queries.

TriState k0_equal(const BratteliDiagram& d, const K0Element& x, const K0Element& y, int depth) {
    d.validate();
    auto shape_check = [&](const K0Element& z) {
        if (!d.level_available(z.level)) throw ValidationError("K0 element level out of range");
        if (z.vec.size() != d.level_sizes(z.level).size())
            throw ValidationError("K0 vector length mismatch at its level");
    };
    shape_check(x);
    shape_check(y);
    int start = std::max(x.level, y.level);
    auto lift = [&](const K0Element& z, int to) {
        std::vector<long long> v = z.vec;
        for (int j = z.level; j < to; ++j) {
            const IntMatrix m = d.step_matrix(j);
            std::vector<long long> nv(static_cast<size_t>(m.rows), 0);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) nv[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
            v = std::move(nv);
        }
        return v;
    };
    std::vector<long long> xv = lift(x, start), yv = lift(y, start);
    for (int j = start; j <= depth && d.level_available(j); ++j) {
        if (xv == yv) return TriState::yes;
        bool beyond_truncation = j >= d.truncation_length() - 1;
        if (beyond_truncation && d.stationary && d.stationary->is_injective()) return TriState::no;
        if (!d.level_available(j + 1)) break;
        const IntMatrix m = d.step_matrix(j);
        auto apply = [&](std::vector<long long>& v) {
            std::vector<long long> nv(static_cast<size_t>(m.rows), 0);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) nv[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
            v = std::move(nv);
        };
        apply(xv);
        apply(yv);
    }
    if (xv == yv) return TriState::yes;
    return TriState::unknown;
}

TriState k0_positive(const BratteliDiagram& d, const K0Element& x, int depth) {
    d.validate();
    if (!d.level_available(x.level)) throw ValidationError("K0 element level out of range");
    if (x.vec.size() != d.level_sizes(x.level).size())
        throw ValidationError("K0 vector length mismatch at its level");
    bool strictly_positive_stationary = false;
    if (d.stationary) {
        strictly_positive_stationary = true;
        for (long long v : d.stationary->a) strictly_positive_stationary &= v > 0;
    }
    std::vector<long long> v = x.vec;
    bool zero = std::all_of(v.begin(), v.end(), [](long long t) { return t == 0; });
    if (zero) return TriState::yes;
    for (int j = x.level; j <= depth && d.level_available(j); ++j) {
        bool nonneg = std::all_of(v.begin(), v.end(), [](long long t) { return t >= 0; });
        if (nonneg) return TriState::yes;
        bool nonpos = std::all_of(v.begin(), v.end(), [](long long t) { return t <= 0; });
        bool beyond_truncation = j >= d.truncation_length() - 1;
        if (nonpos && beyond_truncation && strictly_positive_stationary) return TriState::no;
        if (!d.level_available(j + 1)) break;
        const IntMatrix m = d.step_matrix(j);
        std::vector<long long> nv(static_cast<size_t>(m.rows), 0);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) nv[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
        v = std::move(nv);
    }
    return TriState::unknown;
}

std::string to_dot(const BratteliDiagram& d) {
    d.validate();
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n";
    for (int j = 0; j < d.truncation_length(); ++j) {
        os << "  { rank=same;";
        const auto& sizes = d.levels[static_cast<size_t>(j)].sizes;
        for (size_t s = 0; s < sizes.size(); ++s)
            os << " L" << j << "_" << s << " [label=\"" << sizes[s] << "\"];";
        os << " }\n";
    }
    for (size_t k = 0; k < d.steps.size(); ++k) {
        const IntMatrix& m = d.steps[k];
        for (int c = 0; c < m.cols; ++c)
            for (int r = 0; r < m.rows; ++r)
                if (m.at(r, c) != 0)
                    os << "  L" << k << "_" << c << " -> L" << (k + 1) << "_" << r << " [label=\"x"
                       << m.at(r, c) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string save_diagram_json(const BratteliDiagram& d) {
    nlohmann::json j;
    j["levels"] = nlohmann::json::array();
    for (const auto& l : d.levels) j["levels"].push_back(l.sizes);
    j["steps"] = nlohmann::json::array();
    for (const auto& m : d.steps) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < m.rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
            rows.push_back(row);
        }
        j["steps"].push_back(rows);
    }
    if (d.stationary) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < d.stationary->rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < d.stationary->cols; ++c) row.push_back(d.stationary->at(r, c));
            rows.push_back(row);
        }
        j["stationary"] = rows;
    }
    return j.dump(2) + "\n";
}

BratteliDiagram load_diagram_json(const std::string& text) {
    BratteliDiagram d;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        for (const auto& l : j.at("levels")) d.levels.emplace_back(l.get<std::vector<long long>>());
        auto parse_matrix = [](const nlohmann::json& rows) {
            auto data = rows.get<std::vector<std::vector<long long>>>();
            if (data.empty()) throw ValidationError("empty matrix");
            IntMatrix m(static_cast<int>(data.size()), static_cast<int>(data[0].size()));
            for (size_t r = 0; r < data.size(); ++r) {
                if (data[r].size() != data[0].size()) throw ValidationError("ragged matrix");
                for (size_t c = 0; c < data[r].size(); ++c)
                    m.at(static_cast<int>(r), static_cast<int>(c)) = data[r][c];
            }
            return m;
        };
        for (const auto& s : j.at("steps")) d.steps.push_back(parse_matrix(s));
        if (j.contains("stationary")) d.stationary = parse_matrix(j.at("stationary"));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad diagram JSON: ") + e.what());
    }
    d.validate();
    return d;
}

} // namespace outcat
