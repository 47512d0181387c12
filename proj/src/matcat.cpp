#include "outcat/matcat.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <json.hpp>

namespace outcat {

namespace {

long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error("integer overflow in matrix arithmetic");
    return r;
}

long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw Error("integer overflow in matrix arithmetic");
    return r;
}

} // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols != o.rows) throw ValidationError("matrix shape mismatch in product");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            long long v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, o.at(k, j)));
        }
    return r;
}

std::vector<long long> IntMatrix::apply(const std::vector<long long>& v) const {
    if (static_cast<int>(v.size()) != cols) throw ValidationError("matrix/vector shape mismatch");
    std::vector<long long> r(static_cast<size_t>(rows), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            r[static_cast<size_t>(i)] =
                checked_add(r[static_cast<size_t>(i)], checked_mul(at(i, j), v[static_cast<size_t>(j)]));
    return r;
}

bool IntMatrix::is_zero() const {
    for (long long v : a)
        if (v) return false;
    return true;
}

bool IntMatrix::is_permutation() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i) {
        int ones = 0;
        for (int j = 0; j < cols; ++j) {
            if (at(i, j) == 1)
                ++ones;
            else if (at(i, j) != 0)
                return false;
        }
        if (ones != 1) return false;
    }
    for (int j = 0; j < cols; ++j) {
        int ones = 0;
        for (int i = 0; i < rows; ++i) ones += at(i, j) == 1;
        if (ones != 1) return false;
    }
    return true;
}

bool IntMatrix::is_injective() const {
    if (rows < cols) return false;
    // fraction-free elimination over long long with overflow checks; the
    // matrices seen here are tiny
    IntMatrix m = *this;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        for (int j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m.at(r, c) == 0) continue;
            long long p = m.at(rank, c), q = m.at(r, c);
            for (int j = 0; j < cols; ++j)
                m.at(r, j) = checked_add(checked_mul(m.at(r, j), p), -checked_mul(m.at(rank, j), q));
        }
        ++rank;
    }
    return rank == cols;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
}

AlgebraObject::AlgebraObject(std::vector<long long> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw ValidationError("algebra object needs at least one summand");
    for (long long v : sizes)
        if (v < 1) throw ValidationError("summand orders must be strictly positive");
}

std::string AlgebraObject::name() const {
    std::string s = "(";
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sizes[i]);
    }
    return s + ")";
}

MultiplicityMorphism::MultiplicityMorphism(AlgebraObject src, AlgebraObject tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (matrix.rows != target.summands() || matrix.cols != source.summands())
        throw ValidationError("multiplicity matrix shape mismatch");
    for (long long v : matrix.a)
        if (v < 0) throw ValidationError("multiplicities must be nonnegative");
    auto image = matrix.apply(source.sizes);
    for (int i = 0; i < target.summands(); ++i)
        if (image[static_cast<size_t>(i)] > target.sizes[static_cast<size_t>(i)])
            throw ValidationError("admissibility fails: matrix*" + source.name() + " exceeds " +
                                  target.name() + " in row " + std::to_string(i));
}

bool MultiplicityMorphism::unital() const {
    return matrix.apply(source.sizes) == target.sizes;
}

MultiplicityMorphism identity_morphism(const AlgebraObject& a) {
    return MultiplicityMorphism(a, a, IntMatrix::identity(a.summands()));
}

MultiplicityMorphism compose(const MultiplicityMorphism& f, const MultiplicityMorphism& g) {
    if (!(f.target == g.source)) throw ValidationError("morphisms not composable");
    return MultiplicityMorphism(f.source, g.target, g.matrix.mul(f.matrix));
}

bool is_isomorphism(const MultiplicityMorphism& f) {
    return f.matrix.is_permutation() && f.unital();
}

namespace {

// nonnegative rows x with sum_i x_i * a_i == t (unital) or <= t, ascending lex
void enumerate_rows(const std::vector<long long>& a, long long t, bool exact,
                    std::vector<std::vector<long long>>& out) {
    std::vector<long long> row(a.size(), 0);
    // recursive descent over entries
    struct Rec {
        const std::vector<long long>& a;
        bool exact;
        std::vector<std::vector<long long>>& out;
        std::vector<long long>& row;
        void go(size_t i, long long remaining) {
            if (i == a.size()) {
                if (!exact || remaining == 0) out.push_back(row);
                return;
            }
            long long max = remaining / a[i];
            for (long long v = 0; v <= max; ++v) {
                row[i] = v;
                go(i + 1, remaining - v * a[i]);
            }
            row[i] = 0;
        }
    } rec{a, exact, out, row};
    rec.go(0, t);
}

} // namespace

bool hom_exists(const AlgebraObject& a, const AlgebraObject& b, bool unital, bool allow_zero) {
    if (unital) {
        // rows are independent: each target summand needs an exact
        // representation of its order as a nonnegative combination
        for (long long t : b.sizes) {
            std::vector<std::vector<long long>> rows;
            enumerate_rows(a.sizes, t, true, rows);
            if (rows.empty()) return false;
        }
        return true;
    }
    if (allow_zero) return true;
    long long amin = *std::min_element(a.sizes.begin(), a.sizes.end());
    long long bmax = *std::max_element(b.sizes.begin(), b.sizes.end());
    return amin <= bmax;
}

std::vector<MultiplicityMorphism> enumerate_homs(const AlgebraObject& a, const AlgebraObject& b,
                                                 bool unital, bool allow_zero) {
    std::vector<std::vector<std::vector<long long>>> per_row;
    for (long long t : b.sizes) {
        per_row.emplace_back();
        enumerate_rows(a.sizes, t, unital, per_row.back());
        if (per_row.back().empty()) return {};
    }
    std::vector<MultiplicityMorphism> out;
    size_t total = 1;
    for (const auto& pr : per_row) total *= pr.size();
    std::vector<size_t> idx(per_row.size(), 0);
    for (size_t count = 0; count < total; ++count) {
        IntMatrix m(b.summands(), a.summands());
        for (int r = 0; r < b.summands(); ++r)
            for (int c = 0; c < a.summands(); ++c)
                m.at(r, c) = per_row[static_cast<size_t>(r)][idx[static_cast<size_t>(r)]][static_cast<size_t>(c)];
        if (unital || allow_zero || !m.is_zero()) out.emplace_back(a, b, std::move(m));
        for (size_t k = per_row.size(); k-- > 0;) {
            if (++idx[k] < per_row[k].size()) break;
            idx[k] = 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Export as an explicit category.

struct MatrixHash {
    size_t operator()(const IntMatrix& m) const {
        size_t h = 1469598103934665603ull;
        auto mix = [&h](long long v) {
            h ^= static_cast<size_t>(v);
            h *= 1099511628211ull;
        };
        mix(m.rows);
        mix(m.cols);
        for (long long v : m.a) mix(v);
        return h;
    }
};

struct MatcatBackend : FiniteCategorySpec::ComposeBackend {
    std::vector<MultiplicityMorphism> morphisms; // by MorId
    // per (source obj, target obj): matrix -> MorId
    std::map<std::pair<ObjId, ObjId>, std::unordered_map<IntMatrix, MorId, MatrixHash>> lookup;

    MorId compose(const FiniteCategorySpec& spec, MorId f, MorId g) const override {
        const auto& mf = morphisms[static_cast<size_t>(f)];
        const auto& mg = morphisms[static_cast<size_t>(g)];
        IntMatrix prod = mg.matrix.mul(mf.matrix);
        auto cell = lookup.find({spec.source(f), spec.target(g)});
        if (cell == lookup.end()) throw Error("matrix category: missing hom cell");
        auto it = cell->second.find(prod);
        if (it == cell->second.end()) throw Error("matrix category: product matrix not enumerated");
        return it->second;
    }
};

namespace {

void compositions_up_to(int bound, std::vector<std::vector<long long>>& out) {
    // ordered tuples of positive integers with sum <= bound, by total then lex
    for (int total = 1; total <= bound; ++total) {
        struct Rec {
            std::vector<std::vector<long long>>& out;
            std::vector<long long> cur;
            void go(int remaining) {
                if (remaining == 0) {
                    out.push_back(cur);
                    return;
                }
                for (int v = 1; v <= remaining; ++v) {
                    cur.push_back(v);
                    go(remaining - v);
                    cur.pop_back();
                }
            }
        } rec{out, {}};
        rec.go(total);
    }
}

} // namespace

std::shared_ptr<const FiniteCategorySpec> export_as_spec(int size_bound) {
    if (size_bound < 1) throw ValidationError("size bound must be >= 1");
    std::vector<std::vector<long long>> tuples;
    compositions_up_to(size_bound, tuples);
    std::vector<AlgebraObject> objects;
    for (auto& t : tuples) objects.emplace_back(t);

    FiniteCategorySpec::Builder b;
    auto backend = std::make_shared<MatcatBackend>();
    std::vector<ObjId> ids;
    for (const auto& o : objects) ids.push_back(b.add_object(o.name()));
    for (size_t i = 0; i < objects.size(); ++i)
        for (size_t j = 0; j < objects.size(); ++j) {
            auto homs = enumerate_homs(objects[i], objects[j], false, true);
            for (size_t k = 0; k < homs.size(); ++k) {
                MorId id = b.add_morphism(objects[i].name() + "->" + objects[j].name() + "#" +
                                              std::to_string(k),
                                          ids[i], ids[j]);
                backend->lookup[{ids[i], ids[j]}][homs[k].matrix] = id;
                backend->morphisms.push_back(homs[k]);
                if (i == j && homs[k].matrix == IntMatrix::identity(objects[i].summands())) {
                    b.set_identity(ids[i], id);
                    b.set_inner(ids[i], {id});
                }
            }
        }
    return b.build_with_backend(backend, true);
}

const MultiplicityMorphism& exported_morphism(const FiniteCategorySpec& spec, MorId f) {
    auto* be = dynamic_cast<const MatcatBackend*>(spec.backend());
    if (!be) throw ValidationError("spec was not produced by export_as_spec");
    return be->morphisms[static_cast<size_t>(f)];
}

std::string save_morphism_json(const MultiplicityMorphism& m) {
    nlohmann::json j;
    j["source"] = {{"sizes", m.source.sizes}};
    j["target"] = {{"sizes", m.target.sizes}};
    j["matrix"] = nlohmann::json::array();
    for (int r = 0; r < m.matrix.rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.matrix.cols; ++c) row.push_back(m.matrix.at(r, c));
        j["matrix"].push_back(row);
    }
    return j.dump(2) + "\n";
}

MultiplicityMorphism load_morphism_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        AlgebraObject src(j.at("source").at("sizes").get<std::vector<long long>>());
        AlgebraObject tgt(j.at("target").at("sizes").get<std::vector<long long>>());
        auto rows = j.at("matrix").get<std::vector<std::vector<long long>>>();
        IntMatrix m(tgt.summands(), src.summands());
        if (static_cast<int>(rows.size()) != m.rows) throw ValidationError("matrix row count mismatch");
        for (int r = 0; r < m.rows; ++r) {
            if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != m.cols)
                throw ValidationError("matrix column count mismatch");
            for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
        return MultiplicityMorphism(std::move(src), std::move(tgt), std::move(m));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad morphism JSON: ") + e.what());
    }
}

} // namespace outcat
