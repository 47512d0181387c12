#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "outcat/category.hpp"

namespace outcat {

// Dense integer matrix, row major. Rows are indexed by the target, so
// composition under the "f then g" convention is g.matrix * f.matrix.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
    static IntMatrix identity(int n);

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + static_cast<size_t>(c)]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + static_cast<size_t>(c)]; }

    IntMatrix mul(const IntMatrix& o) const; // this * o, overflow-checked
    std::vector<long long> apply(const std::vector<long long>& v) const;
    bool is_zero() const;
    bool is_permutation() const;
    bool is_square() const { return rows == cols; }
    // Nonzero determinant over the rationals, i.e. injectivity as a linear
    // map (used by the K0 equality decision). Exact fraction-free Gauss.
    bool is_injective() const;

    bool operator==(const IntMatrix& o) const = default;
    bool operator<(const IntMatrix& o) const; // shape, then row-major lex
};

// A finite direct sum of matrix algebras, recorded by the orders of its
// summands.
struct AlgebraObject {
    std::vector<long long> sizes;

    explicit AlgebraObject(std::vector<long long> s);
    int summands() const { return static_cast<int>(sizes.size()); }
    std::string name() const; // "(2,4)"
    bool operator==(const AlgebraObject& o) const = default;
};

// A morphism class between such algebras: the multiplicity matrix of the
// partial maps. Admissibility: matrix * source.sizes <= target.sizes
// componentwise; equality in every row is exactly unitality.
struct MultiplicityMorphism {
    AlgebraObject source;
    AlgebraObject target;
    IntMatrix matrix;

    MultiplicityMorphism(AlgebraObject src, AlgebraObject tgt, IntMatrix m);
    bool unital() const;
    bool operator==(const MultiplicityMorphism& o) const = default;
};

MultiplicityMorphism identity_morphism(const AlgebraObject& a);
MultiplicityMorphism compose(const MultiplicityMorphism& f, const MultiplicityMorphism& g); // f then g

bool is_isomorphism(const MultiplicityMorphism& f);

// Existence of an admissible matrix. Unital: every row must hit the target
// size exactly (per-row coin change). Non-unital with allow_zero: always
// true. Non-unital without: some nonzero admissible matrix.
bool hom_exists(const AlgebraObject& a, const AlgebraObject& b, bool unital, bool allow_zero = true);

// Complete duplicate-free enumeration in ascending row-major lexicographic
// order. Entries are bounded by target row size / source entry, so the
// list is finite. allow_zero only matters for the non-unital case.
std::vector<MultiplicityMorphism> enumerate_homs(const AlgebraObject& a, const AlgebraObject& b,
                                                 bool unital, bool allow_zero = true);

// All objects with size sum <= bound (ordered compositions) and all
// admissible matrices between them, as an explicit category. The
// morphisms here are already inner classes, so inner = {id}. Composition
// is computed from the matrices rather than stored; hom-sets are
// materialized.
std::shared_ptr<const FiniteCategorySpec> export_as_spec(int size_bound);

// Morphism attached to an exported spec id (for tests and determinism
// checks).
const MultiplicityMorphism& exported_morphism(const FiniteCategorySpec& spec, MorId f);

// JSON forms: {"sizes": [...]} and
// {"matrix": [[...], ...], "source": {...}, "target": {...}}.
std::string save_morphism_json(const MultiplicityMorphism& m);
MultiplicityMorphism load_morphism_json(const std::string& text);

} // namespace outcat
