#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "outcat/category.hpp"

namespace outcat {

// One equivalence class of morphisms: the orbit of any member under
// post-composition with the target's inner automorphisms (equivalently,
// under a validated axiom, the two-sided orbit).
struct MorphismClass {
    ObjId source;
    ObjId target;
    std::vector<MorId> members; // sorted
};

// A partition of every hom-set into orbits, with a member -> class map.
struct OrbitFamily {
    std::vector<MorphismClass> classes;
    std::vector<int32_t> class_of; // per MorId
};

enum class OrbitSide { codomain, two_sided };

OrbitFamily compute_orbits(const FiniteCategorySpec& spec, OrbitSide side);

// A morphism f: a -> b and h in inner(a) with no k in inner(b) satisfying
// (h then f) == (f then k).
struct AxiomViolation {
    MorId f;
    MorId h;
};

// Empty iff the domain-to-codomain exchange axiom holds for every
// morphism and every designated inner automorphism of its source.
// Validates the spec (basic level, plus full laws for table-built specs)
// before checking and throws ValidationError on malformed input.
std::vector<AxiomViolation> verify_inner_axiom(const FiniteCategorySpec& spec);

// Replace each designated inner set with the subgroup it generates
// (composition closure; finiteness supplies inverses). Throws if a
// designated element is not invertible.
std::shared_ptr<const FiniteCategorySpec> inner_closure(const FiniteCategorySpec& spec);

bool inner_is_closed(const FiniteCategorySpec& spec);

// The quotient category: same objects, morphism classes as morphisms.
// compose() works on class ids; identities are the classes of the
// identities. Hand-construction (for negative controls) goes through
// QuotientCategory::Builder and skips every guarantee.
class QuotientCategory {
public:
    struct Builder;

    int object_count() const { return static_cast<int>(object_names_.size()); }
    const std::string& object_name(ObjId a) const { return object_names_[static_cast<size_t>(a)]; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const MorphismClass& cls(int c) const { return classes_[static_cast<size_t>(c)]; }
    int class_of(MorId f) const { return class_of_[static_cast<size_t>(f)]; }
    const std::vector<int32_t>& classes_between(ObjId a, ObjId b) const {
        return hom_classes_[static_cast<size_t>(a) * object_names_.size() + static_cast<size_t>(b)];
    }
    int identity_class(ObjId a) const { return id_class_[static_cast<size_t>(a)]; }
    int compose(int c1, int c2) const; // class composition
    bool invertible_class(int c) const;

private:
    friend struct Builder;
    friend QuotientCategory quotient(const FiniteCategorySpec& spec);
    std::vector<std::string> object_names_;
    std::vector<MorphismClass> classes_;
    std::vector<int32_t> class_of_;
    std::vector<std::vector<int32_t>> hom_classes_;
    std::vector<int32_t> id_class_;
    std::vector<int32_t> compose_table_; // dense classes x classes, -1 off-type
};

// Hand-built quotient-shaped structures for negative controls and the
// Cantor-Bernstein preorder checks. No validation beyond shape.
struct QuotientCategory::Builder {
    ObjId add_object(const std::string& name);
    int add_class(ObjId source, ObjId target, std::vector<MorId> members);
    void set_identity_class(ObjId a, int c);
    void set_composite(int c1, int c2, int c12);
    QuotientCategory build();

private:
    QuotientCategory q_;
    std::vector<std::tuple<int, int, int>> composites_;
};

// Builds the quotient. Preconditions enforced: the spec validates, every
// inner set is a closed subgroup (run inner_closure first), and the
// exchange axiom holds (the witness list is embedded in the error
// otherwise). The returned structure has been checked exhaustively:
// every element-wise product of two classes landed in a single class.
QuotientCategory quotient(const FiniteCategorySpec& spec);

// A pair of composable classes whose element-wise product meets at least
// two distinct classes, together with exhibits.
struct ClassProductDefect {
    int left_class;
    int right_class;
    // two composable member pairs with inequivalent composites
    MorId f1, g1, h1;
    MorId f2, g2, h2;
    // classes met by the product, in discovery order
    std::vector<int32_t> composite_classes;
};

// Orbits are the two-sided orbits under the designated automorphism
// families, which need not satisfy the exchange axiom. Returns the first
// defect in deterministic order, or nullopt if every class product is a
// single class.
std::optional<ClassProductDefect> class_product_defect(const FiniteCategorySpec& spec);

// Morphisms whose class is invertible in the quotient but which are not
// themselves invertible. Empty on every quotient built by quotient();
// hand-built structures can violate it.
std::vector<MorId> is_super_strong(const FiniteCategorySpec& spec, const QuotientCategory& q);

// Mutually reachable object pairs that are not isomorphic in q. The
// precondition is thinness between distinct objects (at most one class);
// endomorphism hom-sets may be richer, which is what gives the check
// content (a fully thin category satisfies the conclusion vacuously).
struct CantorBernsteinViolation {
    ObjId a;
    ObjId b;
};
std::vector<CantorBernsteinViolation> cantor_bernstein_check(const QuotientCategory& q);

} // namespace outcat
