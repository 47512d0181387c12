#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "outcat/group.hpp"

namespace outcat {

// A homomorphism between permutation groups, stored element-wise on the
// (enumerated) source. The target group need not be enumerated: images are
// permutations checked against the target's GroupType, which is what lets
// conjugacy questions about maps into A12 be answered without ever
// enumerating A12.
class GroupHom {
public:
    // Extends generator images over the whole source and verifies the
    // homomorphism law; nullopt if the images are inconsistent.
    static std::optional<GroupHom> from_generator_images(std::shared_ptr<const FiniteGroup> src,
                                                         GroupType target,
                                                         const std::vector<Perm>& images);

    static GroupHom identity(const std::shared_ptr<const FiniteGroup>& g);
    static GroupHom trivial(std::shared_ptr<const FiniteGroup> src, GroupType target);
    // Inner automorphism x -> h x h^-1 of g.
    static GroupHom conjugation(const std::shared_ptr<const FiniteGroup>& g, const Perm& h);

    const std::shared_ptr<const FiniteGroup>& source() const { return src_; }
    const GroupType& target() const { return target_; }
    const Perm& image(int element_index) const { return images_[static_cast<size_t>(element_index)]; }
    const std::vector<Perm>& images() const { return images_; }
    Perm eval(const Perm& x) const { return images_[static_cast<size_t>(src_->index_of(x))]; }
    std::vector<Perm> generator_images() const;

    // this first, then o; o's source must be an enumerated group whose
    // type matches this->target() and contains every image.
    GroupHom then(const GroupHom& o) const;
    // Post-compose with conjugation by h (an element of the target type).
    GroupHom then_conjugation(const Perm& h) const;
    // Pre-compose with an endomorphism of the source.
    GroupHom after_endo(const GroupHom& endo) const;

    bool is_injective() const;
    GroupHom inverse_automorphism() const; // requires bijective endomorphism shape

    bool operator==(const GroupHom& o) const;
    bool operator!=(const GroupHom& o) const { return !(*this == o); }

private:
    friend class HomEnumerator;
    GroupHom() = default;
    static GroupHom unchecked(std::shared_ptr<const FiniteGroup> src, GroupType target,
                              std::vector<Perm> images);

    std::shared_ptr<const FiniteGroup> src_;
    GroupType target_;
    std::vector<Perm> images_;
};

// Options for the point-level conjugator search: which parity the
// conjugator may have (per block), and an optional block structure it
// must preserve.
struct ConjugatorOptions {
    enum class Parity { any, even_per_block };
    Parity parity = Parity::any;
    std::vector<int> point_blocks; // empty = single block
};

// First permutation h (lexicographically smallest image array) with
// h . x_i . h^-1 == y_i for all i, subject to the options; nullopt if none.
std::optional<Perm> find_conjugator(const std::vector<Perm>& xs, const std::vector<Perm>& ys,
                                    int degree, const ConjugatorOptions& opts = {});

// h in the target group (enumeration order if the target is enumerable,
// lexicographic point order otherwise) with g == f then conjugation-by-h.
std::optional<Perm> inner_equivalent(const GroupHom& f, const GroupHom& g);

// Like inner_equivalent but conjugators may be odd, independently on each
// component of a product-of-alternating target (for a plain alternating
// target this is conjugacy under the full symmetric group).
std::optional<Perm> generalized_inner_equivalent(const GroupHom& f, const GroupHom& g);

// Conjugacy under the full symmetric group on the target symbols,
// ignoring the block structure.
std::optional<Perm> symmetric_conjugator(const GroupHom& f, const GroupHom& g);

// Complete, deterministic enumeration of Hom(src, tgt). Candidates are
// generator-image tuples filtered by element orders and a few probe words
// before the full extension check.
std::vector<GroupHom> all_homs(const std::shared_ptr<const FiniteGroup>& src,
                               const std::shared_ptr<const FiniteGroup>& tgt);

// All automorphisms of g, pruned by element order and conjugacy class
// size of the generator images. Throws CapError above the element cap.
std::vector<GroupHom> automorphisms(const std::shared_ptr<const FiniteGroup>& g,
                                    long long element_cap = 360);

} // namespace outcat
