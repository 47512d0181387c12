#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "outcat/perm.hpp"

namespace outcat {

// Which abstract group a permutation group represents, and on which
// symbols. Products of alternating groups act on the disjoint union of
// their component symbol sets; the component layout is kept so the
// per-component equivalence notions can be applied.
struct GroupType {
    enum class Kind { alternating, symmetric, product_alternating };

    Kind kind = Kind::alternating;
    int degree = 0;
    std::vector<int> components; // component degrees; {degree} unless product

    std::string label() const;
    // Membership test for the abstract group inside Sym(degree).
    bool contains(const Perm& p) const;
    // component id per point (all zero unless product).
    std::vector<int> point_blocks() const;
    // first symbol of each component.
    std::vector<int> component_offsets() const;

    bool operator==(const GroupType& o) const = default;
};

struct GroupCaps {
    int degree_cap = 8;          // full enumeration allowed up to this degree
    long long element_cap = 50000; // and up to this many elements
};

// A fully enumerated finite permutation group. elements()[0] is the
// identity; the enumeration order is the breadth-first closure of the
// generator list and is fixed, so anything derived from element numbering
// (metrics in particular) is stable across runs.
class FiniteGroup {
public:
    static std::shared_ptr<const FiniteGroup> alternating(int n, const GroupCaps& caps = {});
    static std::shared_ptr<const FiniteGroup> symmetric(int n, const GroupCaps& caps = {});
    static std::shared_ptr<const FiniteGroup> product_alternating(const std::vector<int>& degrees,
                                                                  const GroupCaps& caps = {});

    const GroupType& type() const { return type_; }
    int degree() const { return type_.degree; }
    size_t size() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    // Index of a permutation in the enumeration; throws if absent.
    int index_of(const Perm& p) const;
    std::optional<int> find(const Perm& p) const;

    int mul(int i, int j) const; // elements[i] then elements[j]
    int inv(int i) const;
    int right_mul_gen(int i, int g) const { return cayley_[static_cast<size_t>(i) * generators_.size() + g]; }

    // elements[k] == elements[word[k].parent] then generators[word[k].gen]
    // (k >= 1; element 0 is the identity).
    struct Word {
        int32_t parent;
        int32_t gen;
    };
    const std::vector<Word>& words() const { return words_; }

    int element_order(int i) const { return orders_[static_cast<size_t>(i)]; }
    // Size of the conjugacy class of elements[i] (used to prune
    // automorphism searches).
    int conjugacy_class_size(int i) const;

private:
    static std::shared_ptr<const FiniteGroup> build(GroupType type, std::vector<Perm> gens,
                                                    const GroupCaps& caps);

    GroupType type_;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
    std::vector<Word> words_;
    std::vector<int32_t> cayley_; // |G| x |gens| right multiplication
    std::vector<int> orders_;
    std::unordered_map<uint64_t, int32_t> index_;
    mutable std::vector<int> class_size_; // lazily filled
};

} // namespace outcat
