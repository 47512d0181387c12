#pragma once

#include <memory>
#include <vector>

#include "outcat/category.hpp"
#include "outcat/group.hpp"

namespace outcat {

// The category of the sets {1}, {1,2}, ..., {1..max_size} with either all
// functions or only the injections as morphisms, and all bijections
// designated inner. Objects are named "1".."N"; a morphism is named after
// its value table, e.g. "2->3:(1,3)".
struct FiniteSetsInstance {
    std::shared_ptr<const FiniteCategorySpec> spec;
    // value table (1-based images) of a morphism
    std::vector<std::vector<int>> values;

    bool is_constant(MorId f) const;
    bool is_injective(MorId f) const;
};

enum class SetMaps { all, injections };

FiniteSetsInstance finite_sets_instance(int max_size, SetMaps maps);

inline FiniteSetsInstance finite_sets_injections_instance(int max_size) {
    return finite_sets_instance(max_size, SetMaps::injections);
}

// A group as a one-object category: morphisms are the group elements,
// composition is the (diagrammatic) group product, and the designated
// inner set is a chosen subset of elements. Theorem-style quotients make
// sense exactly when the generated subgroup is normal.
std::shared_ptr<const FiniteCategorySpec> one_object_group_category(
    const std::shared_ptr<const FiniteGroup>& g, const std::vector<int>& inner_element_indices);

// Convenience: the whole group designated inner ("all conjugations").
std::shared_ptr<const FiniteCategorySpec> one_object_group_category_full_inner(
    const std::shared_ptr<const FiniteGroup>& g);

} // namespace outcat
