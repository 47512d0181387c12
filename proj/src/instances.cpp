#include "outcat/instances.hpp"

#include <algorithm>
#include <map>

namespace outcat {

namespace {

std::string map_name(int a, int b, const std::vector<int>& values) {
    std::string s = std::to_string(a) + "->" + std::to_string(b) + ":(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    return s + ")";
}

// all value tables a -> b, lexicographic; optionally injective only
void enumerate_maps(int a, int b, bool injective, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(static_cast<size_t>(a), 1);
    while (true) {
        bool ok = true;
        if (injective) {
            std::vector<int> sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }
        if (ok) out.push_back(cur);
        int i = a - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == b) {
            cur[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
    }
}

} // namespace

bool FiniteSetsInstance::is_constant(MorId f) const {
    const auto& v = values[static_cast<size_t>(f)];
    for (int x : v)
        if (x != v[0]) return false;
    return true;
}

bool FiniteSetsInstance::is_injective(MorId f) const {
    auto v = values[static_cast<size_t>(f)];
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

FiniteSetsInstance finite_sets_instance(int max_size, SetMaps maps) {
    if (max_size < 1) throw ValidationError("max_size must be >= 1");
    FiniteCategorySpec::Builder b;
    std::vector<ObjId> objs;
    for (int s = 1; s <= max_size; ++s) objs.push_back(b.add_object(std::to_string(s)));

    FiniteSetsInstance inst;
    // morphism ids per (a,b) with value tables
    std::map<std::pair<int, int>, std::vector<MorId>> cell_ids;
    std::map<std::pair<int, int>, std::map<std::vector<int>, MorId>> lookup;
    for (int a = 1; a <= max_size; ++a)
        for (int bb = 1; bb <= max_size; ++bb) {
            std::vector<std::vector<int>> tables;
            enumerate_maps(a, bb, maps == SetMaps::injections, tables);
            for (auto& t : tables) {
                MorId id = b.add_morphism(map_name(a, bb, t), objs[static_cast<size_t>(a - 1)],
                                          objs[static_cast<size_t>(bb - 1)]);
                cell_ids[{a, bb}].push_back(id);
                lookup[{a, bb}][t] = id;
                inst.values.push_back(t);
            }
        }
    // identities and inner (= bijections, which exist exactly when a == b)
    for (int a = 1; a <= max_size; ++a) {
        std::vector<int> idt(static_cast<size_t>(a));
        for (int i = 0; i < a; ++i) idt[static_cast<size_t>(i)] = i + 1;
        b.set_identity(objs[static_cast<size_t>(a - 1)], lookup[{a, a}].at(idt));
        std::vector<MorId> inner;
        for (MorId f : cell_ids[{a, a}]) {
            auto v = inst.values[static_cast<size_t>(f)];
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) == v.end()) inner.push_back(f);
        }
        b.set_inner(objs[static_cast<size_t>(a - 1)], std::move(inner));
    }
    // composition = function composition
    for (int a = 1; a <= max_size; ++a)
        for (int m = 1; m <= max_size; ++m)
            for (int c = 1; c <= max_size; ++c)
                for (MorId f : cell_ids[{a, m}])
                    for (MorId g : cell_ids[{m, c}]) {
                        const auto& fv = inst.values[static_cast<size_t>(f)];
                        const auto& gv = inst.values[static_cast<size_t>(g)];
                        std::vector<int> comp(fv.size());
                        for (size_t i = 0; i < fv.size(); ++i)
                            comp[i] = gv[static_cast<size_t>(fv[i] - 1)];
                        b.set_composite(f, g, lookup[{a, c}].at(comp));
                    }
    inst.spec = b.build_with_table(true);
    return inst;
}

std::shared_ptr<const FiniteCategorySpec> one_object_group_category(
    const std::shared_ptr<const FiniteGroup>& g, const std::vector<int>& inner_element_indices) {
    FiniteCategorySpec::Builder b;
    ObjId star = b.add_object(g->type().label());
    std::vector<MorId> ids;
    for (size_t i = 0; i < g->size(); ++i)
        ids.push_back(b.add_morphism(g->elements()[i].cycles() + "#" + std::to_string(i), star, star));
    b.set_identity(star, ids[0]);
    std::vector<MorId> inner;
    for (int i : inner_element_indices) inner.push_back(ids[static_cast<size_t>(i)]);
    b.set_inner(star, std::move(inner));
    for (size_t i = 0; i < g->size(); ++i)
        for (size_t j = 0; j < g->size(); ++j)
            b.set_composite(ids[i], ids[j],
                            ids[static_cast<size_t>(g->mul(static_cast<int>(i), static_cast<int>(j)))]);
    return b.build_with_table(true);
}

std::shared_ptr<const FiniteCategorySpec> one_object_group_category_full_inner(
    const std::shared_ptr<const FiniteGroup>& g) {
    std::vector<int> all(g->size());
    for (size_t i = 0; i < g->size(); ++i) all[i] = static_cast<int>(i);
    return one_object_group_category(g, all);
}

} // namespace outcat
