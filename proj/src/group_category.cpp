#include "outcat/group_category.hpp"

#include <algorithm>
#include <unordered_map>

namespace outcat {

namespace {

// key a hom by its generator images (they determine it)
std::vector<uint64_t> hom_key(const GroupHom& h) {
    std::vector<uint64_t> k;
    for (const Perm& p : h.generator_images()) k.push_back(p.key());
    if (k.empty()) k.push_back(0); // trivial source group
    return k;
}

struct KeyHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : v) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

GroupCategory GroupCategory::build(std::vector<std::shared_ptr<const FiniteGroup>> groups) {
    GroupCategory cat;
    cat.groups_ = std::move(groups);
    FiniteCategorySpec::Builder b;
    std::vector<ObjId> ids;
    for (const auto& g : cat.groups_) ids.push_back(b.add_object(g->type().label()));

    // enumerate hom-sets; remember ids by generator-image key per cell
    size_t n = cat.groups_.size();
    std::vector<std::unordered_map<std::vector<uint64_t>, MorId, KeyHash>> by_key(n * n);
    std::vector<std::vector<MorId>> cell(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto homs = all_homs(cat.groups_[i], cat.groups_[j]);
            for (size_t k = 0; k < homs.size(); ++k) {
                MorId id = b.add_morphism(cat.groups_[i]->type().label() + "->" +
                                              cat.groups_[j]->type().label() + "#" + std::to_string(k),
                                          ids[i], ids[j]);
                by_key[i * n + j][hom_key(homs[k])] = id;
                cell[i * n + j].push_back(id);
                cat.homs_.push_back(std::move(homs[k]));
            }
        }
    // identities and inner families (conjugations, deduplicated, element order)
    for (size_t i = 0; i < n; ++i) {
        GroupHom idh = GroupHom::identity(cat.groups_[i]);
        b.set_identity(ids[i], by_key[i * n + i].at(hom_key(idh)));
        std::vector<MorId> inner;
        for (const Perm& h : cat.groups_[i]->elements()) {
            MorId m = by_key[i * n + i].at(hom_key(GroupHom::conjugation(cat.groups_[i], h)));
            if (std::find(inner.begin(), inner.end(), m) == inner.end()) inner.push_back(m);
        }
        b.set_inner(ids[i], std::move(inner));
    }
    // composition: evaluate generator images through the middle group
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (MorId f : cell[i * n + j]) {
                    const GroupHom& hf = cat.homs_[static_cast<size_t>(f)];
                    auto gen_images = hf.generator_images();
                    for (MorId g : cell[j * n + k]) {
                        const GroupHom& hg = cat.homs_[static_cast<size_t>(g)];
                        std::vector<uint64_t> key;
                        if (gen_images.empty()) {
                            key.push_back(0);
                        } else {
                            for (const Perm& gi : gen_images) key.push_back(hg.eval(gi).key());
                        }
                        b.set_composite(f, g, by_key[i * n + k].at(key));
                    }
                }
    cat.spec_ = b.build_with_table(true);
    return cat;
}

MorId GroupCategory::morid_of(ObjId a, ObjId b, const GroupHom& h) const {
    for (MorId f : spec_->hom(a, b))
        if (homs_[static_cast<size_t>(f)] == h) return f;
    throw ValidationError("hom not found in category");
}

MorId GroupCategory::conjugation_morphism(ObjId a, const Perm& h) const {
    return morid_of(a, a, GroupHom::conjugation(groups_[static_cast<size_t>(a)], h));
}

const MetricHomSpace& GroupCategory::space(ObjId a, ObjId b) const {
    auto it = spaces_.find({a, b});
    if (it != spaces_.end()) return it->second;
    const auto& src = groups_[static_cast<size_t>(a)];
    if (src->size() > 62) throw CapError("source group too large for the exact dyadic metric");
    MetricHomSpace sp;
    sp.source = a;
    sp.target = b;
    sp.homs = spec_->hom(a, b);
    size_t n = sp.homs.size();
    // image keys per hom, in source element order
    std::vector<std::vector<uint64_t>> vals(n);
    for (size_t u = 0; u < n; ++u) {
        const GroupHom& h = homs_[static_cast<size_t>(sp.homs[u])];
        for (const Perm& img : h.images()) vals[u].push_back(img.key());
    }
    sp.dist.assign(n * n, Rational(0));
    for (size_t u = 0; u < n; ++u)
        for (size_t v = u + 1; v < n; ++v) {
            Rational d;
            for (size_t i = 0; i < vals[u].size(); ++i)
                if (vals[u][i] != vals[v][i]) d = d + Rational::pow2(-static_cast<int>(i + 1));
            sp.dist[u * n + v] = d;
            sp.dist[v * n + u] = d;
        }
    return spaces_.emplace(std::make_pair(a, b), std::move(sp)).first->second;
}

} // namespace outcat
