#include "outcat/group.hpp"

#include <algorithm>

namespace outcat {

std::string GroupType::label() const {
    switch (kind) {
        case Kind::alternating: return "A" + std::to_string(degree);
        case Kind::symmetric: return "S" + std::to_string(degree);
        case Kind::product_alternating: {
            std::string s;
            for (size_t i = 0; i < components.size(); ++i) {
                if (i) s += "x";
                s += "A" + std::to_string(components[i]);
            }
            return s;
        }
    }
    return "?";
}

std::vector<int> GroupType::component_offsets() const {
    std::vector<int> off;
    int at = 0;
    for (int d : components) {
        off.push_back(at);
        at += d;
    }
    return off;
}

std::vector<int> GroupType::point_blocks() const {
    std::vector<int> blocks(static_cast<size_t>(degree), 0);
    if (kind == Kind::product_alternating) {
        int at = 0, id = 0;
        for (int d : components) {
            for (int p = 0; p < d; ++p) blocks[static_cast<size_t>(at + p)] = id;
            at += d;
            ++id;
        }
    }
    return blocks;
}

bool GroupType::contains(const Perm& p) const {
    if (p.degree() != degree) return false;
    switch (kind) {
        case Kind::symmetric:
            return true;
        case Kind::alternating:
            return p.sign() == 1;
        case Kind::product_alternating: {
            // must preserve each block and be even within it
            auto blocks = point_blocks();
            auto off = component_offsets();
            for (int q = 0; q < degree; ++q)
                if (blocks[static_cast<size_t>(p.apply(q))] != blocks[static_cast<size_t>(q)]) return false;
            for (size_t c = 0; c < components.size(); ++c) {
                std::vector<uint8_t> restricted(static_cast<size_t>(components[c]));
                for (int q = 0; q < components[c]; ++q)
                    restricted[static_cast<size_t>(q)] = static_cast<uint8_t>(p.apply(off[c] + q) - off[c]);
                if (Perm::from_images(restricted).sign() != 1) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

Perm cycle_range(int first, int last, int degree) {
    // (first first+1 ... last), 0-based points
    Perm p(degree);
    std::vector<uint8_t> img(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    for (int i = first; i < last; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(i + 1);
    img[static_cast<size_t>(last)] = static_cast<uint8_t>(first);
    return Perm::from_images(img);
}

std::vector<Perm> alternating_generators(int n, int degree, int offset) {
    // acting on points offset..offset+n-1 inside Sym(degree)
    std::vector<Perm> gens;
    if (n >= 3) {
        Perm three(degree);
        {
            std::vector<uint8_t> img(static_cast<size_t>(degree));
            for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
            img[static_cast<size_t>(offset)] = static_cast<uint8_t>(offset + 1);
            img[static_cast<size_t>(offset + 1)] = static_cast<uint8_t>(offset + 2);
            img[static_cast<size_t>(offset + 2)] = static_cast<uint8_t>(offset);
            three = Perm::from_images(img);
        }
        gens.push_back(three);
        if (n > 3) {
            // full cycle for odd n, cycle on 2..n for even n
            if (n % 2 == 1)
                gens.push_back(cycle_range(offset, offset + n - 1, degree));
            else
                gens.push_back(cycle_range(offset + 1, offset + n - 1, degree));
        }
    }
    return gens;
}

} // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::alternating(int n, const GroupCaps& caps) {
    if (n < 1) throw ValidationError("alternating group degree must be >= 1");
    if (n > caps.degree_cap)
        throw CapError("degree " + std::to_string(n) + " exceeds enumeration cap " +
                       std::to_string(caps.degree_cap));
    GroupType t{GroupType::Kind::alternating, n, {n}};
    return build(t, alternating_generators(n, n, 0), caps);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(int n, const GroupCaps& caps) {
    if (n < 1) throw ValidationError("symmetric group degree must be >= 1");
    if (n > caps.degree_cap)
        throw CapError("degree " + std::to_string(n) + " exceeds enumeration cap " +
                       std::to_string(caps.degree_cap));
    GroupType t{GroupType::Kind::symmetric, n, {n}};
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<uint8_t> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
        std::swap(img[0], img[1]);
        gens.push_back(Perm::from_images(img));
        if (n > 2) gens.push_back(cycle_range(0, n - 1, n));
    }
    return build(t, gens, caps);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::product_alternating(const std::vector<int>& degrees,
                                                                    const GroupCaps& caps) {
    if (degrees.empty()) throw ValidationError("empty product");
    int total = 0;
    for (int d : degrees) {
        if (d < 1) throw ValidationError("component degree must be >= 1");
        total += d;
    }
    if (total > 16) throw CapError("product degree exceeds 16");
    GroupType t{GroupType::Kind::product_alternating, total, degrees};
    std::vector<Perm> gens;
    int at = 0;
    for (int d : degrees) {
        auto g = alternating_generators(d, total, at);
        gens.insert(gens.end(), g.begin(), g.end());
        at += d;
    }
    return build(t, gens, caps);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::build(GroupType type, std::vector<Perm> gens,
                                                      const GroupCaps& caps) {
    auto g = std::make_shared<FiniteGroup>(FiniteGroup{});
    g->type_ = type;
    g->generators_ = std::move(gens);
    g->elements_.push_back(Perm(type.degree));
    g->words_.push_back({-1, -1});
    g->index_[g->elements_[0].key()] = 0;
    for (size_t i = 0; i < g->elements_.size(); ++i) {
        for (size_t k = 0; k < g->generators_.size(); ++k) {
            Perm next = g->elements_[i].then(g->generators_[k]);
            uint64_t key = next.key();
            if (g->index_.find(key) == g->index_.end()) {
                if (static_cast<long long>(g->elements_.size()) >= caps.element_cap)
                    throw CapError("group enumeration exceeds element cap");
                g->index_[key] = static_cast<int32_t>(g->elements_.size());
                g->elements_.push_back(next);
                g->words_.push_back({static_cast<int32_t>(i), static_cast<int32_t>(k)});
            }
        }
    }
    g->cayley_.resize(g->elements_.size() * std::max<size_t>(1, g->generators_.size()));
    for (size_t i = 0; i < g->elements_.size(); ++i)
        for (size_t k = 0; k < g->generators_.size(); ++k)
            g->cayley_[i * g->generators_.size() + k] =
                g->index_.at(g->elements_[i].then(g->generators_[k]).key());
    g->orders_.reserve(g->elements_.size());
    for (const auto& e : g->elements_) g->orders_.push_back(e.order());
    return g;
}

int FiniteGroup::index_of(const Perm& p) const {
    auto it = index_.find(p.key());
    if (it == index_.end()) throw ValidationError("permutation not in group " + type_.label());
    return it->second;
}

std::optional<int> FiniteGroup::find(const Perm& p) const {
    if (p.degree() != degree()) return std::nullopt;
    auto it = index_.find(p.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FiniteGroup::mul(int i, int j) const {
    return index_.at(elements_[static_cast<size_t>(i)].then(elements_[static_cast<size_t>(j)]).key());
}

int FiniteGroup::inv(int i) const { return index_.at(elements_[static_cast<size_t>(i)].inverse().key()); }

int FiniteGroup::conjugacy_class_size(int i) const {
    if (class_size_.empty()) {
        class_size_.assign(elements_.size(), 0);
        std::vector<int32_t> rep(elements_.size(), -1);
        for (size_t x = 0; x < elements_.size(); ++x) {
            if (rep[x] != -1) continue;
            // orbit of x under conjugation
            std::vector<int> orbit{static_cast<int>(x)};
            rep[x] = static_cast<int32_t>(x);
            for (size_t q = 0; q < orbit.size(); ++q) {
                for (size_t k = 0; k < generators_.size(); ++k) {
                    const Perm& g = generators_[k];
                    Perm conj = g.then(elements_[static_cast<size_t>(orbit[q])]).then(g.inverse());
                    int idx = index_.at(conj.key());
                    if (rep[static_cast<size_t>(idx)] == -1) {
                        rep[static_cast<size_t>(idx)] = static_cast<int32_t>(x);
                        orbit.push_back(idx);
                    }
                }
            }
            for (int m : orbit) class_size_[static_cast<size_t>(m)] = static_cast<int>(orbit.size());
        }
    }
    return class_size_[static_cast<size_t>(i)];
}

} // namespace outcat
