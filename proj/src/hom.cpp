#include "outcat/hom.hpp"

#include <algorithm>

namespace outcat {

GroupHom GroupHom::unchecked(std::shared_ptr<const FiniteGroup> src, GroupType target,
                             std::vector<Perm> images) {
    GroupHom h;
    h.src_ = std::move(src);
    h.target_ = std::move(target);
    h.images_ = std::move(images);
    return h;
}

std::optional<GroupHom> GroupHom::from_generator_images(std::shared_ptr<const FiniteGroup> src,
                                                        GroupType target,
                                                        const std::vector<Perm>& images) {
    const auto& gens = src->generators();
    if (images.size() != gens.size()) throw ValidationError("generator image count mismatch");
    for (const Perm& p : images) {
        if (p.degree() != target.degree) throw ValidationError("image degree mismatch");
        if (!target.contains(p)) return std::nullopt;
    }
    // Extend along the breadth-first words.
    std::vector<Perm> full(src->size());
    full[0] = Perm(target.degree);
    const auto& words = src->words();
    for (size_t i = 1; i < src->size(); ++i)
        full[i] = full[static_cast<size_t>(words[i].parent)].then(images[static_cast<size_t>(words[i].gen)]);
    // The extension is multiplicative iff f(x·g) == f(x)·f(g) for every
    // element x and generator g.
    for (size_t i = 0; i < src->size(); ++i)
        for (size_t k = 0; k < gens.size(); ++k)
            if (!(full[static_cast<size_t>(src->right_mul_gen(static_cast<int>(i), static_cast<int>(k)))] ==
                  full[i].then(images[k])))
                return std::nullopt;
    return unchecked(std::move(src), std::move(target), std::move(full));
}

GroupHom GroupHom::identity(const std::shared_ptr<const FiniteGroup>& g) {
    return unchecked(g, g->type(), g->elements());
}

GroupHom GroupHom::trivial(std::shared_ptr<const FiniteGroup> src, GroupType target) {
    std::vector<Perm> images(src->size(), Perm(target.degree));
    return unchecked(std::move(src), std::move(target), std::move(images));
}

GroupHom GroupHom::conjugation(const std::shared_ptr<const FiniteGroup>& g, const Perm& h) {
    if (!g->type().contains(h)) throw ValidationError("conjugator not in group");
    Perm hinv = h.inverse();
    std::vector<Perm> images;
    images.reserve(g->size());
    for (const Perm& x : g->elements()) images.push_back(h.then(x).then(hinv));
    return unchecked(g, g->type(), std::move(images));
}

std::vector<Perm> GroupHom::generator_images() const {
    std::vector<Perm> out;
    for (const Perm& g : src_->generators()) out.push_back(images_[static_cast<size_t>(src_->index_of(g))]);
    return out;
}

GroupHom GroupHom::then(const GroupHom& o) const {
    if (!(o.source()->type() == target_)) throw ValidationError("hom composition endpoint mismatch");
    std::vector<Perm> images;
    images.reserve(images_.size());
    for (const Perm& v : images_) images.push_back(o.images_[static_cast<size_t>(o.source()->index_of(v))]);
    return unchecked(src_, o.target_, std::move(images));
}

GroupHom GroupHom::then_conjugation(const Perm& h) const {
    // Conjugation by any permutation of the target symbols that preserves
    // the block structure keeps images inside the target type (parity is
    // conjugation-invariant), so odd conjugators are fine here; they model
    // non-inner automorphisms.
    if (h.degree() != target_.degree) throw ValidationError("conjugator degree mismatch");
    if (target_.kind == GroupType::Kind::product_alternating) {
        auto blocks = target_.point_blocks();
        for (int p = 0; p < h.degree(); ++p)
            if (blocks[static_cast<size_t>(h.apply(p))] != blocks[static_cast<size_t>(p)])
                throw ValidationError("conjugator does not preserve components");
    }
    Perm hinv = h.inverse();
    std::vector<Perm> images;
    images.reserve(images_.size());
    for (const Perm& v : images_) images.push_back(h.then(v).then(hinv));
    return unchecked(src_, target_, std::move(images));
}

GroupHom GroupHom::after_endo(const GroupHom& endo) const {
    if (!(endo.target() == src_->type())) throw ValidationError("endomorphism endpoint mismatch");
    std::vector<Perm> images;
    images.reserve(endo.images_.size());
    for (const Perm& v : endo.images_) images.push_back(images_[static_cast<size_t>(src_->index_of(v))]);
    return unchecked(endo.src_, target_, std::move(images));
}

bool GroupHom::is_injective() const {
    std::vector<uint64_t> keys;
    keys.reserve(images_.size());
    for (const Perm& p : images_) keys.push_back(p.key());
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

GroupHom GroupHom::inverse_automorphism() const {
    if (!(target_ == src_->type()) || !is_injective())
        throw ValidationError("inverse requires a bijective endomorphism");
    std::vector<Perm> inv(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<size_t>(src_->index_of(images_[i]))] = src_->elements()[i];
    return unchecked(src_, target_, std::move(inv));
}

bool GroupHom::operator==(const GroupHom& o) const {
    // Enumeration order is deterministic per group type, so element-wise
    // image comparison is meaningful across distinct instances.
    return src_->type() == o.src_->type() && target_ == o.target_ && images_ == o.images_;
}

// ---------------------------------------------------------------------------
// Conjugator backtracking.
//
// Want h with h·x_i·h^-1 = y_i (diagrammatic products), i.e. as point maps
// h(y_i(p)) = x_i(h(p)) for every point p. Assign h point by point in
// increasing order, propagating forced assignments through every pair.

namespace {

struct ConjSearch {
    const std::vector<Perm>& xs;
    const std::vector<Perm>& ys;
    int n;
    const ConjugatorOptions& opts;
    std::vector<int> h;     // h[p], -1 unassigned
    std::vector<int> used;  // used[q] = p+1, 0 if free
    std::optional<Perm> result;

    ConjSearch(const std::vector<Perm>& xs_, const std::vector<Perm>& ys_, int n_,
               const ConjugatorOptions& opts_)
        : xs(xs_), ys(ys_), n(n_), opts(opts_), h(static_cast<size_t>(n_), -1),
          used(static_cast<size_t>(n_), 0) {}

    bool block_ok(int p, int q) const {
        if (opts.point_blocks.empty()) return true;
        return opts.point_blocks[static_cast<size_t>(p)] == opts.point_blocks[static_cast<size_t>(q)];
    }

    // Assign h(p)=q and propagate; records undo info. Returns false on clash.
    bool assign(int p, int q, std::vector<int>& trail) {
        std::vector<std::pair<int, int>> queue{{p, q}};
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            if (h[static_cast<size_t>(a)] != -1) {
                if (h[static_cast<size_t>(a)] != b) return false;
                continue;
            }
            if (used[static_cast<size_t>(b)] || !block_ok(a, b)) return false;
            h[static_cast<size_t>(a)] = b;
            used[static_cast<size_t>(b)] = a + 1;
            trail.push_back(a);
            for (size_t i = 0; i < xs.size(); ++i) {
                queue.emplace_back(ys[i].apply(a), xs[i].apply(b));
                queue.emplace_back(ys[i].inverse().apply(a), xs[i].inverse().apply(b));
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            int a = trail.back();
            trail.pop_back();
            used[static_cast<size_t>(h[static_cast<size_t>(a)])] = 0;
            h[static_cast<size_t>(a)] = -1;
        }
    }

    bool parity_accepts(const Perm& cand) const {
        if (opts.parity == ConjugatorOptions::Parity::any) return true;
        if (opts.point_blocks.empty()) return cand.sign() == 1;
        int nblocks = 1 + *std::max_element(opts.point_blocks.begin(), opts.point_blocks.end());
        for (int b = 0; b < nblocks; ++b) {
            std::vector<int> pts;
            for (int p = 0; p < n; ++p)
                if (opts.point_blocks[static_cast<size_t>(p)] == b) pts.push_back(p);
            std::vector<int> pos(static_cast<size_t>(n), -1);
            for (size_t i = 0; i < pts.size(); ++i) pos[static_cast<size_t>(pts[i])] = static_cast<int>(i);
            std::vector<uint8_t> img(pts.size());
            for (size_t i = 0; i < pts.size(); ++i)
                img[i] = static_cast<uint8_t>(pos[static_cast<size_t>(cand.apply(pts[i]))]);
            if (Perm::from_images(img).sign() != 1) return false;
        }
        return true;
    }

    bool search(std::vector<int>& trail) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (h[static_cast<size_t>(i)] == -1) {
                p = i;
                break;
            }
        if (p == -1) {
            std::vector<uint8_t> img(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<uint8_t>(h[static_cast<size_t>(i)]);
            Perm cand = Perm::from_images(img);
            if (!parity_accepts(cand)) return false;
            result = cand;
            return true;
        }
        for (int q = 0; q < n; ++q) {
            if (used[static_cast<size_t>(q)] || !block_ok(p, q)) continue;
            size_t mark = trail.size();
            if (assign(p, q, trail) && search(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

} // namespace

std::optional<Perm> find_conjugator(const std::vector<Perm>& xs, const std::vector<Perm>& ys,
                                    int degree, const ConjugatorOptions& opts) {
    if (xs.size() != ys.size()) throw ValidationError("conjugator search arity mismatch");
    ConjSearch s(xs, ys, degree, opts);
    std::vector<int> trail;
    s.search(trail);
    return s.result;
}

namespace {

// g == f then conjugation-by-h holds iff it holds on generator images.
bool conjugates(const Perm& h, const std::vector<Perm>& fgen, const std::vector<Perm>& ggen) {
    Perm hinv = h.inverse();
    for (size_t i = 0; i < fgen.size(); ++i)
        if (!(h.then(fgen[i]).then(hinv) == ggen[i])) return false;
    return true;
}

std::optional<Perm> conjugator_with(const GroupHom& f, const GroupHom& g,
                                    const ConjugatorOptions& opts) {
    if (!(f.source()->type() == g.source()->type()) || !(f.target() == g.target()))
        throw ValidationError("conjugacy comparison requires matching endpoints");
    return find_conjugator(f.generator_images(), g.generator_images(), f.target().degree, opts);
}

} // namespace

std::optional<Perm> inner_equivalent(const GroupHom& f, const GroupHom& g) {
    if (!(f.source()->type() == g.source()->type()) || !(f.target() == g.target()))
        throw ValidationError("inner_equivalent requires matching endpoints");
    auto fgen = f.generator_images();
    auto ggen = g.generator_images();
    ConjugatorOptions opts;
    opts.parity = ConjugatorOptions::Parity::even_per_block;
    opts.point_blocks = f.target().point_blocks();
    if (f.target().kind == GroupType::Kind::symmetric) opts.parity = ConjugatorOptions::Parity::any;
    // Small enough targets are scanned in enumeration order, which is the
    // documented deterministic tie-break; larger ones use the point search.
    GroupCaps caps;
    if (f.target().degree <= caps.degree_cap) {
        std::shared_ptr<const FiniteGroup> tgt;
        switch (f.target().kind) {
            case GroupType::Kind::alternating: tgt = FiniteGroup::alternating(f.target().degree); break;
            case GroupType::Kind::symmetric: tgt = FiniteGroup::symmetric(f.target().degree); break;
            case GroupType::Kind::product_alternating:
                tgt = FiniteGroup::product_alternating(f.target().components);
                break;
        }
        for (const Perm& h : tgt->elements())
            if (conjugates(h, fgen, ggen)) return h;
        return std::nullopt;
    }
    return conjugator_with(f, g, opts);
}

std::optional<Perm> generalized_inner_equivalent(const GroupHom& f, const GroupHom& g) {
    ConjugatorOptions opts;
    opts.parity = ConjugatorOptions::Parity::any;
    opts.point_blocks = f.target().point_blocks();
    return conjugator_with(f, g, opts);
}

std::optional<Perm> symmetric_conjugator(const GroupHom& f, const GroupHom& g) {
    ConjugatorOptions opts;
    opts.parity = ConjugatorOptions::Parity::any;
    return conjugator_with(f, g, opts);
}

// ---------------------------------------------------------------------------
// Hom enumeration.

namespace {

// generator-index words used as cheap consistency probes
const std::vector<std::vector<int>> kProbeWords = {
    {0, 1}, {0, 1, 1}, {0, 0, 1}, {0, 1, 0, 1, 1}};

Perm eval_word(const std::vector<int>& word, const std::vector<Perm>& gens) {
    Perm p(gens.empty() ? 0 : gens[0].degree());
    for (int g : word) p = p.then(gens[static_cast<size_t>(g)]);
    return p;
}

} // namespace

std::vector<GroupHom> all_homs(const std::shared_ptr<const FiniteGroup>& src,
                               const std::shared_ptr<const FiniteGroup>& tgt) {
    std::vector<GroupHom> out;
    const auto& gens = src->generators();
    if (gens.empty()) {
        out.push_back(GroupHom::trivial(src, tgt->type()));
        return out;
    }
    // A simple source admits only the trivial map and injective maps, so
    // nontrivial candidates must match element orders exactly; otherwise
    // divisibility is all that homomorphisms guarantee.
    const GroupType& st = src->type();
    bool simple_source = st.kind == GroupType::Kind::alternating && (st.degree == 3 || st.degree >= 5);
    if (simple_source) out.push_back(GroupHom::trivial(src, tgt->type()));
    std::vector<std::vector<int>> cands(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        int need = gens[k].order();
        for (size_t e = 0; e < tgt->size(); ++e) {
            int ord = tgt->element_order(static_cast<int>(e));
            if (simple_source ? ord == need : need % ord == 0) cands[k].push_back(static_cast<int>(e));
        }
    }
    // probe word orders in the source
    std::vector<std::pair<std::vector<int>, int>> probes;
    if (gens.size() >= 2) {
        for (const auto& w : kProbeWords) {
            bool ok = true;
            for (int g : w)
                if (g >= static_cast<int>(gens.size())) ok = false;
            if (!ok) continue;
            probes.emplace_back(w, eval_word(w, gens).order());
        }
    }
    std::vector<Perm> images(gens.size());
    // iterate over the candidate product in lexicographic order
    size_t total = 1;
    for (const auto& c : cands) total *= c.size();
    std::vector<size_t> idx(gens.size(), 0);
    for (size_t count = 0; count < total; ++count) {
        for (size_t k = 0; k < gens.size(); ++k)
            images[k] = tgt->elements()[static_cast<size_t>(cands[k][idx[k]])];
        bool ok = true;
        for (const auto& [w, ord] : probes) {
            int got = eval_word(w, images).order();
            if (simple_source ? got != ord : ord % got != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            auto hom = GroupHom::from_generator_images(src, tgt->type(), images);
            if (hom) out.push_back(std::move(*hom));
        }
        // increment mixed-radix counter
        for (size_t k = gens.size(); k-- > 0;) {
            if (++idx[k] < cands[k].size()) break;
            idx[k] = 0;
        }
    }
    return out;
}

std::vector<GroupHom> automorphisms(const std::shared_ptr<const FiniteGroup>& g,
                                    long long element_cap) {
    if (static_cast<long long>(g->size()) > element_cap)
        throw CapError("automorphism search cap exceeded: |G| = " + std::to_string(g->size()));
    std::vector<GroupHom> out;
    const auto& gens = g->generators();
    if (gens.empty()) {
        out.push_back(GroupHom::identity(g));
        return out;
    }
    // candidates must match order and conjugacy class size exactly
    std::vector<std::vector<int>> cands(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        int gi = g->index_of(gens[k]);
        int need_ord = g->element_order(gi);
        int need_cls = g->conjugacy_class_size(gi);
        for (size_t e = 0; e < g->size(); ++e)
            if (g->element_order(static_cast<int>(e)) == need_ord &&
                g->conjugacy_class_size(static_cast<int>(e)) == need_cls)
                cands[k].push_back(static_cast<int>(e));
    }
    std::vector<std::pair<std::vector<int>, int>> probes;
    if (gens.size() >= 2)
        for (const auto& w : kProbeWords) {
            bool fits = true;
            for (int x : w)
                if (x >= static_cast<int>(gens.size())) fits = false;
            if (fits) probes.emplace_back(w, eval_word(w, gens).order());
        }
    std::vector<Perm> images(gens.size());
    size_t total = 1;
    for (const auto& c : cands) total *= c.size();
    std::vector<size_t> idx(gens.size(), 0);
    for (size_t count = 0; count < total; ++count) {
        for (size_t k = 0; k < gens.size(); ++k)
            images[k] = g->elements()[static_cast<size_t>(cands[k][idx[k]])];
        bool ok = true;
        for (const auto& [w, ord] : probes)
            if (eval_word(w, images).order() != ord) {
                ok = false;
                break;
            }
        if (ok) {
            auto hom = GroupHom::from_generator_images(g, g->type(), images);
            if (hom && hom->is_injective()) out.push_back(std::move(*hom));
        }
        for (size_t k = gens.size(); k-- > 0;) {
            if (++idx[k] < cands[k].size()) break;
            idx[k] = 0;
        }
    }
    return out;
}

} // namespace outcat
