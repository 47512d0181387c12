#include "outcat/permgrp.hpp"

#include <algorithm>
#include <numeric>

namespace outcat {

GroupHom standard_embedding(int m, int n, int k, const GroupCaps& caps) {
    if (m < 3) throw ValidationError("standard embedding needs m >= 3");
    if (k < 0 || static_cast<long long>(k) * m > n) throw ValidationError("need 0 <= k*m <= n");
    auto src = FiniteGroup::alternating(m, caps);
    GroupType tgt{GroupType::Kind::alternating, n, {n}};
    std::vector<Perm> gen_images;
    for (const Perm& g : src->generators()) {
        std::vector<uint8_t> img(static_cast<size_t>(n));
        for (int p = 0; p < n; ++p) img[static_cast<size_t>(p)] = static_cast<uint8_t>(p);
        for (int c = 0; c < k; ++c)
            for (int p = 0; p < m; ++p)
                img[static_cast<size_t>(c * m + p)] = static_cast<uint8_t>(c * m + g.apply(p));
        gen_images.push_back(Perm::from_images(img));
    }
    auto hom = GroupHom::from_generator_images(src, tgt, gen_images);
    if (!hom) throw Error("standard embedding failed to extend"); // unreachable
    return *hom;
}

std::optional<int> multiplicity_of(const GroupHom& f) {
    const GroupType& st = f.source()->type();
    if (st.kind != GroupType::Kind::alternating || st.degree < 3)
        throw ValidationError("multiplicity is defined for maps out of A_m, m >= 3");
    int m = st.degree;
    int n = f.target().degree;
    auto gen_images = f.generator_images();
    // orbits of the image group = connectivity under the generator images
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Perm& g : gen_images)
        for (int p = 0; p < n; ++p) {
            int a = find(p), b = find(g.apply(p));
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    std::vector<std::vector<int>> orbits;
    {
        std::vector<int> slot(static_cast<size_t>(n), -1);
        for (int p = 0; p < n; ++p) {
            int r = find(p);
            if (slot[static_cast<size_t>(r)] == -1) {
                slot[static_cast<size_t>(r)] = static_cast<int>(orbits.size());
                orbits.emplace_back();
            }
            orbits[static_cast<size_t>(slot[static_cast<size_t>(r)])].push_back(p);
        }
    }
    int k = 0;
    auto src_gens = f.source()->generators();
    for (const auto& orbit : orbits) {
        if (orbit.size() == 1) continue; // fixed symbol
        if (static_cast<int>(orbit.size()) != m) return std::nullopt;
        // restrict the action to the orbit and test permutation-isomorphism
        // with the natural action
        std::vector<int> pos(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < orbit.size(); ++i) pos[static_cast<size_t>(orbit[i])] = static_cast<int>(i);
        std::vector<Perm> restricted;
        for (const Perm& g : gen_images) {
            std::vector<uint8_t> img(orbit.size());
            for (size_t i = 0; i < orbit.size(); ++i)
                img[i] = static_cast<uint8_t>(pos[static_cast<size_t>(g.apply(orbit[i]))]);
            restricted.push_back(Perm::from_images(img));
        }
        if (!find_conjugator(restricted, src_gens, m)) return std::nullopt;
        ++k;
    }
    return k;
}

void BlockMultiplicityData::validate() const {
    if (mult.size() != target_degrees.size() || fixed.size() != target_degrees.size())
        throw ValidationError("multiplicity data shape mismatch");
    for (size_t j = 0; j < target_degrees.size(); ++j) {
        if (mult[j].size() != source_degrees.size())
            throw ValidationError("multiplicity data shape mismatch");
        long long sum = fixed[j];
        if (fixed[j] < 0) throw ValidationError("negative fixed-symbol count");
        for (size_t i = 0; i < source_degrees.size(); ++i) {
            if (mult[j][i] < 0) throw ValidationError("negative multiplicity");
            sum += static_cast<long long>(mult[j][i]) * source_degrees[i];
        }
        if (sum != target_degrees[j])
            throw ValidationError("multiplicities and fixed symbols do not fill target component " +
                                  std::to_string(j));
    }
}

bool inner_reducibility_condition(const BlockMultiplicityData& data) {
    data.validate();
    for (size_t j = 0; j < data.target_degrees.size(); ++j) {
        bool ok = data.fixed[j] >= 2;
        for (size_t i = 0; !ok && i < data.source_degrees.size(); ++i)
            if (data.mult[j][i] >= 2 && data.source_degrees[i] % 2 == 1) ok = true;
        if (!ok) return false;
    }
    return true;
}

GroupHom block_embedding(const BlockMultiplicityData& data, const GroupCaps& caps) {
    data.validate();
    auto src = FiniteGroup::product_alternating(data.source_degrees, caps);
    GroupType tgt;
    if (data.target_degrees.size() == 1) {
        tgt = GroupType{GroupType::Kind::alternating, data.target_degrees[0], {data.target_degrees[0]}};
    } else {
        int total = std::accumulate(data.target_degrees.begin(), data.target_degrees.end(), 0);
        tgt = GroupType{GroupType::Kind::product_alternating, total, data.target_degrees};
    }
    auto src_offsets = src->type().component_offsets();
    // target symbol layout per component: copies in source-component order,
    // then the fixed symbols
    std::vector<int> tgt_offsets;
    {
        int at = 0;
        for (int d : data.target_degrees) {
            tgt_offsets.push_back(at);
            at += d;
        }
    }
    std::vector<Perm> gen_images;
    for (const Perm& g : src->generators()) {
        std::vector<uint8_t> img(static_cast<size_t>(tgt.degree));
        for (int p = 0; p < tgt.degree; ++p) img[static_cast<size_t>(p)] = static_cast<uint8_t>(p);
        for (size_t j = 0; j < data.target_degrees.size(); ++j) {
            int at = tgt_offsets[j];
            for (size_t i = 0; i < data.source_degrees.size(); ++i) {
                int d = data.source_degrees[i];
                for (int c = 0; c < data.mult[j][i]; ++c) {
                    for (int p = 0; p < d; ++p)
                        img[static_cast<size_t>(at + p)] =
                            static_cast<uint8_t>(at + g.apply(src_offsets[i] + p) - src_offsets[i]);
                    at += d;
                }
            }
        }
        gen_images.push_back(Perm::from_images(img));
    }
    auto hom = GroupHom::from_generator_images(src, tgt, gen_images);
    if (!hom) throw Error("block embedding failed to extend"); // unreachable
    return *hom;
}

GroupHom find_exceptional_a6_automorphism() {
    auto a6 = FiniteGroup::alternating(6);
    Perm want = Perm::from_cycles("(1 2 3)(4 5 6)", 6);
    // generator[0] of A6 is (123); fix its image and search the second one
    const auto& gens = a6->generators();
    for (const Perm& b_img : a6->elements()) {
        if (b_img.order() != gens[1].order()) continue;
        auto hom = GroupHom::from_generator_images(a6, a6->type(), {want, b_img});
        if (hom && hom->is_injective()) return *hom;
    }
    throw Error("no automorphism of A6 maps (123) to (123)(456); search is broken");
}

NonclosureReport verify_nonclosure_a3_a6_a7() {
    auto a3 = FiniteGroup::alternating(3);
    auto s7 = FiniteGroup::symmetric(7);

    GroupHom e1 = standard_embedding(3, 6, 1);
    GroupHom e2 = standard_embedding(6, 7, 1);
    GroupHom sigma = find_exceptional_a6_automorphism();

    GroupHom straight = e1.then(e2);
    GroupHom twisted_mid = e1.then(sigma);
    GroupHom twisted = twisted_mid.then(e2);

    Perm gen3 = a3->generators()[0];
    NonclosureReport rep{
        e1,
        e2,
        sigma,
        straight,
        twisted,
        straight.eval(gen3).cycle_type(),
        twisted.eval(gen3).cycle_type(),
        false,
        false,
        0,
        false,
    };

    // (i) twisted_mid differs from e1 by the codomain-side automorphism
    // sigma, so it is a member of class(e1) and the twisted composite is a
    // product of class members. The checkable content is that sigma really
    // is an automorphism.
    rep.twisted_factor_in_class = sigma.is_injective() && twisted_mid == e1.then(sigma);

    rep.twisted_equals_multiplicity_two = (twisted == standard_embedding(3, 7, 2));

    // (ii) exhaustive conjugator search over Aut(A3) x S7; the cycle types
    // of the generator images already rule every candidate out.
    std::vector<GroupHom> a3_autos = automorphisms(a3);
    for (const GroupHom& alpha : a3_autos) {
        GroupHom lhs = straight.after_endo(alpha);
        for (const Perm& h : s7->elements()) {
            ++rep.conjugators_searched;
            if (lhs.then_conjugation(h) == twisted) rep.conjugator_found = true;
        }
    }
    return rep;
}

} // namespace outcat
