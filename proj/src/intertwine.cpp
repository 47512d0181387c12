#include "outcat/intertwine.hpp"

#include <algorithm>
#include <set>

namespace outcat {

std::optional<MorId> CorrectorOracle::correct(const FiniteCategorySpec& spec,
                                              const MetricHomSpace& space, ObjId x, MorId u, MorId v,
                                              const Rational& eps) const {
    for (MorId h : spec.inner(x))
        if (space.d(spec, spec.compose(u, h), v) <= eps) return h;
    return std::nullopt;
}

std::vector<MorId> post_orbit(const FiniteCategorySpec& spec, MorId f) {
    std::set<MorId> seen{f};
    std::vector<MorId> queue{f};
    for (size_t q = 0; q < queue.size(); ++q)
        for (MorId k : spec.inner(spec.target(f))) {
            MorId next = spec.compose(queue[q], k);
            if (seen.insert(next).second) queue.push_back(next);
        }
    std::vector<MorId> out(seen.begin(), seen.end());
    return out;
}

IntertwineOutcome approximate_intertwine(const FiniteCategorySpec& spec, const HomMetrics& metrics,
                                         const IntertwiningProblem& p, const CorrectorOracle& oracle) {
    if (spec.source(p.f1) != p.a || spec.target(p.f1) != p.b || spec.source(p.g1) != p.b ||
        spec.target(p.g1) != p.a)
        throw ValidationError("intertwining endpoints do not match f1/g1");
    MorId id_a = spec.identity(p.a);
    MorId id_b = spec.identity(p.b);
    // precondition: the classes are mutually inverse in the quotient
    {
        auto orbit_a = post_orbit(spec, spec.compose(p.f1, p.g1));
        if (!std::binary_search(orbit_a.begin(), orbit_a.end(), id_a))
            throw PreconditionError("class(f1) then class(g1) is not the identity class of the source");
        auto orbit_b = post_orbit(spec, spec.compose(p.g1, p.f1));
        if (!std::binary_search(orbit_b.begin(), orbit_b.end(), id_b))
            throw PreconditionError("class(g1) then class(f1) is not the identity class of the target");
    }
    const MetricHomSpace& space_aa = metrics.space(p.a, p.a);
    const MetricHomSpace& space_bb = metrics.space(p.b, p.b);
    const MetricHomSpace& space_ab = metrics.space(p.a, p.b);
    const MetricHomSpace& space_ba = metrics.space(p.b, p.a);

    auto eps_at = [&](int k) { return p.exact_corrections ? Rational(0) : Rational::pow2(-k); };

    MorId f = p.f1, g = p.g1;
    std::vector<IntertwineStep> trace;
    for (int n = 1; n <= p.max_iterations; ++n) {
        // odd step 2n-1: g_n <- g_n then h, pushing f_n g_n toward id_a
        {
            Rational eps = eps_at(2 * n - 1);
            MorId u = spec.compose(f, g);
            auto h = oracle.correct(spec, space_aa, p.a, u, id_a, eps);
            if (!h) {
                // the exhaustive corrector cannot fail on a same-class pair;
                // a custom one may
                return IntertwineFailure{f, g, space_aa.d(spec, spec.compose(f, g), id_a),
                                         space_bb.d(spec, spec.compose(g, f), id_b), trace};
            }
            MorId g_next = spec.compose(g, *h);
            trace.push_back({2 * n - 1, eps, *h,
                             space_aa.d(spec, spec.compose(f, g_next), id_a),
                             space_ba.d(spec, g_next, g)});
            g = g_next;
        }
        // even step 2n: the next down arrow starts as a fresh f1 and gets
        // one correction toward g_n f_{n+1} = id_b
        {
            Rational eps = eps_at(2 * n);
            MorId f_next = p.f1;
            MorId u = spec.compose(g, f_next);
            auto k = oracle.correct(spec, space_bb, p.b, u, id_b, eps);
            if (!k) {
                return IntertwineFailure{f, g, space_aa.d(spec, spec.compose(f, g), id_a),
                                         space_bb.d(spec, spec.compose(g, f), id_b), trace};
            }
            f_next = spec.compose(f_next, *k);
            trace.push_back({2 * n, eps, *k,
                             space_bb.d(spec, spec.compose(g, f_next), id_b),
                             space_ab.d(spec, f_next, f)});
            f = f_next;
        }
        if (spec.compose(f, g) == id_a && spec.compose(g, f) == id_b) {
            auto f_orbit = post_orbit(spec, p.f1);
            auto g_orbit = post_orbit(spec, p.g1);
            return IntertwineSuccess{
                f,
                g,
                trace,
                true,
                true,
                std::binary_search(f_orbit.begin(), f_orbit.end(), f),
                std::binary_search(g_orbit.begin(), g_orbit.end(), g),
            };
        }
    }
    return IntertwineFailure{f, g, space_aa.d(spec, spec.compose(f, g), id_a),
                             space_bb.d(spec, spec.compose(g, f), id_b), trace};
}

} // namespace outcat
