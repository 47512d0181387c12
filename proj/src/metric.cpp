#include "outcat/metric.hpp"

#include <algorithm>

namespace outcat {

Rational weighted_disagreement(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) throw ValidationError("disagreement metric needs equal-length tables");
    if (u.size() > 62) throw Error("domain too large for exact dyadic weights");
    Rational d;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) d = d + Rational::pow2(-static_cast<int>(i + 1));
    return d;
}

const Rational& MetricHomSpace::d(const FiniteCategorySpec& spec, MorId u, MorId v) const {
    return d_local(spec.local_index(u), spec.local_index(v));
}

std::vector<MetricViolation> verify_metric_axioms(const FiniteCategorySpec& spec,
                                                  const MetricHomSpace& space) {
    (void)spec;
    std::vector<MetricViolation> out;
    int n = static_cast<int>(space.homs.size());
    Rational zero;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const Rational& duv = space.d_local(u, v);
            if ((duv == zero) != (u == v))
                out.push_back({MetricViolation::Kind::identity_of_indiscernibles, space.homs[static_cast<size_t>(u)],
                               space.homs[static_cast<size_t>(v)], -1});
            if (!(duv == space.d_local(v, u)))
                out.push_back({MetricViolation::Kind::symmetry, space.homs[static_cast<size_t>(u)],
                               space.homs[static_cast<size_t>(v)], -1});
        }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (space.d_local(u, w) > space.d_local(u, v) + space.d_local(v, w))
                    out.push_back({MetricViolation::Kind::triangle, space.homs[static_cast<size_t>(u)],
                                   space.homs[static_cast<size_t>(v)], space.homs[static_cast<size_t>(w)]});
    return out;
}

std::vector<IsometryViolation> verify_isometry(const FiniteCategorySpec& spec,
                                               const MetricHomSpace& space) {
    std::vector<IsometryViolation> out;
    int n = static_cast<int>(space.homs.size());
    for (MorId k : spec.inner(space.target)) {
        // precompute u -> u then k as local indices
        std::vector<int> post(static_cast<size_t>(n));
        for (int u = 0; u < n; ++u)
            post[static_cast<size_t>(u)] = spec.local_index(spec.compose(space.homs[static_cast<size_t>(u)], k));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (!(space.d_local(post[static_cast<size_t>(u)], post[static_cast<size_t>(v)]) ==
                      space.d_local(u, v)))
                    out.push_back({k, space.homs[static_cast<size_t>(u)], space.homs[static_cast<size_t>(v)]});
    }
    return out;
}

} // namespace outcat
