#pragma once

#include <string>
#include <vector>

#include "outcat/category.hpp"
#include "outcat/rational.hpp"

namespace outcat {

// The 2^-n weighted disagreement distance between two value tables whose
// positions are numbered 1, 2, ... in enumeration order:
//   d(u, v) = sum over positions i of 2^-(i+1) when u[i] != v[i].
// Exact; total mass strictly below 1. Lengths above 62 would overflow the
// dyadic range and throw.
Rational weighted_disagreement(const std::vector<int>& u, const std::vector<int>& v);

// A hom-set of a (source, target) pair carrying a rational-valued metric,
// stored densely. Completeness is automatic on finite sets.
struct MetricHomSpace {
    ObjId source = -1;
    ObjId target = -1;
    std::vector<MorId> homs; // enumeration order of the spec's hom cell
    std::vector<Rational> dist; // |homs| x |homs|, row major

    const Rational& d_local(int u, int v) const {
        return dist[static_cast<size_t>(u) * homs.size() + static_cast<size_t>(v)];
    }
    const Rational& d(const FiniteCategorySpec& spec, MorId u, MorId v) const;
};

struct MetricViolation {
    enum class Kind { identity_of_indiscernibles, symmetry, triangle } kind;
    MorId u, v, w; // w unused except for triangle
};

// Exhaustive metric-axiom check: d(u,v) = 0 iff u = v, symmetry, and the
// triangle inequality over all triples.
std::vector<MetricViolation> verify_metric_axioms(const FiniteCategorySpec& spec,
                                                  const MetricHomSpace& space);

struct IsometryViolation {
    MorId k; // inner automorphism of the target
    MorId u, v;
};

// Empty iff post-composition with every fixed k in inner(target) preserves
// the distances on hom(source, target).
std::vector<IsometryViolation> verify_isometry(const FiniteCategorySpec& spec,
                                               const MetricHomSpace& space);

// Provider of metric spaces for a spec, built lazily per hom cell.
class HomMetrics {
public:
    virtual ~HomMetrics() = default;
    virtual const MetricHomSpace& space(ObjId a, ObjId b) const = 0;
};

} // namespace outcat
