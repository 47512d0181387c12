#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "outcat/metric.hpp"

namespace outcat {

// The alternating triangle-correction loop run on a finite instance:
// starting from f1: a -> b and g1: b -> a whose classes are mutually
// inverse, odd steps correct g so that f then g lands within eps of id_a,
// even steps correct a fresh copy of f1 so that g then f lands within eps
// of id_b. On finite instances the corrector reaches eps = 0 and the loop
// stabilizes with exactly mutually inverse morphisms that are inner
// translates of the inputs.
struct IntertwiningProblem {
    ObjId a = -1;
    ObjId b = -1;
    MorId f1 = -1;
    MorId g1 = -1;
    int max_iterations = 64;
    // Request eps = 0 from the corrector (the finite shortcut). When off,
    // the default schedule eps_k = 2^-k is used, which exercises the
    // approximate path.
    bool exact_corrections = true;
};

// Exhaustive corrector: first h in inner(x), in the designated order, with
// d(u then h, v) <= eps. Virtual so tests can substitute a weak corrector
// and exercise the cap-exceeded path.
class CorrectorOracle {
public:
    virtual ~CorrectorOracle() = default;
    virtual std::optional<MorId> correct(const FiniteCategorySpec& spec, const MetricHomSpace& space,
                                         ObjId x, MorId u, MorId v, const Rational& eps) const;
};

struct IntertwineStep {
    int index;        // 1, 2, ... (odd corrects g, even corrects the next f)
    Rational epsilon; // tolerance requested from the corrector
    MorId corrector;
    Rational residual; // distance to the identity after the correction
    Rational delta;    // distance moved by the corrected arrow (f or g)
};

struct IntertwineSuccess {
    MorId f_infinity;
    MorId g_infinity;
    std::vector<IntertwineStep> trace;
    bool fg_is_identity;
    bool gf_is_identity;
    bool f_in_class_of_f1;
    bool g_in_class_of_g1;
};

struct IntertwineFailure {
    MorId f_last;
    MorId g_last;
    Rational residual_a; // d(f then g, id_a)
    Rational residual_b; // d(g then f, id_b)
    std::vector<IntertwineStep> trace;
};

using IntertwineOutcome = std::variant<IntertwineSuccess, IntertwineFailure>;

// Throws PreconditionError when class(f1) and class(g1) are not mutually
// inverse in the quotient. Returns a failure report when the iteration cap
// runs out before exact convergence.
IntertwineOutcome approximate_intertwine(const FiniteCategorySpec& spec, const HomMetrics& metrics,
                                         const IntertwiningProblem& p,
                                         const CorrectorOracle& oracle = CorrectorOracle{});

// Orbit of f under post-composition with inner(target(f)); the morphism
// class of f in the quotient.
std::vector<MorId> post_orbit(const FiniteCategorySpec& spec, MorId f);

} // namespace outcat
