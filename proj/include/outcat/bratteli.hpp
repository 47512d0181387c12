#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outcat/matcat.hpp"

namespace outcat {

// A finite truncation of a Bratteli diagram: levels connected by
// admissible multiplicity matrices, plus an optional stationary matrix
// that extends the truncation on demand (level L-1+t has sizes
// stationary^t * levels[L-1]).
struct BratteliDiagram {
    std::vector<AlgebraObject> levels;
    std::vector<IntMatrix> steps; // steps[k] : levels[k] -> levels[k+1]
    std::optional<IntMatrix> stationary;

    // classical mode additionally rejects steps with an all-zero column
    // (every summand must map onward)
    void validate(bool classical = false) const;

    int truncation_length() const { return static_cast<int>(levels.size()); }
    // Largest level index addressable (truncation, or anything when a
    // stationary extension is present; `limit` guards searches).
    bool level_available(int j) const { return j >= 0 && (j < truncation_length() || stationary.has_value()); }
    std::vector<long long> level_sizes(int j) const;
    IntMatrix step_matrix(int j) const; // level j -> j+1
};

BratteliDiagram telescope(const BratteliDiagram& d, const std::vector<int>& indices);

// Product of the step matrices from level `from` to level `to`
// (identity when from == to).
MultiplicityMorphism path_product(const BratteliDiagram& d, int from, int to);

// Exact zig-zag intertwining data between diagrams D and E:
//   R_k : D(i_k) -> E(j_k),  S_k : E(j_k) -> D(i_{k+1})
// with S_k R_k = D-path(i_k, i_{k+1}) and R_{k+1} S_k = E-path(j_k, j_{k+1}).
// downs.size() == ups.size() or ups.size()+1; a witness with no ups is
// accepted only in the degenerate convention i0 = j0 = 0, R0 = identity
// on identical level sizes.
struct IntertwiningWitness {
    std::vector<int> d_indices; // i_0 < i_1 < ...
    std::vector<int> e_indices; // j_0 < j_1 < ...
    std::vector<IntMatrix> downs;
    std::vector<IntMatrix> ups;

    int segments() const { return static_cast<int>(ups.size()); }
};

struct CheckResult {
    enum class Status { ok, shape_mismatch, equation_failed } status;
    std::string detail;
    explicit operator bool() const { return status == Status::ok; }
};

CheckResult check_intertwining(const BratteliDiagram& d, const BratteliDiagram& e,
                               const IntertwiningWitness& w);

struct SearchBounds {
    int depth = 3;       // required number of up matrices
    int level_bound = 8; // largest level index the search may touch
    long long entry_bound = 16;
};

// Deterministic backtracking over (j_k, R_k, i_{k+1}, S_k) in lexicographic
// order, starting at i_0 = 0. Returns the first witness with >= depth
// segments, or nullopt on exhaustion. Any returned witness passes
// check_intertwining.
std::optional<IntertwiningWitness> find_intertwining(const BratteliDiagram& d,
                                                     const BratteliDiagram& e,
                                                     const SearchBounds& bounds);

// The sound partial distinctness test for 1x1 stationary diagrams: the
// prime-exponent profile of base * multiplier^infinity. All claims are
// finite divisibility facts an independent checker can re-verify.
struct DistinctnessCertificate {
    long long prime;
    long long d_base_exp, d_mult_exp;
    long long e_base_exp, e_mult_exp;
    std::string reason;
};

struct Verdict {
    enum class Kind { equivalent, distinct, unknown } kind;
    std::optional<IntertwiningWitness> witness;
    std::optional<DistinctnessCertificate> certificate;
    SearchBounds bounds; // echoed for reproducibility
};

Verdict equivalent(const BratteliDiagram& d, const BratteliDiagram& e, const SearchBounds& bounds);

// Re-verify a distinctness certificate against the diagrams themselves:
// exponent bookkeeping is recomputed from explicit path products.
bool check_certificate(const BratteliDiagram& d, const BratteliDiagram& e,
                       const DistinctnessCertificate& cert);

// Dimension-group element at a finite stage.
struct K0Element {
    int level;
    std::vector<long long> vec;
};

enum class TriState { yes, no, unknown };

// Do x and y have equal images at some common level <= depth? `no` only
// when an injective stationary extension makes the images provably
// eternally distinct.
TriState k0_equal(const BratteliDiagram& d, const K0Element& x, const K0Element& y, int depth);

// Does x have a componentwise-nonnegative image at some level <= depth?
// `no` only for stationary strictly positive matrices once the iterate
// goes componentwise <= 0 (the sign is then locked forever).
TriState k0_positive(const BratteliDiagram& d, const K0Element& x, int depth);

// Layered DOT rendering: one rank per level, vertex label = summand size,
// one edge per nonzero entry labelled "xk". Deterministic.
std::string to_dot(const BratteliDiagram& d);

// JSON: {"levels": [[1],[2],[4]], "steps": [[[2]],[[2]]], "stationary": [[2]]}
std::string save_diagram_json(const BratteliDiagram& d);
BratteliDiagram load_diagram_json(const std::string& text);

} // namespace outcat
