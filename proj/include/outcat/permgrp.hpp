#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outcat/hom.hpp"

namespace outcat {

// Diagonal embedding A_m -> A_n acting as k disjoint copies on the first
// k*m symbols and fixing the rest; k = 0 is the trivial map.
GroupHom standard_embedding(int m, int n, int k, const GroupCaps& caps = {});

// Multiplicity of a map out of an alternating group: the number of
// m-point orbits of the image action, each of which must carry the natural
// A_m action. Maps with any other orbit shape (the exotic 6-point actions
// of A5 and A6 in particular) have no multiplicity and yield nullopt.
std::optional<int> multiplicity_of(const GroupHom& f);

// Multiplicity matrix data for a map between products of alternating
// groups: mult[j][i] copies of source component i inside target component
// j, plus fixed[j] untouched symbols.
struct BlockMultiplicityData {
    std::vector<int> source_degrees;
    std::vector<int> target_degrees;
    std::vector<std::vector<int>> mult; // target-indexed rows
    std::vector<int> fixed;             // per target component

    void validate() const; // sum constraint per target component
};

// Sufficient condition under which equal-multiplicity maps differ by an
// even (per-component) conjugator: every target component either receives
// some odd-degree source component with multiplicity >= 2, or keeps at
// least two fixed symbols.
bool inner_reducibility_condition(const BlockMultiplicityData& data);

// The diagonal embedding between products described by the data, with a
// deterministic symbol layout (copies in component order, fixed symbols
// last). Source components must be enumerable.
GroupHom block_embedding(const BlockMultiplicityData& data, const GroupCaps& caps = {});

// The automorphism of A6 sending (123) to (123)(456). Found by search and
// verified; failure to find one would mean the search is broken, so this
// throws instead of returning an empty optional.
GroupHom find_exceptional_a6_automorphism();

// Report of the A3 -> A6 -> A7 composition-class defect: two composites of
// class members with different cycle types, hence inequivalent under every
// automorphism of A7, both lying in the product of the two classes.
struct NonclosureReport {
    GroupHom e1;       // A3 -> A6, first symbols
    GroupHom e2;       // A6 -> A7, first symbols
    GroupHom sigma;    // exceptional automorphism of A6
    GroupHom straight; // e1 then e2
    GroupHom twisted;  // (e1 then sigma) then e2
    std::vector<int> straight_cycle_type; // of the generator image
    std::vector<int> twisted_cycle_type;
    bool twisted_factor_in_class;  // e1 then sigma lies in class(e1)
    bool twisted_equals_multiplicity_two; // twisted == standard_embedding(3,7,2)
    long long conjugators_searched; // |Aut(A3)| x |S7|, all failing
    bool conjugator_found;          // always false when the report verifies
};

NonclosureReport verify_nonclosure_a3_a6_a7();

} // namespace outcat
