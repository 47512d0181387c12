#pragma once

#include <map>
#include <memory>
#include <vector>

#include "outcat/hom.hpp"
#include "outcat/metric.hpp"
#include "outcat/quotient.hpp"

namespace outcat {

// The category whose objects are chosen finite groups, with every
// homomorphism between them as morphisms and the conjugation maps as the
// designated inner automorphisms. Hom-sets are enumerated exhaustively
// (deterministic order), composition is a stored table, and each hom cell
// carries the 2^-n disagreement metric keyed to the source group's fixed
// element numbering.
class GroupCategory : public HomMetrics {
public:
    static GroupCategory build(std::vector<std::shared_ptr<const FiniteGroup>> groups);

    const FiniteCategorySpec& spec() const { return *spec_; }
    std::shared_ptr<const FiniteCategorySpec> spec_ptr() const { return spec_; }
    const std::shared_ptr<const FiniteGroup>& group(ObjId a) const { return groups_[static_cast<size_t>(a)]; }

    const GroupHom& hom_of(MorId f) const { return homs_[static_cast<size_t>(f)]; }
    MorId morid_of(ObjId a, ObjId b, const GroupHom& h) const;
    MorId identity_hom(ObjId a) const { return spec_->identity(a); }
    // Morphism id of the inner automorphism given by conjugation with a
    // target-group element.
    MorId conjugation_morphism(ObjId a, const Perm& h) const;

    const MetricHomSpace& space(ObjId a, ObjId b) const override;

private:
    std::shared_ptr<const FiniteCategorySpec> spec_;
    std::vector<std::shared_ptr<const FiniteGroup>> groups_;
    std::vector<GroupHom> homs_; // by MorId
    mutable std::map<std::pair<ObjId, ObjId>, MetricHomSpace> spaces_;
};

} // namespace outcat
