#include "outcat/quotient.hpp"

#include <algorithm>
#include <set>

namespace outcat {

OrbitFamily compute_orbits(const FiniteCategorySpec& spec, OrbitSide side) {
    OrbitFamily fam;
    fam.class_of.assign(static_cast<size_t>(spec.morphism_count()), -1);
    int n = spec.object_count();
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (MorId seed : spec.hom(a, b)) {
                if (fam.class_of[static_cast<size_t>(seed)] != -1) continue;
                int cid = static_cast<int>(fam.classes.size());
                std::vector<MorId> orbit{seed};
                fam.class_of[static_cast<size_t>(seed)] = cid;
                for (size_t q = 0; q < orbit.size(); ++q) {
                    MorId f = orbit[q];
                    auto push = [&](MorId g) {
                        if (fam.class_of[static_cast<size_t>(g)] == -1) {
                            fam.class_of[static_cast<size_t>(g)] = cid;
                            orbit.push_back(g);
                        }
                    };
                    for (MorId k : spec.inner(b)) push(spec.compose(f, k));
                    if (side == OrbitSide::two_sided)
                        for (MorId h : spec.inner(a)) push(spec.compose(h, f));
                }
                std::sort(orbit.begin(), orbit.end());
                fam.classes.push_back({a, b, std::move(orbit)});
            }
    return fam;
}

std::vector<AxiomViolation> verify_inner_axiom(const FiniteCategorySpec& spec) {
    spec.validate(spec.laws_hold_by_construction() ? FiniteCategorySpec::CheckLevel::basic
                                                   : FiniteCategorySpec::CheckLevel::full);
    std::vector<AxiomViolation> out;
    for (MorId f = 0; f < spec.morphism_count(); ++f) {
        ObjId a = spec.source(f), b = spec.target(f);
        if (spec.inner(a).empty()) continue;
        std::set<MorId> post; // { f then k : k in inner(b) }
        for (MorId k : spec.inner(b)) post.insert(spec.compose(f, k));
        for (MorId h : spec.inner(a))
            if (!post.count(spec.compose(h, f))) out.push_back({f, h});
    }
    return out;
}

namespace {

// subgroup generated by the designated inner set of one object
std::vector<MorId> close_inner(const FiniteCategorySpec& spec, ObjId a) {
    for (MorId u : spec.inner(a))
        if (!spec.inverse_of(u))
            throw ValidationError("designated inner element " + spec.morphism_name(u) +
                                  " is not invertible");
    std::set<MorId> closed{spec.identity(a)};
    std::vector<MorId> queue{spec.identity(a)};
    for (size_t q = 0; q < queue.size(); ++q)
        for (MorId g : spec.inner(a)) {
            MorId next = spec.compose(queue[q], g);
            if (closed.insert(next).second) queue.push_back(next);
        }
    return {closed.begin(), closed.end()};
}

} // namespace

bool inner_is_closed(const FiniteCategorySpec& spec) {
    for (ObjId a = 0; a < spec.object_count(); ++a) {
        std::vector<MorId> sorted = spec.inner(a);
        std::sort(sorted.begin(), sorted.end());
        if (close_inner(spec, a) != sorted) return false;
    }
    return true;
}

std::shared_ptr<const FiniteCategorySpec> inner_closure(const FiniteCategorySpec& spec) {
    // Rebuild the spec with closed inner families; everything else is shared
    // structure, so rebuilding through the JSON-free copy path below keeps
    // this simple: clone tables via a builder against the same backend.
    FiniteCategorySpec::Builder b;
    for (ObjId a = 0; a < spec.object_count(); ++a) b.add_object(spec.object_name(a));
    for (MorId f = 0; f < spec.morphism_count(); ++f)
        b.add_morphism(spec.morphism_name(f), spec.source(f), spec.target(f));
    for (ObjId a = 0; a < spec.object_count(); ++a) {
        b.set_identity(a, spec.identity(a));
        b.set_inner(a, close_inner(spec, a));
    }
    for (MorId f = 0; f < spec.morphism_count(); ++f)
        for (MorId g = 0; g < spec.morphism_count(); ++g)
            if (spec.composable(f, g)) b.set_composite(f, g, spec.compose(f, g));
    return b.build_with_table(spec.laws_hold_by_construction());
}

int QuotientCategory::compose(int c1, int c2) const {
    int r = compose_table_[static_cast<size_t>(c1) * classes_.size() + static_cast<size_t>(c2)];
    if (r < 0) throw ValidationError("classes not composable");
    return r;
}

bool QuotientCategory::invertible_class(int c) const {
    const auto& k = classes_[static_cast<size_t>(c)];
    for (int32_t d : classes_between(k.target, k.source))
        if (compose(c, d) == identity_class(k.source) && compose(d, c) == identity_class(k.target))
            return true;
    return false;
}

ObjId QuotientCategory::Builder::add_object(const std::string& name) {
    ObjId id = static_cast<ObjId>(q_.object_names_.size());
    q_.object_names_.push_back(name);
    return id;
}

int QuotientCategory::Builder::add_class(ObjId source, ObjId target, std::vector<MorId> members) {
    int id = static_cast<int>(q_.classes_.size());
    std::sort(members.begin(), members.end());
    q_.classes_.push_back({source, target, std::move(members)});
    return id;
}

void QuotientCategory::Builder::set_identity_class(ObjId a, int c) {
    if (q_.id_class_.size() <= static_cast<size_t>(a)) q_.id_class_.resize(static_cast<size_t>(a) + 1, -1);
    q_.id_class_[static_cast<size_t>(a)] = c;
}

void QuotientCategory::Builder::set_composite(int c1, int c2, int c12) {
    composites_.emplace_back(c1, c2, c12);
}

QuotientCategory QuotientCategory::Builder::build() {
    size_t n = q_.object_names_.size();
    size_t m = q_.classes_.size();
    q_.hom_classes_.assign(n * n, {});
    for (size_t c = 0; c < m; ++c)
        q_.hom_classes_[static_cast<size_t>(q_.classes_[c].source) * n +
                        static_cast<size_t>(q_.classes_[c].target)]
            .push_back(static_cast<int32_t>(c));
    q_.id_class_.resize(n, -1);
    q_.compose_table_.assign(m * m, -1);
    for (auto [c1, c2, c12] : composites_)
        q_.compose_table_[static_cast<size_t>(c1) * m + static_cast<size_t>(c2)] = c12;
    q_.class_of_.clear();
    return q_;
}

QuotientCategory quotient(const FiniteCategorySpec& spec) {
    auto violations = verify_inner_axiom(spec); // validates too
    if (!violations.empty()) {
        std::string msg = "inner axiom violated; witnesses:";
        for (size_t i = 0; i < violations.size() && i < 5; ++i)
            msg += " (" + spec.morphism_name(violations[i].f) + ", " +
                   spec.morphism_name(violations[i].h) + ")";
        if (violations.size() > 5) msg += " ...";
        throw PreconditionError(msg);
    }
    if (!inner_is_closed(spec))
        throw PreconditionError(
            "designated inner sets are not closed subgroups; run inner_closure first");

    OrbitFamily fam = compute_orbits(spec, OrbitSide::codomain);
    QuotientCategory q;
    q.object_names_.clear();
    for (ObjId a = 0; a < spec.object_count(); ++a) q.object_names_.push_back(spec.object_name(a));
    q.classes_ = fam.classes;
    q.class_of_ = fam.class_of;
    size_t n = q.object_names_.size();
    size_t m = q.classes_.size();
    q.hom_classes_.assign(n * n, {});
    for (size_t c = 0; c < m; ++c)
        q.hom_classes_[static_cast<size_t>(q.classes_[c].source) * n +
                       static_cast<size_t>(q.classes_[c].target)]
            .push_back(static_cast<int32_t>(c));
    q.id_class_.assign(n, -1);
    for (ObjId a = 0; a < static_cast<ObjId>(n); ++a)
        q.id_class_[static_cast<size_t>(a)] = fam.class_of[static_cast<size_t>(spec.identity(a))];
    q.compose_table_.assign(m * m, -1);
    // Class composition via representatives, then the exhaustive
    // well-definedness sweep: the element-wise product of two classes must
    // meet exactly the representative's class. This is the content of the
    // quotient being a category.
    for (size_t c1 = 0; c1 < m; ++c1)
        for (size_t c2 = 0; c2 < m; ++c2) {
            const auto& k1 = q.classes_[c1];
            const auto& k2 = q.classes_[c2];
            if (k1.target != k2.source) continue;
            int rep = fam.class_of[static_cast<size_t>(spec.compose(k1.members[0], k2.members[0]))];
            q.compose_table_[c1 * m + c2] = rep;
        }
    for (MorId f = 0; f < spec.morphism_count(); ++f)
        for (ObjId c = 0; c < static_cast<ObjId>(n); ++c)
            for (MorId g : spec.hom(spec.target(f), c)) {
                int lhs = fam.class_of[static_cast<size_t>(spec.compose(f, g))];
                int rhs = q.compose_table_[static_cast<size_t>(fam.class_of[static_cast<size_t>(f)]) * m +
                                           static_cast<size_t>(fam.class_of[static_cast<size_t>(g)])];
                if (lhs != rhs)
                    throw Error("class product split: (" + spec.morphism_name(f) + ", " +
                                spec.morphism_name(g) + ")"); // unreachable given the axiom
            }
    return q;
}

std::optional<ClassProductDefect> class_product_defect(const FiniteCategorySpec& spec) {
    spec.validate(spec.laws_hold_by_construction() ? FiniteCategorySpec::CheckLevel::basic
                                                   : FiniteCategorySpec::CheckLevel::full);
    OrbitFamily fam = compute_orbits(spec, OrbitSide::two_sided);
    size_t m = fam.classes.size();
    for (size_t c1 = 0; c1 < m; ++c1)
        for (size_t c2 = 0; c2 < m; ++c2) {
            const auto& k1 = fam.classes[c1];
            const auto& k2 = fam.classes[c2];
            if (k1.target != k2.source) continue;
            std::vector<int32_t> met;
            MorId first_f = -1, first_g = -1, first_h = -1;
            std::optional<ClassProductDefect> defect;
            for (MorId f : k1.members) {
                for (MorId g : k2.members) {
                    MorId h = spec.compose(f, g);
                    int c = fam.class_of[static_cast<size_t>(h)];
                    if (std::find(met.begin(), met.end(), c) == met.end()) met.push_back(c);
                    if (first_f < 0) {
                        first_f = f;
                        first_g = g;
                        first_h = h;
                    } else if (!defect && c != fam.class_of[static_cast<size_t>(first_h)]) {
                        defect = ClassProductDefect{static_cast<int>(c1), static_cast<int>(c2),
                                                    first_f, first_g, first_h, f, g, h, {}};
                    }
                }
            }
            if (defect) {
                defect->composite_classes = std::move(met);
                return defect;
            }
        }
    return std::nullopt;
}

std::vector<MorId> is_super_strong(const FiniteCategorySpec& spec, const QuotientCategory& q) {
    std::vector<MorId> out;
    for (int c = 0; c < q.class_count(); ++c) {
        if (!q.invertible_class(c)) continue;
        for (MorId f : q.cls(c).members)
            if (!spec.inverse_of(f)) out.push_back(f);
    }
    return out;
}

std::vector<CantorBernsteinViolation> cantor_bernstein_check(const QuotientCategory& q) {
    int n = q.object_count();
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            if (a != b && q.classes_between(a, b).size() > 1)
                throw PreconditionError("quotient is not thin between " + q.object_name(a) + " and " +
                                        q.object_name(b));
    std::vector<CantorBernsteinViolation> out;
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = static_cast<ObjId>(a + 1); b < n; ++b) {
            if (q.classes_between(a, b).empty() || q.classes_between(b, a).empty()) continue;
            bool iso = false;
            for (int32_t u : q.classes_between(a, b))
                for (int32_t v : q.classes_between(b, a))
                    if (q.compose(u, v) == q.identity_class(a) && q.compose(v, u) == q.identity_class(b))
                        iso = true;
            if (!iso) out.push_back({a, b});
        }
    return out;
}

} // namespace outcat
