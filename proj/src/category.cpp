#include "outcat/category.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

namespace outcat {

std::optional<ObjId> FiniteCategorySpec::find_object(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<MorId> FiniteCategorySpec::find_morphism(const std::string& name) const {
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end()) return std::nullopt;
    return it->second;
}

MorId FiniteCategorySpec::compose(MorId f, MorId g) const {
    if (!composable(f, g))
        throw ValidationError("morphisms not composable: " + morphism_name(f) + " then " +
                              morphism_name(g));
    return backend_->compose(*this, f, g);
}

std::optional<MorId> FiniteCategorySpec::inverse_of(MorId f) const {
    ObjId a = source(f), b = target(f);
    for (MorId g : hom(b, a))
        if (compose(f, g) == identity(a) && compose(g, f) == identity(b)) return g;
    return std::nullopt;
}

void FiniteCategorySpec::validate(CheckLevel level) const {
    int n = object_count();
    if (static_cast<int>(identity_.size()) != n) throw ValidationError("missing identities");
    for (ObjId a = 0; a < n; ++a) {
        MorId id = identity_[static_cast<size_t>(a)];
        if (source(id) != a || target(id) != a)
            throw ValidationError("identity of " + object_name(a) + " is not an endomorphism");
    }
    // identity laws
    for (MorId f = 0; f < morphism_count(); ++f) {
        if (compose(identity(source(f)), f) != f)
            throw ValidationError("left identity law fails at " + morphism_name(f));
        if (compose(f, identity(target(f))) != f)
            throw ValidationError("right identity law fails at " + morphism_name(f));
    }
    // composition typing
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b)
            for (MorId f : hom(a, b))
                for (ObjId c = 0; c < n; ++c)
                    for (MorId g : hom(b, c)) {
                        MorId fg = compose(f, g);
                        if (source(fg) != a || target(fg) != c)
                            throw ValidationError("composite lands in wrong hom-set at " +
                                                  morphism_name(f) + " then " + morphism_name(g));
                    }
    // inner families: subsets of hom(a,a), all invertible
    for (ObjId a = 0; a < n; ++a) {
        for (MorId u : inner(a)) {
            if (source(u) != a || target(u) != a)
                throw ValidationError("inner element " + morphism_name(u) + " is not an endomorphism of " +
                                      object_name(a));
            if (!inverse_of(u))
                throw ValidationError("inner element " + morphism_name(u) + " is not invertible");
        }
    }
    if (level == CheckLevel::full) {
        for (ObjId a = 0; a < n; ++a)
            for (ObjId b = 0; b < n; ++b)
                for (MorId f : hom(a, b))
                    for (ObjId c = 0; c < n; ++c)
                        for (MorId g : hom(b, c)) {
                            MorId fg = compose(f, g);
                            for (ObjId d = 0; d < n; ++d)
                                for (MorId h : hom(c, d))
                                    if (compose(fg, h) != compose(f, compose(g, h)))
                                        throw ValidationError("associativity fails at (" +
                                                              morphism_name(f) + ", " + morphism_name(g) +
                                                              ", " + morphism_name(h) + ")");
                        }
    }
}

MorId TableBackend::compose(const FiniteCategorySpec& spec, MorId f, MorId g) const {
    ObjId a = spec.source(f), b = spec.target(f), c = spec.target(g);
    size_t key = (static_cast<size_t>(a) * static_cast<size_t>(n_) + static_cast<size_t>(b)) *
                     static_cast<size_t>(n_) +
                 static_cast<size_t>(c);
    int64_t off = block_offset_[key];
    if (off < 0) throw ValidationError("composition table missing block");
    size_t width = spec.hom(b, c).size();
    MorId r = entries_[static_cast<size_t>(off) + static_cast<size_t>(spec.local_index(f)) * width +
                       static_cast<size_t>(spec.local_index(g))];
    if (r < 0)
        throw ValidationError("composition table missing entry for " + spec.morphism_name(f) + " then " +
                              spec.morphism_name(g));
    return r;
}

ObjId FiniteCategorySpec::Builder::add_object(const std::string& name) {
    if (spec_->object_index_.count(name)) throw ValidationError("duplicate object name: " + name);
    ObjId id = static_cast<ObjId>(spec_->object_names_.size());
    spec_->object_names_.push_back(name);
    spec_->object_index_[name] = id;
    return id;
}

MorId FiniteCategorySpec::Builder::add_morphism(const std::string& name, ObjId source, ObjId target) {
    if (spec_->morphism_index_.count(name)) throw ValidationError("duplicate morphism name: " + name);
    MorId id = static_cast<MorId>(spec_->morphism_names_.size());
    spec_->morphism_names_.push_back(name);
    spec_->morphism_index_[name] = id;
    spec_->mor_source_.push_back(source);
    spec_->mor_target_.push_back(target);
    return id;
}

void FiniteCategorySpec::Builder::set_identity(ObjId a, MorId f) {
    if (spec_->identity_.size() <= static_cast<size_t>(a)) spec_->identity_.resize(static_cast<size_t>(a) + 1, -1);
    spec_->identity_[static_cast<size_t>(a)] = f;
}

void FiniteCategorySpec::Builder::set_inner(ObjId a, std::vector<MorId> inner) {
    if (spec_->inner_.size() <= static_cast<size_t>(a)) spec_->inner_.resize(static_cast<size_t>(a) + 1);
    spec_->inner_[static_cast<size_t>(a)] = std::move(inner);
}

void FiniteCategorySpec::Builder::set_composite(MorId f, MorId g, MorId fg) {
    composites_.emplace_back(f, g, fg);
}

void FiniteCategorySpec::Builder::finalize_shape() {
    size_t n = spec_->object_names_.size();
    spec_->hom_.assign(n * n, {});
    spec_->mor_local_.assign(spec_->morphism_names_.size(), 0);
    for (MorId f = 0; f < static_cast<MorId>(spec_->morphism_names_.size()); ++f) {
        auto& cell = spec_->hom_[static_cast<size_t>(spec_->mor_source_[static_cast<size_t>(f)]) * n +
                                 static_cast<size_t>(spec_->mor_target_[static_cast<size_t>(f)])];
        spec_->mor_local_[static_cast<size_t>(f)] = static_cast<int32_t>(cell.size());
        cell.push_back(f);
    }
    spec_->identity_.resize(n, -1);
    spec_->inner_.resize(n);
    for (ObjId a = 0; a < static_cast<ObjId>(n); ++a)
        if (spec_->identity_[static_cast<size_t>(a)] < 0)
            throw ValidationError("missing identity for object " + spec_->object_names_[static_cast<size_t>(a)]);
}

std::shared_ptr<const FiniteCategorySpec> FiniteCategorySpec::Builder::build_with_table(
    bool laws_by_construction) {
    finalize_shape();
    auto backend = std::make_shared<TableBackend>();
    size_t n = spec_->object_names_.size();
    backend->n_ = static_cast<int>(n);
    backend->block_offset_.assign(n * n * n, -1);
    // allocate blocks for every pair of composable hom-sets
    int64_t total = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            size_t ab = spec_->hom_[a * n + b].size();
            if (!ab) continue;
            for (size_t c = 0; c < n; ++c) {
                size_t bc = spec_->hom_[b * n + c].size();
                if (!bc) continue;
                backend->block_offset_[(a * n + b) * n + c] = total;
                total += static_cast<int64_t>(ab * bc);
            }
        }
    backend->entries_.assign(static_cast<size_t>(total), -1);
    for (auto [f, g, fg] : composites_) {
        ObjId a = spec_->mor_source_[static_cast<size_t>(f)];
        ObjId b = spec_->mor_target_[static_cast<size_t>(f)];
        if (spec_->mor_source_[static_cast<size_t>(g)] != b)
            throw ValidationError("composite entry for non-composable pair");
        ObjId c = spec_->mor_target_[static_cast<size_t>(g)];
        if (spec_->mor_source_[static_cast<size_t>(fg)] != a || spec_->mor_target_[static_cast<size_t>(fg)] != c)
            throw ValidationError("composite entry lands in wrong hom-set");
        size_t width = spec_->hom_[static_cast<size_t>(b) * n + static_cast<size_t>(c)].size();
        int64_t off = backend->block_offset_[(static_cast<size_t>(a) * n + static_cast<size_t>(b)) * n +
                                             static_cast<size_t>(c)];
        backend->entries_[static_cast<size_t>(off) +
                          static_cast<size_t>(spec_->mor_local_[static_cast<size_t>(f)]) * width +
                          static_cast<size_t>(spec_->mor_local_[static_cast<size_t>(g)])] = fg;
    }
    spec_->backend_ = backend;
    spec_->laws_by_construction_ = laws_by_construction;
    return spec_;
}

std::shared_ptr<const FiniteCategorySpec> FiniteCategorySpec::Builder::build_with_backend(
    std::shared_ptr<const ComposeBackend> backend, bool laws_by_construction) {
    finalize_shape();
    spec_->backend_ = std::move(backend);
    spec_->laws_by_construction_ = laws_by_construction;
    return spec_;
}

// ---------------------------------------------------------------------------
// JSON format:
// {
//   "compose": [["f", "g", "fg"], ...],
//   "homs": [{"morphisms": ["f", ...], "source": "a", "target": "b"}, ...],
//   "identities": {"a": "id_a", ...},
//   "inner": {"a": ["id_a", ...], ...},
//   "objects": ["a", "b", ...]
// }

std::shared_ptr<const FiniteCategorySpec> load_category_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad JSON: ") + e.what());
    }
    FiniteCategorySpec::Builder builder;
    std::unordered_map<std::string, ObjId> obj;
    std::unordered_map<std::string, MorId> mor;
    try {
        for (const auto& o : j.at("objects")) obj[o.get<std::string>()] = builder.add_object(o.get<std::string>());
        for (const auto& h : j.at("homs")) {
            auto src = obj.at(h.at("source").get<std::string>());
            auto tgt = obj.at(h.at("target").get<std::string>());
            for (const auto& m : h.at("morphisms"))
                mor[m.get<std::string>()] = builder.add_morphism(m.get<std::string>(), src, tgt);
        }
        for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it)
            builder.set_identity(obj.at(it.key()), mor.at(it.value().get<std::string>()));
        for (auto it = j.at("inner").begin(); it != j.at("inner").end(); ++it) {
            std::vector<MorId> inner;
            for (const auto& m : it.value()) inner.push_back(mor.at(m.get<std::string>()));
            builder.set_inner(obj.at(it.key()), std::move(inner));
        }
        for (const auto& row : j.at("compose")) {
            if (!row.is_array() || row.size() != 3) throw ValidationError("compose rows must be triples");
            builder.set_composite(mor.at(row[0].get<std::string>()), mor.at(row[1].get<std::string>()),
                                  mor.at(row[2].get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad spec file: ") + e.what());
    } catch (const std::out_of_range&) {
        throw ValidationError("bad spec file: reference to unknown object or morphism");
    }
    auto spec = builder.build_with_table(false);
    spec->validate(FiniteCategorySpec::CheckLevel::full);
    return spec;
}

std::string save_category_json(const FiniteCategorySpec& spec) {
    nlohmann::json j;
    j["objects"] = nlohmann::json::array();
    for (ObjId a = 0; a < spec.object_count(); ++a) j["objects"].push_back(spec.object_name(a));
    j["homs"] = nlohmann::json::array();
    for (ObjId a = 0; a < spec.object_count(); ++a)
        for (ObjId b = 0; b < spec.object_count(); ++b) {
            const auto& cell = spec.hom(a, b);
            if (cell.empty()) continue;
            nlohmann::json h;
            h["source"] = spec.object_name(a);
            h["target"] = spec.object_name(b);
            h["morphisms"] = nlohmann::json::array();
            for (MorId f : cell) h["morphisms"].push_back(spec.morphism_name(f));
            j["homs"].push_back(h);
        }
    j["identities"] = nlohmann::json::object();
    for (ObjId a = 0; a < spec.object_count(); ++a)
        j["identities"][spec.object_name(a)] = spec.morphism_name(spec.identity(a));
    j["inner"] = nlohmann::json::object();
    for (ObjId a = 0; a < spec.object_count(); ++a) {
        nlohmann::json arr = nlohmann::json::array();
        for (MorId f : spec.inner(a)) arr.push_back(spec.morphism_name(f));
        j["inner"][spec.object_name(a)] = arr;
    }
    j["compose"] = nlohmann::json::array();
    for (MorId f = 0; f < spec.morphism_count(); ++f)
        for (MorId g = 0; g < spec.morphism_count(); ++g)
            if (spec.composable(f, g))
                j["compose"].push_back(nlohmann::json::array(
                    {spec.morphism_name(f), spec.morphism_name(g), spec.morphism_name(spec.compose(f, g))}));
    return j.dump(2) + "\n";
}

} // namespace outcat
