#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "outcat/errors.hpp"

namespace outcat {

using ObjId = int32_t;
using MorId = int32_t;

// An explicit finite category: object and morphism tables, a total
// composition on composable pairs, identities, and a designated set of
// "inner" automorphisms per object. Hom-sets are always materialized;
// composition is either a stored table or computed by a backend (the
// matrix category computes products instead of storing millions of
// entries). Instances are immutable once built and safe to share across
// threads.
class FiniteCategorySpec {
public:
    // Composition provider. compose(f, g) = "f then g" for f: a->b, g: b->c.
    struct ComposeBackend {
        virtual ~ComposeBackend() = default;
        virtual MorId compose(const FiniteCategorySpec& spec, MorId f, MorId g) const = 0;
    };

    class Builder;

    int object_count() const { return static_cast<int>(object_names_.size()); }
    int morphism_count() const { return static_cast<int>(morphism_names_.size()); }
    const std::string& object_name(ObjId a) const { return object_names_[static_cast<size_t>(a)]; }
    const std::string& morphism_name(MorId f) const { return morphism_names_[static_cast<size_t>(f)]; }
    std::optional<ObjId> find_object(const std::string& name) const;
    std::optional<MorId> find_morphism(const std::string& name) const;

    ObjId source(MorId f) const { return mor_source_[static_cast<size_t>(f)]; }
    ObjId target(MorId f) const { return mor_target_[static_cast<size_t>(f)]; }
    int local_index(MorId f) const { return mor_local_[static_cast<size_t>(f)]; }

    const std::vector<MorId>& hom(ObjId a, ObjId b) const {
        return hom_[static_cast<size_t>(a) * object_names_.size() + static_cast<size_t>(b)];
    }
    MorId identity(ObjId a) const { return identity_[static_cast<size_t>(a)]; }
    const std::vector<MorId>& inner(ObjId a) const { return inner_[static_cast<size_t>(a)]; }

    MorId compose(MorId f, MorId g) const; // f then g; checks composability

    bool composable(MorId f, MorId g) const { return target(f) == source(g); }

    // Two-sided inverse of f if one exists.
    std::optional<MorId> inverse_of(MorId f) const;

    // Structural and law checks. Basic: tables well formed, identity laws,
    // inner sets are invertible endomorphisms. Full: also associativity on
    // every composable triple. Builders that construct composition from an
    // associative operation (function composition, matrix product) mark
    // their output as law-exempt and only run the basic level; anything
    // loaded from a file gets the full treatment.
    enum class CheckLevel { basic, full };
    void validate(CheckLevel level) const; // throws ValidationError

    bool laws_hold_by_construction() const { return laws_by_construction_; }

    const ComposeBackend* backend() const { return backend_.get(); }

private:
    friend class Builder;
    std::vector<std::string> object_names_;
    std::vector<std::string> morphism_names_;
    std::vector<ObjId> mor_source_;
    std::vector<ObjId> mor_target_;
    std::vector<int32_t> mor_local_;
    std::vector<std::vector<MorId>> hom_;
    std::vector<MorId> identity_;
    std::vector<std::vector<MorId>> inner_;
    std::shared_ptr<const ComposeBackend> backend_;
    std::unordered_map<std::string, ObjId> object_index_;
    std::unordered_map<std::string, MorId> morphism_index_;
    bool laws_by_construction_ = false;
};

// Stored composition table with dense per-(a,b,c) blocks.
class TableBackend : public FiniteCategorySpec::ComposeBackend {
public:
    MorId compose(const FiniteCategorySpec& spec, MorId f, MorId g) const override;

    // filled by the builder
    std::vector<int64_t> block_offset_; // indexed by (a*n+b)*n+c, -1 when absent
    std::vector<MorId> entries_;
    int n_ = 0;
};

class FiniteCategorySpec::Builder {
public:
    ObjId add_object(const std::string& name);
    MorId add_morphism(const std::string& name, ObjId source, ObjId target);
    void set_identity(ObjId a, MorId f);
    void set_inner(ObjId a, std::vector<MorId> inner);
    void set_composite(MorId f, MorId g, MorId fg); // f then g = fg

    // Finish with the stored table (set_composite entries must cover every
    // composable pair).
    std::shared_ptr<const FiniteCategorySpec> build_with_table(bool laws_by_construction);
    // Finish with a custom backend; the composite entries added so far are
    // ignored.
    std::shared_ptr<const FiniteCategorySpec> build_with_backend(
        std::shared_ptr<const ComposeBackend> backend, bool laws_by_construction);

private:
    std::shared_ptr<FiniteCategorySpec> spec_ = std::make_shared<FiniteCategorySpec>();
    std::vector<std::tuple<MorId, MorId, MorId>> composites_;
    void finalize_shape();
};

// JSON round trip for the documented spec file format. Loaded specs are
// fully validated. Saving a loaded file reproduces it byte for byte when
// the file is in canonical form (sorted keys, two-space indent, trailing
// newline).
std::shared_ptr<const FiniteCategorySpec> load_category_json(const std::string& text);
std::string save_category_json(const FiniteCategorySpec& spec);

} // namespace outcat
