#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outcat/errors.hpp"

namespace outcat {

// A permutation of the points 0..degree-1. Points print 1-based in cycle
// notation. Composition is diagrammatic throughout the toolkit:
// a.then(b) applies a first.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);
    static Perm from_images(std::vector<uint8_t> images);
    // 1-based cycle text, e.g. "(1 2 3)(4 5)"; "()" is the identity.
    static Perm from_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int p) const { return img_[static_cast<size_t>(p)]; }

    Perm then(const Perm& o) const; // this first, then o
    Perm inverse() const;

    bool is_identity() const;
    int sign() const; // +1 even, -1 odd
    int order() const;
    // Cycle lengths >= 2, descending. Empty for the identity.
    std::vector<int> cycle_type() const;
    std::string cycles() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // Images packed 4 bits per point; the degree cap of 16 keeps this exact.
    uint64_t key() const;

private:
    std::vector<uint8_t> img_;
};

} // namespace outcat
