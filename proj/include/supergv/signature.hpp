#pragma once

#include <memory>
#include <string>
#include <vector>

namespace supergv {

enum class Topology { Line, Circle };

// Coordinate system of a split model space: p even coordinates, each a
// line or a circle, q odd (anticommuting) coordinates, and a list of
// formal parameter names. Immutable after construction; values built on
// one signature interoperate only with structurally equal signatures.
class SpaceSignature {
public:
    struct EvenCoord {
        std::string name;
        Topology topology;
        bool operator==(const EvenCoord& o) const = default;
    };

    SpaceSignature(std::vector<EvenCoord> even_coords,
                   std::vector<std::string> odd_coords,
                   std::vector<std::string> params = {},
                   unsigned dtheta_power_guard = 16);

    std::size_t even_count() const { return even_.size(); }
    std::size_t odd_count() const { return odd_.size(); }
    std::size_t param_count() const { return params_.size(); }
    unsigned dtheta_power_guard() const { return guard_; }

    const EvenCoord& even(std::size_t i) const { return even_[i]; }
    const std::string& odd(std::size_t j) const { return odd_[j]; }
    const std::string& param(std::size_t k) const { return params_[k]; }
    const std::vector<std::string>& param_names() const { return params_; }

    bool is_circle(std::size_t i) const { return even_[i].topology == Topology::Circle; }

    // Lookup by name; returns -1 when absent.
    int even_index(const std::string& name) const;
    int odd_index(const std::string& name) const;
    int param_index(const std::string& name) const;

    bool operator==(const SpaceSignature& o) const;
    bool operator!=(const SpaceSignature& o) const { return !(*this == o); }

private:
    std::vector<EvenCoord> even_;
    std::vector<std::string> odd_;
    std::vector<std::string> params_;
    unsigned guard_;
};

using SignaturePtr = std::shared_ptr<const SpaceSignature>;

SignaturePtr make_signature(std::vector<SpaceSignature::EvenCoord> even_coords,
                            std::vector<std::string> odd_coords,
                            std::vector<std::string> params = {},
                            unsigned dtheta_power_guard = 16);

inline void require_same_signature(const SignaturePtr& a, const SignaturePtr& b);

} // namespace supergv

#include "supergv/errors.hpp"

namespace supergv {

inline void require_same_signature(const SignaturePtr& a, const SignaturePtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw signature_mismatch("operands live on different spaces");
}

} // namespace supergv
