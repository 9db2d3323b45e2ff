#include "supergv/signature.hpp"

#include "supergv/errors.hpp"

#include <set>

namespace supergv {

SpaceSignature::SpaceSignature(std::vector<EvenCoord> even_coords,
                               std::vector<std::string> odd_coords,
                               std::vector<std::string> params,
                               unsigned dtheta_power_guard)
    : even_(std::move(even_coords)),
      odd_(std::move(odd_coords)),
      params_(std::move(params)),
      guard_(dtheta_power_guard) {
    if (odd_.size() > 30) throw bad_structure("at most 30 odd coordinates supported");
    std::set<std::string> seen;
    auto claim = [&](const std::string& n) {
        if (n.empty()) throw bad_structure("empty coordinate or parameter name");
        if (n == "cos" || n == "sin" || n == "d")
            throw bad_structure("reserved name: " + n);
        if (!seen.insert(n).second) throw bad_structure("duplicate name: " + n);
    };
    for (const auto& c : even_) claim(c.name);
    for (const auto& n : odd_) claim(n);
    for (const auto& n : params_) claim(n);
    // Differential tokens are "d"+name; forbid collisions like a
    // coordinate literally named "dx1" next to a coordinate "x1".
    for (const auto& n : seen) {
        if (seen.count("d" + n)) throw bad_structure("name collides with differential token: d" + n);
    }
}

int SpaceSignature::even_index(const std::string& name) const {
    for (std::size_t i = 0; i < even_.size(); ++i)
        if (even_[i].name == name) return static_cast<int>(i);
    return -1;
}

int SpaceSignature::odd_index(const std::string& name) const {
    for (std::size_t j = 0; j < odd_.size(); ++j)
        if (odd_[j] == name) return static_cast<int>(j);
    return -1;
}

int SpaceSignature::param_index(const std::string& name) const {
    for (std::size_t k = 0; k < params_.size(); ++k)
        if (params_[k] == name) return static_cast<int>(k);
    return -1;
}

bool SpaceSignature::operator==(const SpaceSignature& o) const {
    return even_ == o.even_ && odd_ == o.odd_ && params_ == o.params_ && guard_ == o.guard_;
}

SignaturePtr make_signature(std::vector<SpaceSignature::EvenCoord> even_coords,
                            std::vector<std::string> odd_coords,
                            std::vector<std::string> params,
                            unsigned dtheta_power_guard) {
    return std::make_shared<const SpaceSignature>(std::move(even_coords), std::move(odd_coords),
                                                  std::move(params), dtheta_power_guard);
}

} // namespace supergv
