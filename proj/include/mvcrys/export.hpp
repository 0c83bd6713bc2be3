#pragma once

#include "mvcrys/gallery.hpp"

#include <json.hpp>
#include <string>

namespace mvcrys {

// nodes: {id, tuple, weight, dim, eps, phi}; edges: {from, to, color} with 1-based colors.
nlohmann::json crystal_to_json(const CrystalGraph& g);
std::string crystal_to_dot(const CrystalGraph& g, const std::string& name = "crystal");

nlohmann::json gallery_to_json(const Gallery& g);
// Rebuilds a gallery of the given type from gallery_to_json output.
Gallery gallery_from_json(const TypePtr& t, const nlohmann::json& j);

std::string weight_label(const RatVec& w);

}  // namespace mvcrys
