#pragma once

#include <string>

#include "ballbodies/harness.hpp"
#include "ballbodies/highd.hpp"
#include "ballbodies/planar.hpp"
#include "ballbodies/sphere.hpp"
#include "ballbodies/unit_ball.hpp"

namespace bb {

// File schemas are versioned through a "schema" field; parsers accept
// documents without one for hand-written inputs.

std::string point_config_to_json(const PointConfig& cfg);
PointConfig point_config_from_json(const std::string& text);

std::string arc_polygon_to_json(const ArcPolygon& ap);

std::string estimate_to_json(const Estimate& e);

std::string profile_to_json(const IntrinsicProfile& p);

std::string spherical_config_to_json(const SphericalConfig& cfg);
SphericalConfig spherical_config_from_json(const std::string& text);

// include_timing=false yields the byte-stable form used by determinism checks.
std::string report_to_json(const SuiteReport& report, bool include_timing = true);
std::string report_to_csv(const SuiteReport& report);

}  // namespace bb
