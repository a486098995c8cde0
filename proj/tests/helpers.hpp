#pragma once

#include <memory>
#include <sstream>
#include <string>

#include "idionav/sim/world_config.hpp"

namespace testing {

inline std::shared_ptr<const idionav::sim::WorldConfig> world_from(const std::string& text) {
  std::istringstream in(text);
  return std::make_shared<const idionav::sim::WorldConfig>(idionav::sim::parse_world(in, "<test>"));
}

inline std::string source_path(const std::string& rel) { return std::string(IDIONAV_SOURCE_DIR) + "/" + rel; }

}  // namespace testing
