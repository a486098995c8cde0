#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include "idionav/sim/world.hpp"

namespace idionav::sim {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// World files are line oriented; '#' starts a comment. Directives:
//
//   name <id>
//   kind ltl|stl
//   robot radius <m> wheel_radius <m> axle <m>
//   wall <x0> <y0> <x1> <y1>
//   pillar <x> <y> <r>
//   block <x0> <y0> <x1> <y1>
//   marker <x0> <y0> <x1> <y1>
//   target <x0> <y0> <x1> <y1>
//   door <x0> <y0> <x1> <y1> <from_room> <to_room>
//   room <id> <x0> <y0> <x1> <y1>
//   start <x> <y> <heading>
//   finish <x0> <y0> <x1> <y1>
//   wanderer <x> <y> <heading>
//   spawn robot|target|wanderer <x0> <y0> <x1> <y1>
WorldConfig parse_world(std::istream& in, const std::string& source = "<world>");
WorldConfig load_world(const std::filesystem::path& path);
std::shared_ptr<const WorldConfig> load_world_shared(const std::filesystem::path& path);

}  // namespace idionav::sim
