#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "idionav/behaviors.hpp"

namespace idionav::ga {

class SeedFileError : public std::runtime_error {
 public:
  SeedFileError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One evolved antibody set with the task time and collisions of the robot
/// that carried it and the final cumulative score of each antibody.
struct SeedSet {
  double lt = 0.0;
  int lc = 0;
  std::vector<behaviors::Antibody> antibodies;
  std::vector<double> e;

  friend bool operator==(const SeedSet&, const SeedSet&) = default;
};

/// Output of the long-term phase. Text layout:
///
///   SEEDv1 v=<sets> y=<antigens> profile=<name>
///   SET lt=<seconds> lc=<collisions>
///   <antigen>: U;S;F;A;D;RF;RA;E        (y lines per set)
struct SeedFile {
  int version = 1;
  int y = 8;
  std::string profile = "table2";
  std::vector<SeedSet> sets;

  int v() const { return static_cast<int>(sets.size()); }
  friend bool operator==(const SeedFile&, const SeedFile&) = default;
};

std::string serialize(const SeedFile& seeds);
void write_seed_file(const std::filesystem::path& path, const SeedFile& seeds);

SeedFile parse_seed_file(std::istream& in, const std::string& source = "<seeds>");
SeedFile load_seed_file(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace idionav::ga
