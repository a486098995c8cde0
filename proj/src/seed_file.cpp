#include "idionav/seed_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace idionav::ga {
namespace {

// Reads "key=value" and returns value; throws on a mismatched key.
std::string keyed(const std::string& token, const std::string& key, const std::string& source, int line) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) throw SeedFileError(source, line, "expected " + prefix);
  return token.substr(prefix.size());
}

double to_double(const std::string& text, const std::string& source, int line) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw SeedFileError(source, line, "bad number '" + text + "'");
  return v;
}

int to_int(const std::string& text, const std::string& source, int line) {
  int v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw SeedFileError(source, line, "bad integer '" + text + "'");
  return v;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string serialize(const SeedFile& seeds) {
  std::ostringstream out;
  out << "SEEDv" << seeds.version << " v=" << seeds.v() << " y=" << seeds.y
      << " profile=" << seeds.profile << '\n';
  for (const SeedSet& set : seeds.sets) {
    out << "SET lt=" << format_double(set.lt) << " lc=" << set.lc << '\n';
    for (std::size_t j = 0; j < set.antibodies.size(); ++j) {
      out << j << ": " << behaviors::to_string(set.antibodies[j]) << ';' << format_double(set.e[j]) << '\n';
    }
  }
  return out.str();
}

void write_seed_file(const std::filesystem::path& path, const SeedFile& seeds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write seed file " + path.string());
  out << serialize(seeds);
}

SeedFile parse_seed_file(std::istream& in, const std::string& source) {
  SeedFile seeds;
  std::string raw;
  int line_no = 0;
  int expected_sets = -1;
  bool header = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream line(raw);

    if (!header) {
      std::string magic, v, y, profile;
      if (!(line >> magic >> v >> y >> profile) || magic != "SEEDv1") {
        throw SeedFileError(source, line_no, "expected 'SEEDv1 v=<int> y=<int> profile=<name>'");
      }
      expected_sets = to_int(keyed(v, "v", source, line_no), source, line_no);
      seeds.y = to_int(keyed(y, "y", source, line_no), source, line_no);
      seeds.profile = keyed(profile, "profile", source, line_no);
      if (expected_sets <= 0 || seeds.y <= 0) throw SeedFileError(source, line_no, "v and y must be positive");
      header = true;
      continue;
    }

    if (raw.rfind("SET", 0) == 0) {
      if (!seeds.sets.empty() && static_cast<int>(seeds.sets.back().antibodies.size()) != seeds.y) {
        throw SeedFileError(source, line_no, "previous set has too few antibody lines");
      }
      std::string tag, lt, lc;
      if (!(line >> tag >> lt >> lc) || tag != "SET") {
        throw SeedFileError(source, line_no, "expected 'SET lt=<f> lc=<int>'");
      }
      SeedSet set;
      set.lt = to_double(keyed(lt, "lt", source, line_no), source, line_no);
      set.lc = to_int(keyed(lc, "lc", source, line_no), source, line_no);
      seeds.sets.push_back(std::move(set));
      continue;
    }

    if (seeds.sets.empty()) throw SeedFileError(source, line_no, "antibody line before any SET");
    SeedSet& set = seeds.sets.back();
    const auto colon = raw.find(':');
    if (colon == std::string::npos) throw SeedFileError(source, line_no, "expected '<antigen>: U;S;F;A;D;RF;RA;E'");
    const int antigen = to_int(raw.substr(0, colon), source, line_no);
    if (antigen != static_cast<int>(set.antibodies.size())) {
      throw SeedFileError(source, line_no, "antigen lines must be numbered 0..y-1 in order");
    }
    if (antigen >= seeds.y) throw SeedFileError(source, line_no, "too many antibody lines in set");
    std::string body = raw.substr(colon + 1);
    const auto last = body.rfind(';');
    if (last == std::string::npos) throw SeedFileError(source, line_no, "missing E score");
    std::string e_text = body.substr(last + 1);
    while (!e_text.empty() && e_text.front() == ' ') e_text.erase(0, 1);
    try {
      set.antibodies.push_back(behaviors::parse_antibody(body.substr(0, last)));
    } catch (const std::invalid_argument& err) {
      throw SeedFileError(source, line_no, err.what());
    }
    set.e.push_back(to_double(e_text, source, line_no));
  }

  if (!header) throw SeedFileError(source, line_no, "empty seed file");
  if (seeds.v() != expected_sets) throw SeedFileError(source, line_no, "set count does not match header");
  if (!seeds.sets.empty() && static_cast<int>(seeds.sets.back().antibodies.size()) != seeds.y) {
    throw SeedFileError(source, line_no, "last set has too few antibody lines");
  }
  return seeds;
}

SeedFile load_seed_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SeedFileError(path.string(), 0, "cannot open seed file");
  return parse_seed_file(in, path.string());
}

}  // namespace idionav::ga
