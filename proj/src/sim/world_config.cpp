#include "idionav/sim/world_config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace idionav::sim {
namespace {

class LineReader {
 public:
  LineReader(std::istringstream& in, const std::string& source, int line)
      : in_(in), source_(source), line_(line) {}

  double number() {
    double v = 0.0;
    if (!(in_ >> v)) fail("expected a number");
    return v;
  }

  int integer() {
    int v = 0;
    if (!(in_ >> v)) fail("expected an integer");
    return v;
  }

  std::string word() {
    std::string w;
    if (!(in_ >> w)) fail("expected a word");
    return w;
  }

  Segment segment() {
    const double x0 = number(), y0 = number(), x1 = number(), y1 = number();
    return {{x0, y0}, {x1, y1}};
  }

  Box box() {
    const double x0 = number(), y0 = number(), x1 = number(), y1 = number();
    if (x1 < x0 || y1 < y0) fail("box corners must be ordered min then max");
    return {{x0, y0}, {x1, y1}};
  }

  Pose pose() {
    const double x = number(), y = number(), h = number();
    return {x, y, normalize_angle(h)};
  }

  void finish() {
    std::string extra;
    if (in_ >> extra) fail("unexpected trailing token '" + extra + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ConfigError(source_, line_, what); }

 private:
  std::istringstream& in_;
  const std::string& source_;
  int line_;
};

}  // namespace

WorldConfig parse_world(std::istream& in, const std::string& source) {
  WorldConfig cfg;
  bool have_start = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string directive;
    if (!(line >> directive)) continue;
    LineReader r(line, source, line_no);

    if (directive == "name") {
      cfg.name = r.word();
    } else if (directive == "kind") {
      const std::string k = r.word();
      if (k == "ltl") cfg.kind = WorldKind::Ltl;
      else if (k == "stl") cfg.kind = WorldKind::Stl;
      else r.fail("kind must be ltl or stl");
    } else if (directive == "robot") {
      std::string key;
      while (line >> key) {
        const double v = r.number();
        if (v <= 0.0) r.fail("robot dimensions must be positive");
        if (key == "radius") cfg.robot.body_radius = v;
        else if (key == "wheel_radius") cfg.robot.wheel_radius = v;
        else if (key == "axle") cfg.robot.axle = v;
        else r.fail("unknown robot key '" + key + "'");
      }
    } else if (directive == "wall") {
      cfg.walls.push_back(r.segment());
    } else if (directive == "pillar") {
      const double x = r.number(), y = r.number(), rad = r.number();
      if (rad <= 0.0) r.fail("pillar radius must be positive");
      cfg.pillars.push_back({{x, y}, rad});
    } else if (directive == "block") {
      cfg.blocks.push_back(r.box());
    } else if (directive == "marker") {
      cfg.markers.push_back(r.segment());
    } else if (directive == "target") {
      cfg.target = r.box();
    } else if (directive == "door") {
      Door d;
      d.segment = r.segment();
      d.from_room = r.integer();
      d.to_room = r.integer();
      cfg.doors.push_back(d);
    } else if (directive == "room") {
      Room room;
      room.id = r.integer();
      room.area = r.box();
      cfg.rooms.push_back(room);
    } else if (directive == "start") {
      cfg.start = r.pose();
      have_start = true;
    } else if (directive == "finish") {
      cfg.finish = r.segment();
    } else if (directive == "wanderer") {
      cfg.has_wanderer = true;
      cfg.wanderer_start = r.pose();
    } else if (directive == "spawn") {
      const std::string what = r.word();
      const Box b = r.box();
      if (what == "robot") cfg.robot_spawn = b;
      else if (what == "target") cfg.target_spawn = b;
      else if (what == "wanderer") cfg.wanderer_spawn = b;
      else r.fail("spawn must name robot, target or wanderer");
    } else {
      r.fail("unknown directive '" + directive + "'");
    }
    r.finish();
  }

  if (!have_start) throw ConfigError(source, line_no, "missing start pose");
  for (const Door& d : cfg.doors) {
    bool known = false;
    for (const Room& room : cfg.rooms) known |= room.id == d.to_room;
    if (!known) throw ConfigError(source, line_no, "door leads to unknown room");
  }
  if (cfg.kind == WorldKind::Ltl && !cfg.finish) {
    throw ConfigError(source, line_no, "ltl world needs a finish line");
  }
  if (cfg.kind == WorldKind::Stl && !cfg.target) {
    throw ConfigError(source, line_no, "stl world needs a target");
  }
  return cfg;
}

WorldConfig load_world(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot open world file");
  return parse_world(in, path.string());
}

std::shared_ptr<const WorldConfig> load_world_shared(const std::filesystem::path& path) {
  return std::make_shared<const WorldConfig>(load_world(path));
}

}  // namespace idionav::sim
