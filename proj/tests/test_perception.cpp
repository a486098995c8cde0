#include <doctest.h>

#include "idionav/perception.hpp"
#include "idionav/rng.hpp"

using namespace idionav;
using namespace idionav::perception;

namespace {

sim::IrReadings ir(std::array<int, 8> v) { return sim::IrReadings{v}; }
sim::BlobReport seen(int col = 7) { return {true, 3, col}; }

// Straight from the antigen tables, written out independently of the
// implementation.
int oracle8(const sim::IrReadings& r, bool blob) {
  int vmax = 0, imax = 0;
  for (int i = 0; i < 8; ++i) {
    if (r.values[i] > vmax) vmax = r.values[i], imax = i;
  }
  if (vmax < 250) return blob ? 1 : 0;
  const int side = imax < 3 ? 0 : imax < 5 ? 1 : 2;
  return (vmax >= 2400 ? 5 : 2) + side;
}

int oracle9(const sim::IrReadings& r, bool blob) {
  const int c8 = oracle8(r, blob);
  if (c8 >= 5) return c8 + 1;
  const auto flank = [](int v) { return v >= 140 && v < 2400; };
  if (flank(r.values[2]) && flank(r.values[5])) return 5;
  return c8;
}

}  // namespace

TEST_CASE("summarize picks the lowest-index maximum") {
  auto s = summarize(ir({0, 0, 0, 0, 0, 0, 0, 0}), {});
  CHECK(s.v_max == 0);
  CHECK(s.i_max == 0);
  s = summarize(ir({0, 0, 300, 0, 0, 0, 0, 0}), {});
  CHECK(s.i_max == 2);
  CHECK(s.v_max == 300);
  s = summarize(ir({250, 0, 0, 0, 0, 0, 0, 250}), {});
  CHECK(s.i_max == 0);
  s = summarize(ir({0, 0, 0, 900, 0, 900, 0, 0}), {});
  CHECK(s.i_max == 3);
}

TEST_CASE("eight-antigen examples") {
  CHECK(classify8(summarize(ir({0, 0, 0, 0, 0, 0, 0, 0}), seen())).code == 1);
  CHECK(classify8(summarize(ir({0, 0, 0, 2500, 0, 0, 0, 0}), {})).code == 6);
  CHECK(classify8(summarize(ir({250, 0, 0, 0, 0, 0, 0, 0}), {})).code == 2);
  CHECK(classify8(summarize(ir({249, 0, 0, 0, 0, 0, 0, 0}), {})).code == 0);
  CHECK(classify8(summarize(ir({0, 0, 0, 0, 0, 0, 300, 0}), seen())).code == 4);
  CHECK(classify8(summarize(ir({0, 0, 0, 0, 0, 0, 0, 2400}), {})).code == 7);
  CHECK(classify8(summarize(ir({0, 0, 2399, 0, 0, 0, 0, 0}), {})).code == 2);
  CHECK(classify8(summarize(ir({0, 0, 2400, 0, 0, 0, 0, 0}), {})).code == 5);
}

TEST_CASE("orientation of each sensor") {
  const Orientation expected[] = {Orientation::Right, Orientation::Right, Orientation::Right, Orientation::Rear,
                                  Orientation::Rear,  Orientation::Left,  Orientation::Left,  Orientation::Left};
  for (int i = 0; i < 8; ++i) CHECK(orientation_of(i) == expected[i]);
}

TEST_CASE("nine-antigen examples") {
  auto c9 = [](std::array<int, 8> v, sim::BlobReport b = {}) {
    const auto r = ir(v);
    return classify9(summarize(r, b), r).code;
  };
  CHECK(c9({0, 0, 200, 0, 0, 200, 0, 0}) == 5);
  CHECK(c9({0, 0, 200, 0, 0, 2600, 0, 0}) == 8);
  CHECK(c9({0, 0, 0, 0, 0, 0, 0, 0}) == 0);
  CHECK(c9({0, 0, 140, 0, 0, 2399, 0, 0}) == 5);
  CHECK(c9({0, 0, 139, 0, 0, 2399, 0, 0}) == 4);
  CHECK(c9({0, 0, 0, 2500, 0, 0, 0, 0}) == 7);
  CHECK(c9({2400, 0, 0, 0, 0, 0, 0, 0}) == 6);
  CHECK(c9({0, 0, 0, 0, 0, 0, 0, 0}, seen()) == 1);
  CHECK(c9({0, 0, 150, 0, 0, 150, 0, 0}, seen()) == 5);
}

TEST_CASE("classification matches the table oracle over a quantized grid") {
  // Levels straddle every threshold.
  const int levels[] = {0, 139, 140, 249, 250, 2399, 2400, 4095};
  long checked = 0;
  Rng rng(17);
  for (int trial = 0; trial < 60000; ++trial) {
    std::array<int, 8> v{};
    for (auto& x : v) x = levels[rng.uniform_int(0, 7)];
    const auto r = ir(v);
    const bool blob = rng.bernoulli(0.5);
    const auto s = summarize(r, blob ? seen() : sim::BlobReport{});
    const AntigenCode a8 = classify(s, r, AntigenMode::Eight);
    const AntigenCode a9 = classify(s, r, AntigenMode::Nine);
    REQUIRE(a8.code == oracle8(r, blob));
    REQUIRE(a9.code == oracle9(r, blob));
    CHECK(is_valid(a8));
    CHECK(is_valid(a9));
    if (s.v_max >= 250) {
      CHECK(is_obstacle(a8));
      CHECK(is_obstacle(a9));
    }
    ++checked;
  }
  CHECK(checked == 60000);
}

TEST_CASE("single-sensor sweep is exhaustive over every index and threshold") {
  for (int i = 0; i < 8; ++i) {
    for (int v : {0, 1, 249, 250, 251, 2399, 2400, 4095}) {
      for (bool blob : {false, true}) {
        std::array<int, 8> vals{};
        vals[i] = v;
        const auto r = ir(vals);
        const auto s = summarize(r, blob ? seen() : sim::BlobReport{});
        CHECK(classify8(s).code == oracle8(r, blob));
        CHECK(classify9(s, r).code == oracle9(r, blob));
      }
    }
  }
}

TEST_CASE("kinds and mode parsing") {
  CHECK(kind_of({5, AntigenMode::Eight}) == AntigenKind::Collision);
  CHECK(kind_of({5, AntigenMode::Nine}) == AntigenKind::NearBoth);
  CHECK(kind_of({4, AntigenMode::Nine}) == AntigenKind::Near);
  CHECK(kind_of({8, AntigenMode::Nine}) == AntigenKind::Collision);
  CHECK_FALSE(is_valid({8, AntigenMode::Eight}));
  CHECK(is_valid({8, AntigenMode::Nine}));
  CHECK(parse_mode("9") == AntigenMode::Nine);
  CHECK_THROWS_AS(parse_mode("7"), std::invalid_argument);
}
