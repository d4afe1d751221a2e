#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include <Eigen/Geometry>

#include "mem/errors.hpp"
#include "mem/presets.hpp"
#include "mem/scene.hpp"
#include "mem/scene_io.hpp"

using namespace mem;
using std::numbers::pi;

namespace {

Scene two_disks(double d, double a1 = 1.0, double a2 = 1.0) {
  Scene s;
  s.cylinders = {{Point2(0, 0), a1}, {Point2(d, 0), a2}};
  s.wavenumber = 1.0;
  return s;
}

double wrap(double t) {
  t = std::fmod(t, 2.0 * pi);
  return t < 0 ? t + 2.0 * pi : t;
}

}  // namespace

TEST_SUITE("scene") {
  TEST_CASE("validation catches each violation") {
    CHECK(validate_scene(two_disks(1.5)).has_violation("overlap"));
    CHECK(validate_scene(two_disks(2.0)).has_violation("overlap"));
    CHECK(validate_scene(two_disks(2.0 + 1e-6)).ok());

    Scene s = two_disks(4.0);
    s.cylinders[1].radius = 0.0;
    CHECK(validate_scene(s).has_violation("nonpositive-radius"));

    s = two_disks(4.0);
    s.wavenumber = -1.0;
    CHECK(validate_scene(s).has_violation("nonpositive-wavenumber"));

    s = two_disks(4.0);
    s.incident = PointSource{Point2(0.5, 0.0)};
    CHECK(validate_scene(s).has_violation("source-inside"));
    s.incident = PointSource{Point2(1.0, 0.0)};
    CHECK(validate_scene(s).has_violation("source-inside"));

    CHECK(validate_scene(Scene{}).has_violation("empty"));
    CHECK_THROWS_AS(require_valid(two_disks(1.0)), ValidationError);
  }

  TEST_CASE("eigenvalue proximity warning") {
    Scene s;
    s.cylinders = {{Point2(0, 0), 1.0}};
    s.wavenumber = 2.4048256;
    const auto r = validate_scene(s);
    CHECK(r.ok());
    CHECK(r.has_warning("near-eigenvalue"));
    s.wavenumber = 2.0;
    CHECK_FALSE(validate_scene(s).has_warning("near-eigenvalue"));
  }

  TEST_CASE("presets validate cleanly") {
    for (Preset p : kAllPresets) {
      const Scene s = preset_scene(p);
      CAPTURE(preset_name(p));
      CHECK(s.size() == 3);
      CHECK(s.cylinders[0].radius == 2.0);
      CHECK(s.cylinders[1].radius == 1.0);
      CHECK(s.cylinders[2].radius == 0.5);
      CHECK(validate_scene(s).ok());
      CHECK(parse_preset(preset_name(p)) == p);
    }
  }

  TEST_CASE("pairwise geometry examples") {
    Scene s = two_disks(4.0);
    auto g = pairwise_geometry(s);
    CHECK(g.distance(0, 1) == 4.0);
    CHECK(g.distance(0, 0) == 0.0);
    CHECK(g.angle(0, 1) == doctest::Approx(0.0));
    CHECK(g.angle(1, 0) == doctest::Approx(pi));

    s.cylinders[1].center = Point2(0, 3);
    g = pairwise_geometry(s);
    CHECK(g.angle(0, 1) == doctest::Approx(pi / 2));

    s = two_disks(4.0);
    s.incident = PointSource{Point2(6, 8)};
    g = pairwise_geometry(s);
    CHECK(g.source_distance(0) == doctest::Approx(10.0));
  }

  TEST_CASE("geometry under translation and rotation") {
    const Scene base = preset_scene(Preset::moderate);
    const auto g0 = pairwise_geometry(base);
    const double rot = 0.7;
    const Eigen::Rotation2Dd r(rot);
    Scene moved = base, turned = base;
    for (auto& c : moved.cylinders) c.center += Point2(3.5, -11.0);
    for (auto& c : turned.cylinders) c.center = r * c.center;
    const auto gm = pairwise_geometry(moved);
    const auto gt = pairwise_geometry(turned);
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) {
        CHECK(gm.distance(p, q) == doctest::Approx(g0.distance(p, q)).epsilon(1e-13));
        CHECK(gt.distance(p, q) == doctest::Approx(g0.distance(p, q)).epsilon(1e-13));
        if (p == q) continue;
        CHECK(gm.angle(p, q) == doctest::Approx(g0.angle(p, q)).epsilon(1e-13));
        const double shift = wrap(gt.angle(p, q) - g0.angle(p, q) - rot);
        CHECK(std::min(shift, 2.0 * pi - shift) < 1e-12);
        const double opposite = wrap(g0.angle(q, p) - g0.angle(p, q) - pi);
        CHECK(std::min(opposite, 2.0 * pi - opposite) < 1e-12);
        CHECK(g0.distance(p, q) == g0.distance(q, p));
      }
    }
  }
}

TEST_SUITE("scene_io") {
  TEST_CASE("parse emit parse is identity") {
    for (Preset p : kAllPresets) {
      const Scene s = preset_scene(p, 3.0);
      const Scene back = parse_scene(emit_scene(s));
      CHECK(back == s);
      CHECK(emit_scene(back) == emit_scene(s));
    }
    Scene pw = two_disks(4.0);
    pw.incident = PlaneWave{0.1 + 1.0 / 3.0};
    pw.wavenumber = 2.0 / 3.0;
    CHECK(parse_scene(emit_scene(pw)) == pw);
  }

  TEST_CASE("documented grammar parses") {
    const Scene s = parse_scene(R"({
      "name": "pair",
      "cylinders": [{"center": [0, 0], "radius": 1}, {"center": [4, 0], "radius": 0.5}],
      "wavenumber": 0.6,
      "incident": {"type": "point", "location": [2, -10]}
    })");
    CHECK(s.name == "pair");
    CHECK(s.size() == 2);
    CHECK(s.cylinders[1].radius == 0.5);
    CHECK(s.wavenumber == 0.6);
    REQUIRE(s.has_point_source());
    CHECK(std::get<PointSource>(s.incident).location == Point2(2, -10));
  }

  TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_scene("not json"), FormatError);
    CHECK_THROWS_AS(parse_scene("[]"), FormatError);
    CHECK_THROWS_AS(parse_scene(R"({"cylinders": [], "wavenumber": 1})"), FormatError);
    CHECK_THROWS_AS(parse_scene(R"({"cylinders": [{"center": [0], "radius": 1}], "wavenumber": 1,
                                   "incident": {"type": "plane", "angle": 0}})"),
                    FormatError);
    CHECK_THROWS_AS(parse_scene(R"({"cylinders": [], "wavenumber": 1,
                                   "incident": {"type": "laser", "angle": 0}})"),
                    FormatError);
    CHECK_THROWS_AS(parse_scene(R"({"cylinders": [], "wavenumber": 1, "extra": 2,
                                   "incident": {"type": "plane", "angle": 0}})"),
                    FormatError);
  }

  TEST_CASE("file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "memscat_scene_roundtrip.json";
    const Scene s = preset_scene(Preset::close);
    save_scene(s, path);
    CHECK(load_scene(path) == s);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_scene(path), std::ios_base::failure);
  }
}
