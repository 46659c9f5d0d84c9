#include <doctest.h>

#include <sstream>

#include "zollech/curve_io.hpp"

using zollech::CurveSample;
using zollech::PlanarCurve;

namespace {

PlanarCurve sample_curve() {
  PlanarCurve c;
  c.samples = {CurveSample{-0.5, 6.28318, 3.14159, 1e-10},
               CurveSample{0.25, 2.35619, 3.92699, 2e-10},
               CurveSample{0.75, 0.78539, 5.49778, 1.5e-10}};
  return c;
}

}  // namespace

TEST_CASE("CSV round trip preserves samples bit-exactly") {
  PlanarCurve c = sample_curve();
  std::ostringstream out;
  zollech::write_curve_csv(out, c);
  CHECK(out.str().rfind("j,x,y,err\n", 0) == 0);

  std::istringstream in(out.str());
  PlanarCurve back = zollech::read_curve_csv(in);
  REQUIRE(back.samples.size() == c.samples.size());
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    CHECK(back.samples[i].j == c.samples[i].j);
    CHECK(back.samples[i].x == c.samples[i].x);
    CHECK(back.samples[i].y == c.samples[i].y);
    CHECK(back.samples[i].err == c.samples[i].err);
  }
}

TEST_CASE("JSON round trip preserves samples") {
  PlanarCurve c = sample_curve();
  PlanarCurve back = zollech::curve_from_json(zollech::curve_to_json(c));
  REQUIRE(back.samples.size() == c.samples.size());
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    CHECK(back.samples[i].x == c.samples[i].x);
  }
}

TEST_CASE("malformed input is rejected") {
  std::istringstream missing_header("0.1,2,3,0\n");
  CHECK_THROWS_AS(zollech::read_curve_csv(missing_header), zollech::DomainError);

  std::istringstream bad_row("j,x,y,err\n0.1,2\n");
  CHECK_THROWS_AS(zollech::read_curve_csv(bad_row), zollech::DomainError);

  // Samples must stay strictly increasing in j.
  std::istringstream unsorted("j,x,y,err\n0.5,1,1,0\n0.1,2,2,0\n");
  CHECK_THROWS_AS(zollech::read_curve_csv(unsorted), zollech::DomainError);

  CHECK_THROWS_AS(zollech::curve_from_json("{\"schema\":\"zoll-ech/1\"}"),
                  zollech::DomainError);
}
