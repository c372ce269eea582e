#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "prj3d/bench.hpp"
#include "prj3d/json_io.hpp"

using namespace prj3d;
using io::json;

namespace {

std::string data(const std::string& name) { return std::string(PRJ3D_DATA_DIR) + "/" + name; }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Io, DisplayCurveFile) {
  Curve c = io::load_curve(data("display_curve.json"));
  std::vector<std::vector<long>> expected = {{1, 0, 0, 0, 1}, {0, 4, 0, 0, 0}, {0, 0, -8, 0, 0}, {0, 0, 0, 1, -2}};
  ASSERT_EQ(c.degree(), 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= 4; ++j) EXPECT_EQ(c.rows()[i][j], expected[i][j]);
}

TEST(Io, FixtureFilesMatchInCodeFixtures) {
  EXPECT_EQ(io::load_curve(data("example_p.json")), fixtures::example_p());
  EXPECT_EQ(io::load_curve(data("example_q.json")), fixtures::example_q());
  for (const auto& b : fixtures::table_curves()) {
    json j = io::read_json_file(data("table_degree" + std::to_string(b.degree) + ".json"));
    EXPECT_EQ(io::parse_curve(j), b.curve);
    EXPECT_EQ(j["symmetries"].get<int>(), b.symmetries);
  }
}

TEST(Io, RejectedInputs) {
  EXPECT_EQ(code_of([] { io::load_curve(data("malformed.json")); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::load_curve(data("twisted_cubic.json")); }), Errc::DegreeTooLow);
  EXPECT_EQ(code_of([] { io::load_curve(data("affine_cubic.json")); }), Errc::DegreeTooLow);
  EXPECT_EQ(code_of([] { io::parse_curve(json::parse(R"({"degree": 4, "coefficients": [[1,2,3,4,5]]})")); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_curve(json::parse(R"({"degree": 1, "coefficients": [[1,2],[1,2],[1,2],[1]]})")); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_curve(json::parse(R"({"degree": 1, "coefficients": [[1,2],[1,"x"],[1,2],[1,2]]})")); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_curve(json::parse(R"({"degree": 1, "coefficients": [[1,2],[1,"3/0"],[1,2],[1,2]]})")); }),
            Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_curve(json::parse(R"({"degree": 1, "coefficients": [[1,2],[1,2.5],[1,2],[1,2]]})")); }),
            Errc::ParseError);
}

TEST(Io, AffineHomogenization) {
  // x = t / (1 + t^4), y = t^2 / (2 + 2 t^4), z = t^3
  Curve c = io::load_curve(data("affine_quartic.json"));
  ASSERT_EQ(c.degree(), 7);
  Param<Rat> p = c.components();
  for (Rat t : {Rat(1, 3), Rat(2), Rat(-5, 7)}) {
    Rat w = p[0].eval(Rat(1), t);
    ASSERT_NE(w, 0);
    EXPECT_EQ(p[1].eval(Rat(1), t) / w, t / (1 + t * t * t * t));
    EXPECT_EQ(p[2].eval(Rat(1), t) / w, t * t / (2 + 2 * t * t * t * t));
    EXPECT_EQ(p[3].eval(Rat(1), t) / w, t * t * t);
  }
}

TEST(Io, RationalsAndBigIntegersRoundTrip) {
  Int big = (Int(1) << 100) - 3;
  std::vector<std::vector<Rat>> rows = {{Rat(big), Rat(0), Rat(0), Rat(0), Rat(1)},
                                        {Rat(0), Rat(-1, 3), Rat(0), Rat(0), Rat(0)},
                                        {Rat(0), Rat(0), Rat(5), Rat(0), Rat(0)},
                                        {Rat(0), Rat(0), Rat(0), Rat(1), Rat(-2)}};
  Curve c(4, rows);
  json j = io::to_json(c);
  EXPECT_TRUE(j["coefficients"][0][0].is_string());
  EXPECT_EQ(j["coefficients"][1][1], "-1/3");
  EXPECT_TRUE(j["coefficients"][2][2].is_number_integer());
  EXPECT_EQ(io::parse_curve(json::parse(j.dump())), c);
}

TEST(Io, ReportShape) {
  DetectionReport r = detect_equivalences(fixtures::example_p(), fixtures::example_q());
  json j = io::to_json(r, false);
  EXPECT_EQ(j["status"], "equivalent");
  ASSERT_EQ(j["pairs"].size(), 4u);
  for (const auto& p : j["pairs"]) {
    EXPECT_EQ(p["field"], "Q");
    EXPECT_EQ(p["moebius"].size(), 2u);
    EXPECT_EQ(p["matrix"].size(), 4u);
  }
  EXPECT_FALSE(j["diagnostics"].contains("seconds"));
  EXPECT_EQ(j["diagnostics"]["g_bidegree"], json::array({8, 8}));
  EXPECT_EQ(io::field_json(Int(2)), json({{"sqrt", 2}}));
  Scalar s = try_sqrt(Rat(8)) + Scalar(Rat(1, 2));
  EXPECT_EQ(io::to_json(s), json({{"a", "1/2"}, {"b", 2}, {"d", 2}}));
}

TEST(Bench, Ranges) {
  EXPECT_EQ(bench::parse_range("5..8"), (std::vector<int>{5, 6, 7, 8}));
  EXPECT_EQ(bench::parse_range("5-7"), (std::vector<int>{5, 6, 7}));
  EXPECT_EQ(bench::parse_range("4,8,16"), (std::vector<int>{4, 8, 16}));
  EXPECT_EQ(bench::parse_range("4,6..7"), (std::vector<int>{4, 6, 7}));
  EXPECT_THROW(bench::parse_range(""), Error);
  EXPECT_THROW(bench::parse_range("9..5"), Error);
  EXPECT_THROW(bench::parse_range("a..b"), Error);
  EXPECT_THROW(bench::parse_mode("sideways"), Error);
}

TEST(Bench, DeterministicAcrossJobCounts) {
  auto cases = bench::case_list({bench::Mode::Equiv, bench::Mode::NonEquiv, bench::Mode::CentralInversion}, {5, 6},
                                {4}, 2, 10);
  ASSERT_EQ(cases.size(), 12u);
  std::ostringstream a, b;
  bench::write_csv(a, bench::run(cases, 1), false);
  bench::write_csv(b, bench::run(cases, 3), false);
  EXPECT_EQ(a.str(), b.str());
  auto recs = bench::run(cases, 2);
  for (const auto& r : recs) {
    EXPECT_GE(r.seconds, 0);
    if (r.c.mode == bench::Mode::CentralInversion && r.c.degree == 5) {
      EXPECT_EQ(r.status, "error:InvalidArgument");
      continue;
    }
    EXPECT_EQ(r.status, "ok") << bench::mode_name(r.c.mode) << " " << r.c.degree << " " << r.c.seed;
    if (r.c.mode == bench::Mode::NonEquiv) EXPECT_EQ(r.count, 0);
  }
}
