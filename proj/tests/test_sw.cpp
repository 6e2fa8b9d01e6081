#include <doctest.h>

#include "mcg/moves.hpp"
#include "mcg/sw.hpp"
#include "support.hpp"

using namespace mcg;

namespace {

LatticeClass cls(const char* s) { return parse_class(s); }

// K3#2CP̄² with six C_2 spheres S1..S6, S_j.E_i = 1.
struct Model {
  ClassLattice lat;
  SWFunction sw;

  Model() {
    sw = blowup(blowup(parse_sw("+1 e(0)"), "E1", lat), "E2", lat);
    for (int j = 1; j <= 6; ++j) {
      const std::string s = "S" + std::to_string(j);
      lat.declare(s, -4);
      lat.set_pairing(s, "E1", 1);
      lat.set_pairing(s, "E2", 1);
    }
  }
};

}  // namespace

TEST_CASE("class and function text forms") {
  CHECK(to_string(cls("E1+E2")) == "E1+E2");
  CHECK(to_string(cls("-2T+E1")) == "E1-2T");
  CHECK(to_string(cls("E1-E1")) == "0");
  CHECK(to_string(parse_sw("sw = +1 e(E1+E2) -1 e(-E1-E2)")) == "sw = -1 e(-E1-E2) +1 e(E1+E2)");
  CHECK(to_string(parse_sw("sw = 0")) == "sw = 0");
  CHECK(to_string(parse_sw("+1 e(E1) -1 e(E1)")) == "sw = 0");
  CHECK_THROWS_AS(parse_class("E1+"), ParseError);
  CHECK_THROWS_AS(parse_sw("+1 e(E1"), ParseError);
}

TEST_CASE("blowup") {
  ClassLattice lat;
  SWFunction sw = parse_sw("+1 e(0)");
  sw = blowup(sw, "E1", lat);
  CHECK(sw.size() == 2);
  sw = blowup(sw, "E2", lat);
  CHECK(sw.size() == 4);
  CHECK(support(sw) == std::set<LatticeClass>{cls("E1+E2"), cls("E1-E2"), cls("-E1+E2"), cls("-E1-E2")});
  for (const auto& [c, v] : sw) CHECK(std::abs(v) == 1);
  CHECK(lat.pairing(cls("E1"), cls("E1")) == -1);
  CHECK(lat.pairing(cls("E1"), cls("E2")) == 0);
  CHECK_THROWS_AS(blowup(sw, "E1", lat), LatticeError);
  CHECK(blowup(SWFunction{}, "E3", lat).empty());
}

TEST_CASE("blowup then exceptional blowdown recovers the function") {
  ClassLattice lat;
  lat.declare("T", 0);
  const SWFunction sw = parse_sw("+1 e(2T) -3 e(0) +1 e(-2T)");
  CHECK(blowdown_exceptional(blowup(sw, "E", lat), "E") == sw);
}

TEST_CASE("one C_2 descent keeps the classes pairing to +-2") {
  Model m;
  const SWFunction d = descend_blowdown(m.sw, {cls("S1")}, 2, m.lat);
  CHECK(support(d) == std::set<LatticeClass>{cls("E1+E2"), cls("-E1-E2")});
  CHECK(d.at(cls("E1+E2")) == 1);
}

TEST_CASE("six descents: one +- pair, K^2 = 4, minimal with witness 16") {
  Model m;
  SWFunction sw = m.sw;
  for (int j = 1; j <= 6; ++j) {
    const std::size_t before = sw.size();
    sw = descend_blowdown(sw, {cls(("S" + std::to_string(j)).c_str())}, 2, m.lat);
    CHECK(sw.size() <= before);
  }
  CHECK(sw.size() == 2);
  for (const auto& [c, v] : sw) CHECK(std::abs(v) == 1);
  CHECK(charge_symmetric(sw));
  // oracle: -2 - v^T Q^-1 v with Q = -4 I_6, v = (2, ..., 2)
  CHECK(m.lat.effective_pairing(cls("E1+E2"), cls("E1+E2")) == Rational(4));
  const MinimalityResult r = minimality_check(sw, m.lat);
  CHECK(r.minimal);
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].square == Rational(16));
}

TEST_CASE("malformed configurations are refused") {
  Model m;
  m.lat.declare("U", -2);
  CHECK_THROWS_AS(descend_blowdown(m.sw, {cls("U")}, 2, m.lat), LatticeError);
  CHECK_THROWS_AS(descend_blowdown(m.sw, {cls("S1"), cls("S2")}, 2, m.lat), LatticeError);
  CHECK_THROWS_AS(descend_blowdown(m.sw, {cls("S1")}, 1, m.lat), LatticeError);
  CHECK(descend_blowdown(SWFunction{}, {cls("S1")}, 2, m.lat).empty());
}

TEST_CASE("C_3 descent uses both sphere conditions") {
  ClassLattice lat;
  lat.declare("u1", -2);
  lat.declare("u2", -5);
  lat.declare("A", -1);
  lat.set_pairing("u1", "u2", 1);
  lat.set_pairing("u2", "A", 3);
  const SWFunction sw = parse_sw("+1 e(A) +1 e(-A) +2 e(A+u1)");
  const SWFunction d = descend_blowdown(sw, {cls("u1"), cls("u2")}, 3, lat);
  CHECK(support(d) == std::set<LatticeClass>{cls("A"), cls("-A")});
}

TEST_CASE("minimality on small supports") {
  ClassLattice lat;
  lat.declare("E", -1);
  CHECK_FALSE(minimality_check(parse_sw("+1 e(E) +1 e(-E)"), lat).minimal);
  CHECK(minimality_check(parse_sw("+1 e(0)"), lat).minimal);
  CHECK_THROWS_AS(minimality_check(parse_sw("+1 e(F) +1 e(-F)"), lat), LatticeError);
}

TEST_CASE("knot surgery") {
  ClassLattice lat;
  lat.declare("K", 4);
  lat.declare("T", 0);
  const SWFunction sw = parse_sw("+1 e(K) -1 e(-K)");
  CHECK(knot_surgery(sw, "T", {1}, lat).sw == sw);
  const auto trefoil = knot_surgery(sw, "T", {1, -1, 1}, lat);
  CHECK(trefoil.monic);
  CHECK(trefoil.sw.at(cls("K+2T")) == 1);
  CHECK(trefoil.sw.at(cls("K")) == -1);
  CHECK_FALSE(knot_surgery(sw, "T", {2, -3, 2}, lat).monic);
  CHECK_THROWS_AS(knot_surgery(sw, "T", {1, -1, 2}, lat), LatticeError);
  CHECK_THROWS_AS(knot_surgery(sw, "T", {1, 1}, lat), LatticeError);
  CHECK_THROWS_AS(knot_surgery(sw, "K", {1, -1, 1}, lat), LatticeError);

  const std::vector<long long> d1{1, -1, 1}, d2{2, -3, 2};
  const auto twice = knot_surgery(knot_surgery(sw, "T", d1, lat).sw, "T", d2, lat);
  CHECK(twice.sw == knot_surgery(sw, "T", multiply_alexander(d1, d2), lat).sw);

  const auto a = knot_surgery(sw, "T", {1, -1, 1, -1, 1}, lat);
  const auto b = knot_surgery(sw, "T", {1, 0, -1, 0, 1}, lat);
  CHECK(a.monic);
  CHECK(b.monic);
  CHECK(support(a.sw) != support(b.sw));
  CHECK(charge_symmetric(a.sw));
}

TEST_CASE("shipped sw script") {
  const auto r = run_sw_script(read_file(testing::data_path("sw_main.sws")));
  REQUIRE(r.last_minimality);
  CHECK(r.last_minimality->minimal);
  CHECK(r.report.find("minimal? true") != std::string::npos);
  CHECK(r.report.find("square 16") != std::string::npos);
  CHECK(r.report.find("admits no symplectic structure") != std::string::npos);
  CHECK(r.report.find("compare A B: supports distinct") != std::string::npos);
  CHECK(r.report.find("descend p=2 along S6: kept 2 of 2, sw = +1 e(-E1-E2) +1 e(E1+E2)") != std::string::npos);
}

TEST_CASE("sw script errors carry the line") {
  try {
    run_sw_script("start +1 e(0)\nblowup E1\nblowup E1\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    run_sw_script("start +1 e(0)\nfrobnicate\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
