#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/errors.hpp"
#include "verlinde/group_spec.hpp"
#include "verlinde/modular.hpp"

#include <set>

using namespace verlinde;

namespace {

CenterDatum full(const std::string& type) { return center_group(RootDatum(parse_simple_type(type))); }

CenterCharacter trivial_character(const CenterDatum& cd) {
  return CenterCharacter(std::vector<Rational>(cd.size(), Rational(0)));
}

} // namespace

TEST_CASE("center group orders per series") {
  CHECK(full("A1").size() == 2);
  CHECK(full("A2").size() == 3);
  CHECK(full("A3").size() == 4);
  CHECK(full("A5").size() == 6);
  CHECK(full("B3").size() == 2);
  CHECK(full("C3").size() == 2);
  CHECK(full("D4").size() == 4);
  CHECK(full("D5").size() == 4);
  CHECK(full("E6").size() == 3);
  CHECK(full("E7").size() == 2);
  CHECK(full("E8").size() == 1);
  CHECK(full("F4").size() == 1);
  CHECK(full("G2").size() == 1);

  // D4: Klein four-group; D5: cyclic of order 4
  const CenterDatum d4 = full("D4");
  for (std::size_t z = 1; z < d4.size(); ++z) CHECK(d4.order(z) == 2);
  const CenterDatum d5 = full("D5");
  std::multiset<int> orders;
  for (std::size_t z = 1; z < d5.size(); ++z) orders.insert(d5.order(z));
  CHECK(orders == std::multiset<int>{2, 4, 4});
}

TEST_CASE("special nodes carry mark 1 and send -theta home") {
  for (const std::string& t : {"A3", "B4", "C3", "D4", "D5", "E6", "E7"}) {
    const CenterDatum cd = full(t);
    const RootDatum& d = cd.ambient();
    for (std::size_t z = 1; z < cd.size(); ++z) {
      const CenterElement& el = cd.element(z);
      REQUIRE(el.node >= 0);
      CHECK(d.marks()[el.node] == 1);
      CHECK(IntVector(el.weyl * (-d.theta().labels)) == d.simple_root_labels(el.node));
      // the stored word is reduced and multiplies back to the matrix
      IntMatrix m = IntMatrix::Identity(d.rank(), d.rank());
      for (int i : el.word) m = m * simple_reflection_matrix(d, i);
      CHECK(m == el.weyl);
    }
  }
}

TEST_CASE("composition law of the special Weyl elements") {
  for (const std::string& t : {"A2", "A3", "D4"}) {
    const CenterDatum cd = full(t);
    for (std::size_t a = 0; a < cd.size(); ++a)
      for (std::size_t b = 0; b < cd.size(); ++b)
        CHECK(IntMatrix(cd.element(a).weyl * cd.element(b).weyl) ==
              cd.element(static_cast<std::size_t>(cd.product(a, b))).weyl);
  }
}

TEST_CASE("subgroups") {
  const CenterDatum a2 = full("A2");
  CHECK(subgroup(a2, ZSpec::parse("1")).size() == 1);
  CHECK(subgroup(a2, ZSpec::parse("Z3")).size() == 3);
  CHECK_THROWS_AS(subgroup(a2, ZSpec::parse("Z2")), invalid_input);

  const CenterDatum a3 = full("A3");
  CHECK(subgroup(a3, ZSpec::parse("Z2")).size() == 2);
  CHECK(subgroup(a3, ZSpec::parse("Z4")).size() == 4);

  const CenterDatum d4 = full("D4");
  CHECK_THROWS_AS(subgroup(d4, ZSpec::parse("Z2")), invalid_input);  // three choices
  CHECK_THROWS_AS(subgroup(d4, ZSpec::parse("Z4")), invalid_input);  // not cyclic
  const CenterDatum v = subgroup(d4, ZSpec::parse("Z2{v}"));
  const CenterDatum s = subgroup(d4, ZSpec::parse("Z2{s}"));
  const CenterDatum c = subgroup(d4, ZSpec::parse("Z2{c}"));
  CHECK(v.size() == 2);
  CHECK(s.size() == 2);
  CHECK(c.size() == 2);
  CHECK(v.element(1).node == 0);
  CHECK(s.element(1).node == 3);
  CHECK(c.element(1).node == 2);
  CHECK(subgroup(d4, ZSpec::parse("Z2xZ2")).size() == 4);

  const CenterDatum d5 = full("D5");
  CHECK(subgroup(d5, ZSpec::parse("Z2")).size() == 2);
  CHECK(subgroup(d5, ZSpec::parse("Z2")).element(1).node == 0);
  CHECK_THROWS_AS(subgroup(d5, ZSpec::parse("Z2xZ2")), invalid_input);
  CHECK_THROWS_AS(subgroup(d5, ZSpec::parse("Z2{s}")), invalid_input);

  CHECK_THROWS_AS(ZSpec::parse("Q8"), invalid_input);
}

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("A2").str() == "A2");
  CHECK(parse_group_spec("A1/Z2").str() == "A1/Z2");
  CHECK(parse_group_spec("D4/Z2{s}").str() == "D4/Z2{s}");
  CHECK_THROWS_AS(parse_group_spec("A2/"), invalid_input);
  CHECK_THROWS_AS(parse_group_spec("X1"), invalid_input);
  CHECK(build_center(parse_group_spec("A2/Z3")).size() == 3);
  CHECK(build_center(parse_group_spec("A2")).size() == 1);
}

TEST_CASE("center action formulas") {
  // SU(2): the nontrivial element sends the label j to k - j
  const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
  for (Int k = 1; k <= 8; ++k)
    for (Int j = 0; j <= k; ++j)
      CHECK(center_action(so3, k, 1, Weight{j}) == Weight{k - j});

  // SU(3): the element whose special node is the first sends
  // (k1, k2) to (k - k1 - k2, k1); the other generator inverts it
  const CenterDatum z3 = build_center(parse_group_spec("A2/Z3"));
  std::size_t znode0 = 0, znode1 = 0;
  for (std::size_t z = 1; z < z3.size(); ++z) {
    if (z3.element(z).node == 0) znode0 = z;
    if (z3.element(z).node == 1) znode1 = z;
  }
  REQUIRE(znode0 != 0);
  REQUIRE(znode1 != 0);
  for (Int k = 1; k <= 8; ++k)
    for (const Weight& w : enumerate_level_weights(z3.ambient(), k)) {
      const Int k1 = w.labels[0], k2 = w.labels[1];
      CHECK(center_action(z3, k, znode0, w) == Weight{k - k1 - k2, k1});
      CHECK(center_action(z3, k, znode1, w) == Weight{k2, k - k1 - k2});
      CHECK(center_action(z3, k, 0, w) == w);
    }
  CHECK_THROWS_AS(center_action(z3, 1, 1, Weight{2, 0}), invalid_input);
}

TEST_CASE("center action is a bijection of the right order") {
  for (const std::string& t : {"A1", "A2", "A3", "D4"}) {
    const CenterDatum cd = full(t);
    for (Int k = 0; k <= 6; ++k) {
      const auto basis = enumerate_level_weights(cd.ambient(), k);
      for (std::size_t z = 0; z < cd.size(); ++z) {
        std::set<Weight> image;
        for (const Weight& w : basis) image.insert(center_action(cd, k, z, w));
        CHECK(image.size() == basis.size());
        for (const Weight& w : basis) {
          Weight cur = w;
          for (int p = 0; p < cd.order(z); ++p) cur = center_action(cd, k, z, cur);
          CHECK(cur == w);
        }
      }
    }
  }
}

TEST_CASE("characters of weights") {
  const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
  for (Int j = 0; j <= 6; ++j)
    CHECK(character_of_weight(so3, Weight{j}).turn(1) == Rational(j % 2, 2));
  CHECK(character_of_weight(so3, Weight{0}).is_trivial());

  const CenterDatum z3 = build_center(parse_group_spec("A2/Z3"));
  // canonical generator is the element listed right after the identity
  for (Int k1 = 0; k1 <= 3; ++k1)
    for (Int k2 = 0; k2 <= 3; ++k2)
      CHECK(character_of_weight(z3, Weight{k1, k2}).turn(1) ==
            frac1(Rational(k1 - k2, 3)));

  // multiplicative under the group law
  for (const std::string& t : {"A3", "D4"}) {
    const CenterDatum cd = full(t);
    const Weight w4 = t == "A3" ? Weight{1, 0, 2} : Weight{1, 0, 2, 1};
    const CenterCharacter chi = character_of_weight(cd, w4);
    for (std::size_t a = 0; a < cd.size(); ++a)
      for (std::size_t b = 0; b < cd.size(); ++b)
        CHECK(frac1(chi.turn(a) + chi.turn(b)) ==
              chi.turn(static_cast<std::size_t>(cd.product(a, b))));
  }
}

TEST_CASE("character constancy on orbits and partition shapes") {
  const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
  auto part = partition_by_character(so3, 4);
  REQUIRE(part.size() == 2);
  const auto& trivial_orbits = part.at(trivial_character(so3));
  REQUIRE(trivial_orbits.size() == 2);
  CHECK(trivial_orbits[0].members == std::vector<Weight>{Weight{0}, Weight{4}});
  CHECK(trivial_orbits[0].stabilizer.size() == 1);
  CHECK(trivial_orbits[1].members == std::vector<Weight>{Weight{2}});
  CHECK(trivial_orbits[1].stabilizer.size() == 2);

  const CenterDatum z3 = build_center(parse_group_spec("A2/Z3"));
  auto part3 = partition_by_character(z3, 3);
  const auto& t3 = part3.at(trivial_character(z3));
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].members ==
        std::vector<Weight>{Weight{0, 0}, Weight{0, 3}, Weight{3, 0}});
  CHECK(t3[1].members == std::vector<Weight>{Weight{1, 1}});
  CHECK(t3[1].stabilizer.size() == 3);

  // level 0: a single orbit through 0 with full stabilizer
  auto part0 = partition_by_character(z3, 0);
  REQUIRE(part0.size() == 1);
  CHECK(part0.begin()->second.size() == 1);
  CHECK(part0.begin()->second[0].stabilizer.size() == 3);

  for (const std::string& t : {"A2", "A3", "D4"}) {
    const CenterDatum cd = full(t);
    const Int li = integral_level(cd);
    for (Int k = 0; k <= 6 * li; k += li) {
      std::size_t total = 0;
      for (const auto& [chi, orbits] : partition_by_character(cd, k))
        for (const Orbit& o : orbits) {
          total += o.members.size();
          for (const Weight& w : o.members)
            CHECK(character_of_weight(cd, w) == chi);
        }
      CHECK(total == enumerate_level_weights(cd.ambient(), k).size());
    }
  }
}

TEST_CASE("sectors are rejected at non-integral levels") {
  // at such levels the character map genuinely fails to be orbit-constant
  const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
  CHECK(integral_level(so3) == 2);
  CHECK_THROWS_AS(partition_by_character(so3, 3), unsupported_request);
  const CenterDatum psu3 = build_center(parse_group_spec("A2/Z3"));
  CHECK(integral_level(psu3) == 3);
  CHECK_THROWS_AS(partition_by_character(psu3, 1), unsupported_request);
  const Weight moved = center_action(psu3, 1, 1, Weight{0, 0});
  CHECK_FALSE(character_of_weight(psu3, moved) ==
              character_of_weight(psu3, Weight{0, 0}));
  const CenterDatum triv = build_center(parse_group_spec("B3"));
  CHECK(integral_level(triv) == 1);
}

TEST_CASE("dual group enumeration") {
  const CenterDatum z3 = build_center(parse_group_spec("A2/Z3"));
  const auto chis = dual_group(z3);
  REQUIRE(chis.size() == 3);
  CHECK(chis[0].is_trivial());
  CHECK(chis[1].turn(1) == Rational(1, 3));
  CHECK(chis[2].turn(1) == Rational(2, 3));

  const auto d4chis = dual_group(full("D4"));
  CHECK(d4chis.size() == 4);
}

TEST_CASE("level invariants") {
  const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
  CHECK(basic_level(so3) == 2);
  CHECK(multiplicative_level(so3) == 4);
  CHECK(fundamental_level(so3) == 2);

  const CenterDatum psu3 = build_center(parse_group_spec("A2/Z3"));
  CHECK(basic_level(psu3) == 1);
  CHECK(multiplicative_level(psu3) == 3);
  CHECK_THROWS_AS(fundamental_level(psu3), unsupported_request);

  const CenterDatum triv = build_center(parse_group_spec("G2"));
  CHECK(basic_level(triv) == 1);
  CHECK(multiplicative_level(triv) == 1);
  CHECK(fundamental_level(triv) == 1);

  CHECK(basic_level(so3) % fundamental_level(so3) == 0);

  // multiplicative is a multiple of basic for all supported small centers
  for (const std::string& g :
       {"A1/Z2", "A2/Z3", "A3/Z2", "A3/Z4", "B2/Z2", "B4/Z2", "C3/Z2", "C4/Z2", "D4/Z2{v}",
        "D4/Z2{s}", "D4/Z2{c}", "D4/Z2xZ2", "D5/Z2", "D5/Z4", "E6/Z3", "E7/Z2"}) {
    CAPTURE(g);
    const CenterDatum cd = build_center(parse_group_spec(g));
    CHECK(multiplicative_level(cd) % basic_level(cd) == 0);
  }
}

TEST_CASE("extension existence") {
  const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
  CHECK(extension_exists(so3, 2));
  CHECK_FALSE(extension_exists(so3, 1));
  CHECK_FALSE(extension_exists(so3, 3));
  CHECK(extension_exists(so3, 4));
  const CenterDatum triv = build_center(parse_group_spec("A1"));
  for (Int k = 1; k <= 5; ++k) CHECK(extension_exists(triv, k));
  CHECK_THROWS_AS(extension_exists(so3, 0), invalid_input);
}

TEST_CASE("monodromy of the action against conformal weights") {
  for (const std::string& g : {"A1/Z2", "A2/Z3"}) {
    const CenterDatum cd = build_center(parse_group_spec(g));
    const RootDatum& d = cd.ambient();
    const Weight zero(IntVector::Zero(d.rank()));
    for (Int k = 1; k <= 6; ++k)
      for (std::size_t z = 0; z < cd.size(); ++z)
        for (const Weight& w : enumerate_level_weights(d, k)) {
          const Rational lhs = conformal_weight(d, k, center_action(cd, k, z, w)) -
                               conformal_weight(d, k, w) -
                               conformal_weight(d, k, center_action(cd, k, z, zero));
          CHECK(frac1(lhs) == character_of_weight(cd, w).turn(z));
        }
  }
}
