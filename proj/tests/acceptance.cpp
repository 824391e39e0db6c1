// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "verlinde/errors.hpp"
#include "verlinde/group_spec.hpp"
#include "verlinde/modular.hpp"
#include "verlinde/nsc.hpp"
#include "verlinde/repro.hpp"

#include <chrono>
#include <set>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace verlinde;

namespace {

struct Harness {
  bool all_pass = true;

  void run(int id, const std::string& name, double time_limit_s,
           const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream fail;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(fail);
    } catch (const std::exception& e) {
      fail << "exception: " << e.what() << "; ";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && elapsed > time_limit_s)
      fail << "runtime " << elapsed << "s exceeds " << time_limit_s << "s; ";
    const bool pass = fail.str().empty();
    all_pass = all_pass && pass;
    std::printf("criterion %2d [%s] %s (%.2fs)\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                elapsed);
    if (!pass) std::printf("              %s\n", fail.str().c_str());
  }
};

#define REQUIRE_EQ(out, a, b)                                              \
  do {                                                                     \
    if (!((a) == (b))) {                                                   \
      (out) << __FILE__ << ":" << __LINE__ << " mismatch; ";               \
      return;                                                              \
    }                                                                      \
  } while (0)

#define EXPECT(out, cond)                                                  \
  do {                                                                     \
    if (!(cond)) {                                                         \
      (out) << __FILE__ << ":" << __LINE__ << " failed: " << #cond << "; "; \
      return;                                                              \
    }                                                                      \
  } while (0)

const std::vector<std::pair<SimpleType, Int>>& cross_check_range() {
  static const std::vector<std::pair<SimpleType, Int>> range{
      {SimpleType{Series::A, 1}, 8},
      {SimpleType{Series::A, 2}, 5},
      {SimpleType{Series::B, 2}, 4},
      {SimpleType{Series::G, 2}, 3}};
  return range;
}

struct TableCache {
  std::map<std::pair<std::string, Int>, FusionTable> tables;

  const FusionTable& get(const RootDatum& d, Int k) {
    const auto key = std::make_pair(d.type().str(), k);
    auto it = tables.find(key);
    if (it == tables.end()) it = tables.emplace(key, fusion_table(d, k)).first;
    return it->second;
  }
};

TableCache cache;

CenterCharacter trivial_character(const CenterDatum& cd) {
  return CenterCharacter(std::vector<Rational>(cd.size(), Rational(0)));
}

bool repro_subset(std::ostringstream& out, const std::string& needle) {
  bool any = false;
  for (const ReproCheck& c : run_repro()) {
    if (c.name.find(needle) == std::string::npos) continue;
    any = true;
    if (!c.pass) {
      out << c.name << " failed " << c.detail << "; ";
      return false;
    }
  }
  return any;
}

} // namespace

int main() {
  Harness h;

  h.run(1, "SU(2) fusion equals the truncated-spin oracle, k <= 8", 1.0,
        [](std::ostringstream& out) {
          RootDatum a1({Series::A, 1});
          for (Int k = 1; k <= 8; ++k) {
            const auto basis = enumerate_level_weights(a1, k);
            for (const Weight& a : basis)
              for (const Weight& b : basis) {
                const FusionElement e = fuse(a1, k, a, b);
                for (const Weight& c : basis)
                  REQUIRE_EQ(out, e.coefficient(c),
                             su2_fusion_oracle(a.labels[0], b.labels[0], c.labels[0], k));
              }
          }
        });

  h.run(2, "Kac-Walton / S-matrix cross-check and modular identities", 60.0,
        [](std::ostringstream& out) {
          for (const auto& [t, kmax] : cross_check_range()) {
            RootDatum d(t);
            for (Int k = 1; k <= kmax; ++k) {
              const ModularData md = modular_data(d, k);
              const auto n = static_cast<Eigen::Index>(md.basis.size());
              const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
              EXPECT(out, (md.S * md.S.adjoint() - id).cwiseAbs().maxCoeff() < 1e-8);
              Eigen::MatrixXcd conj_perm = Eigen::MatrixXcd::Zero(n, n);
              for (Eigen::Index i = 0; i < n; ++i) {
                const Weight cw = conjugate_weight(d, md.basis[static_cast<std::size_t>(i)]);
                conj_perm(static_cast<Eigen::Index>(md.index_of(cw)), i) = 1.0;
              }
              EXPECT(out, (md.S * md.S - conj_perm).cwiseAbs().maxCoeff() < 1e-8);
              const Eigen::MatrixXcd st = md.S * md.T();
              EXPECT(out, (st * st * st - md.S * md.S).cwiseAbs().maxCoeff() < 1e-8);

              const FusionTable& table = cache.get(d, k);
              for (std::size_t i = 0; i < table.basis.size(); ++i)
                for (std::size_t j = i; j < table.basis.size(); ++j)
                  for (std::size_t l = 0; l < table.basis.size(); ++l)
                    REQUIRE_EQ(out, table.coefficient(i, j, l),
                               verlinde_from_s(md, table.basis[i], table.basis[j],
                                               table.basis[l], 1e-6));
            }
          }
        });

  h.run(3, "fusion ring axioms on the cross-check range", 0.0,
        [](std::ostringstream& out) {
          for (const auto& [t, kmax] : cross_check_range()) {
            RootDatum d(t);
            for (Int k = 1; k <= kmax; ++k) {
              const FusionTable& table = cache.get(d, k);
              const auto& basis = table.basis;
              const std::size_t n = basis.size();
              std::vector<std::size_t> conj(n);
              for (std::size_t i = 0; i < n; ++i)
                conj[i] = table.index_of(conjugate_weight(d, basis[i]));
              for (std::size_t i = 0; i < n; ++i) {
                REQUIRE_EQ(out, fuse(d, k, basis[0], basis[i]).terms,
                           (std::map<Weight, Int>{{basis[i], 1}}));
                for (std::size_t j = i; j < n; ++j) {
                  REQUIRE_EQ(out, fuse(d, k, basis[j], basis[i]).terms,
                             fuse(d, k, basis[i], basis[j]).terms);
                  for (std::size_t l = 0; l < n; ++l)
                    REQUIRE_EQ(out, table.coefficient(i, j, l),
                               table.coefficient(i, conj[l], conj[j]));
                }
              }
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                  for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t m = 0; m < n; ++m) {
                      Int left = 0, right = 0;
                      for (std::size_t s = 0; s < n; ++s) {
                        left += table.coefficient(i, j, s) * table.coefficient(s, l, m);
                        right += table.coefficient(j, l, s) * table.coefficient(i, s, m);
                      }
                      REQUIRE_EQ(out, left, right);
                    }
            }
          }
        });

  h.run(4, "SO(3) classification lists, k = 4, 6, 8, 10", 0.0,
        [](std::ostringstream& out) { EXPECT(out, repro_subset(out, "SO(3) k")); });

  h.run(5, "SU(3)/Z3 classification lists, k = 3, 6", 0.0,
        [](std::ostringstream& out) { EXPECT(out, repro_subset(out, "SU(3)/Z3 k")); });

  h.run(6, "simple-current modular invariants and commutant checks", 10.0,
        [](std::ostringstream& out) { EXPECT(out, repro_subset(out, "modular invariant")); });

  h.run(7, "level arithmetic and extension existence", 0.0,
        [](std::ostringstream& out) {
          EXPECT(out, repro_subset(out, "levels"));
          const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
          const CenterDatum psu3 = build_center(parse_group_spec("A2/Z3"));
          const CenterDatum triv = build_center(parse_group_spec("A1"));
          for (Int k = 1; k <= 12; ++k) {
            REQUIRE_EQ(out, extension_exists(so3, k), k % basic_level(so3) == 0);
            REQUIRE_EQ(out, extension_exists(psu3, k), true);
            REQUIRE_EQ(out, extension_exists(triv, k), true);
          }
        });

  h.run(8, "center action: bijectivity, order, characters, explicit formulas", 0.0,
        [](std::ostringstream& out) {
          const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
          const CenterDatum psu3 = build_center(parse_group_spec("A2/Z3"));
          std::size_t znode0 = 0;
          for (std::size_t z = 1; z < psu3.size(); ++z)
            if (psu3.element(z).node == 0) znode0 = z;
          EXPECT(out, znode0 != 0);
          for (Int k = 1; k <= 8; ++k) {
            for (Int j = 0; j <= k; ++j)
              REQUIRE_EQ(out, center_action(so3, k, 1, Weight{j}), Weight{k - j});
            for (const Weight& w : enumerate_level_weights(psu3.ambient(), k))
              REQUIRE_EQ(out, center_action(psu3, k, znode0, w),
                         (Weight{k - w.labels[0] - w.labels[1], w.labels[0]}));
            for (const Weight& w : enumerate_level_weights(psu3.ambient(), k))
              REQUIRE_EQ(out, character_of_weight(psu3, w).turn(1),
                         frac1(Rational(w.labels[0] - w.labels[1], 3)));
            for (const CenterDatum* cd : {&so3, &psu3}) {
              const bool sectors_defined = k % integral_level(*cd) == 0;
              const auto basis = enumerate_level_weights(cd->ambient(), k);
              for (std::size_t z = 0; z < cd->size(); ++z) {
                std::set<Weight> image;
                for (const Weight& w : basis) {
                  const Weight img = center_action(*cd, k, z, w);
                  image.insert(img);
                  if (sectors_defined)
                    REQUIRE_EQ(out, character_of_weight(*cd, img),
                               character_of_weight(*cd, w));
                }
                REQUIRE_EQ(out, image.size(), basis.size());
                for (const Weight& w : basis) {
                  Weight cur = w;
                  for (int p = 0; p < cd->order(z); ++p) cur = center_action(*cd, k, z, cur);
                  REQUIRE_EQ(out, cur, w);
                }
              }
              if (!sectors_defined) {
                bool threw = false;
                try {
                  partition_by_character(*cd, k);
                } catch (const unsupported_request&) {
                  threw = true;
                }
                EXPECT(out, threw);
              }
            }
          }
        });

  h.run(9, "free-orbit fusion: orbit symmetry, representatives, ring axioms", 0.0,
        [](std::ostringstream& out) {
          // exhaustive orbit symmetry
          for (const auto& [g, ks] : std::vector<std::pair<std::string, std::vector<Int>>>{
                   {"A1/Z2", {1, 2, 3, 4, 5, 6, 7, 8}}, {"A2/Z3", {3, 6}}}) {
            const CenterDatum cd = build_center(parse_group_spec(g));
            for (Int k : ks) {
              const FusionTable& table = cache.get(cd.ambient(), k);
              const std::size_t n = table.basis.size();
              std::vector<std::vector<std::size_t>> act(cd.size(),
                                                        std::vector<std::size_t>(n));
              for (std::size_t z = 0; z < cd.size(); ++z)
                for (std::size_t i = 0; i < n; ++i)
                  act[z][i] = table.index_of(center_action(cd, k, z, table.basis[i]));
              for (std::size_t z1 = 0; z1 < cd.size(); ++z1)
                for (std::size_t z2 = 0; z2 < cd.size(); ++z2) {
                  const auto z12 = static_cast<std::size_t>(cd.product(z1, z2));
                  for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                      for (std::size_t l = 0; l < n; ++l)
                        REQUIRE_EQ(out,
                                   table.coefficient(act[z1][i], act[z2][j], act[z12][l]),
                                   table.coefficient(i, j, l));
                }
            }
          }

          // representative independence on the free orbits
          for (const auto& [g, k] : std::vector<std::pair<std::string, Int>>{
                   {"A1/Z2", 8}, {"A2/Z3", 6}}) {
            const CenterDatum cd = build_center(parse_group_spec(g));
            const auto sector = partition_by_character(cd, k).at(trivial_character(cd));
            std::vector<const Orbit*> free_orbits;
            for (const Orbit& o : sector)
              if (o.stabilizer.size() == 1) free_orbits.push_back(&o);
            for (const Orbit* o1 : free_orbits)
              for (const Orbit* o2 : free_orbits)
                for (const Orbit* o3 : free_orbits) {
                  const Int ref = free_orbit_fusion(cd, k, *o1, *o2, *o3);
                  for (const Weight& w1 : o1->members)
                    for (const Weight& w3 : o3->members) {
                      Orbit a = *o1;
                      a.representative = w1;
                      Orbit c = *o3;
                      c.representative = w3;
                      REQUIRE_EQ(out, free_orbit_fusion(cd, k, a, *o2, c), ref);
                    }
                }
          }

          // ring axioms on the free sector of SO(3) at level 8
          const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
          const RootDatum& d = so3.ambient();
          const Int k = 8;
          const auto sector = partition_by_character(so3, k).at(trivial_character(so3));
          std::vector<const Orbit*> free_orbits;
          const Orbit* unit_orbit = nullptr;
          for (const Orbit& o : sector) {
            if (o.stabilizer.size() == 1) free_orbits.push_back(&o);
            if (o.representative.is_zero()) unit_orbit = &o;
          }
          EXPECT(out, free_orbits.size() >= 2);
          EXPECT(out, unit_orbit != nullptr && unit_orbit->stabilizer.size() == 1);
          auto orbit_sum = [&](const Orbit& o) {
            FusionElement e;
            e.level = k;
            for (const Weight& w : o.members) e.terms[w] = 1;
            return e;
          };
          for (const Orbit* o : free_orbits)
            for (const Orbit* p : free_orbits) {
              REQUIRE_EQ(out, free_orbit_fusion(so3, k, *unit_orbit, *o, *p),
                         (o == p ? 1 : 0));
              for (const Orbit* q : free_orbits)
                REQUIRE_EQ(out, free_orbit_fusion(so3, k, *o, *p, *q),
                           free_orbit_fusion(so3, k, *p, *o, *q));
              const FusionElement prod = multiply(d, orbit_sum(*o), orbit_sum(*p));
              for (const Orbit* q : free_orbits)
                REQUIRE_EQ(out, prod.coefficient(q->representative),
                           static_cast<Int>(so3.size()) *
                               free_orbit_fusion(so3, k, *o, *p, *q));
            }
          const FusionElement s1 = orbit_sum(*free_orbits[0]);
          const FusionElement s2 = orbit_sum(*free_orbits[1]);
          REQUIRE_EQ(out, multiply(d, multiply(d, s1, s2), s2),
                     multiply(d, s1, multiply(d, s2, s2)));
        });

  h.run(10, "brane quantization is a fusion homomorphism, A1/A2, k <= 5", 0.0,
        [](std::ostringstream& out) {
          for (const SimpleType& t : {SimpleType{Series::A, 1}, {Series::A, 2}}) {
            RootDatum d(t);
            for (Int k = 0; k <= 5; ++k) {
              const auto basis = enumerate_level_weights(d, k);
              for (const Weight& a : basis)
                for (const Weight& b : basis)
                  REQUIRE_EQ(out,
                             multiply(d, brane_quantize(d, k, a), brane_quantize(d, k, b)),
                             fuse(d, k, a, b));
            }
          }
        });

  std::printf(h.all_pass ? "acceptance: all criteria passed\n"
                         : "acceptance: FAILURES present\n");
  return h.all_pass ? 0 : 1;
}
