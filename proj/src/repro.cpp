#include "verlinde/repro.hpp"

#include "verlinde/group_spec.hpp"
#include "verlinde/modular.hpp"
#include "verlinde/nsc.hpp"

#include <sstream>

namespace verlinde {

namespace {

struct ExpectedIrrep {
  std::vector<Weight> members;  // sorted by labels
  int stabilizer_order = 1;
  int rho_index = 0;
};

std::string irreps_str(const std::vector<IrrepLabel>& got) {
  std::ostringstream os;
  for (const auto& l : got) {
    os << "{";
    for (const auto& w : l.orbit.members) os << w.str();
    os << "}#" << l.orbit.stabilizer.size() << "r" << l.rho_index << " ";
  }
  return os.str();
}

ReproCheck check_classification(const std::string& name, const CenterDatum& cd, Int k,
                                std::size_t chi_index,
                                const std::vector<ExpectedIrrep>& expected) {
  ReproCheck c{name};
  const auto chis = dual_group(cd);
  const auto got = classify_irreps(cd, k, chis.at(chi_index));
  bool ok = got.size() == expected.size();
  for (std::size_t i = 0; ok && i < got.size(); ++i) {
    ok = got[i].orbit.members == expected[i].members &&
         static_cast<int>(got[i].orbit.stabilizer.size()) == expected[i].stabilizer_order &&
         got[i].rho_index == expected[i].rho_index;
  }
  c.pass = ok;
  if (!ok) c.detail = "got " + irreps_str(got);
  return c;
}

// Expected invariant assembled from frozen orbit blocks, independently of
// the orbit machinery: each block contributes its coefficient on the full
// members x members square.
ReproCheck check_invariant(const std::string& name, const CenterDatum& cd, Int k,
                           const std::vector<std::pair<std::vector<Weight>, Int>>& blocks,
                           double tol) {
  ReproCheck c{name};
  const ModularInvariant mi = modular_invariant(cd, k);
  IntMatrix expected = IntMatrix::Zero(mi.m.rows(), mi.m.cols());
  auto index_of = [&](const Weight& w) {
    return static_cast<Eigen::Index>(
        std::lower_bound(mi.basis.begin(), mi.basis.end(), w) - mi.basis.begin());
  };
  for (const auto& [members, coeff] : blocks)
    for (const Weight& a : members)
      for (const Weight& b : members) expected(index_of(a), index_of(b)) += coeff;
  if (mi.m != expected) {
    c.pass = false;
    std::ostringstream os;
    os << "matrix mismatch; got\n" << mi.m;
    c.detail = os.str();
    return c;
  }
  const ModularData md = modular_data(cd.ambient(), k);
  c.pass = check_modular_invariance(mi, md, tol);
  if (!c.pass) c.detail = "does not commute with S and T at tolerance";
  return c;
}

} // namespace

std::vector<ReproCheck> run_repro() {
  std::vector<ReproCheck> checks;
  const CenterDatum so3 = build_center(parse_group_spec("A1/Z2"));
  const CenterDatum psu3 = build_center(parse_group_spec("A2/Z3"));

  // SO(3) classification lists; Dynkin labels are doubled spins.
  checks.push_back(check_classification(
      "SO(3) k=4 chi=+1 irreps", so3, 4, 0,
      {{{Weight{0}, Weight{4}}, 1, 0}, {{Weight{2}}, 2, 0}, {{Weight{2}}, 2, 1}}));
  checks.push_back(check_classification(
      "SO(3) k=4 chi=-1 irreps", so3, 4, 1, {{{Weight{1}, Weight{3}}, 1, 0}}));
  checks.push_back(check_classification(
      "SO(3) k=6 chi=+1 irreps", so3, 6, 0,
      {{{Weight{0}, Weight{6}}, 1, 0}, {{Weight{2}, Weight{4}}, 1, 0}}));
  checks.push_back(check_classification(
      "SO(3) k=6 chi=-1 irreps", so3, 6, 1,
      {{{Weight{1}, Weight{5}}, 1, 0}, {{Weight{3}}, 2, 0}, {{Weight{3}}, 2, 1}}));
  checks.push_back(check_classification(
      "SO(3) k=8 chi=+1 irreps", so3, 8, 0,
      {{{Weight{0}, Weight{8}}, 1, 0},
       {{Weight{2}, Weight{6}}, 1, 0},
       {{Weight{4}}, 2, 0},
       {{Weight{4}}, 2, 1}}));
  checks.push_back(check_classification(
      "SO(3) k=8 chi=-1 irreps", so3, 8, 1,
      {{{Weight{1}, Weight{7}}, 1, 0}, {{Weight{3}, Weight{5}}, 1, 0}}));
  checks.push_back(check_classification(
      "SO(3) k=10 chi=+1 irreps", so3, 10, 0,
      {{{Weight{0}, Weight{10}}, 1, 0},
       {{Weight{2}, Weight{8}}, 1, 0},
       {{Weight{4}, Weight{6}}, 1, 0}}));
  checks.push_back(check_classification(
      "SO(3) k=10 chi=-1 irreps", so3, 10, 1,
      {{{Weight{1}, Weight{9}}, 1, 0},
       {{Weight{3}, Weight{7}}, 1, 0},
       {{Weight{5}}, 2, 0},
       {{Weight{5}}, 2, 1}}));

  // SU(3)/Z3 classification lists.
  checks.push_back(check_classification(
      "SU(3)/Z3 k=3 chi=0 irreps", psu3, 3, 0,
      {{{Weight{0, 0}, Weight{0, 3}, Weight{3, 0}}, 1, 0},
       {{Weight{1, 1}}, 3, 0},
       {{Weight{1, 1}}, 3, 1},
       {{Weight{1, 1}}, 3, 2}}));
  checks.push_back(check_classification(
      "SU(3)/Z3 k=3 chi=1 irreps", psu3, 3, 1,
      {{{Weight{0, 2}, Weight{1, 0}, Weight{2, 1}}, 1, 0}}));
  checks.push_back(check_classification(
      "SU(3)/Z3 k=3 chi=2 irreps", psu3, 3, 2,
      {{{Weight{0, 1}, Weight{1, 2}, Weight{2, 0}}, 1, 0}}));
  checks.push_back(check_classification(
      "SU(3)/Z3 k=6 chi=0 irreps", psu3, 6, 0,
      {{{Weight{0, 0}, Weight{0, 6}, Weight{6, 0}}, 1, 0},
       {{Weight{0, 3}, Weight{3, 0}, Weight{3, 3}}, 1, 0},
       {{Weight{1, 1}, Weight{1, 4}, Weight{4, 1}}, 1, 0},
       {{Weight{2, 2}}, 3, 0},
       {{Weight{2, 2}}, 3, 1},
       {{Weight{2, 2}}, 3, 2}}));
  checks.push_back(check_classification(
      "SU(3)/Z3 k=6 chi=1 irreps", psu3, 6, 1,
      {{{Weight{0, 2}, Weight{2, 4}, Weight{4, 0}}, 1, 0},
       {{Weight{0, 5}, Weight{1, 0}, Weight{5, 1}}, 1, 0},
       {{Weight{1, 3}, Weight{2, 1}, Weight{3, 2}}, 1, 0}}));
  checks.push_back(check_classification(
      "SU(3)/Z3 k=6 chi=2 irreps", psu3, 6, 2,
      {{{Weight{0, 1}, Weight{1, 5}, Weight{5, 0}}, 1, 0},
       {{Weight{0, 4}, Weight{2, 0}, Weight{4, 2}}, 1, 0},
       {{Weight{1, 2}, Weight{2, 3}, Weight{3, 1}}, 1, 0}}));

  // Modular invariants; blocks carry the stabilizer order of their orbit.
  const double tol = 1e-8;
  checks.push_back(check_invariant("SO(3) k=4 modular invariant", so3, 4,
                                   {{{Weight{0}, Weight{4}}, 1}, {{Weight{2}}, 2}}, tol));
  checks.push_back(check_invariant("SO(3) k=8 modular invariant", so3, 8,
                                   {{{Weight{0}, Weight{8}}, 1},
                                    {{Weight{2}, Weight{6}}, 1},
                                    {{Weight{4}}, 2}},
                                   tol));
  checks.push_back(check_invariant(
      "SU(3)/Z3 k=3 modular invariant", psu3, 3,
      {{{Weight{0, 0}, Weight{0, 3}, Weight{3, 0}}, 1}, {{Weight{1, 1}}, 3}}, tol));
  checks.push_back(check_invariant("SU(3)/Z3 k=6 modular invariant", psu3, 6,
                                   {{{Weight{0, 0}, Weight{0, 6}, Weight{6, 0}}, 1},
                                    {{Weight{0, 3}, Weight{3, 0}, Weight{3, 3}}, 1},
                                    {{Weight{1, 1}, Weight{1, 4}, Weight{4, 1}}, 1},
                                    {{Weight{2, 2}}, 3}},
                                   tol));

  // Level invariants.
  {
    ReproCheck c{"SO(3) levels (basic, multiplicative, fundamental) = (2, 4, 2)"};
    c.pass = basic_level(so3) == 2 && multiplicative_level(so3) == 4 &&
             fundamental_level(so3) == 2;
    checks.push_back(c);
  }
  {
    ReproCheck c{"SU(3)/Z3 levels (basic, multiplicative) = (1, 3)"};
    c.pass = basic_level(psu3) == 1 && multiplicative_level(psu3) == 3;
    checks.push_back(c);
  }

  return checks;
}

} // namespace verlinde
