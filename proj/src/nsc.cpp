#include "verlinde/nsc.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <set>

namespace verlinde {

namespace {

// Characters of the stabilizer subgroup, sorted; obtained by restricting
// the dual of Z (restriction is onto for subgroups).
std::vector<CenterCharacter> stabilizer_dual(const CenterDatum& cd,
                                             const std::vector<int>& stabilizer) {
  std::set<CenterCharacter> out;
  for (const CenterCharacter& chi : dual_group(cd)) out.insert(chi.restrict_to(stabilizer));
  return std::vector<CenterCharacter>(out.begin(), out.end());
}

} // namespace

std::vector<IrrepLabel> classify_irreps(const CenterDatum& cd, Int k,
                                        const CenterCharacter& chi) {
  if (!extension_exists(cd, k))
    throw unsupported_request("no central extension at level " + std::to_string(k) +
                              "; the basic level is " + std::to_string(basic_level(cd)));
  if (chi.size() != cd.size()) throw invalid_input("classify_irreps: character size mismatch");

  auto partition = partition_by_character(cd, k);
  std::vector<IrrepLabel> out;
  const auto it = partition.find(chi);
  if (it == partition.end()) return out;
  for (const Orbit& orbit : it->second) {
    const auto rhos = stabilizer_dual(cd, orbit.stabilizer);
    for (std::size_t r = 0; r < rhos.size(); ++r)
      out.push_back(IrrepLabel{.level = k,
                               .orbit = orbit,
                               .rho = rhos[r],
                               .rho_index = static_cast<int>(r)});
  }
  return out;
}

FusionElement virasoro_character(const CenterDatum& cd, const IrrepLabel& label) {
  FusionElement e;
  e.level = label.level;
  for (const Weight& w : label.orbit.members) {
    if (level_of(cd.ambient(), w) > label.level)
      throw invalid_input("virasoro_character: orbit member above level");
    e.terms[w] = 1;
  }
  return e;
}

Int free_orbit_fusion(const CenterDatum& cd, Int k, const Orbit& o1, const Orbit& o2,
                      const Orbit& o3) {
  for (const Orbit* o : {&o1, &o2, &o3})
    if (o->stabilizer.size() != 1)
      throw unsupported_request(
          "fixed-point fusion unsupported: orbit of " + o->representative.str() +
          " has a stabilizer of order " + std::to_string(o->stabilizer.size()));
  const FusionElement prod = fuse(cd.ambient(), k, o1.representative, o2.representative);
  Int acc = 0;
  for (std::size_t z = 0; z < cd.size(); ++z)
    acc += prod.coefficient(center_action(cd, k, z, o3.representative));
  return acc;
}

ModularInvariant modular_invariant(const CenterDatum& cd, Int k) {
  const Int lm = multiplicative_level(cd);
  if (k < 1 || k % lm != 0)
    throw unsupported_request("level " + std::to_string(k) +
                              " is not multiplicative; the multiplicative level is " +
                              std::to_string(lm));

  ModularInvariant mi;
  mi.level = k;
  mi.basis = enumerate_level_weights(cd.ambient(), k);
  const auto n = static_cast<Eigen::Index>(mi.basis.size());
  mi.m = IntMatrix::Zero(n, n);

  auto index_of = [&](const Weight& w) {
    return static_cast<Eigen::Index>(
        std::lower_bound(mi.basis.begin(), mi.basis.end(), w) - mi.basis.begin());
  };

  auto partition = partition_by_character(cd, k);
  const CenterCharacter trivial(std::vector<Rational>(cd.size(), Rational(0)));
  const auto it = partition.find(trivial);
  if (it != partition.end()) {
    for (const Orbit& orbit : it->second) {
      const Int weight = static_cast<Int>(orbit.stabilizer.size());
      for (const Weight& a : orbit.members)
        for (const Weight& b : orbit.members) mi.m(index_of(a), index_of(b)) += weight;
    }
  }
  if (mi.m(0, 0) != 1) throw internal_error("modular invariant does not fix the vacuum");
  return mi;
}

bool check_modular_invariance(const ModularInvariant& mi, const ModularData& md, double tol) {
  if (mi.basis != md.basis) throw invalid_input("check_modular_invariance: basis mismatch");
  const auto n = static_cast<Eigen::Index>(mi.basis.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = static_cast<double>(mi.m(i, j));
  const Eigen::MatrixXcd t = md.T();
  const double ds = (m * md.S - md.S * m).cwiseAbs().maxCoeff();
  const double dt = (m * t - t * m).cwiseAbs().maxCoeff();
  return ds < tol && dt < tol;
}

IrrepLabel quantize_orbit(const CenterDatum& cd, Int k, const CenterCharacter& chi,
                          const IrrepLabel& label) {
  if (label.level != k) throw invalid_input("quantize_orbit: level mismatch");
  if (!(character_of_weight(cd, label.orbit.representative) == chi))
    throw invalid_input("quantize_orbit: label is not in the requested sector");
  return label;
}

} // namespace verlinde
