#pragma once

#include "verlinde/center.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/modular.hpp"

#include <vector>

namespace verlinde {

/// Label of an irreducible positive-energy representation of the level-k
/// loop group of the quotient: a Z-orbit of level-k weights plus, at a
/// fixed point, a character of the stabilizer.
struct IrrepLabel {
  Int level = 0;
  Orbit orbit;
  CenterCharacter rho;  // on the stabilizer, aligned with orbit.stabilizer
  int rho_index = 0;    // position in the sorted stabilizer dual
};

/// The irreducibles of the level-k, character-chi sector: one label per
/// free orbit, |Hom(Z_lambda, U(1))| labels per fixed orbit.
std::vector<IrrepLabel> classify_irreps(const CenterDatum& cd, Int k, const CenterCharacter& chi);

/// Formal sum of the ambient level-k characters over the orbit; equal for
/// all stabilizer characters rho.
FusionElement virasoro_character(const CenterDatum& cd, const IrrepLabel& label);

/// Fusion coefficient of three free orbits: sum over z of N_{l,m}^{z.n}
/// computed from representatives. Orbits with a non-trivial stabilizer are
/// rejected; those coefficients are not determined by this construction.
Int free_orbit_fusion(const CenterDatum& cd, Int k, const Orbit& o1, const Orbit& o2,
                      const Orbit& o3);

/// Non-negative integer matrix over the ambient level-k basis encoding the
/// partition function sum M_{lm} chi_l conj(chi_m).
struct ModularInvariant {
  Int level = 0;
  std::vector<Weight> basis;
  IntMatrix m;
};

/// Simple-current invariant of the trivial-character sector: each orbit O
/// contributes |Z_O| on its block, so fixed points enter with the
/// stabilizer order. Requires a multiplicative level.
ModularInvariant modular_invariant(const CenterDatum& cd, Int k);

/// True when M commutes with both S and T entrywise within tol.
bool check_modular_invariance(const ModularInvariant& mi, const ModularData& md,
                              double tol = 1e-8);

/// Quantization of the coadjoint-orbit brane attached to a label: the basis
/// element itself (the Borel-Weil case).
IrrepLabel quantize_orbit(const CenterDatum& cd, Int k, const CenterCharacter& chi,
                          const IrrepLabel& label);

} // namespace verlinde
