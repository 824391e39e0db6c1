#pragma once

#include "verlinde/root_datum.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <vector>

namespace verlinde {

inline constexpr std::size_t kDefaultWeylCap = 1152;

/// Modular data of the level-k theory: S and T matrices over the canonical
/// level-k basis, central charge and conformal weights as exact rationals.
struct ModularData {
  Int level = 0;
  std::vector<Weight> basis;
  Eigen::MatrixXcd S;
  std::vector<Rational> t_turns;  // T_ll = exp(2 pi i * t_turns[l])
  Rational c;
  std::map<Weight, Rational> h;

  std::size_t index_of(const Weight& w) const;
  Eigen::MatrixXcd T() const;
};

/// c = k dim G / (k + h^vee); zero at level 0 by convention.
Rational central_charge(const RootDatum& d, Int k);

/// h_lambda = <lambda, lambda + 2 rho> / (2 (k + h^vee)).
Rational conformal_weight(const RootDatum& d, Int k, const Weight& lambda);

/// Kac-Peterson modular data. The Weyl sum is evaluated by full orbit
/// enumeration; refuses groups whose Weyl group exceeds the cap. The
/// normalization is fixed by unitarity together with S_00 > 0.
ModularData modular_data(const RootDatum& d, Int k, std::size_t weyl_cap = kDefaultWeylCap,
                         Int basis_cap = 4096);

/// N_{lhs,rhs}^{out} from the S matrix; throws when the sum is farther than
/// tol from an integer.
Int verlinde_from_s(const ModularData& md, const Weight& lhs, const Weight& rhs, const Weight& out,
                    double tol = 1e-6);

} // namespace verlinde
