#include "verlinde/modular.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace verlinde {

std::size_t ModularData::index_of(const Weight& w) const {
  const auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || !(*it == w))
    throw invalid_input("weight " + w.str() + " is not in the level-" + std::to_string(level) +
                        " basis");
  return static_cast<std::size_t>(it - basis.begin());
}

Eigen::MatrixXcd ModularData::T() const {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double turn = t_turns[static_cast<std::size_t>(i)].to_double();
    t(i, i) = std::polar(1.0, 2.0 * std::numbers::pi * turn);
  }
  return t;
}

Rational central_charge(const RootDatum& d, Int k) {
  if (k < 0) throw invalid_input("negative level");
  if (k == 0) return Rational(0);
  return Rational(k * d.dim_g(), k + d.dual_coxeter());
}

Rational conformal_weight(const RootDatum& d, Int k, const Weight& lambda) {
  if (k < 1) throw invalid_input("conformal_weight: level must be positive");
  if (!lambda.is_dominant() || level_of(d, lambda) > k)
    throw invalid_input("conformal_weight: weight " + lambda.str() + " is not at level " +
                        std::to_string(k));
  const Weight shifted(lambda.labels + 2 * IntVector::Ones(d.rank()));
  return inner_product(d, lambda, shifted) / Rational(2 * (k + d.dual_coxeter()));
}

ModularData modular_data(const RootDatum& d, Int k, std::size_t weyl_cap, Int basis_cap) {
  if (k < 0) throw invalid_input("negative level");
  ModularData md;
  md.level = k;
  md.basis = enumerate_level_weights(d, k);
  if (static_cast<Int>(md.basis.size()) > basis_cap)
    throw resource_limit("level-" + std::to_string(k) + " basis exceeds the cap");
  md.c = central_charge(d, k);
  for (const Weight& w : md.basis)
    md.h.emplace(w, k == 0 ? Rational(0) : conformal_weight(d, k, w));

  const auto n = static_cast<Eigen::Index>(md.basis.size());
  const Int kk = k + d.dual_coxeter();
  const IntVector ones = IntVector::Ones(d.rank());
  const Rational c24 = md.c / Rational(24);
  md.t_turns.reserve(md.basis.size());
  for (const Weight& w : md.basis) md.t_turns.push_back(frac1(md.h.at(w) - c24));

  // U_{lm} = sum over the Weyl orbit of (l + rho) with signs of
  // det(w) exp(-2 pi i <w(l + rho), m + rho> / kk); S is U rescaled by the
  // unique constant making it unitary with S_00 real positive.
  Eigen::MatrixXcd u(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto orbit = signed_weyl_orbit(d, Weight(md.basis[a].labels + ones), weyl_cap);
    for (Eigen::Index b = a; b < n; ++b) {
      const Weight mu_rho(md.basis[b].labels + ones);
      std::complex<double> acc(0.0, 0.0);
      for (const auto& [x, sign] : orbit) {
        const Rational turn = frac1(inner_product(d, x, mu_rho) / Rational(kk));
        acc += static_cast<double>(sign) *
               std::polar(1.0, -2.0 * std::numbers::pi * turn.to_double());
      }
      u(a, b) = acc;
      u(b, a) = acc;
    }
  }

  const double norm = u.row(0).norm();
  if (norm == 0.0) throw internal_error("vanishing S-matrix row");
  const std::complex<double> u00 = u(0, 0);
  if (std::abs(u00) < 1e-12) throw internal_error("vanishing S_00");
  md.S = u * (std::conj(u00) / std::abs(u00) / norm);
  return md;
}

Int verlinde_from_s(const ModularData& md, const Weight& lhs, const Weight& rhs, const Weight& out,
                    double tol) {
  const Eigen::Index a = static_cast<Eigen::Index>(md.index_of(lhs));
  const Eigen::Index b = static_cast<Eigen::Index>(md.index_of(rhs));
  const Eigen::Index c = static_cast<Eigen::Index>(md.index_of(out));
  std::complex<double> acc(0.0, 0.0);
  for (Eigen::Index s = 0; s < md.S.rows(); ++s)
    acc += md.S(a, s) * md.S(b, s) * std::conj(md.S(c, s)) / md.S(0, s);
  const double rounded = std::round(acc.real());
  if (std::abs(acc - std::complex<double>(rounded, 0.0)) > tol)
    throw internal_error("Verlinde sum is not integral within tolerance");
  return static_cast<Int>(rounded);
}

} // namespace verlinde
