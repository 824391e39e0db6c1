#include "verlinde/tensor.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace verlinde {

namespace {

Rational weight_root_pairing(const RootDatum& d, const IntVector& labels, const IntVector& coords) {
  Rational acc(0);
  for (int j = 0; j < d.rank(); ++j)
    if (coords[j] != 0 && labels[j] != 0)
      acc += Rational(coords[j]) * d.root_half_norms()[j] * Rational(labels[j]);
  return acc;
}

Int height_from(const RootDatum& d, const Weight& top, const Weight& mu) {
  const IntVector diff = top.labels - mu.labels;
  Rational h(0);
  for (int i = 0; i < d.rank(); ++i) {
    Rational ci(0);
    for (int j = 0; j < d.rank(); ++j)
      ci += d.inverse_cartan()(j, i) * Rational(diff[j]);
    if (!ci.is_integer()) throw internal_error("weight not in the root-lattice cone");
    h += ci;
  }
  return to_int64_exact(h);
}

// Dominant weights of V_lambda with Freudenthal multiplicities.
std::map<Weight, Int> dominant_multiplicities(const RootDatum& d, const Weight& lambda) {
  // Every dominant mu <= lambda is reachable from lambda by steps of single
  // positive roots through dominant weights (dominance-order covers).
  std::set<Weight> dominants{lambda};
  std::vector<Weight> queue{lambda};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const IntVector& c : d.positive_roots()) {
      IntVector y = queue[q].labels - d.root_labels(c);
      if ((y.array() < 0).any()) continue;
      Weight w(y);
      if (dominants.insert(w).second) queue.push_back(w);
    }
  }

  std::vector<Weight> by_depth(dominants.begin(), dominants.end());
  std::sort(by_depth.begin(), by_depth.end(), [&](const Weight& a, const Weight& b) {
    const Int ha = height_from(d, lambda, a), hb = height_from(d, lambda, b);
    return ha != hb ? ha < hb : a < b;
  });

  const Weight lam_rho(lambda.labels + IntVector::Ones(d.rank()));
  const Rational top_norm = inner_product(d, lam_rho, lam_rho);

  std::map<Weight, Int> mult;
  for (const Weight& mu : by_depth) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational num(0);
    for (const IntVector& c : d.positive_roots()) {
      const IntVector alpha = d.root_labels(c);
      for (Int t = 1;; ++t) {
        const Weight up(mu.labels + t * alpha);
        const auto it = mult.find(dominant_representative(d, up));
        if (it == mult.end()) break;  // weight strings have no gaps
        num += Rational(it->second) * weight_root_pairing(d, up.labels, c);
      }
    }
    const Weight mu_rho(mu.labels + IntVector::Ones(d.rank()));
    const Rational den = top_norm - inner_product(d, mu_rho, mu_rho);
    const Rational m = Rational(2) * num / den;
    const Int mi = to_int64_exact(m);
    if (mi <= 0) throw internal_error("Freudenthal produced a non-positive multiplicity");
    mult[mu] = mi;
  }
  return mult;
}

} // namespace

WeightSystem weight_system(const RootDatum& d, const Weight& lambda, Int dim_cap) {
  if (!lambda.is_dominant()) throw invalid_input("weight_system: weight not dominant");
  const BigInt dim = weyl_dim(d, lambda);
  if (dim > dim_cap)
    throw resource_limit("dim V_" + lambda.str() + " = " + dim.str() +
                         " exceeds the cap of " + std::to_string(dim_cap));

  WeightSystem ws;
  ws.base = lambda;
  BigInt total = 0;
  for (const auto& [mu, m] : dominant_multiplicities(d, lambda)) {
    for (const Weight& w : weyl_orbit(d, mu)) {
      ws.multiplicities.emplace(w, m);
      total += m;
    }
  }
  if (total != dim) throw internal_error("weight system size disagrees with the Weyl dimension");
  return ws;
}

Int weight_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu, Int dim_cap) {
  if (!lambda.is_dominant()) throw invalid_input("weight_multiplicity: weight not dominant");
  if (mu.rank() != d.rank()) throw invalid_input("weight_multiplicity: rank mismatch");
  const BigInt dim = weyl_dim(d, lambda);
  if (dim > dim_cap)
    throw resource_limit("dim V_" + lambda.str() + " exceeds the cap");
  const auto mult = dominant_multiplicities(d, lambda);
  const auto it = mult.find(dominant_representative(d, mu));
  return it == mult.end() ? 0 : it->second;
}

TensorDecomposition tensor_decompose(const RootDatum& d, const Weight& lhs, const Weight& rhs,
                                     Int dim_cap) {
  if (!lhs.is_dominant() || !rhs.is_dominant())
    throw invalid_input("tensor_decompose: factors must be dominant");

  // Racah-Speiser over the weight system of the smaller factor.
  const bool swap = weyl_dim(d, lhs) < weyl_dim(d, rhs);
  const Weight& big = swap ? rhs : lhs;
  const Weight& small = swap ? lhs : rhs;
  const WeightSystem ws = weight_system(d, small, dim_cap);

  std::map<Weight, Int> acc;
  for (const auto& [nu, m] : ws.multiplicities) {
    const DominantReflection r = dominant_reflect(d, Weight(big.labels + nu.labels));
    if (r.wall) continue;
    acc[r.weight] += r.sign * m;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [w, n] : acc)
    if (n < 0) throw internal_error("negative tensor multiplicity at " + w.str());

  return TensorDecomposition{.factors = {lhs, rhs}, .components = std::move(acc)};
}

} // namespace verlinde
