#pragma once

#include "verlinde/root_datum.hpp"

#include <map>
#include <utility>

namespace verlinde {

/// Weight-system enumeration refuses representations above this dimension
/// unless the caller overrides the cap.
inline constexpr Int kDefaultDimCap = 1'000'000;

/// All weights of the irreducible V_base with their multiplicities.
struct WeightSystem {
  Weight base;
  std::map<Weight, Int> multiplicities;

  Int multiplicity(const Weight& mu) const {
    auto it = multiplicities.find(mu);
    return it == multiplicities.end() ? 0 : it->second;
  }
};

WeightSystem weight_system(const RootDatum& d, const Weight& lambda, Int dim_cap = kDefaultDimCap);

/// Multiplicity of the weight mu in V_lambda (Freudenthal recursion).
Int weight_multiplicity(const RootDatum& d, const Weight& lambda, const Weight& mu,
                        Int dim_cap = kDefaultDimCap);

/// Decomposition of V_lhs x V_rhs into irreducibles with multiplicities.
struct TensorDecomposition {
  std::pair<Weight, Weight> factors;
  std::map<Weight, Int> components;
};

TensorDecomposition tensor_decompose(const RootDatum& d, const Weight& lhs, const Weight& rhs,
                                     Int dim_cap = kDefaultDimCap);

} // namespace verlinde
