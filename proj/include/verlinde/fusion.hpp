#pragma once

#include "verlinde/tensor.hpp"

#include <array>
#include <map>
#include <vector>

namespace verlinde {

inline constexpr Int kDefaultBasisCap = 4096;

/// Integer combination of level-k dominant weights; an element of the
/// level-k fusion ring.
struct FusionElement {
  Int level = 0;
  std::map<Weight, Int> terms;

  Int coefficient(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }
  friend bool operator==(const FusionElement&, const FusionElement&) = default;
};

/// Product of two level-k basis elements by affine folding at level k + h^vee:
/// classical tensor terms are reflected into the level-k alcove with signs,
/// terms landing on an affine wall drop.
FusionElement fuse(const RootDatum& d, Int k, const Weight& lhs, const Weight& rhs,
                   Int dim_cap = kDefaultDimCap);

Int fusion_coefficient(const RootDatum& d, Int k, const Weight& lhs, const Weight& rhs,
                       const Weight& out, Int dim_cap = kDefaultDimCap);

FusionElement unit(const RootDatum& d, Int k);
FusionElement add(const FusionElement& a, const FusionElement& b);
FusionElement scale(const FusionElement& a, Int c);
FusionElement multiply(const RootDatum& d, const FusionElement& a, const FusionElement& b,
                       Int dim_cap = kDefaultDimCap);

/// The basis element attached to the level-k conjugacy-class brane through
/// lambda; rejects weights above level k as not pre-quantizable.
FusionElement brane_quantize(const RootDatum& d, Int k, const Weight& lambda);

/// Independent closed form for SU(2) level-k fusion, used as a test oracle
/// against the folding path. Spins are passed doubled (Dynkin labels).
int su2_fusion_oracle(Int two_j1, Int two_j2, Int two_j3, Int k);

/// Complete table of nonzero coefficients over the level-k basis,
/// canonicalized to i <= j and sorted.
struct FusionTable {
  Int level = 0;
  std::vector<Weight> basis;
  std::vector<std::array<Int, 4>> entries;  // (i, j, l, N) with i <= j

  std::size_t index_of(const Weight& w) const;
  Int coefficient(std::size_t i, std::size_t j, std::size_t l) const;
};

FusionTable fusion_table(const RootDatum& d, Int k, Int basis_cap = kDefaultBasisCap,
                         Int dim_cap = kDefaultDimCap);

} // namespace verlinde
