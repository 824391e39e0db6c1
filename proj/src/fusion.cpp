#include "verlinde/fusion.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace verlinde {

namespace {

void require_level_weight(const RootDatum& d, Int k, const Weight& w, const char* who) {
  if (w.rank() != d.rank()) throw invalid_input(std::string(who) + ": rank mismatch");
  if (!w.is_dominant() || level_of(d, w) > k)
    throw invalid_input(std::string(who) + ": weight " + w.str() + " is not at level " +
                        std::to_string(k));
}

// Rho-shifted reduction into the open affine alcove at shifted level kk.
// Returns wall=true when the input lies on any reflection hyperplane.
struct AffineFold {
  bool wall = false;
  IntVector shifted;
  int sign = 1;
};

AffineFold fold_affine(const RootDatum& d, Int kk, IntVector y) {
  int sign = 1;
  int guard = 0;
  for (;;) {
    if (++guard > 100000) throw internal_error("affine folding failed to terminate");
    bool reflected = false;
    for (int i = 0; i < d.rank(); ++i) {
      if (y[i] < 0) {
        const Int yi = y[i];
        y -= yi * d.cartan().row(i).transpose();
        sign = -sign;
        reflected = true;
        break;
      }
    }
    if (reflected) continue;
    const Int level = d.comarks().dot(y);
    if (level > kk) {
      y -= (level - kk) * d.theta().labels;
      sign = -sign;
      continue;
    }
    if (level == kk || (y.array() == 0).any()) return {.wall = true};
    return {.wall = false, .shifted = std::move(y), .sign = sign};
  }
}

} // namespace

FusionElement fuse(const RootDatum& d, Int k, const Weight& lhs, const Weight& rhs, Int dim_cap) {
  require_level_weight(d, k, lhs, "fuse");
  require_level_weight(d, k, rhs, "fuse");

  const bool swap = weyl_dim(d, lhs) < weyl_dim(d, rhs);
  const Weight& big = swap ? rhs : lhs;
  const Weight& small = swap ? lhs : rhs;
  const WeightSystem ws = weight_system(d, small, dim_cap);

  const Int kk = k + d.dual_coxeter();
  const IntVector ones = IntVector::Ones(d.rank());

  FusionElement out;
  out.level = k;
  for (const auto& [nu, m] : ws.multiplicities) {
    const AffineFold f = fold_affine(d, kk, big.labels + nu.labels + ones);
    if (f.wall) continue;
    out.terms[Weight(f.shifted - ones)] += f.sign * m;
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [w, n] : out.terms) {
    if (n < 0) throw internal_error("negative fusion coefficient at " + w.str());
    if (level_of(d, w) > k) throw internal_error("fusion term above level at " + w.str());
  }
  return out;
}

Int fusion_coefficient(const RootDatum& d, Int k, const Weight& lhs, const Weight& rhs,
                       const Weight& out, Int dim_cap) {
  require_level_weight(d, k, out, "fusion_coefficient");
  return fuse(d, k, lhs, rhs, dim_cap).coefficient(out);
}

FusionElement unit(const RootDatum& d, Int k) {
  if (k < 0) throw invalid_input("negative level");
  FusionElement e;
  e.level = k;
  e.terms[Weight(IntVector::Zero(d.rank()))] = 1;
  return e;
}

FusionElement add(const FusionElement& a, const FusionElement& b) {
  if (a.level != b.level) throw invalid_input("add: level mismatch");
  FusionElement out = a;
  for (const auto& [w, n] : b.terms) out.terms[w] += n;
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FusionElement scale(const FusionElement& a, Int c) {
  FusionElement out;
  out.level = a.level;
  if (c != 0)
    for (const auto& [w, n] : a.terms) out.terms[w] = c * n;
  return out;
}

FusionElement multiply(const RootDatum& d, const FusionElement& a, const FusionElement& b,
                       Int dim_cap) {
  if (a.level != b.level) throw invalid_input("multiply: level mismatch");
  FusionElement out;
  out.level = a.level;
  for (const auto& [wa, na] : a.terms)
    for (const auto& [wb, nb] : b.terms)
      for (const auto& [wc, nc] : fuse(d, a.level, wa, wb, dim_cap).terms)
        out.terms[wc] += na * nb * nc;
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FusionElement brane_quantize(const RootDatum& d, Int k, const Weight& lambda) {
  if (lambda.rank() != d.rank()) throw invalid_input("brane_quantize: rank mismatch");
  if (!lambda.is_dominant() || level_of(d, lambda) > k)
    throw invalid_input("brane_quantize: conjugacy class at " + lambda.str() +
                        " is not pre-quantizable at level " + std::to_string(k));
  FusionElement e;
  e.level = k;
  e.terms[lambda] = 1;
  return e;
}

int su2_fusion_oracle(Int two_j1, Int two_j2, Int two_j3, Int k) {
  for (Int l : {two_j1, two_j2})
    if (l < 0 || l > k) throw invalid_input("su2_fusion_oracle: spin out of level range");
  if (two_j3 < 0) throw invalid_input("su2_fusion_oracle: negative spin");
  if (two_j3 > k) return 0;
  if ((two_j1 + two_j2 + two_j3) % 2 != 0) return 0;
  if (two_j3 < std::abs(two_j1 - two_j2)) return 0;
  if (two_j3 > two_j1 + two_j2) return 0;
  if (two_j1 + two_j2 + two_j3 > 2 * k) return 0;
  return 1;
}

std::size_t FusionTable::index_of(const Weight& w) const {
  const auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || !(*it == w))
    throw invalid_input("weight " + w.str() + " is not in the level-" + std::to_string(level) +
                        " basis");
  return static_cast<std::size_t>(it - basis.begin());
}

Int FusionTable::coefficient(std::size_t i, std::size_t j, std::size_t l) const {
  if (i > j) std::swap(i, j);
  const std::array<Int, 4> probe{static_cast<Int>(i), static_cast<Int>(j), static_cast<Int>(l), 0};
  auto it = std::lower_bound(entries.begin(), entries.end(), probe,
                             [](const auto& a, const auto& b) {
                               return std::tie(a[0], a[1], a[2]) < std::tie(b[0], b[1], b[2]);
                             });
  if (it == entries.end() || (*it)[0] != probe[0] || (*it)[1] != probe[1] || (*it)[2] != probe[2])
    return 0;
  return (*it)[3];
}

FusionTable fusion_table(const RootDatum& d, Int k, Int basis_cap, Int dim_cap) {
  FusionTable t;
  t.level = k;
  t.basis = enumerate_level_weights(d, k);
  if (static_cast<Int>(t.basis.size()) > basis_cap)
    throw resource_limit("level-" + std::to_string(k) + " basis has " +
                         std::to_string(t.basis.size()) + " weights, above the cap of " +
                         std::to_string(basis_cap));
  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    for (std::size_t j = i; j < t.basis.size(); ++j) {
      const FusionElement e = fuse(d, k, t.basis[i], t.basis[j], dim_cap);
      for (const auto& [w, n] : e.terms)
        t.entries.push_back({static_cast<Int>(i), static_cast<Int>(j),
                             static_cast<Int>(t.index_of(w)), n});
    }
  }
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

} // namespace verlinde
