#pragma once

#include "verlinde/rational.hpp"
#include "verlinde/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace verlinde {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One of the simple Cartan types A..G with its rank.
struct SimpleType {
  Series series;
  int rank;

  std::string str() const { return std::string(1, static_cast<char>(series)) + std::to_string(rank); }
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Throws invalid_input for an inadmissible series/rank combination.
void validate_simple_type(const SimpleType& t);

/// Parses "A2", "D4", "E7", ... (no quotient part).
SimpleType parse_simple_type(const std::string& text);

/// Immutable root-system data of a simple Lie type.
///
/// All pairings are exact rationals; the invariant form is normalized so
/// the highest root has norm 2. Weights are handled in Dynkin labels
/// throughout, simple reflections act by s_i(y)_j = y_j - y_i A_ij.
class RootDatum {
public:
  explicit RootDatum(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const RatMatrix& inverse_cartan() const { return inv_cartan_; }
  /// Gram matrix of the fundamental weights under the normalized form.
  const RatMatrix& form() const { return form_; }
  /// Half squared root lengths d_i = <a_i, a_i>/2; 1 on long roots.
  const RatVector& root_half_norms() const { return d_; }
  const IntVector& marks() const { return marks_; }
  const IntVector& comarks() const { return comarks_; }
  const Weight& theta() const { return theta_; }
  const Weight& rho() const { return rho_; }
  Int dual_coxeter() const { return h_dual_; }
  Int dim_g() const { return dim_g_; }
  Int root_count() const { return 2 * static_cast<Int>(positive_roots_.size()); }
  /// Positive roots in simple-root coordinates.
  const std::vector<IntVector>& positive_roots() const { return positive_roots_; }

  /// Dynkin labels of the simple root a_i (row i of the Cartan matrix).
  IntVector simple_root_labels(int i) const { return cartan_.row(i).transpose(); }
  /// Dynkin labels of a root given in simple-root coordinates.
  IntVector root_labels(const IntVector& coords) const { return cartan_.transpose() * coords; }

private:
  SimpleType type_;
  IntMatrix cartan_;
  RatMatrix inv_cartan_;
  RatMatrix form_;
  RatVector d_;
  IntVector marks_;
  IntVector comarks_;
  Weight theta_;
  Weight rho_;
  Int h_dual_ = 0;
  Int dim_g_ = 0;
  std::vector<IntVector> positive_roots_;
};

/// Normalized invariant form on weights, exact.
Rational inner_product(const RootDatum& d, const Weight& a, const Weight& b);

/// <w, theta^vee> = sum of comark_i * label_i; the level of a dominant weight.
Int level_of(const RootDatum& d, const Weight& w);

/// Result of the rho-shifted reduction to the dominant chamber.
struct DominantReflection {
  bool wall = false;   // w + rho fixed by some reflection; the term drops
  Weight weight;       // dominant representative (valid when !wall)
  int sign = 1;        // det of the reducing Weyl element
};

/// Reduces w under the rho-shifted Weyl action: returns the dominant image
/// and the sign of the reducing element, or a wall marker when w + rho is
/// fixed by a reflection.
DominantReflection dominant_reflect(const RootDatum& d, const Weight& w);

/// Dominant representative under the plain (unshifted) Weyl action.
Weight dominant_representative(const RootDatum& d, const Weight& w);

/// Highest weight of the dual representation, -w0(lambda). Involutive.
Weight conjugate_weight(const RootDatum& d, const Weight& lambda);

/// All dominant weights of level <= k, in lexicographic order of labels.
/// This order indexes every matrix downstream.
std::vector<Weight> enumerate_level_weights(const RootDatum& d, Int k);

/// Dimension of the irreducible representation with highest weight lambda.
BigInt weyl_dim(const RootDatum& d, const Weight& lambda);

/// Matrix of the simple reflection s_i acting on Dynkin labels.
IntMatrix simple_reflection_matrix(const RootDatum& d, int i);

/// Matrix of the longest element of the parabolic Weyl subgroup generated
/// by the given simple reflections (all of them = the full longest element).
IntMatrix longest_element_matrix(const RootDatum& d, const std::vector<int>& nodes);

/// Orbit of a dominant weight under the Weyl group.
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& dominant);

/// Orbit of a strictly dominant weight with determinant signs, sorted by
/// labels. Throws resource_limit when the orbit would exceed the cap.
std::vector<std::pair<Weight, int>>
signed_weyl_orbit(const RootDatum& d, const Weight& strictly_dominant, std::size_t cap);

} // namespace verlinde
