#pragma once

#include "verlinde/root_datum.hpp"

#include <map>
#include <string>
#include <vector>

namespace verlinde {

/// Multiplicative character of the center subgroup, stored as exact
/// fractions of a full turn, aligned with the element order of the
/// owning CenterDatum.
class CenterCharacter {
public:
  CenterCharacter() = default;
  explicit CenterCharacter(std::vector<Rational> turns);

  std::size_t size() const { return turns_.size(); }
  const Rational& turn(std::size_t z) const { return turns_[z]; }
  const std::vector<Rational>& turns() const { return turns_; }
  bool is_trivial() const;

  /// Pointwise product of characters (turns add mod 1).
  CenterCharacter compose(const CenterCharacter& o) const;
  /// Restriction to a subgroup given by element indices.
  CenterCharacter restrict_to(const std::vector<int>& subset) const;

  friend bool operator==(const CenterCharacter&, const CenterCharacter&) = default;
  friend bool operator<(const CenterCharacter& a, const CenterCharacter& b) {
    return a.turns_ < b.turns_;
  }
  std::string str() const;

private:
  std::vector<Rational> turns_;
};

/// One center element: its coweight-class representative, the special node
/// (carrying mark 1 in the highest root, -1 for the identity), and the Weyl
/// element entering the affine action, as a reduced word and as a matrix
/// acting on Dynkin labels.
struct CenterElement {
  Coweight rep;
  int node = -1;
  std::vector<int> word;
  IntMatrix weyl;
};

/// Subgroup selector for the center; grammar: "1", "Zn", "Z2{v}", "Z2{s}",
/// "Z2{c}", "Z2xZ2".
struct ZSpec {
  enum class Kind { trivial, cyclic, z2v, z2s, z2c, klein };
  Kind kind = Kind::trivial;
  int order = 1;

  static ZSpec parse(const std::string& text);
  std::string str() const;
};

/// A subgroup Z of the center of the simply connected group, together with
/// the data needed for its action on level-k weights. Immutable.
class CenterDatum {
public:
  const RootDatum& ambient() const { return datum_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<CenterElement>& elements() const { return elements_; }
  const CenterElement& element(std::size_t z) const { return elements_[z]; }
  int product(std::size_t z1, std::size_t z2) const { return mult_(static_cast<Eigen::Index>(z1), static_cast<Eigen::Index>(z2)); }
  int inverse(std::size_t z) const { return inverse_[z]; }
  int order(std::size_t z) const { return order_[z]; }
  bool is_trivial() const { return elements_.size() == 1; }

  friend CenterDatum center_group(const RootDatum& d);
  friend CenterDatum subgroup(const CenterDatum& cd, const ZSpec& spec);

private:
  explicit CenterDatum(RootDatum d) : datum_(std::move(d)) {}
  void finish();  // multiplication table, inverses, orders, composition law

  RootDatum datum_;
  std::vector<CenterElement> elements_;
  Eigen::MatrixXi mult_;
  std::vector<int> inverse_;
  std::vector<int> order_;
};

/// The full center of the simply connected group of type d, realized on the
/// coweight classes of the special fundamental coweights.
CenterDatum center_group(const RootDatum& d);

/// The subgroup selected by spec; throws invalid_input when the selector
/// does not name a subgroup of this center.
CenterDatum subgroup(const CenterDatum& cd, const ZSpec& spec);

/// Normalized form on coweights.
Rational coweight_inner(const RootDatum& d, const Coweight& a, const Coweight& b);

/// Natural pairing of a weight with a coweight, exact.
Rational weight_coweight_pairing(const RootDatum& d, const Weight& w, const Coweight& c);

/// Action of the center element z on a level-k weight: apply the Weyl
/// element of z, then translate by k times its special coweight.
Weight center_action(const CenterDatum& cd, Int k, std::size_t z, const Weight& lambda);

/// The character z -> exp(2 pi i <lambda, rep(z)>).
CenterCharacter character_of_weight(const CenterDatum& cd, const Weight& lambda);

/// All characters of Z, sorted canonically (trivial character first).
std::vector<CenterCharacter> dual_group(const CenterDatum& cd);

/// One Z-orbit inside some level-k character sector.
struct Orbit {
  Weight representative;          // lexicographic minimum of the orbit
  std::vector<Weight> members;    // sorted
  std::vector<int> stabilizer;    // element indices fixing the orbit
};

/// Smallest level at which k times the coweight form is integral on the
/// integral lattice of the quotient. The character map is constant on
/// level-k orbits exactly when this divides k; sectors are undefined
/// otherwise.
Int integral_level(const CenterDatum& cd);

/// Z-orbits on the level-k weights, grouped by the character sector; the
/// character is constant along each orbit. Throws unsupported_request when
/// integral_level does not divide k (no sector decomposition exists).
std::map<CenterCharacter, std::vector<Orbit>> partition_by_character(const CenterDatum& cd, Int k);

/// Smallest level admitting a central extension of the loop group of the
/// quotient: the commutator constraint (-1)^{k <.,.>} on the integral
/// lattice must extend to an alternating bicharacter, which requires
/// k * ord(z) * <rep z, rep z> to be even for every z.
Int basic_level(const CenterDatum& cd);

/// Smallest k with (k/2) <rep z, rep z> integral for every z; levels at
/// which the fusion structure exists are its multiples.
Int multiplicative_level(const CenterDatum& cd);

/// Curated values only; throws unsupported_request for pairs where no
/// sourced value is available.
Int fundamental_level(const CenterDatum& cd);

/// Whether a level-k central extension of the quotient loop group exists,
/// i.e. whether the basic level divides k.
bool extension_exists(const CenterDatum& cd, Int k);

} // namespace verlinde
