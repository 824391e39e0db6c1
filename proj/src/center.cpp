#include "verlinde/center.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace verlinde {

CenterCharacter::CenterCharacter(std::vector<Rational> turns) : turns_(std::move(turns)) {
  for (Rational& t : turns_) t = frac1(t);
}

bool CenterCharacter::is_trivial() const {
  return std::all_of(turns_.begin(), turns_.end(), [](const Rational& t) { return t.is_zero(); });
}

CenterCharacter CenterCharacter::compose(const CenterCharacter& o) const {
  if (o.size() != size()) throw invalid_input("character size mismatch");
  std::vector<Rational> t(turns_.size());
  for (std::size_t i = 0; i < turns_.size(); ++i) t[i] = frac1(turns_[i] + o.turns_[i]);
  return CenterCharacter(std::move(t));
}

CenterCharacter CenterCharacter::restrict_to(const std::vector<int>& subset) const {
  std::vector<Rational> t;
  t.reserve(subset.size());
  for (int z : subset) t.push_back(turns_.at(static_cast<std::size_t>(z)));
  return CenterCharacter(std::move(t));
}

std::string CenterCharacter::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < turns_.size(); ++i) {
    if (i) s += ",";
    s += turns_[i].str();
  }
  return s + "]";
}

ZSpec ZSpec::parse(const std::string& text) {
  if (text == "1") return {Kind::trivial, 1};
  if (text == "Z2{v}") return {Kind::z2v, 2};
  if (text == "Z2{s}") return {Kind::z2s, 2};
  if (text == "Z2{c}") return {Kind::z2c, 2};
  if (text == "Z2xZ2") return {Kind::klein, 4};
  if (text.size() >= 2 && text[0] == 'Z') {
    int m = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') throw invalid_input("bad subgroup spec '" + text + "'");
      m = m * 10 + (text[i] - '0');
    }
    if (m < 1 || m > 64) throw invalid_input("bad subgroup order in '" + text + "'");
    return {Kind::cyclic, m};
  }
  throw invalid_input("bad subgroup spec '" + text + "'");
}

std::string ZSpec::str() const {
  switch (kind) {
    case Kind::trivial: return "1";
    case Kind::cyclic: return "Z" + std::to_string(order);
    case Kind::z2v: return "Z2{v}";
    case Kind::z2s: return "Z2{s}";
    case Kind::z2c: return "Z2{c}";
    case Kind::klein: return "Z2xZ2";
  }
  return "?";
}

Rational coweight_inner(const RootDatum& d, const Coweight& a, const Coweight& b) {
  if (a.rank() != d.rank() || b.rank() != d.rank())
    throw invalid_input("coweight_inner: rank mismatch");
  // <lam_i^vee, lam_j^vee> = F_ij / (d_i d_j)
  Rational acc(0);
  for (int i = 0; i < d.rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < d.rank(); ++j) {
      if (b.coords[j] == 0) continue;
      acc += Rational(a.coords[i]) * Rational(b.coords[j]) * d.form()(i, j) /
             (d.root_half_norms()[i] * d.root_half_norms()[j]);
    }
  }
  return acc;
}

Rational weight_coweight_pairing(const RootDatum& d, const Weight& w, const Coweight& c) {
  if (w.rank() != d.rank() || c.rank() != d.rank())
    throw invalid_input("weight_coweight_pairing: rank mismatch");
  Rational acc(0);
  for (int i = 0; i < d.rank(); ++i) {
    if (w.labels[i] == 0) continue;
    for (int j = 0; j < d.rank(); ++j) {
      if (c.coords[j] == 0) continue;
      acc += Rational(w.labels[i]) * d.inverse_cartan()(i, j) * Rational(c.coords[j]);
    }
  }
  return acc;
}

namespace {

// Class membership in the coweight lattice modulo the coroot lattice:
// x ~ y iff A^{-1}(x - y) is integral (coroots are the Cartan columns).
bool same_coroot_class(const RootDatum& d, const IntVector& x, const IntVector& y) {
  for (int i = 0; i < d.rank(); ++i) {
    Rational ci(0);
    for (int j = 0; j < d.rank(); ++j)
      ci += d.inverse_cartan()(i, j) * Rational(x[j] - y[j]);
    if (!ci.is_integer()) return false;
  }
  return true;
}

// Reduced word of the Weyl element given by its matrix on labels, read off
// by reducing the image of rho; the product convention is rightmost first.
std::vector<int> reduced_word(const RootDatum& d, const IntMatrix& m) {
  IntVector y = m * IntVector::Ones(d.rank());
  std::vector<int> word;
  for (bool done = false; !done;) {
    done = true;
    for (int i = 0; i < d.rank(); ++i) {
      if (y[i] < 0) {
        const Int yi = y[i];
        y -= yi * d.cartan().row(i).transpose();
        word.push_back(i);
        done = false;
        break;
      }
    }
  }
  if (y != IntVector::Ones(d.rank())) throw internal_error("word extraction failed");
  return word;
}

} // namespace

void CenterDatum::finish() {
  const int n = static_cast<int>(elements_.size());
  mult_ = Eigen::MatrixXi::Constant(n, n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const IntVector sum = elements_[i].rep.coords + elements_[j].rep.coords;
      for (int l = 0; l < n; ++l) {
        if (same_coroot_class(datum_, sum, elements_[l].rep.coords)) {
          if (mult_(i, j) != -1) throw internal_error("ambiguous center product");
          mult_(i, j) = l;
        }
      }
      if (mult_(i, j) == -1) throw internal_error("center not closed under products");
    }
  }
  if (mult_ != Eigen::MatrixXi(mult_.transpose())) throw internal_error("center not abelian");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  order_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (mult_(i, j) == 0) inverse_[static_cast<std::size_t>(i)] = j;
    int p = i, ord = 1;
    while (p != 0) {
      p = mult_(p, i);
      ++ord;
      if (ord > n) throw internal_error("center element order overflow");
    }
    order_[static_cast<std::size_t>(i)] = ord;
  }

  // omega_{i(z1)} omega_{i(z2)} = omega_{i(z1 z2)}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (elements_[i].weyl * elements_[j].weyl != elements_[mult_(i, j)].weyl)
        throw internal_error("Weyl composition law violated");
}

CenterDatum center_group(const RootDatum& d) {
  CenterDatum cd(d);
  const int n = d.rank();

  CenterElement identity;
  identity.rep = Coweight(IntVector::Zero(n));
  identity.weyl = IntMatrix::Identity(n, n);
  cd.elements_.push_back(identity);

  const IntMatrix w0 = longest_element_matrix(d, [&] {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());

  std::vector<CenterElement> nontrivial;
  for (int i = 0; i < n; ++i) {
    if (d.marks()[i] != 1) continue;
    CenterElement z;
    IntVector rep = IntVector::Zero(n);
    rep[i] = 1;
    z.rep = Coweight(rep);
    z.node = i;
    std::vector<int> others;
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    z.weyl = longest_element_matrix(d, others) * w0;
    z.word = reduced_word(d, z.weyl);
    // omega sends -theta to the special simple root
    if (z.weyl * (-d.theta().labels) != d.simple_root_labels(i))
      throw internal_error("special Weyl element does not send -theta to its node");
    nontrivial.push_back(std::move(z));
  }
  std::sort(nontrivial.begin(), nontrivial.end(),
            [](const CenterElement& a, const CenterElement& b) { return a.rep < b.rep; });
  for (auto& z : nontrivial) cd.elements_.push_back(std::move(z));

  cd.finish();
  return cd;
}

CenterDatum subgroup(const CenterDatum& cd, const ZSpec& spec) {
  const RootDatum& d = cd.ambient();
  std::vector<int> keep{0};

  auto keep_class_of = [&](const IntVector& coords) {
    for (std::size_t i = 1; i < cd.size(); ++i)
      if (same_coroot_class(d, coords, cd.element(i).rep.coords)) {
        keep.push_back(static_cast<int>(i));
        return;
      }
    throw invalid_input("requested class is not in the center");
  };

  switch (spec.kind) {
    case ZSpec::Kind::trivial:
      break;
    case ZSpec::Kind::cyclic: {
      std::vector<int> members;
      for (std::size_t i = 0; i < cd.size(); ++i)
        if (spec.order % cd.order(i) == 0) members.push_back(static_cast<int>(i));
      if (members.size() != static_cast<std::size_t>(spec.order))
        throw invalid_input("center of " + d.type().str() + " has no unique subgroup " +
                            spec.str() +
                            (d.type().series == Series::D && d.rank() % 2 == 0 && spec.order == 2
                                 ? "; use Z2{v}, Z2{s} or Z2{c}"
                                 : ""));
      // must be cyclic: some member realizes the full order
      if (std::none_of(members.begin(), members.end(),
                       [&](int z) { return cd.order(static_cast<std::size_t>(z)) == spec.order; }))
        throw invalid_input("subgroup " + spec.str() + " of the center of " + d.type().str() +
                            " is not cyclic");
      keep = members;
      break;
    }
    case ZSpec::Kind::z2v:
    case ZSpec::Kind::z2s:
    case ZSpec::Kind::z2c: {
      if (d.type().series != Series::D)
        throw invalid_input(spec.str() + " selects a Spin-group kernel; group is " +
                            d.type().str());
      const int node = spec.kind == ZSpec::Kind::z2v   ? 0
                       : spec.kind == ZSpec::Kind::z2s ? d.rank() - 1
                                                       : d.rank() - 2;
      IntVector rep = IntVector::Zero(d.rank());
      rep[node] = 1;
      keep_class_of(rep);
      if (cd.order(static_cast<std::size_t>(keep.back())) != 2)
        throw invalid_input(spec.str() + " does not have order 2 for " + d.type().str());
      break;
    }
    case ZSpec::Kind::klein:
      if (cd.size() != 4)
        throw invalid_input("center of " + d.type().str() + " is not Z2xZ2");
      for (std::size_t i = 1; i < cd.size(); ++i) {
        if (cd.order(i) != 2)
          throw invalid_input("center of " + d.type().str() + " is not Z2xZ2");
        keep.push_back(static_cast<int>(i));
      }
      break;
  }

  std::sort(keep.begin() + 1, keep.end(), [&](int a, int b) {
    return cd.element(static_cast<std::size_t>(a)).rep < cd.element(static_cast<std::size_t>(b)).rep;
  });

  // closure check
  for (int a : keep)
    for (int b : keep)
      if (std::find(keep.begin(), keep.end(),
                    cd.product(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) ==
          keep.end())
        throw invalid_input("selected elements do not form a subgroup");

  CenterDatum sub(d);
  for (int z : keep) sub.elements_.push_back(cd.element(static_cast<std::size_t>(z)));
  sub.finish();
  return sub;
}

Weight center_action(const CenterDatum& cd, Int k, std::size_t z, const Weight& lambda) {
  const RootDatum& d = cd.ambient();
  if (!lambda.is_dominant() || level_of(d, lambda) > k)
    throw invalid_input("center_action: weight " + lambda.str() + " is not at level " +
                        std::to_string(k));
  if (z >= cd.size()) throw invalid_input("center_action: no such element");
  const CenterElement& el = cd.element(z);
  if (el.node < 0) return lambda;
  IntVector y = el.weyl * lambda.labels;
  y[el.node] += k;  // translation by k times a long fundamental coweight
  Weight out(y);
  if (!out.is_dominant() || level_of(d, out) > k)
    throw internal_error("center action left the level-" + std::to_string(k) + " alcove");
  return out;
}

CenterCharacter character_of_weight(const CenterDatum& cd, const Weight& lambda) {
  if (lambda.rank() != cd.ambient().rank())
    throw invalid_input("character_of_weight: rank mismatch");
  std::vector<Rational> turns;
  turns.reserve(cd.size());
  for (const CenterElement& z : cd.elements())
    turns.push_back(frac1(weight_coweight_pairing(cd.ambient(), lambda, z.rep)));
  CenterCharacter chi(std::move(turns));
  return chi;
}

std::vector<CenterCharacter> dual_group(const CenterDatum& cd) {
  const int n = cd.ambient().rank();
  std::set<CenterCharacter> chars;
  chars.insert(CenterCharacter(std::vector<Rational>(cd.size(), Rational(0))));
  std::vector<CenterCharacter> gens;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e[i] = 1;
    gens.push_back(character_of_weight(cd, Weight(e)));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<CenterCharacter> cur(chars.begin(), chars.end());
    for (const auto& c : cur)
      for (const auto& g : gens)
        if (chars.insert(c.compose(g)).second) grew = true;
  }
  if (chars.size() != cd.size()) throw internal_error("dual group size mismatch");
  return std::vector<CenterCharacter>(chars.begin(), chars.end());
}

Int integral_level(const CenterDatum& cd) {
  BigInt l = 1;
  for (std::size_t a = 1; a < cd.size(); ++a) {
    for (std::size_t b = a; b < cd.size(); ++b) {
      const Rational q =
          coweight_inner(cd.ambient(), cd.element(a).rep, cd.element(b).rep);
      l = lcm(l, denominator(q.raw()));
    }
    for (int i = 0; i < cd.ambient().rank(); ++i) {
      if (cd.element(a).rep.coords[i] == 0) continue;
      const Rational p =
          Rational(cd.element(a).rep.coords[i]) / cd.ambient().root_half_norms()[i];
      l = lcm(l, denominator(p.raw()));
    }
  }
  return l.convert_to<Int>();
}

std::map<CenterCharacter, std::vector<Orbit>> partition_by_character(const CenterDatum& cd,
                                                                     Int k) {
  if (k < 0) throw invalid_input("negative level");
  const Int li = integral_level(cd);
  if (k % li != 0)
    throw unsupported_request(
        "character sectors are undefined at level " + std::to_string(k) +
        "; the center characters are orbit-constant only at multiples of " +
        std::to_string(li));
  const std::vector<Weight> basis = enumerate_level_weights(cd.ambient(), k);
  std::map<CenterCharacter, std::vector<Orbit>> out;
  std::set<Weight> used;
  for (const Weight& w : basis) {
    if (used.contains(w)) continue;
    Orbit orbit;
    std::set<Weight> members;
    for (std::size_t z = 0; z < cd.size(); ++z) {
      const Weight img = center_action(cd, k, z, w);
      members.insert(img);
      if (img == w) orbit.stabilizer.push_back(static_cast<int>(z));
    }
    orbit.members.assign(members.begin(), members.end());
    orbit.representative = orbit.members.front();
    if (orbit.members.size() * orbit.stabilizer.size() != cd.size())
      throw internal_error("orbit-stabilizer mismatch");
    const CenterCharacter chi = character_of_weight(cd, orbit.representative);
    for (const Weight& m : orbit.members) {
      used.insert(m);
      if (!(character_of_weight(cd, m) == chi))
        throw internal_error("character not constant on an orbit");
    }
    out[chi].push_back(std::move(orbit));
  }
  return out;
}

Int basic_level(const CenterDatum& cd) {
  BigInt l = 1;
  for (std::size_t z = 1; z < cd.size(); ++z) {
    const CenterElement& el = cd.element(z);
    // constraint: l * ord(z) * <rep, rep> in 2Z
    const Rational q = Rational(cd.order(z)) * coweight_inner(cd.ambient(), el.rep, el.rep) /
                       Rational(2);
    l = lcm(l, denominator(q.raw()));
    // well-definedness of the prescribed commutator against the simple
    // coroots: <rep, a_i^vee> = rep_i / d_i must become integral
    for (int i = 0; i < cd.ambient().rank(); ++i) {
      if (el.rep.coords[i] == 0) continue;
      const Rational p = Rational(el.rep.coords[i]) / cd.ambient().root_half_norms()[i];
      l = lcm(l, denominator(p.raw()));
    }
  }
  return l.convert_to<Int>();
}

Int multiplicative_level(const CenterDatum& cd) {
  BigInt l = 1;
  for (std::size_t z = 1; z < cd.size(); ++z) {
    const Rational q = coweight_inner(cd.ambient(), cd.element(z).rep, cd.element(z).rep) /
                       Rational(2);
    l = lcm(l, denominator(q.raw()));
  }
  return l.convert_to<Int>();
}

Int fundamental_level(const CenterDatum& cd) {
  if (cd.is_trivial()) return 1;
  const SimpleType& t = cd.ambient().type();
  if (t.series == Series::A && t.rank == 1 && cd.size() == 2) return 2;
  throw unsupported_request("fundamental level is not known for " + t.str() + " with |Z| = " +
                            std::to_string(cd.size()));
}

bool extension_exists(const CenterDatum& cd, Int k) {
  if (k < 1) throw invalid_input("extension_exists: level must be positive");
  return k % basic_level(cd) == 0;
}

} // namespace verlinde
