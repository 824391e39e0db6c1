#include "verlinde/root_datum.hpp"

#include "verlinde/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace verlinde {

void validate_simple_type(const SimpleType& t) {
  const int n = t.rank;
  switch (t.series) {
    case Series::A: if (n >= 1) return; break;
    case Series::B: if (n >= 2) return; break;
    case Series::C: if (n >= 2) return; break;
    case Series::D: if (n >= 3) return; break;
    case Series::E: if (n >= 6 && n <= 8) return; break;
    case Series::F: if (n == 4) return; break;
    case Series::G: if (n == 2) return; break;
  }
  throw invalid_input("invalid series/rank combination: " + t.str());
}

SimpleType parse_simple_type(const std::string& text) {
  if (text.size() < 2) throw invalid_input("bad group spec: '" + text + "'");
  const char s = text[0];
  if (s < 'A' || s > 'G') throw invalid_input("bad series letter in '" + text + "'");
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw invalid_input("bad rank in '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
    if (rank > 512) throw invalid_input("rank out of range in '" + text + "'");
  }
  SimpleType t{static_cast<Series>(s), rank};
  validate_simple_type(t);
  return t;
}

namespace {

// Bourbaki numbering. Node indices are 0-based here.
IntMatrix cartan_matrix(const SimpleType& t) {
  const int n = t.rank;
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a(n - 2, n - 1) = -2;  // a_n is short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a(n - 1, n - 2) = -2;  // a_n is long
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a(1, 2) = -2;  // a_3, a_4 are short
      break;
    case Series::G:
      a(0, 1) = -1;
      a(1, 0) = -3;  // a_1 short, a_2 long
      break;
  }
  return a;
}

IntVector highest_root_marks(const SimpleType& t) {
  const int n = t.rank;
  IntVector m(n);
  switch (t.series) {
    case Series::A:
      m.setOnes();
      break;
    case Series::B:
      m.setConstant(2);
      m[0] = 1;
      break;
    case Series::C:
      m.setConstant(2);
      m[n - 1] = 1;
      break;
    case Series::D:
      m.setConstant(2);
      m[0] = 1;
      m[n - 2] = 1;
      m[n - 1] = 1;
      break;
    case Series::E:
      if (n == 6) m << 1, 2, 2, 3, 2, 1;
      else if (n == 7) m << 2, 2, 3, 4, 3, 2, 1;
      else m << 2, 3, 4, 6, 5, 4, 3, 2;
      break;
    case Series::F:
      m << 2, 3, 4, 2;
      break;
    case Series::G:
      m << 3, 2;
      break;
  }
  return m;
}

// Root lengths from symmetrizing the Cartan matrix: d_i A_ij = d_j A_ji.
// The overall scale is fixed afterwards by <theta, theta> = 2.
RatVector symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  RatVector d(n);
  std::vector<bool> seen(n, false);
  d[0] = Rational(1);
  seen[0] = true;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i < n; ++i) {
      if (!seen[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (seen[j] || a(i, j) == 0) continue;
        d[j] = d[i] * Rational(a(j, i)) / Rational(a(i, j));
        seen[j] = true;
        progress = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw internal_error("disconnected Dynkin diagram");
  return d;
}

} // namespace

RootDatum::RootDatum(SimpleType type) : type_(type) {
  validate_simple_type(type_);
  const int n = type_.rank;

  cartan_ = cartan_matrix(type_);
  marks_ = highest_root_marks(type_);
  theta_ = Weight(cartan_.transpose() * marks_);
  rho_ = Weight(IntVector::Ones(n));

  inv_cartan_ = inverse_exact([&] {
    RatMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Rational(cartan_(i, j));
    return a;
  }());

  d_ = symmetrizer(cartan_);
  auto make_form = [&] {
    RatMatrix f(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f(i, j) = inv_cartan_(i, j) * d_[j];
    return f;
  };
  form_ = make_form();
  RatVector tl(n);
  for (int i = 0; i < n; ++i) tl[i] = Rational(theta_.labels[i]);
  const Rational theta_norm = tl.dot(form_ * tl);
  const Rational scale = Rational(2) / theta_norm;
  for (int i = 0; i < n; ++i) d_[i] *= scale;
  form_ = make_form();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (!(form_(i, j) == form_(j, i))) throw internal_error("form not symmetric");

  comarks_ = IntVector(n);
  for (int i = 0; i < n; ++i) comarks_[i] = to_int64_exact(Rational(marks_[i]) * d_[i]);
  h_dual_ = 1 + comarks_.sum();

  // Roots: orbit of the simple roots under simple reflections, tracked in
  // simple-root coordinates where s_j subtracts label_j(beta) * e_j.
  std::set<std::vector<Int>> seen;
  std::vector<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector c = IntVector::Zero(n);
    c[i] = 1;
    queue.push_back(c);
    seen.insert(std::vector<Int>(c.data(), c.data() + n));
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const IntVector c = queue[q];
    const IntVector labels = cartan_.transpose() * c;
    for (int j = 0; j < n; ++j) {
      IntVector c2 = c;
      c2[j] -= labels[j];
      std::vector<Int> key(c2.data(), c2.data() + n);
      if (seen.insert(key).second) queue.push_back(c2);
    }
  }
  for (const IntVector& c : queue)
    if ((c.array() >= 0).all()) positive_roots_.push_back(c);
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const IntVector& x, const IntVector& y) { return lex_compare(x, y) < 0; });
  if (2 * positive_roots_.size() != queue.size())
    throw internal_error("root system not balanced");

  dim_g_ = static_cast<Int>(n) + root_count();
}

Rational inner_product(const RootDatum& d, const Weight& a, const Weight& b) {
  if (a.rank() != d.rank() || b.rank() != d.rank())
    throw invalid_input("inner_product: rank mismatch");
  Rational acc(0);
  for (int i = 0; i < d.rank(); ++i) {
    if (a.labels[i] == 0) continue;
    Rational row(0);
    for (int j = 0; j < d.rank(); ++j)
      if (b.labels[j] != 0) row += d.form()(i, j) * Rational(b.labels[j]);
    acc += Rational(a.labels[i]) * row;
  }
  return acc;
}

Int level_of(const RootDatum& d, const Weight& w) {
  if (w.rank() != d.rank()) throw invalid_input("level_of: rank mismatch");
  return d.comarks().dot(w.labels);
}

namespace {

// In-place simple reflection on labels.
inline void reflect(const IntMatrix& cartan, IntVector& y, int i) {
  const Int yi = y[i];
  y -= yi * cartan.row(i).transpose();
}

} // namespace

DominantReflection dominant_reflect(const RootDatum& d, const Weight& w) {
  if (w.rank() != d.rank()) throw invalid_input("dominant_reflect: rank mismatch");
  IntVector y = w.labels + IntVector::Ones(d.rank());
  int sign = 1;
  for (bool reduced = false; !reduced;) {
    reduced = true;
    for (int i = 0; i < d.rank(); ++i) {
      if (y[i] < 0) {
        reflect(d.cartan(), y, i);
        sign = -sign;
        reduced = false;
        break;
      }
    }
  }
  for (int i = 0; i < d.rank(); ++i)
    if (y[i] == 0) return {.wall = true};
  return {.wall = false, .weight = Weight(y - IntVector::Ones(d.rank())), .sign = sign};
}

Weight dominant_representative(const RootDatum& d, const Weight& w) {
  IntVector y = w.labels;
  for (bool reduced = false; !reduced;) {
    reduced = true;
    for (int i = 0; i < d.rank(); ++i) {
      if (y[i] < 0) {
        reflect(d.cartan(), y, i);
        reduced = false;
        break;
      }
    }
  }
  return Weight(y);
}

Weight conjugate_weight(const RootDatum& d, const Weight& lambda) {
  if (!lambda.is_dominant()) throw invalid_input("conjugate_weight: weight not dominant");
  return dominant_representative(d, Weight(-lambda.labels));
}

std::vector<Weight> enumerate_level_weights(const RootDatum& d, Int k) {
  if (k < 0) throw invalid_input("negative level");
  std::vector<Weight> out;
  IntVector labels = IntVector::Zero(d.rank());
  auto rec = [&](auto&& self, int i, Int budget) -> void {
    if (i == d.rank()) {
      out.push_back(Weight(labels));
      return;
    }
    const Int comark = d.comarks()[i];
    for (Int v = 0; v * comark <= budget; ++v) {
      labels[i] = v;
      self(self, i + 1, budget - v * comark);
    }
    labels[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

BigInt weyl_dim(const RootDatum& d, const Weight& lambda) {
  if (!lambda.is_dominant()) throw invalid_input("weyl_dim: weight not dominant");
  Rational prod(1);
  for (const IntVector& c : d.positive_roots()) {
    Rational num(0), den(0);
    for (int j = 0; j < d.rank(); ++j) {
      if (c[j] == 0) continue;
      const Rational cd = Rational(c[j]) * d.root_half_norms()[j];
      num += cd * Rational(lambda.labels[j] + 1);
      den += cd;
    }
    prod *= num / den;
  }
  if (!prod.is_integer()) throw internal_error("weyl_dim: non-integral result");
  return prod.num();
}

IntMatrix simple_reflection_matrix(const RootDatum& d, int i) {
  // s_i(y)_j = y_j - y_i A_ij, so the matrix is I - (row_i A)^T e_i^T.
  IntMatrix m = IntMatrix::Identity(d.rank(), d.rank());
  m.col(i) -= d.cartan().row(i).transpose();
  return m;
}

IntMatrix longest_element_matrix(const RootDatum& d, const std::vector<int>& nodes) {
  const int n = d.rank();
  IntVector y = IntVector::Zero(n);
  for (int j : nodes) y[j] = -1;
  IntMatrix m = IntMatrix::Identity(n, n);
  for (bool reduced = false; !reduced;) {
    reduced = true;
    for (int j : nodes) {
      if (y[j] < 0) {
        reflect(d.cartan(), y, j);
        m = simple_reflection_matrix(d, j) * m;
        reduced = false;
        break;
      }
    }
  }
  return m;
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& dominant) {
  if (!dominant.is_dominant()) throw invalid_input("weyl_orbit: weight not dominant");
  std::set<Weight> seen{dominant};
  std::vector<Weight> queue{dominant};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const IntVector y = queue[q].labels;
    for (int i = 0; i < d.rank(); ++i) {
      if (y[i] == 0) continue;
      IntVector y2 = y;
      reflect(d.cartan(), y2, i);
      Weight w(y2);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

std::vector<std::pair<Weight, int>>
signed_weyl_orbit(const RootDatum& d, const Weight& strictly_dominant, std::size_t cap) {
  if (!(strictly_dominant.labels.array() > 0).all())
    throw invalid_input("signed_weyl_orbit: weight not strictly dominant");
  std::map<Weight, int> seen{{strictly_dominant, 1}};
  std::vector<std::pair<Weight, int>> queue{{strictly_dominant, 1}};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [w, sign] = queue[q];
    for (int i = 0; i < d.rank(); ++i) {
      IntVector y2 = w.labels;
      reflect(d.cartan(), y2, i);
      Weight w2(y2);
      if (seen.emplace(w2, -sign).second) {
        queue.emplace_back(w2, -sign);
        if (seen.size() > cap)
          throw resource_limit("Weyl orbit larger than configured cap of " + std::to_string(cap));
      }
    }
  }
  return std::vector<std::pair<Weight, int>>(seen.begin(), seen.end());
}

} // namespace verlinde
