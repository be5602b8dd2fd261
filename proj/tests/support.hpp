#pragma once

// Brute-force oracles and generators shared by the unit and acceptance tests. The residue
// arithmetic here is written from the field's defining polynomial only; it does not use the
// library's square-class tables.

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <string>
#include <utility>
#include <vector>

#include "dyadic/bong.hpp"
#include "dyadic/field.hpp"
#include "dyadic/halfint.hpp"

namespace oracle {

using dyadic::Elem;
using dyadic::Field;
using dyadic::FieldKind;
using dyadic::HalfInt;

inline const std::vector<std::string>& field_names() {
  static const std::vector<std::string> names{"q2", "q2(sqrt5)", "q2(sqrt2)", "q2(sqrt3)", "q2(sqrt(-1))"};
  return names;
}

// a + b*theta with theta^2 = t*theta + s, coefficients mod 2^64.
struct V {
  std::uint64_t a = 0, b = 0;
  friend bool operator<(const V& x, const V& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); }
};

class Residues {
 public:
  explicit Residues(const Field& f) : kind_(f.kind()), e_(f.e()) {
    const std::int64_t d = f.radicand();
    if (kind_ == FieldKind::Unramified) {
      t_ = 1;
      s_ = static_cast<std::uint64_t>((d - 1) / 4);
    } else if (kind_ == FieldKind::Ramified) {
      if (d % 2 == 0) {
        t_ = 0;
        s_ = static_cast<std::uint64_t>(d);
      } else {
        t_ = 2;
        s_ = static_cast<std::uint64_t>(d - 1);
      }
    }
  }

  int e() const { return e_; }
  V add(V x, V y) const { return {x.a + y.a, x.b + y.b}; }
  V sub(V x, V y) const { return {x.a - y.a, x.b - y.b}; }
  V mul(V x, V y) const { return {x.a * y.a + s_ * x.b * y.b, x.a * y.b + x.b * y.a + t_ * x.b * y.b}; }
  V pi() const { return kind_ == FieldKind::Ramified ? V{0, 1} : V{2, 0}; }

  int ord(V x) const {
    auto v2 = [](std::uint64_t c) { return c == 0 ? 1000 : std::countr_zero(c); };
    if (kind_ == FieldKind::Ramified) return std::min(2 * v2(x.a), 2 * v2(x.b) + 1);
    return std::min(v2(x.a), v2(x.b));
  }

  V reduce(V x, int k) const {
    auto low = [](std::uint64_t c, int bits) { return bits >= 64 ? c : c & ((std::uint64_t{1} << bits) - 1); };
    if (kind_ == FieldKind::Ramified) return {low(x.a, (k + 1) / 2), low(x.b, k / 2)};
    return {low(x.a, k), low(x.b, k)};
  }

  // Every residue class mod pi^k.
  std::vector<V> all(int k) const {
    int abits = k, bbits = kind_ == FieldKind::Rational ? 0 : k;
    if (kind_ == FieldKind::Ramified) abits = (k + 1) / 2, bbits = k / 2;
    std::vector<V> out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << abits); ++a)
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << bbits); ++b) out.push_back({a, b});
    return out;
  }

  V from_elem(const Elem& x) const {
    V v{x.repr().a, x.repr().b};
    for (int i = 0; i < x.repr().val; ++i) v = mul(v, pi());
    return v;
  }

 private:
  FieldKind kind_;
  int e_;
  std::uint64_t t_ = 0, s_ = 0;
};

// d(u) for a unit u by maximising ord(u - w^2) over all residues w mod pi^{2e+1}.
inline HalfInt unit_defect(const Residues& r, V u) {
  const int cap = 2 * r.e() + 1;
  int best = 0;
  for (V w : r.all(cap)) best = std::max(best, std::min(cap, r.ord(r.sub(u, r.mul(w, w)))));
  return best >= cap ? HalfInt::inf() : HalfInt(best);
}

// (a, b) from primitive solutions of z^2 = a x^2 + b y^2, for a, b of order 0 or 1.
class HilbertOracle {
 public:
  explicit HilbertOracle(const Field& f) : r_(f), N_(4 * f.e() + 4), near_zero_(N_ - 2 * f.e() - 1) {
    const int cap = 2 * r_.e() + 1;
    std::vector<V> units;
    for (V u : r_.all(cap))
      if (r_.ord(u) == 0) units.push_back(u);
    squares_.resize(near_zero_);
    V shift{1, 0};
    for (int k = 0; k < near_zero_; k += 2) {
      for (V u : units) {
        V w = r_.mul(shift, u);
        squares_[k].insert(key(r_.reduce(r_.mul(w, w), k + cap)));
      }
      shift = r_.mul(shift, r_.pi());
    }
    ys_ = r_.all(N_);
    for (V x : ys_)
      if (r_.ord(x) >= 1) xs_.push_back(x);
  }

  int operator()(V a, V b) const {
    for (V y : ys_)
      if (good(r_.add(a, r_.mul(b, r_.mul(y, y))))) return 1;
    for (V x : xs_)
      if (good(r_.add(r_.mul(a, r_.mul(x, x)), b))) return 1;
    return -1;
  }
  const Residues& residues() const { return r_; }

 private:
  bool good(V v) const {
    const int k = r_.ord(v);
    if (k >= near_zero_) return true;
    if (k % 2 != 0) return false;
    return squares_[k].count(key(r_.reduce(v, k + 2 * r_.e() + 1))) > 0;
  }

  Residues r_;
  int N_, near_zero_;
  static std::uint64_t key(V v) { return v.a | (v.b << 32); }

  std::vector<std::unordered_set<std::uint64_t>> squares_;
  std::vector<V> ys_, xs_;
};

// Isotropy of a diagonal form over Q2 with integer coefficients of order <= 1: a primitive
// vector with one coordinate 1 and Q(v) = 0 mod 32 lifts by Hensel (dQ/dx_i has order <= 2).
inline bool q2_isotropic_brute(const std::vector<std::int64_t>& diag) {
  const int n = static_cast<int>(diag.size());
  const std::int64_t mod = 32;
  for (int lead = 0; lead < n; ++lead) {
    std::vector<std::int64_t> v(n, 0);
    std::int64_t total = 1;
    for (int j = 0; j < n - 1; ++j) total *= mod;
    for (std::int64_t code = 0; code < total; ++code) {
      std::int64_t c = code;
      bool ok = true;
      for (int j = 0; j < n; ++j) {
        if (j == lead) {
          v[j] = 1;
          continue;
        }
        v[j] = c % mod;
        c /= mod;
        if (j < lead && v[j] % 2 != 0) ok = false;  // earlier coordinates non-units
      }
      if (!ok) continue;
      std::int64_t q = 0;
      for (int j = 0; j < n; ++j) q += diag[j] * v[j] * v[j];
      if (q % mod == 0) return true;
    }
  }
  return false;
}

// Random valid BONG with entries delta*pi^R, delta from the unit representatives.
inline dyadic::Bong random_valid_bong(const Field& f, std::mt19937_64& rng, int min_rank = 2, int max_rank = 7,
                                      bool r1_zero = false) {
  const int e = f.e();
  const auto units = f.units();
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int boundary[] = {-2 * e, 2 - 2 * e, 2 * e - 2, 2 * e, 2 * e + 1, 0, 1, -1};
  for (;;) {
    const int m = uni(min_rank, max_rank);
    std::vector<Elem> entries;
    int R = r1_zero ? 0 : uni(-2 * e, 2 * e);
    for (int i = 0; i < m; ++i) {
      if (i > 0) R += uni(0, 2) == 0 ? boundary[uni(0, 7)] : uni(-2 * e, 3 * e);
      entries.push_back(units[uni(0, static_cast<int>(units.size()) - 1)] * f.pi().pow(R));
    }
    if (!dyadic::Bong::check(f, entries)) return dyadic::Bong::make(f, entries);
  }
}

// Violations of the R_i / alpha_i propositions and of the two alpha formulas on one lattice.
inline std::vector<std::string> proposition_violations(const dyadic::Bong& b) {
  using dyadic::HalfInt;
  const Field& f = b.field();
  const int e = f.e();
  const int m = b.rank();
  std::vector<std::string> out;
  auto expect = [&](bool ok, const std::string& what, int i) {
    if (!ok) out.push_back(what + " at i=" + std::to_string(i) + " for " + b.str());
  };
  std::vector<int> R;
  std::vector<HalfInt> pd;
  for (int i = 1; i <= m; ++i) R.push_back(b.R(i));
  for (int i = 1; i < m; ++i) pd.push_back(b.pair_defect(i));
  expect(b.alphas() == dyadic::alpha_full_minimum(e, R, pd), "alpha full minimum", 0);
  expect(b.alphas() == dyadic::alpha_recursive(e, R, pd), "alpha concise formula", 0);

  for (int i = 1; i < m; ++i) {
    const int gap = b.R(i + 1) - b.R(i);
    const HalfInt a = b.alpha(i);
    const HalfInt half = HalfInt::from_twice(gap) + HalfInt(e);
    expect((gap > 2 * e) == (a > HalfInt(2 * e)) && (gap == 2 * e) == (a == HalfInt(2 * e)), "2.3(i)", i);
    if (gap >= 2 * e || gap == -2 * e || gap == 2 - 2 * e || gap == 2 * e - 2) expect(a == half, "2.3(ii)", i);
    if (gap <= 2 * e) {
      expect(a >= HalfInt(gap), "2.3(iii) bound", i);
      expect((a == HalfInt(gap)) == (gap == 2 * e || gap % 2 != 0), "2.3(iii) equality", i);
    }
    if (gap % 2 != 0) expect(a == dyadic::min(half, HalfInt(gap)) && gap > 0, "2.3(iv)", i);
    if (i + 1 < m) {
      expect(HalfInt(b.R(i)) + a <= HalfInt(b.R(i + 1)) + b.alpha(i + 1), "2.3(v) R+alpha", i);
      expect(HalfInt(-b.R(i + 1)) + a >= HalfInt(-b.R(i + 2)) + b.alpha(i + 1), "2.3(v) -R+alpha", i);
    }
    for (int j = i; j < m; ++j)
      if (b.R(i) + b.R(i + 1) == b.R(j) + b.R(j + 1))
        for (int k = i; k <= j; ++k) expect(HalfInt(b.R(k)) + b.alpha(k) == HalfInt(b.R(i)) + a, "2.3(vi)", k);

    expect(!a.is_inf() && a >= HalfInt(0) && (a > HalfInt(2 * e) || a.is_integer()), "2.4(i)", i);
    expect((a == HalfInt(0)) == (gap == -2 * e), "2.4(ii)", i);
    const HalfInt br = b.d_bracket(f.neg_one_class(), i, i + 1);
    const bool even_window = gap % 2 == 0 && gap >= 4 - 2 * e && gap <= 0;
    expect((a == HalfInt(1)) == (gap == 2 - 2 * e || gap == 1 || (even_window && br == HalfInt(1 - gap))), "2.4(iii)", i);
    if (a == HalfInt(0)) {
      const dyadic::SqClass c = f.mul(f.neg_one_class(), b.product(i, i + 1));
      expect(b.pair_defect(i) >= br && br >= HalfInt(2 * e), "2.4(iv) defects", i);
      expect(c == f.one_class() || c == f.class_of(f.delta()), "2.4(iv) class", i);
    }
    if (a == HalfInt(1)) {
      expect(br >= HalfInt(1 - gap), "2.4(v) bound", i);
      if (gap != 2 - 2 * e) expect(br == HalfInt(1 - gap), "2.4(v) equality", i);
    }
  }

  if (m >= 1 && b.R(1) == 0) {
    for (int j = 1; j <= m; j += 2)
      if (b.R(j) == 0)
        for (int i = 1; i <= j; ++i) expect((i % 2 == 0 || b.R(i) == 0) && b.R(i) % 2 == 0, "2.5(i)", i);
    for (int j = 2; j <= m; j += 2)
      if (b.R(j) == -2 * e)
        for (int i = 2; i <= j; i += 2)
          expect(b.R(i - 1) == 0 && b.R(i) == -2 * e && b.pair_defect(i - 1) >= HalfInt(2 * e), "2.5(ii)", i);
  }
  return out;
}

}  // namespace oracle
