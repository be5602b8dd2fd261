#include <algorithm>
#include <string>

#include "field_data.hpp"

namespace dyadic {
namespace detail {

namespace {

u64 low_mask(int bits) {
  if (bits <= 0) return 0;
  if (bits >= 64) return ~u64{0};
  return (u64{1} << bits) - 1;
}

}  // namespace

u64 inverse_odd(u64 n) {
  u64 x = n;  // correct to 3 bits for odd n
  for (int i = 0; i < 6; ++i) x *= 2 - n * x;
  return x;
}

void Ring::mask(u64& a, u64& b, int k) const {
  switch (kind) {
    case FieldKind::Rational:
      a &= low_mask(k);
      b = 0;
      break;
    case FieldKind::Unramified:
      a &= low_mask(k);
      b &= low_mask(k);
      break;
    case FieldKind::Ramified:
      a &= low_mask((k + 1) / 2);
      b &= low_mask(k / 2);
      break;
  }
}

bool Ring::pi_divides(u64 a, u64 b) const {
  if (kind == FieldKind::Unramified) return (a & 1) == 0 && (b & 1) == 0;
  return (a & 1) == 0;
}

void Ring::times_pi(u64& a, u64& b) const {
  if (kind == FieldKind::Ramified) {
    u64 na = c * b;
    u64 nb = a + p * b;
    a = na;
    b = nb;
  } else {
    a <<= 1;
    b <<= 1;
  }
}

void Ring::div_pi(u64& a, u64& b) const {
  if (kind == FieldKind::Ramified) {
    // 1/pi = (pi - p)/c
    u64 h = (a >> 1) * half_c_inv;
    a = b - p * h;
    b = h;
  } else {
    a >>= 1;
    b >>= 1;
  }
}

std::pair<u64, u64> Ring::mul(u64 a, u64 b, u64 x, u64 y) const {
  u64 bb = b * y;
  return {a * x + c * bb, a * y + b * x + p * bb};
}

std::pair<u64, u64> Ring::unit_inverse(u64 a, u64 b) const {
  u64 norm = a * a + p * a * b - c * b * b;
  u64 ni = inverse_odd(norm);
  return {(a + p * b) * ni, (u64{0} - b) * ni};
}

int Ring::residue(u64 a, u64 b) const {
  if (kind == FieldKind::Unramified) return static_cast<int>((a & 1) | ((b & 1) << 1));
  return static_cast<int>(a & 1);
}

std::pair<u64, u64> Ring::lift(int code) const {
  if (kind == FieldKind::Unramified) return {static_cast<u64>(code & 1), static_cast<u64>(code >> 1)};
  return {static_cast<u64>(code & 1), 0};
}

int Ring::raw_ord(u64 a, u64 b, int limit) const {
  int v = 0;
  while (v < limit && pi_divides(a, b)) {
    div_pi(a, b);
    ++v;
  }
  return v;
}

u64 Ring::key(u64 a, u64 b, int k) const {
  mask(a, b, k);
  return a | (b << 32);
}

std::pair<u64, u64> Ring::from_digits(const std::vector<int>& digits) const {
  u64 a = 0, b = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    times_pi(a, b);
    auto [la, lb] = lift(*it);
    a += la;
    b += lb;
  }
  return {a, b};
}

Repr Ring::normalize(int v0, u64 a, u64 b, int k) const {
  while (k > 0 && pi_divides(a, b)) {
    div_pi(a, b);
    ++v0;
    --k;
  }
  if (k <= 0) return Repr{};
  k = std::min(k, cap);
  mask(a, b, k);
  return Repr{v0, k, a, b};
}

Repr Ring::add(const Repr& x, const Repr& y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int v0 = std::min(x.val, y.val);
  int k = std::min(x.val + x.prec, y.val + y.prec) - v0;
  u64 a = 0, b = 0;
  for (const Repr* t : {&x, &y}) {
    int shift = t->val - v0;
    if (shift >= k) continue;
    u64 ta = t->a, tb = t->b;
    for (int i = 0; i < shift; ++i) times_pi(ta, tb);
    a += ta;
    b += tb;
  }
  return normalize(v0, a, b, k);
}

Repr Ring::neg(const Repr& x) const {
  if (x.is_zero()) return x;
  Repr r = x;
  r.a = u64{0} - r.a;
  r.b = u64{0} - r.b;
  mask(r.a, r.b, r.prec);
  return r;
}

Repr Ring::mul(const Repr& x, const Repr& y) const {
  if (x.is_zero() || y.is_zero()) return Repr{};
  auto [a, b] = mul(x.a, x.b, y.a, y.b);
  int k = std::min(x.prec, y.prec);
  mask(a, b, k);
  return Repr{x.val + y.val, k, a, b};
}

Repr Ring::inv(const Repr& x) const {
  if (x.is_zero()) throw DomainError("division by zero");
  auto [a, b] = unit_inverse(x.a, x.b);
  mask(a, b, x.prec);
  return Repr{-x.val, x.prec, a, b};
}

Repr Ring::truncate(const Repr& x, int k) const {
  if (x.is_zero() || k >= x.prec) return x;
  if (k <= 0) throw PrecisionError("truncating to non-positive precision");
  Repr r = x;
  r.prec = k;
  mask(r.a, r.b, k);
  return r;
}

bool same_field(const FieldData* a, const FieldData* b) {
  return a == b || (a && b && a->kind == b->kind && a->d == b->d);
}

}  // namespace detail

namespace {

const detail::FieldData* common(const Elem& x, const Elem& y) {
  if (!x.valid() || !y.valid()) throw DomainError("operation on an element without a field");
  if (!detail::same_field(x.data(), y.data())) throw DomainError("elements of different fields");
  return x.data();
}

// Symmetric representative of a modulo 2^bits.
std::int64_t signed_rep(detail::u64 a, int bits) {
  if (bits <= 0) return 0;
  if (bits >= 63) return static_cast<std::int64_t>(a);
  detail::u64 m = detail::u64{1} << bits;
  a &= m - 1;
  if (a >= m / 2) return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(m);
  return static_cast<std::int64_t>(a);
}

std::string times_power(const std::string& unit, bool unit_is_atom, const std::string& base, int v) {
  if (v == 0) return unit;
  std::string u = unit_is_atom ? unit : "(" + unit + ")";
  std::string pw = std::abs(v) == 1 ? base : base + "^" + std::to_string(std::abs(v));
  if (v > 0) return unit == "1" ? pw : u + "*" + pw;
  return u + "/" + pw;
}

std::string linear(std::int64_t x, std::int64_t y, const std::string& sym) {
  if (y == 0) return std::to_string(x);
  std::string ys = y == 1 ? sym : y == -1 ? "-" + sym : std::to_string(y) + "*" + sym;
  if (x == 0) return ys;
  return std::to_string(x) + (y > 0 ? "+" : "") + ys;
}

}  // namespace

Field Elem::field() const {
  if (!f_) throw DomainError("element without a field");
  return Field(f_);
}

HalfInt Elem::ord() const { return is_zero() ? HalfInt::inf() : HalfInt(r_.val); }

int Elem::valuation() const {
  if (is_zero()) throw DomainError("valuation of zero");
  return r_.val;
}

Elem Elem::unit_part() const {
  if (is_zero()) throw DomainError("unit part of zero");
  detail::Repr r = r_;
  r.val = 0;
  return Elem(f_, r);
}

Elem Elem::with_precision(int k) const { return Elem(f_, f_->ring.truncate(r_, k)); }

std::vector<int> Elem::digits(int n) const {
  std::vector<int> out;
  if (is_zero()) return std::vector<int>(n, 0);
  const auto& ring = f_->ring;
  detail::u64 a = r_.a, b = r_.b;
  for (int i = 0; i < n; ++i) {
    if (i >= r_.prec) throw PrecisionError("digit beyond known precision");
    int code = ring.residue(a, b);
    out.push_back(code);
    auto [la, lb] = ring.lift(code);
    a -= la;
    b -= lb;
    ring.div_pi(a, b);
  }
  return out;
}

std::string Elem::str() const {
  if (!f_) return "<none>";
  if (is_zero()) return "0";
  const auto& fd = *f_;
  int k = r_.prec;
  switch (fd.kind) {
    case FieldKind::Rational: {
      std::string u = std::to_string(signed_rep(r_.a, k));
      return times_power(u, true, "2", r_.val);
    }
    case FieldKind::Ramified: {
      std::int64_t x = signed_rep(r_.a, (k + 1) / 2);
      std::int64_t y = signed_rep(r_.b, k / 2);
      return times_power(linear(x, y, "pi"), y == 0, "pi", r_.val);
    }
    case FieldKind::Unramified: {
      // a + b*theta = (2a + b + b*sqrt d)/2
      std::int64_t x = signed_rep(r_.a, k);
      std::int64_t y = signed_rep(r_.b, k);
      std::string sym = "sqrt(" + std::to_string(fd.d) + ")";
      std::string u;
      bool atom = true;
      if (y % 2 == 0) {
        u = linear(x + y / 2, y / 2, sym);
        atom = y == 0;
      } else {
        u = "(" + linear(2 * x + y, y, sym) + ")/2";
        atom = false;
      }
      return times_power(u, atom, "2", r_.val);
    }
  }
  return "?";
}

Elem Elem::pow(long k) const {
  if (!f_) throw DomainError("element without a field");
  Elem base = k < 0 ? inverse() : *this;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Elem result(f_, f_->one);
  while (n) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Elem Elem::inverse() const {
  if (!f_) throw DomainError("element without a field");
  return Elem(f_, f_->ring.inv(r_));
}

Elem operator+(const Elem& x, const Elem& y) {
  const auto* f = common(x, y);
  return Elem(x.f_, f->ring.add(x.r_, y.r_));
}

Elem operator-(const Elem& x, const Elem& y) {
  const auto* f = common(x, y);
  return Elem(x.f_, f->ring.add(x.r_, f->ring.neg(y.r_)));
}

Elem operator*(const Elem& x, const Elem& y) {
  const auto* f = common(x, y);
  return Elem(x.f_, f->ring.mul(x.r_, y.r_));
}

Elem operator/(const Elem& x, const Elem& y) {
  const auto* f = common(x, y);
  return Elem(x.f_, f->ring.mul(x.r_, f->ring.inv(y.r_)));
}

Elem operator-(const Elem& x) {
  if (!x.f_) throw DomainError("element without a field");
  return Elem(x.f_, x.f_->ring.neg(x.r_));
}

bool operator==(const Elem& x, const Elem& y) {
  if (!x.valid() && !y.valid()) return true;
  return (x - y).is_zero();
}

}  // namespace dyadic
