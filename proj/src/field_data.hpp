#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyadic/field.hpp"

namespace dyadic::detail {

using u64 = std::uint64_t;

// Arithmetic in O = Z2[theta] / 2^64 with theta^2 = p*theta + c.
// Ramified fields use theta = pi (Eisenstein), unramified fields theta = (1 + sqrt d)/2.
struct Ring {
  FieldKind kind = FieldKind::Rational;
  int e = 1;
  int cap = 60;
  u64 p = 0;
  u64 c = 0;
  u64 half_c_inv = 0;

  void mask(u64& a, u64& b, int k) const;
  bool pi_divides(u64 a, u64 b) const;
  void times_pi(u64& a, u64& b) const;
  void div_pi(u64& a, u64& b) const;
  std::pair<u64, u64> mul(u64 a, u64 b, u64 x, u64 y) const;
  std::pair<u64, u64> unit_inverse(u64 a, u64 b) const;
  int residue(u64 a, u64 b) const;
  std::pair<u64, u64> lift(int code) const;
  int raw_ord(u64 a, u64 b, int limit) const;
  u64 key(u64 a, u64 b, int k) const;
  std::pair<u64, u64> from_digits(const std::vector<int>& digits) const;

  // pi^v0 * (a + b theta) known modulo pi^(v0 + k).
  Repr normalize(int v0, u64 a, u64 b, int k) const;
  Repr add(const Repr& x, const Repr& y) const;
  Repr neg(const Repr& x) const;
  Repr mul(const Repr& x, const Repr& y) const;
  Repr inv(const Repr& x) const;
  Repr truncate(const Repr& x, int k) const;
};

u64 inverse_odd(u64 n);

struct FieldData {
  Ring ring;
  FieldKind kind = FieldKind::Rational;
  std::int64_t d = 1;
  int e = 1;
  int q = 2;
  int precision = 9;

  Repr one, two, pi, sqrt_d, rho, delta, omega, omega_sharp;

  int num_units = 0;
  std::unordered_map<u64, int> unit_class;  // key of a unit modulo pi^(2e+1)
  std::vector<Repr> unit_rep;
  std::vector<HalfInt> unit_defect;
  std::vector<int> unit_mul;
  std::vector<signed char> hilbert;  // num_classes x num_classes
  int neg_one_unit = 0;

  int num_classes() const { return 2 * num_units; }
  SqClass mul(SqClass x, SqClass y) const {
    return {unit_mul[x.unit * num_units + y.unit], x.parity ^ y.parity};
  }
  int index(SqClass x) const { return x.parity * num_units + x.unit; }
  SqClass classify(const Repr& x) const;
};

bool same_field(const FieldData* a, const FieldData* b);

}  // namespace dyadic::detail
