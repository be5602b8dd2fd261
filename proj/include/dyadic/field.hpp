#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyadic/errors.hpp"
#include "dyadic/halfint.hpp"

namespace dyadic {

enum class FieldKind { Rational, Unramified, Ramified };

class Field;

namespace detail {

struct FieldData;

// pi^val * (a + b*theta), the unit part known modulo pi^prec.
struct Repr {
  static constexpr int kZero = 1 << 30;
  int val = kZero;
  int prec = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool is_zero() const { return val == kZero; }
};

}  // namespace detail

// Element of a dyadic field, stored with capped relative precision.
class Elem {
 public:
  Elem() = default;

  Field field() const;
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const { return r_.is_zero(); }
  HalfInt ord() const;
  int valuation() const;
  int rel_precision() const { return r_.prec; }
  Elem unit_part() const;
  Elem with_precision(int k) const;
  // First n pi-adic digits of the unit part. Digit codes index the residue lift set
  // {0, 1} or {0, 1, theta, 1 + theta}.
  std::vector<int> digits(int n) const;
  // Text that re-parses to an equal element.
  std::string str() const;

  Elem pow(long k) const;
  Elem inverse() const;

  friend Elem operator+(const Elem& x, const Elem& y);
  friend Elem operator-(const Elem& x, const Elem& y);
  friend Elem operator*(const Elem& x, const Elem& y);
  friend Elem operator/(const Elem& x, const Elem& y);
  friend Elem operator-(const Elem& x);
  Elem& operator+=(const Elem& y) { return *this = *this + y; }
  Elem& operator-=(const Elem& y) { return *this = *this - y; }
  Elem& operator*=(const Elem& y) { return *this = *this * y; }
  Elem& operator/=(const Elem& y) { return *this = *this / y; }

  // Equality modulo the common known precision.
  friend bool operator==(const Elem& x, const Elem& y);

  const detail::Repr& repr() const { return r_; }
  const detail::FieldData* data() const { return f_.get(); }

 private:
  friend class Field;
  Elem(std::shared_ptr<const detail::FieldData> f, detail::Repr r) : f_(std::move(f)), r_(r) {}

  std::shared_ptr<const detail::FieldData> f_;
  detail::Repr r_;
};

// Square class delta * pi^parity with delta indexing the unit representatives.
struct SqClass {
  int unit = 0;
  int parity = 0;
  friend auto operator<=>(const SqClass&, const SqClass&) = default;
};

// A dyadic field of degree at most 2 over Q2 together with its square-class tables.
class Field {
 public:
  Field() = default;  // no field; only assignable
  bool valid() const { return d_ != nullptr; }
  static Field q2(int precision = 0);
  // Q2(sqrt d); d must not be a square in Q2.
  static Field quadratic(std::int64_t d, int precision = 0);
  // "q2", "q2(sqrt5)", "q2(sqrt(-1))", case-insensitive.
  static Field parse(std::string_view name, int precision = 0);

  FieldKind kind() const;
  std::int64_t radicand() const;  // 1 for Q2
  int e() const;
  int q() const;
  int precision() const;
  int max_precision() const;
  std::string name() const;
  Field with_precision(int k) const;
  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }
  bool same_field(const Field& other) const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(std::int64_t n) const;
  Elem from_rational(std::int64_t num, std::int64_t den) const;
  // sqrt(num/den) when it lies in the field as a rational multiple of 1 or sqrt(d).
  Elem sqrt_rational(std::int64_t num, std::int64_t den) const;
  Elem from_digits(const std::vector<int>& digits) const;
  Elem pi() const;
  Elem rho() const;
  Elem delta() const;
  Elem omega() const;        // 1 + pi
  Elem omega_sharp() const;  // 1 + 4 rho / pi

  // Unit square-class representatives: d(delta) = ord(delta - 1).
  std::vector<Elem> units() const;
  std::vector<Elem> units_defect_one() const;
  std::vector<Elem> units_with_omega_symbol(int sign) const;
  // {(delta, 1) : delta in units} followed by {(delta, 0) : d(delta) = 1}.
  std::vector<std::pair<Elem, int>> pc_set() const;
  int u_e() const { return e() == 1 ? 1 : 0; }

  int num_unit_classes() const;
  int num_classes() const { return 2 * num_unit_classes(); }
  SqClass class_of(const Elem& x) const;
  SqClass class_from_index(int i) const;
  int class_index(SqClass c) const { return c.parity * num_unit_classes() + c.unit; }
  SqClass mul(SqClass a, SqClass b) const;
  SqClass one_class() const;
  SqClass neg_one_class() const;
  Elem rep(SqClass c) const;
  HalfInt defect(SqClass c) const;
  int hilbert(SqClass a, SqClass b) const;

  HalfInt defect(const Elem& c) const;
  int hilbert(const Elem& a, const Elem& b) const;
  std::pair<Elem, int> square_class_rep(const Elem& c) const;
  bool is_square(const Elem& c) const;
  // c^#: (c, c^#) = -1; c must avoid the square and Delta classes.
  Elem sharp(const Elem& c) const;

  const detail::FieldData* data() const { return d_.get(); }
  Elem wrap(const detail::Repr& r) const { return Elem(d_, r); }

 private:
  friend class Elem;
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

}  // namespace dyadic
