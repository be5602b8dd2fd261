#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace dyadic {

// Value in (1/2)Z or +infinity. Used for orders, defects and the alpha invariants.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t v) : twice_(2 * v) {}  // NOLINT: implicit from integers

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static constexpr HalfInt inf() {
    HalfInt h;
    h.inf_ = true;
    return h;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_integer() const { return !inf_ && twice_ % 2 == 0; }
  constexpr std::int64_t twice() const { return twice_; }
  // Integer value; callers check is_integer() first.
  std::int64_t value() const;
  std::int64_t floor() const;

  friend HalfInt operator+(HalfInt a, HalfInt b);
  friend HalfInt operator-(HalfInt a, HalfInt b);
  friend HalfInt operator-(HalfInt a);

  friend constexpr bool operator==(HalfInt a, HalfInt b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.twice_ == b.twice_);
  }
  friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.twice_ <=> b.twice_;
  }

  // "inf", "3", "-5/2"
  std::string str() const;

 private:
  std::int64_t twice_ = 0;
  bool inf_ = false;
};

inline HalfInt min(HalfInt a, HalfInt b) { return b < a ? b : a; }
inline HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

}  // namespace dyadic
