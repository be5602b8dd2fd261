#include "dyadic/halfint.hpp"

#include <stdexcept>

namespace dyadic {

std::int64_t HalfInt::value() const {
  if (!is_integer()) throw std::logic_error("HalfInt::value on non-integer " + str());
  return twice_ / 2;
}

std::int64_t HalfInt::floor() const {
  if (inf_) throw std::logic_error("HalfInt::floor on infinity");
  return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
}

HalfInt operator+(HalfInt a, HalfInt b) {
  if (a.inf_ || b.inf_) return HalfInt::inf();
  return HalfInt::from_twice(a.twice_ + b.twice_);
}

HalfInt operator-(HalfInt a, HalfInt b) {
  if (b.inf_) throw std::logic_error("HalfInt: subtracting infinity");
  if (a.inf_) return a;
  return HalfInt::from_twice(a.twice_ - b.twice_);
}

HalfInt operator-(HalfInt a) {
  if (a.inf_) throw std::logic_error("HalfInt: negating infinity");
  return HalfInt::from_twice(-a.twice_);
}

std::string HalfInt::str() const {
  if (inf_) return "inf";
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace dyadic
