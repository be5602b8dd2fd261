#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyadic/field.hpp"
#include "dyadic/qspace.hpp"

namespace dyadic {

struct BongViolation {
  int index = 0;  // 1-based position of the first entry involved
  std::string condition;
};

struct InvalidBong : DomainError {
  InvalidBong(BongViolation v, std::vector<Elem> raw);
  BongViolation violation;
  std::vector<Elem> entries;
};

// Lattice <a_1, ..., a_m> relative to a good BONG. Indices are 1-based throughout,
// matching R_i, alpha_i and the products a_{i,j}.
class Bong {
 public:
  Bong() = default;
  // Throws InvalidBong on the first violated well-definedness condition.
  static Bong make(const Field& field, std::vector<Elem> entries);
  static std::optional<BongViolation> check(const Field& field, const std::vector<Elem>& entries);

  const Field& field() const { return field_; }
  int rank() const { return static_cast<int>(a_.size()); }
  const std::vector<Elem>& entries() const { return a_; }
  const Elem& a(int i) const;
  int R(int i) const;
  HalfInt alpha(int i) const;
  const std::vector<HalfInt>& alphas() const { return alpha_; }

  SqClass entry_class(int i) const;
  SqClass prefix(int i) const;        // a_{1,i}; prefix(0) = 1
  SqClass product(int i, int j) const;  // a_{i,j}; empty product is 1
  HalfInt pair_defect(int i) const;   // d(-a_i a_{i+1})
  HalfInt d_bracket(SqClass c, int i, int j) const;  // d[c a_{i,j}]
  HalfInt d_bracket(const Elem& c, int i, int j) const;

  SpaceInv space() const { return prefix_space(rank()); }
  SpaceInv prefix_space(int i) const;

  bool is_integral() const;
  bool is_classic() const;
  HalfInt scale_order() const;  // ord s(L)

  Elem mu(int i) const;
  Elem delta(int i) const;  // even i only

  std::string str() const;

 private:
  Field field_;
  std::vector<Elem> a_;
  std::vector<int> r_;
  std::vector<SqClass> cls_;
  std::vector<SqClass> prefix_;
  std::vector<HalfInt> pair_d_;
  std::vector<HalfInt> alpha_;
  std::vector<SpaceInv> prefix_space_;
};

// alpha_i as the full minimum over all pairs, and as the greatest fixed point of
// alpha_i = min{(R_{i+1}-R_i)/2 + e, R_{i+1}-R_i + d[-a_i a_{i+1}]}.
std::vector<HalfInt> alpha_full_minimum(int e, const std::vector<int>& R, const std::vector<HalfInt>& pair_d);
std::vector<HalfInt> alpha_recursive(int e, const std::vector<int>& R, const std::vector<HalfInt>& pair_d);

// <pi^l, -pi^{-l}> repeated.
std::vector<Elem> hyperbolic_entries(const Field& field, int l, int copies);
Bong hyperbolic(const Field& field, int l, int copies);
Bong concat(const Bong& x, const Bong& y);

// Good BONG of the lattice with the given Gram matrix.
Bong bong_from_gram(const Field& field, const std::vector<std::vector<Elem>>& gram);

}  // namespace dyadic
