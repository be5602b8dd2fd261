#pragma once

#include <vector>

#include "dyadic/field.hpp"

namespace dyadic {

// Isometry class of a nondegenerate quadratic space: dimension, discriminant
// class and Hasse symbol prod_{i<=j} (a_i, a_j).
struct SpaceInv {
  int dim = 0;
  SqClass disc;
  int hasse = 1;
  friend bool operator==(const SpaceInv&, const SpaceInv&) = default;
};

SpaceInv space_of(const Field& field, const std::vector<Elem>& diag);
SpaceInv space_of_classes(const Field& field, const std::vector<SqClass>& diag);
SpaceInv orthogonal_sum(const Field& field, const SpaceInv& v, const SpaceInv& w);

bool is_isotropic(const Field& field, const SpaceInv& v);

// V ~ W + U for some space U; dim W > dim V is a DomainError.
bool represents_space(const Field& field, const SpaceInv& v, const SpaceInv& w);

// prod_{k=1}^{h} (a_{1,k} b_{1,k}, -a_{1,k+1} b_{1,k-1}) for dim a = h + 1, dim b = h.
int codim1_product(const Field& field, const std::vector<Elem>& a, const std::vector<Elem>& b);

// Every isometry class of dimension n.
std::vector<SpaceInv> all_spaces(const Field& field, int n);
bool space_is_n_universal(const Field& field, const SpaceInv& v, int n);

}  // namespace dyadic
