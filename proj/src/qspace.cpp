#include "dyadic/qspace.hpp"

#include <algorithm>

namespace dyadic {

SpaceInv space_of_classes(const Field& field, const std::vector<SqClass>& diag) {
  SpaceInv s;
  for (SqClass a : diag) {
    // s(V + <a>) = s(V) (dV, a) (a, a)
    s.hasse *= field.hilbert(s.disc, a) * field.hilbert(a, a);
    s.disc = field.mul(s.disc, a);
    ++s.dim;
  }
  return s;
}

SpaceInv space_of(const Field& field, const std::vector<Elem>& diag) {
  std::vector<SqClass> cls;
  for (const auto& a : diag) {
    if (a.is_zero()) throw DomainError("degenerate space: zero diagonal entry");
    cls.push_back(field.class_of(a));
  }
  return space_of_classes(field, cls);
}

SpaceInv orthogonal_sum(const Field& field, const SpaceInv& v, const SpaceInv& w) {
  return SpaceInv{v.dim + w.dim, field.mul(v.disc, w.disc), v.hasse * w.hasse * field.hilbert(v.disc, w.disc)};
}

bool is_isotropic(const Field& field, const SpaceInv& v) {
  SqClass m1 = field.neg_one_class();
  SqClass one = field.one_class();
  switch (v.dim) {
    case 0:
    case 1:
      return false;
    case 2:
      return v.disc == m1;
    case 3:
      // H + <-D> has discriminant D.
      return v.hasse == space_of_classes(field, {one, m1, field.mul(m1, v.disc)}).hasse;
    case 4:
      return v.disc != one || v.hasse == space_of_classes(field, {one, m1, one, m1}).hasse;
    default:
      return true;
  }
}

namespace {

bool binary_exists(const Field& field, SqClass disc, int hasse) {
  for (int i = 0; i < field.num_classes(); ++i) {
    SqClass a = field.class_from_index(i);
    if (space_of_classes(field, {a, field.mul(a, disc)}).hasse == hasse) return true;
  }
  return false;
}

}  // namespace

bool represents_space(const Field& field, const SpaceInv& v, const SpaceInv& w) {
  int k = v.dim - w.dim;
  if (k < 0) throw DomainError("represents_space: dim W exceeds dim V");
  if (k == 0) return v == w;
  if (k >= 3) return true;
  SqClass du = field.mul(v.disc, w.disc);
  int hu = v.hasse * w.hasse * field.hilbert(w.disc, du);
  if (k == 1) return hu == field.hilbert(du, du);
  return binary_exists(field, du, hu);
}

int codim1_product(const Field& field, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.size() != b.size() + 1) throw DomainError("codim1_product needs dim a = dim b + 1");
  std::vector<SqClass> pa{field.one_class()}, pb{field.one_class()};
  for (const auto& x : a) pa.push_back(field.mul(pa.back(), field.class_of(x)));
  for (const auto& x : b) pb.push_back(field.mul(pb.back(), field.class_of(x)));
  SqClass m1 = field.neg_one_class();
  int prod = 1;
  for (std::size_t k = 1; k <= b.size(); ++k)
    prod *= field.hilbert(field.mul(pa[k], pb[k]), field.mul(m1, field.mul(pa[k + 1], pb[k - 1])));
  return prod;
}

std::vector<SpaceInv> all_spaces(const Field& field, int n) {
  std::vector<SpaceInv> out;
  auto add = [&](const SpaceInv& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  if (n <= 0) {
    out.push_back(SpaceInv{});
  } else if (n == 1) {
    for (int i = 0; i < field.num_classes(); ++i) add(space_of_classes(field, {field.class_from_index(i)}));
  } else if (n == 2) {
    for (int i = 0; i < field.num_classes(); ++i)
      for (int j = 0; j < field.num_classes(); ++j)
        add(space_of_classes(field, {field.class_from_index(i), field.class_from_index(j)}));
  } else {
    for (int i = 0; i < field.num_classes(); ++i)
      for (int h : {1, -1}) add(SpaceInv{n, field.class_from_index(i), h});
  }
  return out;
}

bool space_is_n_universal(const Field& field, const SpaceInv& v, int n) {
  if (v.dim < n) return false;
  for (const auto& w : all_spaces(field, n))
    if (!represents_space(field, v, w)) return false;
  return true;
}

}  // namespace dyadic
