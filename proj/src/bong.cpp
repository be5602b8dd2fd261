#include "dyadic/bong.hpp"

#include <algorithm>

namespace dyadic {

InvalidBong::InvalidBong(BongViolation v, std::vector<Elem> raw)
    : DomainError("not a good BONG: " + v.condition + " fails at i=" + std::to_string(v.index)),
      violation(std::move(v)),
      entries(std::move(raw)) {}

namespace {

std::vector<HalfInt> pair_defects(const Field& f, const std::vector<SqClass>& cls) {
  std::vector<HalfInt> out;
  for (std::size_t i = 0; i + 1 < cls.size(); ++i)
    out.push_back(f.defect(f.mul(f.neg_one_class(), f.mul(cls[i], cls[i + 1]))));
  return out;
}

HalfInt half_gap(int lo, int hi, int e) { return HalfInt::from_twice(hi - lo + 2 * e); }

}  // namespace

std::optional<BongViolation> Bong::check(const Field& field, const std::vector<Elem>& entries) {
  std::vector<int> R;
  std::vector<SqClass> cls;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_zero()) return BongViolation{static_cast<int>(i) + 1, "a_i != 0"};
    R.push_back(entries[i].valuation());
    cls.push_back(field.class_of(entries[i]));
  }
  auto d = pair_defects(field, cls);
  const int e = field.e();
  const int m = static_cast<int>(entries.size());
  for (int i = 1; i < m; ++i) {
    int diff = R[i] - R[i - 1];
    if (diff < -2 * e) return BongViolation{i, "R_{i+1}-R_i >= -2e"};
    if (HalfInt(diff) + d[i - 1] < HalfInt(0)) return BongViolation{i, "R_{i+1}-R_i+d(-a_i a_{i+1}) >= 0"};
    if (i + 1 < m && R[i - 1] > R[i + 1]) return BongViolation{i, "R_i <= R_{i+2}"};
  }
  return std::nullopt;
}

std::vector<HalfInt> alpha_full_minimum(int e, const std::vector<int>& R, const std::vector<HalfInt>& pair_d) {
  const int m = static_cast<int>(R.size());
  std::vector<HalfInt> out;
  for (int i = 1; i < m; ++i) {
    // R[k-1] = R_k, pair_d[j-1] = d(-a_j a_{j+1})
    HalfInt best = half_gap(R[i - 1], R[i], e);
    for (int j = 1; j <= i; ++j) best = min(best, HalfInt(R[i] - R[j - 1]) + pair_d[j - 1]);
    for (int j = i; j <= m - 1; ++j) best = min(best, HalfInt(R[j] - R[i - 1]) + pair_d[j - 1]);
    out.push_back(best);
  }
  return out;
}

std::vector<HalfInt> alpha_recursive(int e, const std::vector<int>& R, const std::vector<HalfInt>& pair_d) {
  const int m = static_cast<int>(R.size());
  std::vector<HalfInt> al(std::max(0, m - 1), HalfInt::inf());
  for (int round = 0; round <= 4 * m + 4; ++round) {
    bool changed = false;
    for (int i = 1; i < m; ++i) {
      HalfInt bracket = pair_d[i - 1];
      if (i - 1 >= 1) bracket = min(bracket, al[i - 2]);
      if (i + 1 <= m - 1) bracket = min(bracket, al[i]);
      HalfInt v = min(half_gap(R[i - 1], R[i], e), HalfInt(R[i] - R[i - 1]) + bracket);
      if (v != al[i - 1]) {
        al[i - 1] = v;
        changed = true;
      }
    }
    if (!changed) return al;
  }
  throw std::logic_error("alpha recursion did not stabilise");
}

Bong Bong::make(const Field& field, std::vector<Elem> entries) {
  for (const auto& x : entries)
    if (!x.valid() || !x.field().same_field(field)) throw DomainError("BONG entry from another field");
  if (auto v = check(field, entries)) throw InvalidBong(*v, entries);
  Bong b;
  b.field_ = field;
  b.a_ = std::move(entries);
  b.prefix_.push_back(field.one_class());
  b.prefix_space_.push_back(SpaceInv{});
  for (const auto& x : b.a_) {
    b.r_.push_back(x.valuation());
    SqClass c = field.class_of(x);
    b.cls_.push_back(c);
    b.prefix_.push_back(field.mul(b.prefix_.back(), c));
    b.prefix_space_.push_back(orthogonal_sum(field, b.prefix_space_.back(), SpaceInv{1, c, field.hilbert(c, c)}));
  }
  b.pair_d_ = pair_defects(field, b.cls_);
  b.alpha_ = alpha_full_minimum(field.e(), b.r_, b.pair_d_);
  if (alpha_recursive(field.e(), b.r_, b.pair_d_) != b.alpha_)
    throw std::logic_error("alpha: full minimum and concise form disagree on " + b.str());
  return b;
}

const Elem& Bong::a(int i) const {
  if (i < 1 || i > rank()) throw DomainError("entry index out of range");
  return a_[i - 1];
}

int Bong::R(int i) const {
  if (i < 1 || i > rank()) throw DomainError("R index out of range");
  return r_[i - 1];
}

HalfInt Bong::alpha(int i) const {
  if (i < 1 || i >= rank()) throw DomainError("alpha index out of range");
  return alpha_[i - 1];
}

SqClass Bong::entry_class(int i) const {
  if (i < 1 || i > rank()) throw DomainError("entry index out of range");
  return cls_[i - 1];
}

SqClass Bong::prefix(int i) const {
  if (i < 0 || i > rank()) throw DomainError("prefix index out of range");
  return prefix_[i];
}

SqClass Bong::product(int i, int j) const {
  if (i < 1 || j > rank() || i > j + 1) throw DomainError("product index out of range");
  return field_.mul(prefix_[j], prefix_[i - 1]);
}

HalfInt Bong::pair_defect(int i) const {
  if (i < 1 || i >= rank()) throw DomainError("pair index out of range");
  return pair_d_[i - 1];
}

HalfInt Bong::d_bracket(SqClass c, int i, int j) const {
  const int m = rank();
  if (i - 1 < 0 || i - 1 > j || j > m) throw DomainError("d[] index out of range");
  HalfInt v = field_.defect(field_.mul(c, product(i, j)));
  if (i - 1 != 0 && i - 1 != m) v = min(v, alpha_[i - 2]);
  if (j != 0 && j != m) v = min(v, alpha_[j - 1]);
  return v;
}

HalfInt Bong::d_bracket(const Elem& c, int i, int j) const { return d_bracket(field_.class_of(c), i, j); }

SpaceInv Bong::prefix_space(int i) const {
  if (i < 0 || i > rank()) throw DomainError("prefix index out of range");
  return prefix_space_[i];
}

bool Bong::is_integral() const { return rank() == 0 || r_[0] >= 0; }

bool Bong::is_classic() const { return is_integral() && (rank() < 2 || r_[0] + r_[1] >= 0); }

HalfInt Bong::scale_order() const {
  if (rank() == 0) return HalfInt::inf();
  if (rank() == 1) return HalfInt(r_[0]);
  return min(HalfInt(r_[0]), HalfInt::from_twice(r_[0] + r_[1]));
}

Elem Bong::mu(int i) const { return a(i) / field_.pi().pow(R(i)); }

Elem Bong::delta(int i) const {
  if (i < 1 || i > rank()) throw DomainError("delta index out of range");
  if (i % 2 != 0) throw DomainError("delta_i is defined for even i only");
  SqClass c = prefix_[i];
  if ((i / 2) % 2 == 1) c = field_.mul(c, field_.neg_one_class());
  return field_.rep(SqClass{c.unit, 0});
}

std::string Bong::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? ", " : "") + a_[i].str();
  return s + ">";
}

std::vector<Elem> hyperbolic_entries(const Field& field, int l, int copies) {
  std::vector<Elem> out;
  Elem p = field.pi().pow(l);
  for (int k = 0; k < copies; ++k) {
    out.push_back(p);
    out.push_back(-p.inverse());
  }
  return out;
}

Bong hyperbolic(const Field& field, int l, int copies) { return Bong::make(field, hyperbolic_entries(field, l, copies)); }

Bong concat(const Bong& x, const Bong& y) {
  std::vector<Elem> all = x.entries();
  all.insert(all.end(), y.entries().begin(), y.entries().end());
  return Bong::make(x.field(), all);
}

}  // namespace dyadic
