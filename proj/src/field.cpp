#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <map>
#include <string>

#include "field_data.hpp"

namespace dyadic {

using detail::FieldData;
using detail::Repr;
using detail::Ring;
using detail::u64;

namespace {

// All digit strings of length len over {0..q-1}, position 0 most significant in the order.
std::vector<std::vector<int>> digit_strings(int q, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[i] == q - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

Repr exact_int(const Ring& ring, const Repr& two, std::int64_t n) {
  if (n == 0) return Repr{};
  u64 un = static_cast<u64>(n);
  int s = std::countr_zero(un);
  u64 m = static_cast<u64>(n >> s);
  if (n == INT64_MIN) m = ~u64{0};  // -1
  Repr r{0, ring.cap, m, 0};
  ring.mask(r.a, r.b, r.prec);
  for (int i = 0; i < s; ++i) r = ring.mul(r, two);
  return r;
}

Repr pi_power(const FieldData& fd, int t) {
  Repr r = fd.one;
  r.val = t;
  return r;
}

void build_square_classes(FieldData& fd) {
  const Ring& ring = fd.ring;
  const int e = fd.e;
  const int k = 2 * e + 1;

  std::vector<std::vector<int>> units;
  for (auto& s : digit_strings(fd.q, k))
    if (s[0] != 0) units.push_back(s);

  std::vector<std::pair<u64, u64>> raw;
  for (auto& s : units) raw.push_back(ring.from_digits(s));

  std::vector<u64> squares;
  for (auto [a, b] : raw) {
    auto [x, y] = ring.mul(a, b, a, b);
    u64 key = ring.key(x, y, k);
    if (std::find(squares.begin(), squares.end(), key) == squares.end()) squares.push_back(key);
  }

  std::map<u64, std::size_t> index_of;
  for (std::size_t i = 0; i < raw.size(); ++i) index_of[ring.key(raw[i].first, raw[i].second, k)] = i;

  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    u64 key = ring.key(raw[i].first, raw[i].second, k);
    if (fd.unit_class.count(key)) continue;
    int cls = static_cast<int>(members.size());
    members.emplace_back();
    for (u64 s : squares) {
      auto [x, y] = ring.mul(raw[i].first, raw[i].second, s & 0xffffffffu, s >> 32);
      u64 kk = ring.key(x, y, k);
      if (!fd.unit_class.count(kk)) {
        fd.unit_class[kk] = cls;
        members.back().push_back(index_of.at(kk));
      }
    }
    std::sort(members.back().begin(), members.back().end());
  }
  fd.num_units = static_cast<int>(members.size());

  for (int cls = 0; cls < fd.num_units; ++cls) {
    auto [ua, ub] = raw[members[cls][0]];
    int best = 0;
    for (auto [xa, xb] : raw) {
      auto [sa, sb] = ring.mul(xa, xb, xa, xb);
      best = std::max(best, ring.raw_ord(ua - sa, ub - sb, k));
    }
    HalfInt d = best >= k ? HalfInt::inf() : HalfInt(best);
    fd.unit_defect.push_back(d);

    bool found = false;
    for (std::size_t idx : members[cls]) {
      auto [ma, mb] = raw[idx];
      int o = ring.raw_ord(ma - 1, mb, k + 1);
      bool ok = d.is_inf() ? o == k + 1 : HalfInt(o) == d;
      if (ok) {
        fd.unit_rep.push_back(ring.normalize(0, ma, mb, ring.cap));
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no unit representative with d(delta) = ord(delta - 1)");
  }

  fd.unit_mul.assign(fd.num_units * fd.num_units, 0);
  for (int i = 0; i < fd.num_units; ++i)
    for (int j = 0; j < fd.num_units; ++j) {
      Repr p = ring.mul(fd.unit_rep[i], fd.unit_rep[j]);
      fd.unit_mul[i * fd.num_units + j] = fd.unit_class.at(ring.key(p.a, p.b, k));
    }
  Repr m1 = ring.neg(fd.one);
  fd.neg_one_unit = fd.unit_class.at(ring.key(m1.a, m1.b, k));
}

// (a, b) = 1 iff b lies in the norm group of F(sqrt a), found as the subgroup
// of square classes generated by values x^2 - a y^2.
void build_hilbert_table(FieldData& fd) {
  const Ring& ring = fd.ring;
  const int n = fd.num_classes();
  const int half = fd.num_units;
  fd.hilbert.assign(n * n, 1);

  auto cls_of_index = [&](int i) { return SqClass{i % fd.num_units, i / fd.num_units}; };

  for (int ai = 0; ai < n; ++ai) {
    SqClass ac = cls_of_index(ai);
    if (ac.unit == 0 && ac.parity == 0) continue;
    Repr a = ring.mul(fd.unit_rep[ac.unit], pi_power(fd, ac.parity));

    std::vector<bool> in(n, false);
    std::vector<int> group{0};
    in[0] = true;
    auto insert = [&](int c) {
      if (in[c]) return;
      std::vector<int> frontier{c};
      while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        if (in[x]) continue;
        in[x] = true;
        group.push_back(x);
        for (std::size_t gi = 0; gi < group.size(); ++gi) {
          int y = fd.index(fd.mul(cls_of_index(x), cls_of_index(group[gi])));
          if (!in[y]) frontier.push_back(y);
        }
      }
    };

    for (int len = 1; static_cast<int>(group.size()) < half; ++len) {
      if (len > 3 * fd.e + 4) throw std::logic_error("norm group enumeration did not close");
      auto strings = digit_strings(fd.q, len);
      for (const auto& xs : strings) {
        auto [xa, xb] = ring.from_digits(xs);
        Repr x = ring.normalize(0, xa, xb, ring.cap);
        Repr x2 = ring.mul(x, x);
        for (const auto& ys : strings) {
          auto [ya, yb] = ring.from_digits(ys);
          Repr y = ring.normalize(0, ya, yb, ring.cap);
          Repr v = ring.add(x2, ring.neg(ring.mul(a, ring.mul(y, y))));
          if (v.is_zero() || v.prec < 2 * fd.e + 1) continue;
          insert(fd.index(fd.classify(v)));
          if (static_cast<int>(group.size()) >= half) break;
        }
        if (static_cast<int>(group.size()) >= half) break;
      }
    }
    if (static_cast<int>(group.size()) != half) throw std::logic_error("norm group has wrong index");
    for (int bi = 0; bi < n; ++bi) fd.hilbert[ai * n + bi] = in[bi] ? 1 : -1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (fd.hilbert[i * n + j] != fd.hilbert[j * n + i]) throw std::logic_error("Hilbert table not symmetric");
}

std::shared_ptr<const FieldData> build(FieldKind kind, std::int64_t d, int precision) {
  auto fd = std::make_shared<FieldData>();
  fd->kind = kind;
  fd->d = d;
  Ring& ring = fd->ring;
  ring.kind = kind;
  switch (kind) {
    case FieldKind::Rational:
      fd->e = 1;
      fd->q = 2;
      ring.cap = 60;
      break;
    case FieldKind::Unramified:
      fd->e = 1;
      fd->q = 4;
      ring.cap = 60;
      ring.p = 1;
      ring.c = static_cast<u64>((d - 1) / 4);
      break;
    case FieldKind::Ramified:
      fd->e = 2;
      fd->q = 2;
      ring.cap = 112;
      if (d % 2 == 0) {
        ring.p = 0;
        ring.c = static_cast<u64>(d);
      } else {
        ring.p = 2;
        ring.c = static_cast<u64>(d - 1);
      }
      ring.half_c_inv = detail::inverse_odd(static_cast<u64>(static_cast<std::int64_t>(ring.c) / 2));
      break;
  }
  ring.e = fd->e;
  int e = fd->e;
  if (precision == 0) precision = 3 * e + 6;
  if (precision < 3 * e + 4 || precision > ring.cap)
    throw DomainError("precision must lie in [" + std::to_string(3 * e + 4) + ", " + std::to_string(ring.cap) + "]");
  fd->precision = precision;

  fd->one = Repr{0, ring.cap, 1, 0};
  if (kind == FieldKind::Ramified) {
    fd->two = ring.normalize(0, 2, 0, ring.cap + 2);
    fd->pi = ring.normalize(0, 0, 1, ring.cap + 1);
    fd->sqrt_d = d % 2 == 0 ? fd->pi : ring.normalize(0, u64{0} - 1, 1, ring.cap);
  } else {
    fd->two = Repr{1, ring.cap, 1, 0};
    fd->pi = fd->two;
    if (kind == FieldKind::Unramified) fd->sqrt_d = ring.normalize(0, u64{0} - 1, 2, ring.cap);
  }

  build_square_classes(*fd);

  int delta_cls = -1;
  for (int i = 0; i < fd->num_units; ++i)
    if (fd->unit_defect[i] == HalfInt(2 * e)) delta_cls = i;
  if (delta_cls < 0) throw std::logic_error("no unit class of defect 2e");
  fd->delta = fd->unit_rep[delta_cls];
  Repr four = ring.mul(fd->two, fd->two);
  fd->rho = ring.mul(ring.add(fd->one, ring.neg(fd->delta)), ring.inv(four));
  fd->omega = ring.add(fd->one, fd->pi);
  fd->omega_sharp = ring.add(fd->one, ring.mul(ring.mul(four, fd->rho), ring.inv(fd->pi)));

  build_hilbert_table(*fd);
  return fd;
}

std::int64_t isqrt_exact(__int128 t) {
  if (t < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(t)));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
    if (static_cast<__int128>(c) * c == t) return c;
  return -1;
}

}  // namespace

SqClass detail::FieldData::classify(const Repr& x) const {
  if (x.is_zero()) throw DomainError("square class of zero");
  int k = 2 * e + 1;
  if (x.prec < k) throw PrecisionError("square class needs " + std::to_string(k) + " known digits");
  auto it = unit_class.find(ring.key(x.a, x.b, k));
  if (it == unit_class.end()) throw std::logic_error("unit residue missing from class table");
  return SqClass{it->second, ((x.val % 2) + 2) % 2};
}

Field Field::q2(int precision) { return Field(build(FieldKind::Rational, 1, precision)); }

Field Field::quadratic(std::int64_t d, int precision) {
  if (d == 0) throw DomainError("sqrt(0) does not generate a field");
  while (d % 4 == 0) d /= 4;
  if (d % 2 != 0) {
    std::int64_t r = ((d % 8) + 8) % 8;
    if (r == 1) return q2(precision);
    if (r == 5) return Field(build(FieldKind::Unramified, d, precision));
    return Field(build(FieldKind::Ramified, d, precision));
  }
  return Field(build(FieldKind::Ramified, d, precision));
}

Field Field::parse(std::string_view name, int precision) {
  std::string s;
  for (char ch : name)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "q2" || s == "q_2") return q2(precision);
  std::string body;
  for (const char* pre : {"q2(sqrt(", "q2(sqrt"}) {
    std::string p(pre);
    if (s.rfind(p, 0) == 0) {
      body = s.substr(p.size());
      std::size_t closes = p.back() == '(' ? 2 : 1;
      if (body.size() < closes + 1 || body.substr(body.size() - closes) != std::string(closes, ')'))
        throw ParseError("malformed field name: " + std::string(name));
      body = body.substr(0, body.size() - closes);
      break;
    }
  }
  if (body.empty()) throw ParseError("unknown field: " + std::string(name));
  std::size_t pos = 0;
  std::int64_t d = 0;
  try {
    d = std::stoll(body, &pos);
  } catch (const std::exception&) {
    throw ParseError("malformed radicand in field name: " + std::string(name));
  }
  if (pos != body.size()) throw ParseError("malformed radicand in field name: " + std::string(name));
  return quadratic(d, precision);
}

FieldKind Field::kind() const { return d_->kind; }
std::int64_t Field::radicand() const { return d_->d; }
int Field::e() const { return d_->e; }
int Field::q() const { return d_->q; }
int Field::precision() const { return d_->precision; }
int Field::max_precision() const { return d_->ring.cap; }

std::string Field::name() const {
  if (d_->kind == FieldKind::Rational) return "q2";
  return "q2(sqrt" + std::to_string(d_->d) + ")";
}

Field Field::with_precision(int k) const {
  if (k < 3 * e() + 4 || k > max_precision())
    throw DomainError("precision must lie in [" + std::to_string(3 * e() + 4) + ", " + std::to_string(max_precision()) + "]");
  auto copy = std::make_shared<FieldData>(*d_);
  copy->precision = k;
  return Field(copy);
}

bool Field::same_field(const Field& other) const { return detail::same_field(d_.get(), other.d_.get()); }

namespace {
Repr at_precision(const FieldData& fd, const Repr& r) { return fd.ring.truncate(r, fd.precision); }
}  // namespace

Elem Field::zero() const { return Elem(d_, Repr{}); }
Elem Field::one() const { return Elem(d_, at_precision(*d_, d_->one)); }
Elem Field::from_int(std::int64_t n) const {
  return Elem(d_, at_precision(*d_, exact_int(d_->ring, d_->two, n)));
}
Elem Field::from_rational(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DomainError("zero denominator");
  return from_int(num) / from_int(den);
}

Elem Field::sqrt_rational(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 t = static_cast<__int128>(num) * den;
  std::int64_t s = isqrt_exact(t);
  if (s >= 0) return from_rational(s, den);
  if (d_->kind != FieldKind::Rational && t % d_->d == 0) {
    s = isqrt_exact(t / d_->d);
    if (s >= 0) return from_rational(s, den) * Elem(d_, at_precision(*d_, d_->sqrt_d));
  }
  throw DomainError("sqrt(" + std::to_string(num) + (den != 1 ? "/" + std::to_string(den) : "") +
                    ") is not a rational multiple of 1 or sqrt(" + std::to_string(d_->d) + ") in " + name());
}

Elem Field::from_digits(const std::vector<int>& digits) const {
  for (int x : digits)
    if (x < 0 || x >= q()) throw DomainError("digit out of range");
  auto [a, b] = d_->ring.from_digits(digits);
  return Elem(d_, at_precision(*d_, d_->ring.normalize(0, a, b, d_->ring.cap)));
}

Elem Field::pi() const { return Elem(d_, at_precision(*d_, d_->pi)); }
Elem Field::rho() const { return Elem(d_, at_precision(*d_, d_->rho)); }
Elem Field::delta() const { return Elem(d_, at_precision(*d_, d_->delta)); }
Elem Field::omega() const { return Elem(d_, at_precision(*d_, d_->omega)); }
Elem Field::omega_sharp() const { return Elem(d_, at_precision(*d_, d_->omega_sharp)); }

std::vector<Elem> Field::units() const {
  std::vector<Elem> out;
  for (const auto& r : d_->unit_rep) out.push_back(Elem(d_, at_precision(*d_, r)));
  return out;
}

std::vector<Elem> Field::units_defect_one() const {
  std::vector<Elem> out;
  for (int i = 0; i < num_unit_classes(); ++i)
    if (d_->unit_defect[i] == HalfInt(1)) out.push_back(units()[i]);
  return out;
}

std::vector<Elem> Field::units_with_omega_symbol(int sign) const {
  std::vector<Elem> out;
  SqClass w = class_of(omega());
  for (int i = 0; i < num_unit_classes(); ++i)
    if (hilbert(w, SqClass{i, 0}) == sign) out.push_back(units()[i]);
  return out;
}

std::vector<std::pair<Elem, int>> Field::pc_set() const {
  std::vector<std::pair<Elem, int>> out;
  for (const auto& u : units()) out.emplace_back(u, 1);
  for (const auto& u : units_defect_one()) out.emplace_back(u, 0);
  return out;
}

int Field::num_unit_classes() const { return d_->num_units; }

SqClass Field::class_of(const Elem& x) const {
  if (!detail::same_field(d_.get(), x.data())) throw DomainError("element of another field");
  return d_->classify(x.repr());
}

SqClass Field::class_from_index(int i) const {
  if (i < 0 || i >= num_classes()) throw DomainError("square class index out of range");
  return SqClass{i % num_unit_classes(), i / num_unit_classes()};
}

SqClass Field::mul(SqClass a, SqClass b) const { return d_->mul(a, b); }
SqClass Field::one_class() const { return SqClass{0, 0}; }
SqClass Field::neg_one_class() const { return SqClass{d_->neg_one_unit, 0}; }

Elem Field::rep(SqClass c) const {
  Elem u(d_, at_precision(*d_, d_->unit_rep.at(c.unit)));
  return c.parity ? u * pi() : u;
}

HalfInt Field::defect(SqClass c) const { return c.parity ? HalfInt(0) : d_->unit_defect[c.unit]; }

int Field::hilbert(SqClass a, SqClass b) const {
  return d_->hilbert[class_index(a) * num_classes() + class_index(b)];
}

HalfInt Field::defect(const Elem& c) const { return defect(class_of(c)); }
int Field::hilbert(const Elem& a, const Elem& b) const { return hilbert(class_of(a), class_of(b)); }

std::pair<Elem, int> Field::square_class_rep(const Elem& c) const {
  SqClass s = class_of(c);
  return {rep(SqClass{s.unit, 0}), s.parity};
}

bool Field::is_square(const Elem& c) const { return class_of(c) == one_class(); }

Elem Field::sharp(const Elem& c) const {
  SqClass s = class_of(c);
  if (s.parity) return delta();
  HalfInt dc = defect(s);
  if (dc.is_inf()) throw DomainError("sharp of a square");
  if (dc == HalfInt(2 * e())) throw DomainError("sharp of an element of the Delta class");
  int d = static_cast<int>(dc.value());
  Elem mu = c.unit_part();
  for (const auto& xs : digit_strings(q(), e() + 1)) {
    if (xs[0] == 0) continue;
    Elem x = from_digits(xs);
    Elem diff = mu - x * x;
    if (diff.is_zero() || diff.valuation() != d) continue;
    Elem pid = pi().pow(d);
    Elem r = diff / (x * x * pid);
    return one() + from_int(4) * rho() / (r * pid);
  }
  throw std::logic_error("sharp: no square approximation at the defect");
}

}  // namespace dyadic
