#include <numeric>

#include "dyadic/represent.hpp"
#include "dyadic/universal.hpp"

namespace dyadic {

namespace {

bool is_even_family(TestFamily f) {
  return f == TestFamily::C1E || f == TestFamily::C2E || f == TestFamily::C3E || f == TestFamily::C4E;
}

std::vector<Elem> with_hyperbolic(const Field& field, int l, int copies, std::vector<Elem> tail) {
  std::vector<Elem> out = hyperbolic_entries(field, l, copies);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

std::string family_name(TestFamily f) {
  switch (f) {
    case TestFamily::C1E: return "C1E";
    case TestFamily::C2E: return "C2E";
    case TestFamily::C3E: return "C3E";
    case TestFamily::C4E: return "C4E";
    case TestFamily::C1O: return "C1O";
    case TestFamily::C2O: return "C2O";
    case TestFamily::C3O: return "C3O";
    case TestFamily::C4O: return "C4O";
    case TestFamily::C4OBar: return "C4Obar";
  }
  return "?";
}

TestMember make_member(const Field& field, int n, TestFamily family, std::optional<Elem> param, int T) {
  const bool even = is_even_family(family);
  if (even && (n < 2 || n % 2 != 0)) throw DomainError("even test lattices need even n >= 2");
  if (!even && (n < 3 || n % 2 == 0)) throw DomainError("odd test lattices need odd n >= 3");
  const bool needs_param = family != TestFamily::C1E && family != TestFamily::C2E;
  if (needs_param && !param) throw DomainError(family_name(family) + " needs a unit parameter");

  TestMember t{family, std::nullopt, 0, std::nullopt, family_name(family), {}};
  const Elem one = field.one();
  const Elem pi = field.pi();
  std::vector<Elem> entries;
  switch (family) {
    case TestFamily::C1E:
      entries = hyperbolic_entries(field, field.e(), n / 2);
      break;
    case TestFamily::C2E:
      if (field.e() != 1) throw DomainError("C2E exists only for e = 1");
      entries = with_hyperbolic(field, 1, (n - 2) / 2, {pi, -(field.delta() / pi)});
      break;
    case TestFamily::C3E:
    case TestFamily::C4E: {
      const Elem c = *param * pi.pow(T);
      if (family == TestFamily::C3E) {
        entries = with_hyperbolic(field, 0, (n - 2) / 2, {one, -c});
      } else {
        const Elem s = field.sharp(c);
        entries = with_hyperbolic(field, 0, (n - 2) / 2, {s, -(s * c)});
      }
      t.delta = param;
      t.T = T;
      t.label += "(" + param->str() + "," + std::to_string(T) + ")";
      break;
    }
    default: {
      const Elem& eps = *param;
      const Elem w = field.omega();
      const Elem ws = field.omega_sharp();
      std::vector<Elem> tail;
      if (family == TestFamily::C1O) tail = {one, -one, -(eps * pi)};
      if (family == TestFamily::C2O) tail = {one, -one, -eps};
      if (family == TestFamily::C3O) tail = {one, -field.delta(), -(eps * field.delta() * pi)};
      if (family == TestFamily::C4O || family == TestFamily::C4OBar) {
        bool plain = field.hilbert(w, -eps) == -1;
        if (family == TestFamily::C4OBar) plain = !plain;
        if (plain)
          tail = {one, -w, -(w * eps)};
        else
          tail = {ws, -(ws * w), -(w * eps)};
      }
      entries = with_hyperbolic(field, 0, (n - 3) / 2, tail);
      t.eps = param;
      t.label += "(" + eps.str() + ")";
    }
  }
  t.lattice = Bong::make(field, std::move(entries));
  return t;
}

TestSet testset(const Field& field, int n) {
  if (n < 2) throw DomainError("test sets need n >= 2");
  TestSet set{field, n, {}};
  if (n % 2 == 0) {
    set.members.push_back(make_member(field, n, TestFamily::C1E, std::nullopt));
    if (field.e() == 1) set.members.push_back(make_member(field, n, TestFamily::C2E, std::nullopt));
    const auto pc = field.pc_set();
    for (TestFamily f : {TestFamily::C3E, TestFamily::C4E})
      for (const auto& [delta, T] : pc) set.members.push_back(make_member(field, n, f, delta, T));
  } else {
    const auto units = field.units();
    for (TestFamily f : {TestFamily::C1O, TestFamily::C2O, TestFamily::C3O, TestFamily::C4O})
      for (const Elem& eps : units) set.members.push_back(make_member(field, n, f, eps));
  }
  return set;
}

std::string ClosedFormCount::str() const {
  if (is_integer()) return std::to_string(num / den);
  return std::to_string(num) + "/" + std::to_string(den);
}

ClosedFormCount closed_form_count(const Field& field, int n) {
  std::int64_t qe = 1;
  for (int i = 0; i < field.e(); ++i) qe *= field.q();
  const std::int64_t q = field.q();
  if (n % 2 != 0) return {8 * qe, 1};
  ClosedFormCount c{8 * qe * q + (1 + field.u_e()) * (q - 1), q - 1};
  const std::int64_t g = std::gcd(c.num, c.den);
  c.num /= g;
  c.den /= g;
  return c;
}

std::size_t expected_count(const Field& field, int n) {
  if (n % 2 != 0) return 4 * static_cast<std::size_t>(field.num_unit_classes());
  return 1 + field.u_e() + 2 * field.pc_set().size();
}

Bong minimality_witness(const Field& field, int n, const TestMember& target) {
  const Elem one = field.one();
  switch (target.family) {
    case TestFamily::C1E: {
      if (field.e() > 1) {
        const Elem D = field.delta();
        const Elem pi = field.pi();
        return Bong::make(field, with_hyperbolic(field, 0, (n - 2) / 2, {one, -D, pi, -(D * pi)}));
      }
      const Elem w = field.omega();
      const Elem ws = field.omega_sharp();
      return Bong::make(field, with_hyperbolic(field, 0, (n - 2) / 2, {one, -w, -ws, w * ws}));
    }
    case TestFamily::C2E: {
      if (field.e() != 1) throw DomainError("C2E exists only for e = 1");
      const Elem w = field.omega();
      return Bong::make(field, with_hyperbolic(field, 0, (n - 2) / 2, {one, -w, -one, w}));
    }
    case TestFamily::C3E: return make_member(field, n + 2, TestFamily::C4E, target.delta, target.T).lattice;
    case TestFamily::C4E: return make_member(field, n + 2, TestFamily::C3E, target.delta, target.T).lattice;
    case TestFamily::C1O: return make_member(field, n + 2, TestFamily::C3O, target.eps).lattice;
    case TestFamily::C2O: return make_member(field, n + 2, TestFamily::C4O, target.eps).lattice;
    case TestFamily::C3O: return make_member(field, n + 2, TestFamily::C1O, target.eps).lattice;
    case TestFamily::C4O: return make_member(field, n + 2, TestFamily::C4OBar, target.eps).lattice;
    case TestFamily::C4OBar: break;
  }
  throw DomainError("no minimality witness for " + target.label);
}

MinimalityResult check_minimality(const TestSet& set, const TestMember& target) {
  MinimalityResult r{target.label, minimality_witness(set.field, set.n, target), {}};
  for (const auto& c : set.members)
    if (!is_represented(r.witness, c.lattice)) r.unrepresented.push_back(c.label);
  return r;
}

}  // namespace dyadic
