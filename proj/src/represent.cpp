#include "dyadic/represent.hpp"

#include "json.hpp"

namespace dyadic {

PairContext::PairContext(const Bong& M, const Bong& N) : m_(&M), n_(&N) {
  if (N.rank() > M.rank()) throw DomainError("represents needs rank N <= rank M");
  if (!M.field().same_field(N.field())) throw DomainError("lattices over different fields");
}

SqClass PairContext::ab(int i, int j) const { return M().field().mul(M().prefix(i), N().prefix(j)); }

HalfInt PairContext::d_bracket(SqClass c, int i, int j) const {
  if (i < 0 || i > m() || j < 0 || j > n()) throw DomainError("d[] pair index out of range");
  const Field& f = M().field();
  HalfInt v = f.defect(f.mul(c, ab(i, j)));
  if (i != 0 && i != m()) v = min(v, M().alpha(i));
  if (j != 0 && j != n()) v = min(v, N().alpha(j));
  return v;
}

HalfInt PairContext::d_bracket(int sign, int i, int j) const {
  const Field& f = M().field();
  return d_bracket(sign < 0 ? f.neg_one_class() : f.one_class(), i, j);
}

HalfInt PairContext::A(int i) const {
  if (i < 1 || i > b2_max()) throw DomainError("A_i index out of range");
  const int e = M().field().e();
  std::vector<HalfInt> terms;
  terms.push_back(HalfInt::from_twice(R(i + 1) - S(i) + 2 * e));
  terms.push_back(HalfInt(R(i + 1) - S(i)) + d_bracket(-1, i + 1, i - 1));
  if (i != 1 && i != m() - 1) terms.push_back(HalfInt(R(i + 1) + R(i + 2) - S(i - 1) - S(i)) + d_bracket(1, i + 2, i - 2));
  HalfInt best = terms[0];
  for (HalfInt t : terms) best = min(best, t);
  return best;
}

std::optional<HalfInt> PairContext::S_plus_A_next() const {
  if (n() > m() - 2) return std::nullopt;
  HalfInt v = HalfInt(R(n() + 2)) + d_bracket(-1, n() + 2, n());
  if (n() != m() - 2) v = min(v, HalfInt(R(n() + 2) + R(n() + 3) - (n() >= 1 ? S(n()) : 0)) + d_bracket(1, n() + 3, n() - 1));
  return v;
}

int PairContext::P(int k) const {
  const Field& f = M().field();
  return f.hilbert(ab(k, k), f.mul(f.neg_one_class(), ab(k + 1, k - 1)));
}

bool PairContext::B1(int i) const {
  if (R(i) <= S(i)) return true;
  return 1 < i && i < m() && R(i) + R(i + 1) <= S(i - 1) + S(i);
}

bool PairContext::B2(int i) const { return d_bracket(1, i, i) >= A(i); }

bool PairContext::B3_triggered(int i) const {
  const int e = M().field().e();
  if (!(R(i + 1) > S(i - 1))) return false;
  return d_bracket(-1, i, i - 2) + d_bracket(-1, i + 1, i - 1) > HalfInt(2 * e + S(i - 1) - R(i + 1));
}

bool PairContext::B3(int i) const {
  if (!B3_triggered(i)) return true;
  int prod = 1;
  for (int k = 1; k <= i - 1; ++k) prod *= P(k);
  return prod == 1;
}

bool PairContext::B4_triggered(int i) const {
  const int e = M().field().e();
  if (i != n() + 1 && !(S(i) >= R(i + 2))) return false;
  return R(i + 2) > S(i - 1) + 2 * e && S(i - 1) + 2 * e >= R(i + 1) + 2 * e;
}

bool PairContext::B4(int i) const {
  if (!B4_triggered(i)) return true;
  const Field& f = M().field();
  return represents_space(f, M().prefix_space(i + 1), N().prefix_space(i - 1));
}

RepReport represents(const Bong& M, const Bong& N, bool stop_early) {
  RepReport rep;
  if (N.rank() > M.rank()) {
    rep.first_failure = "rank";
    return rep;
  }
  PairContext ctx(M, N);
  const Field& f = M.field();
  rep.space_ok = represents_space(f, M.space(), N.space());
  rep.verdict = rep.space_ok;
  if (!rep.space_ok) {
    rep.first_failure = "space";
    if (stop_early) return rep;
  }
  auto record = [&](std::vector<CondOutcome>& list, const char* name, CondOutcome c) {
    list.push_back(c);
    if (!c.holds) {
      rep.verdict = false;
      if (!rep.first_failure) rep.first_failure = std::string(name) + "(" + std::to_string(c.index) + ")";
    }
    return !c.holds && stop_early;
  };
  for (int i = 1; i <= ctx.n(); ++i)
    if (record(rep.b1, "B1", {i, true, ctx.B1(i)})) return rep;
  for (int i = 1; i <= ctx.b2_max(); ++i)
    if (record(rep.b2, "B2", {i, true, ctx.B2(i)})) return rep;
  for (int i = 2; i <= ctx.b3_max(); ++i)
    if (record(rep.b3, "B3", {i, ctx.B3_triggered(i), ctx.B3(i)})) return rep;
  for (int i = 2; i <= ctx.b4_max(); ++i)
    if (record(rep.b4, "B4", {i, ctx.B4_triggered(i), ctx.B4(i)})) return rep;
  return rep;
}

bool is_represented(const Bong& M, const Bong& N) { return represents(M, N, true).verdict; }

std::string report_json(const RepReport& r) {
  using nlohmann::json;
  auto list = [](const std::vector<CondOutcome>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back({{"i", c.index}, {"triggered", c.triggered}, {"holds", c.holds}});
    return a;
  };
  json j;
  j["space_ok"] = r.space_ok;
  j["B1"] = list(r.b1);
  j["B2"] = list(r.b2);
  j["B3"] = list(r.b3);
  j["B4"] = list(r.b4);
  j["verdict"] = r.verdict;
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  return j.dump();
}

}  // namespace dyadic
