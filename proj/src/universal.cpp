#include "dyadic/universal.hpp"

#include "dyadic/represent.hpp"
#include "json.hpp"

namespace dyadic {

namespace {

UniversalVerdict pass(const char* route) { return {true, route, ""}; }
UniversalVerdict fail(const char* route, std::string clause) { return {false, route, std::move(clause)}; }

void require_classic(const Bong& M, int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (!M.is_classic()) throw DomainError("lattice is not classic integral");
}

// d((-1)^{k/2} a_1 ... a_k) for even k.
HalfInt signed_prefix_defect(const Bong& M, int k) {
  const Field& f = M.field();
  SqClass c = M.prefix(k);
  if ((k / 2) % 2 != 0) c = f.mul(c, f.neg_one_class());
  return f.defect(c);
}

// Clause (b) of (II)(1) and (III)(1): some d(-a_j a_{j+1}) = 1 for j <= last_low, or
// d(-a_j a_{j+1}) = 1 - R_{j+1} for last_low < j < m.
bool defect_witness_exists(const Bong& M, int last_low) {
  for (int j = 1; j <= last_low && j < M.rank(); ++j)
    if (M.pair_defect(j) == HalfInt(1)) return true;
  for (int j = last_low + 1; j <= M.rank() - 1; ++j)
    if (M.pair_defect(j) == HalfInt(1 - M.R(j + 1))) return true;
  return false;
}

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

UniversalVerdict classify_rank_one(const Bong& M) {
  const char* route = "theorem-1.6";
  const int m = M.rank();
  const int e = M.field().e();
  if (m < 3) return fail(route, "m>=3");
  if (!(M.R(1) == 0 && M.alpha(1) == HalfInt(1))) return fail(route, "(i)");
  if (M.R(2) == 1 || M.R(3) > 1) {
    if (m < 4) return fail(route, "(ii)");
    if (!(M.alpha(3) <= HalfInt(2 * (e - floor_half(M.R(3) - M.R(2))) - 1))) return fail(route, "(ii)");
  }
  if (M.R(2) == 0 && 0 <= M.R(3) && M.R(3) <= 1 && (m == 3 || M.R(4) - M.R(3) > 2 * e)) {
    if (!is_isotropic(M.field(), M.prefix_space(3))) return fail(route, "(iii)");
  }
  return pass(route);
}

UniversalVerdict classify_even(const Bong& M, int n) {
  const char* route = "theorem-1.1";
  const int e = M.field().e();
  if (M.R(n + 1) != 0) return fail(route, "II");
  const int r2 = M.R(n + 2);
  if (r2 != 0 && r2 != 1) return fail(route, "II(1)");
  if (r2 == 0) {
    const HalfInt d = signed_prefix_defect(M, n + 2);
    const int r3 = M.R(n + 3);
    if (!(d == HalfInt(1) || r3 == 0 || r3 == 1)) return fail(route, "II(1)(a)");
    if (e > 1 && r3 == 0 && d > HalfInt(1) && !defect_witness_exists(M, n + 1)) return fail(route, "II(1)(b)");
  }
  if (M.R(n + 3) - M.R(n + 2) > 2 * e) return fail(route, "II(2)");
  return pass(route);
}

UniversalVerdict classify_odd(const Bong& M, int n) {
  const char* route = "theorem-1.1";
  const int m = M.rank();
  const int e = M.field().e();
  const int r1 = M.R(n + 1), r2 = M.R(n + 2), r3 = M.R(n + 3);
  if (r1 != 0 && r1 != 1) return fail(route, "III(1)");
  if (r1 == 0) {
    const HalfInt d = signed_prefix_defect(M, n + 1);
    if (!(d == HalfInt(1) || r2 == 0 || r2 == 1)) return fail(route, "III(1)(a)");
    if (e > 1 && r2 == 0 && d > HalfInt(1) && !defect_witness_exists(M, n)) return fail(route, "III(1)(b)");
  }
  if ((r1 == 1 && r2 == 1) || r2 > 1) {
    auto some_j = [&](int slack) {
      for (int j = n + 2; j <= m - 1; ++j)
        if (M.pair_defect(j) <= HalfInt(2 * e + r1 - M.R(j + 1) - slack)) return true;
      return false;
    };
    const int gap = r2 - r1;
    if (gap % 2 == 0 && r3 + r2 - 2 * r1 > 2 * e - 2 && !some_j(1)) return fail(route, "III(2)(a)");
    if (gap % 2 != 0 && r3 + r2 - 2 * r1 > 2 * e && !some_j(0)) return fail(route, "III(2)(b)");
  }
  if (r2 - r1 > 2 * e || r3 - r2 > 2 * e) return fail(route, "III(3)");
  return pass(route);
}

// J1E(k), J2E(k), J3E(k) for even k. Out-of-range indices make a condition vacuous.
std::optional<std::string> even_j(const Bong& M, int k) {
  const int m = M.rank();
  const int e = M.field().e();
  const Field& f = M.field();
  if (m < k + 1) return "J1E";
  for (int i = 1; i <= k + 1; ++i)
    if (M.R(i) != 0) return "J1E";
  if (m < k + 2) return "J2E";
  if (M.alpha(k + 1) != HalfInt(1)) return "J2E";
  SqClass c = ((k + 2) / 2) % 2 != 0 ? f.neg_one_class() : f.one_class();
  if (HalfInt(M.R(k + 2)) + M.d_bracket(c, 1, k + 2) != HalfInt(1)) return "J2E";
  if (k == 2 && m < 5) return "J2E";
  if (m >= k + 3 && M.R(k + 3) - M.R(k + 2) > 2 * e) return "J3E";
  return std::nullopt;
}

}  // namespace

UniversalVerdict classify(const Bong& M, int n) {
  require_classic(M, n);
  if (n == 1) return classify_rank_one(M);
  if (M.rank() < n + 3) return fail("theorem-1.1", "m>=n+3");
  for (int i = 1; i <= n; ++i)
    if (M.R(i) != 0) return fail("theorem-1.1", "I");
  return n % 2 == 0 ? classify_even(M, n) : classify_odd(M, n);
}

UniversalVerdict j_conditions(const Bong& M, int n) {
  require_classic(M, n);
  if (n < 2) throw DomainError("J-conditions need n >= 2");
  const char* route = "j-conditions";
  const Field& f = M.field();
  if (!space_is_n_universal(f, M.space(), n)) return fail(route, "FM");
  if (n % 2 == 0) {
    if (auto c = even_j(M, n)) return fail(route, *c);
    return pass(route);
  }
  if (auto c = even_j(M, n - 1)) return fail(route, *c + "(n-1)");
  const int m = M.rank();
  const int e = f.e();
  if (m >= n + 2) {
    const int r1 = M.R(n + 1), r2 = M.R(n + 2);
    if (((r1 == 1 && r2 == 1) || r2 > 1) && m >= n + 3) {
      if (!(M.alpha(n + 2) <= HalfInt(2 * (e - floor_half(r2 - r1)) - 1))) return fail(route, "J1O");
    }
  }
  if (m >= n + 3 && M.R(n + 3) - M.R(n + 2) > 2 * e) return fail(route, "J2O");
  return pass(route);
}

UniversalVerdict universal_via_testset(const Bong& M, const TestSet& set) {
  require_classic(M, set.n);
  if (!M.field().same_field(set.field)) throw DomainError("test set over a different field");
  for (const auto& c : set.members)
    if (c.lattice.rank() > M.rank() || !is_represented(M, c.lattice)) return fail("test-set", c.label);
  return pass("test-set");
}

UniversalVerdict universal_via_testset(const Bong& M, int n) {
  require_classic(M, n);
  return universal_via_testset(M, testset(M.field(), n));
}

std::string verdict_json(const UniversalVerdict& v) {
  nlohmann::json j;
  j["verdict"] = v.verdict;
  j["route"] = v.route;
  j["failing_clause"] = v.failing_clause.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.failing_clause);
  return j.dump();
}

}  // namespace dyadic
