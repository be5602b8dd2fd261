#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dyadic/bong.hpp"

namespace dyadic {

struct UniversalVerdict {
  bool verdict = false;
  std::string route;           // "theorem-1.1", "theorem-1.6", "j-conditions", "test-set"
  std::string failing_clause;  // empty when verdict is true
};

// Clause tree of the R-invariant classification; n = 1 uses the universal criterion.
UniversalVerdict classify(const Bong& M, int n);
// Space gate followed by J1E..J3E (even n) or J1E(n-1)..J3E(n-1), J1O, J2O (odd n); n >= 2.
UniversalVerdict j_conditions(const Bong& M, int n);

enum class TestFamily { C1E, C2E, C3E, C4E, C1O, C2O, C3O, C4O, C4OBar };

struct TestMember {
  TestFamily family;
  std::optional<Elem> delta;  // C3E/C4E
  int T = 0;                  // C3E/C4E
  std::optional<Elem> eps;    // odd families
  std::string label;
  Bong lattice;
};

struct TestSet {
  Field field;
  int n = 0;
  std::vector<TestMember> members;
  bool odd() const { return n % 2 != 0; }
  std::size_t size() const { return members.size(); }
};

// Closed-form count of the even test set quoted alongside the enumeration: 8q^{e+1}/(q-1) + 1,
// plus 1 when e = 1. Stored as a fraction.
struct ClosedFormCount {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool is_integer() const { return num % den == 0; }
  std::string str() const;
};

std::string family_name(TestFamily f);

TestMember make_member(const Field& field, int n, TestFamily family, std::optional<Elem> param, int T = 0);
TestSet testset(const Field& field, int n);
ClosedFormCount closed_form_count(const Field& field, int n);
std::size_t expected_count(const Field& field, int n);  // 1 + u_e + 2|P_c| or 4|U|

UniversalVerdict universal_via_testset(const Bong& M, int n);
UniversalVerdict universal_via_testset(const Bong& M, const TestSet& set);

// Lattice that represents every member of the test set except target. Throws DomainError
// when no witness is defined for the target.
Bong minimality_witness(const Field& field, int n, const TestMember& target);

struct MinimalityResult {
  std::string target;
  Bong witness;
  std::vector<std::string> unrepresented;  // members the witness misses
  bool contract_holds() const { return unrepresented.size() == 1 && unrepresented[0] == target; }
};
MinimalityResult check_minimality(const TestSet& set, const TestMember& target);

struct SweepDisagreement {
  std::string lattice;
  UniversalVerdict by_classify, by_j, by_testset;
};

struct SweepReport {
  std::string field;
  int n = 0;
  int samples = 0;
  int universal_count = 0;
  std::uint64_t seed = 0;
  std::vector<SweepDisagreement> disagreements;
};

// Random valid classic integral lattice with entries delta*pi^R, delta in U, |R| <= 3e.
Bong random_classic_bong(const Field& field, int n, std::mt19937_64& rng);

SweepReport consistency_sweep(const Field& field, int n, int samples, std::uint64_t seed);

std::string verdict_json(const UniversalVerdict& v);
std::string sweep_json(const SweepReport& r);

}  // namespace dyadic
