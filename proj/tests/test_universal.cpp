#include <random>
#include <set>

#include "doctest.h"
#include "dyadic/parse.hpp"
#include "dyadic/represent.hpp"
#include "dyadic/universal.hpp"
#include "support.hpp"

using namespace dyadic;

namespace {

Bong bong(const Field& f, const char* text) { return Bong::make(f, parse_elem_list(f, text)); }

Bong ones(const Field& f, int k) { return Bong::make(f, std::vector<Elem>(k, f.one())); }

}  // namespace

TEST_CASE("classify examples") {
  Field q2 = Field::q2();
  UniversalVerdict v = classify(ones(q2, 5), 2);
  CHECK(v.verdict);
  CHECK(v.route == "theorem-1.1");
  CHECK(v.failing_clause.empty());
  CHECK(classify(ones(q2, 6), 3).verdict);
  CHECK(universal_via_testset(ones(q2, 6), 3).verdict);

  Field s2 = Field::parse("q2(sqrt2)");
  UniversalVerdict l1 = classify(bong(s2, "1,1,2+sqrt(2)"), 1);
  CHECK(l1.verdict);
  CHECK(l1.route == "theorem-1.6");
  UniversalVerdict o = classify(ones(s2, 3), 1);
  CHECK_FALSE(o.verdict);
  CHECK(o.failing_clause == "(i)");

  CHECK(classify(ones(q2, 4), 2).failing_clause == "m>=n+3");
  CHECK(classify(ones(q2, 2), 1).failing_clause == "m>=3");
  CHECK_THROWS_AS(classify(bong(q2, "pi^-1,pi"), 1), DomainError);
  CHECK_THROWS_AS(classify(ones(q2, 3), 0), DomainError);
  CHECK_THROWS_AS(j_conditions(ones(q2, 5), 1), DomainError);
  CHECK_THROWS_AS(testset(q2, 1), DomainError);
}

TEST_CASE("J conditions on the all-ones lattice") {
  Field q2 = Field::q2();
  Bong M = ones(q2, 5);
  CHECK(M.alpha(3) == HalfInt(1));
  CHECK(HalfInt(M.R(4)) + M.d_bracket(q2.one_class(), 1, 4) == HalfInt(1));
  UniversalVerdict j = j_conditions(M, 2);
  CHECK(j.verdict);
  CHECK(j.route == "j-conditions");
  // a jump of 2e + 1 after position n + 2
  Bong jump = bong(q2, "1,1,1,3,pi^3");
  CHECK(jump.R(5) - jump.R(4) == 2 * q2.e() + 1);
  CHECK_FALSE(j_conditions(jump, 2).verdict);
  CHECK(j_conditions(jump, 2).failing_clause == "J3E");
  CHECK_FALSE(classify(jump, 2).verdict);
}

TEST_CASE("verdicts and failing clauses are consistent") {
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 4; ++n)
      for (int t = 0; t < 200; ++t) {
        Bong M = random_classic_bong(f, n, rng);
        UniversalVerdict v = classify(M, n);
        CHECK(v.verdict == v.failing_clause.empty());
        CHECK(v.route == (n == 1 ? "theorem-1.6" : "theorem-1.1"));
        if (n >= 2) {
          UniversalVerdict t2 = universal_via_testset(M, n);
          CHECK(t2.verdict == t2.failing_clause.empty());
          CHECK(t2.route == "test-set");
        }
      }
  }
}

TEST_CASE("no quaternary lattice is 2-universal") {
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    std::mt19937_64 rng(13);
    const auto units = f.units();
    int seen = 0;
    for (int t = 0; t < 4000 && seen < 300; ++t) {
      std::vector<Elem> entries;
      int R = 0;
      for (int i = 0; i < 4; ++i) {
        if (i > 0) R += static_cast<int>(rng() % (4 * f.e() + 2)) - 2 * f.e();
        entries.push_back(units[rng() % units.size()] * f.pi().pow(R));
      }
      if (Bong::check(f, entries)) continue;
      Bong M = Bong::make(f, entries);
      if (!M.is_classic()) continue;
      ++seen;
      CHECK_FALSE(classify(M, 2).verdict);
      CHECK_FALSE(universal_via_testset(M, 2).verdict);
    }
    CHECK(seen >= 100);
  }
}

TEST_CASE("classifiers agree on random lattices") {
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    for (int n = 2; n <= 4; ++n) {
      SweepReport r = consistency_sweep(f, n, 300, 1000 + n);
      CAPTURE(name);
      CAPTURE(n);
      CHECK(r.samples == 300);
      CHECK(r.disagreements.empty());
      CHECK(r.universal_count > 0);
      CHECK(r.universal_count < r.samples);
    }
  }
}

TEST_CASE("clause coverage in sweeps") {
  std::set<std::string> clauses;
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    std::mt19937_64 rng(77);
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t < 3000; ++t) clauses.insert(classify(random_classic_bong(f, n, rng), n).failing_clause);
  }
  for (const char* c : {"", "m>=3", "(i)", "(ii)", "(iii)", "m>=n+3", "I", "II", "II(1)", "II(2)", "III(1)", "III(3)"}) {
    CAPTURE(c);
    CHECK(clauses.count(c) == 1);
  }
}

TEST_CASE("rank-one universality agrees with direct representation") {
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    std::mt19937_64 rng(19);
    for (int t = 0; t < 150; ++t) {
      Bong M = random_classic_bong(f, 1, rng);
      bool all = true;
      for (int i = 0; i < f.num_unit_classes() && all; ++i)
        for (int R = 0; R <= M.R(M.rank()) + 4 * f.e() + 3 && all; ++R)
          all = is_represented(M, Bong::make(f, {f.units()[i] * f.pi().pow(R)}));
      CAPTURE(M.str());
      CHECK(classify(M, 1).verdict == all);
    }
  }
}

TEST_CASE("test-set sizes") {
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    for (int n = 2; n <= 5; ++n) {
      TestSet s = testset(f, n);
      CAPTURE(name);
      CAPTURE(n);
      CHECK(s.size() == expected_count(f, n));
      if (n % 2 == 1) {
        CHECK(s.size() == 4 * f.units().size());
        std::size_t q_e = 1;
        for (int i = 0; i < f.e(); ++i) q_e *= static_cast<std::size_t>(f.q());
        CHECK(s.size() == 8 * q_e);
      } else {
        CHECK(s.size() == 1 + static_cast<std::size_t>(f.u_e()) + 2 * f.pc_set().size());
      }
      std::set<std::string> labels;
      for (const auto& m : s.members) labels.insert(m.label);
      CHECK(labels.size() == s.size());
    }
  }
  Field q2 = Field::q2();
  CHECK(testset(q2, 2).size() == 14);
  CHECK(testset(q2, 3).size() == 16);
  CHECK(testset(Field::parse("q2(sqrt5)"), 3).size() == 32);
  CHECK(closed_form_count(q2, 2).str() == "34");
  CHECK(closed_form_count(Field::parse("q2(sqrt5)"), 2).str() == "134/3");
  CHECK_FALSE(closed_form_count(Field::parse("q2(sqrt5)"), 2).is_integer());
  CHECK(closed_form_count(q2, 3).str() == "16");
}

TEST_CASE("test-set minimality") {
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    for (int n = 2; n <= 3; ++n) {
      TestSet s = testset(f, n);
      for (const auto& m : s.members) {
        MinimalityResult r = check_minimality(s, m);
        CAPTURE(name);
        CAPTURE(m.label);
        CHECK(r.contract_holds());
        CHECK(r.witness.is_classic());
      }
    }
  }
  Field q2 = Field::q2();
  TestSet s = testset(q2, 2);
  Bong w = minimality_witness(q2, 2, s.members[0]);
  CHECK(w.rank() == 4);
  const Elem om = q2.omega(), os = q2.omega_sharp();
  CHECK(w.entries() == std::vector<Elem>{q2.one(), -om, -os, om * os});
}

TEST_CASE("test set certifies the all-ones lattices") {
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    for (int n = 2; n <= 4; ++n) {
      Bong M = ones(f, n + 3);
      const bool expect = f.e() == 1;
      CHECK(classify(M, n).verdict == expect);
      CHECK(j_conditions(M, n).verdict == expect);
      CHECK(universal_via_testset(M, n).verdict == expect);
    }
  }
}

TEST_CASE("JSON output") {
  Field q2 = Field::q2();
  std::string j = verdict_json(classify(ones(q2, 5), 2));
  CHECK(j.find("\"verdict\":true") != std::string::npos);
  std::string s = sweep_json(consistency_sweep(q2, 2, 5, 1));
  CHECK(s.find("\"samples\":5") != std::string::npos);
}
