// Acceptance run: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dyadic/parse.hpp"
#include "dyadic/represent.hpp"
#include "dyadic/universal.hpp"
#include "support.hpp"

using namespace dyadic;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Bong bong(const Field& f, const std::string& text) { return Bong::make(f, parse_elem_list(f, text)); }

Bong ones(const Field& f, int k) { return Bong::make(f, std::vector<Elem>(k, f.one())); }

struct TableRow {
  const char* name;
  const char* field;
  const char* entries;
  int R1, R2, R3, alpha1, d12, d23;
};

// Published local invariants of eleven ternary lattices.
const TableRow kTable[] = {
    {"L1", "q2(sqrt2)", "1,1,2+sqrt(2)", 0, 0, 1, 1, 3, 0},
    {"L2", "q2(sqrt2)", "3+sqrt(2),7,(3+sqrt(2))/7", 0, 0, 0, 1, 1, 1},
    {"L3", "q2(sqrt2)", "1,3,(5+3*sqrt(2))/3", 0, 0, 0, 1, 4, 1},
    {"L4", "q2(sqrt2)", "1,3,(5-3*sqrt(2))/3", 0, 0, 0, 1, 4, 1},
    {"M1", "q2(sqrt3)", "1,1,2+sqrt(3)", 0, 0, 0, 1, 4, 1},
    {"M2", "q2(sqrt3)", "1,2+sqrt(3),2+sqrt(3)", 0, 0, 0, 1, 1, 4},
    {"N1", "q2(sqrt5)", "1,1,1", 0, 0, 0, 1, 1, 1},
    {"N2", "q2(sqrt5)", "1,1,2", 0, 0, 1, 1, 1, 0},
    {"N3", "q2(sqrt5)", "1,1,(5+sqrt(5))/2", 0, 0, 0, 1, 1, 2},
    {"N4", "q2(sqrt5)", "1,(5+sqrt(5))/2,(4+sqrt(5))*(5+sqrt(5))/2", 0, 0, 0, 1, 2, 1},
    {"N5", "q2(sqrt5)", "1,(5-sqrt(5))/2,(4-sqrt(5))*(5-sqrt(5))/2", 0, 0, 0, 1, 2, 1},
};

Outcome table_invariants() {
  std::ostringstream bad;
  int ok = 0;
  for (const auto& row : kTable) {
    Field f = Field::parse(row.field);
    Bong b = bong(f, row.entries);
    const bool match = b.rank() == 3 && b.R(1) == row.R1 && b.R(2) == row.R2 && b.R(3) == row.R3 &&
                       b.alpha(1) == HalfInt(row.alpha1) && b.pair_defect(1) == HalfInt(row.d12) &&
                       b.pair_defect(2) == HalfInt(row.d23);
    if (match) {
      ++ok;
    } else {
      bad << " " << row.name << "=(" << b.R(1) << "," << b.R(2) << "," << b.R(3) << "," << b.alpha(1).str() << ","
          << b.pair_defect(1).str() << "," << b.pair_defect(2).str() << ")";
    }
  }
  return {ok == 11, std::to_string(ok) + "/11 rows match" + bad.str()};
}

Outcome table_universal() {
  int ok = 0;
  std::string bad;
  for (const auto& row : kTable) {
    Field f = Field::parse(row.field);
    UniversalVerdict v = classify(bong(f, row.entries), 1);
    if (v.verdict)
      ++ok;
    else
      bad += std::string(" ") + row.name + " fails " + v.failing_clause;
  }
  return {ok == 11, std::to_string(ok) + "/11 universal" + bad};
}

Outcome ones_lattices() {
  std::ostringstream out;
  bool pass = true;
  Field q2 = Field::q2();
  for (int n = 1; n <= 4; ++n) {
    Bong M = ones(q2, n + 3);
    bool by_classify = classify(M, n).verdict;
    bool by_set = true;
    if (n >= 2) {
      by_set = universal_via_testset(M, n).verdict;
    } else {
      // every rank-one lattice <delta pi^R> with 0 <= R <= 2e + 1
      for (const auto& d : q2.units())
        for (int R = 0; R <= 2 * q2.e() + 1; ++R) by_set = by_set && is_represented(M, Bong::make(q2, {d * q2.pi().pow(R)}));
    }
    pass = pass && by_classify && by_set;
    out << "n=" << n << " classify=" << (by_classify ? "true" : "false") << " tests=" << (by_set ? "true" : "false")
        << "; ";
  }
  Field s2 = Field::parse("q2(sqrt2)");
  Bong o = ones(s2, 3);
  UniversalVerdict v = classify(o, 1);
  const bool e2 = !v.verdict && v.failing_clause == "(i)" && o.alpha(1) == HalfInt(2);
  pass = pass && e2;
  out << "q2(sqrt2) <1,1,1>: " << (v.verdict ? "universal" : "fails " + v.failing_clause) << " alpha1=" << o.alpha(1).str();
  return {pass, out.str()};
}

Outcome quaternary_sweep() {
  Field q2 = Field::q2();
  const auto units = q2.units();
  std::vector<Elem> pool;
  for (int R = 0; R <= 3; ++R)
    for (const auto& d : units) pool.push_back(d * q2.pi().pow(R));
  const int k = static_cast<int>(pool.size());
  int candidates = 0, valid = 0, exceptions = 0;
  const TestSet set = testset(q2, 2);
  for (int code = 0; code < k * k * k * k; ++code) {
    ++candidates;
    std::vector<Elem> entries{pool[code % k], pool[code / k % k], pool[code / (k * k) % k], pool[code / (k * k * k)]};
    if (Bong::check(q2, entries)) continue;
    Bong M = Bong::make(q2, entries);
    if (!M.is_classic()) continue;
    ++valid;
    if (classify(M, 2).verdict || j_conditions(M, 2).verdict || universal_via_testset(M, set).verdict) ++exceptions;
  }
  return {exceptions == 0, std::to_string(candidates) + " candidates, " + std::to_string(valid) +
                               " valid classic, " + std::to_string(exceptions) + " exceptions"};
}

Outcome three_way() {
  std::ostringstream out;
  bool pass = true;
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    for (int n = 2; n <= 3; ++n) {
      SweepReport r = consistency_sweep(f, n, 500, 20240 + n);
      pass = pass && r.disagreements.empty() && r.samples >= 500;
      out << name << "/n=" << n << ":" << r.disagreements.size() << "/" << r.samples << " (" << r.universal_count
          << " universal) ";
    }
  }
  return {pass, "disagreements " + out.str()};
}

Outcome minimality() {
  std::ostringstream out;
  bool pass = true;
  auto run = [&](const Field& f, int n) {
    TestSet s = testset(f, n);
    int ok = 0;
    for (const auto& m : s.members) {
      MinimalityResult r = check_minimality(s, m);
      if (r.contract_holds())
        ++ok;
      else
        out << "[" << m.label << " witness misses " << r.unrepresented.size() << "] ";
    }
    pass = pass && ok == static_cast<int>(s.size());
    out << f.name() << "/n=" << n << ":" << ok << "/" << s.size() << " ";
  };
  Field q2 = Field::q2();
  run(q2, 2);
  run(q2, 3);
  run(Field::parse("q2(sqrt2)"), 2);
  return {pass, out.str()};
}

Outcome hilbert_oracle() {
  std::ostringstream out;
  bool pass = true;
  for (const char* name : {"q2", "q2(sqrt5)"}) {
    Field f = Field::parse(name);
    oracle::HilbertOracle h(f);
    const auto& r = h.residues();
    const int k = f.num_classes();
    int pairs = 0, mismatches = 0, algebra = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        SqClass a = f.class_from_index(i), b = f.class_from_index(j);
        ++pairs;
        if (f.hilbert(a, b) != h(r.from_elem(f.rep(a)), r.from_elem(f.rep(b)))) ++mismatches;
        for (int l = 0; l < k; ++l) {
          SqClass c = f.class_from_index(l);
          if (f.hilbert(a, f.mul(b, c)) != f.hilbert(a, b) * f.hilbert(a, c)) ++algebra;
        }
      }
    for (int i = 1; i < k; ++i) {
      bool witness = false;
      for (int j = 0; j < k; ++j) witness = witness || f.hilbert(f.class_from_index(i), f.class_from_index(j)) == -1;
      if (!witness) ++algebra;
    }
    pass = pass && mismatches == 0 && algebra == 0;
    out << name << ": " << pairs << " pairs, " << mismatches << " mismatches, " << algebra << " algebra violations; ";
  }
  return {pass, out.str()};
}

Outcome propositions() {
  std::ostringstream out;
  bool pass = true;
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    std::mt19937_64 rng(808);
    int violations = 0;
    std::string first;
    for (int t = 0; t < 1000; ++t) {
      auto v = oracle::proposition_violations(oracle::random_valid_bong(f, rng, 2, 8, t % 2 == 0));
      if (!v.empty() && first.empty()) first = v.front();
      violations += static_cast<int>(v.size());
    }
    pass = pass && violations == 0;
    out << name << ":" << violations << " ";
    if (!first.empty()) out << "(" << first << ") ";
  }
  return {pass, "1000 BONGs per field, violations " + out.str()};
}

Outcome cardinalities() {
  std::ostringstream out;
  bool pass = true;
  for (const auto& name : oracle::field_names()) {
    Field f = Field::parse(name);
    for (int n = 2; n <= 3; ++n) {
      TestSet s = testset(f, n);
      std::size_t formula;
      if (n % 2 == 1) {
        formula = 8;
        for (int i = 0; i < f.e(); ++i) formula *= static_cast<std::size_t>(f.q());
      } else {
        formula = 1 + static_cast<std::size_t>(f.u_e()) + 2 * f.pc_set().size();
      }
      pass = pass && s.size() == formula;
      ClosedFormCount cf = closed_form_count(f, n);
      const bool cf_matches = cf.is_integer() && static_cast<std::size_t>(cf.num / cf.den) == s.size();
      out << name << "/n=" << n << ":" << s.size() << " (closed form " << cf.str()
          << (cf_matches ? ")" : ", differs from enumeration)") << " ";
    }
  }
  return {pass, out.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<double, std::function<Outcome()>>> criteria{
      {1.0, table_invariants}, {0.0, table_universal}, {10.0, ones_lattices},
      {0.0, quaternary_sweep}, {300.0, three_way},      {0.0, minimality},
      {0.0, hilbert_oracle},   {0.0, propositions},     {0.0, cardinalities},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double limit = criteria[k].first;
    if (limit > 0 && secs >= limit) {
      o.pass = false;
      o.detail += " [over the " + std::to_string(static_cast<int>(limit)) + " s limit]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu: %s %s (%.2f s)\n", k + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
