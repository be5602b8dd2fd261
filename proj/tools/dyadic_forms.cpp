#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dyadic/lattice_io.hpp"
#include "dyadic/parse.hpp"
#include "dyadic/represent.hpp"
#include "dyadic/universal.hpp"
#include "json.hpp"

using namespace dyadic;
using nlohmann::json;

namespace {

struct Options {
  std::string field = "q2";
  int precision = 0;
  bool json_out = false;
  std::string bong, file;
  std::string m_bong, m_file, n_bong, n_file;
  std::vector<std::string> values;
  int n = 1;
  std::string route = "theorem";
  bool list = false;
  bool table = false;
  bool stop_early = false;
  std::string target;
  int samples = 500;
  std::uint64_t seed = 1;
};

Field make_field(const Options& o) { return Field::parse(o.field, o.precision); }

Bong lattice_from(const Options& o, const std::string& bong, const std::string& file, const char* what) {
  if (!file.empty()) {
    Field f = make_field(o);
    return load_lattice_file(file, &f);
  }
  if (bong.empty()) throw ParseError(std::string("missing lattice: give ") + what);
  Field f = make_field(o);
  return Bong::make(f, parse_elem_list(f, bong));
}

std::string class_str(const Field& f, SqClass c) {
  return f.rep(SqClass{c.unit, 0}).str() + "*pi^" + std::to_string(c.parity);
}

Elem value_at(const Field& f, const Options& o, std::size_t i) {
  if (o.values.size() <= i) throw ParseError("missing element argument");
  return parse_elem(f, o.values[i]);
}

json strings(const std::vector<Elem>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int cmd_field_info(const Options& o) {
  Field f = make_field(o);
  const char* kinds[] = {"rational", "unramified", "ramified"};
  json j{{"field", f.name()},
         {"kind", kinds[static_cast<int>(f.kind())]},
         {"e", f.e()},
         {"q", f.q()},
         {"precision", f.precision()},
         {"pi", f.pi().str()},
         {"Delta", f.delta().str()},
         {"rho", f.rho().str()},
         {"omega", f.omega().str()},
         {"omega_sharp", f.omega_sharp().str()}};
  std::ostringstream s;
  s << "field: " << f.name() << " (" << kinds[static_cast<int>(f.kind())] << ")\n"
    << "e: " << f.e() << "  q: " << f.q() << "  precision: " << f.precision() << "\n"
    << "pi: " << f.pi().str() << "\nDelta: " << f.delta().str() << "\nrho: " << f.rho().str() << "\n"
    << "omega: " << f.omega().str() << "\nomega#: " << f.omega_sharp().str() << "\n";
  json units = json::array();
  s << "unit classes (" << f.num_unit_classes() << "):\n";
  for (const auto& u : f.units()) {
    units.push_back({{"unit", u.str()}, {"defect", f.defect(u).str()}});
    s << "  " << u.str() << "  d=" << f.defect(u).str() << "\n";
  }
  j["units"] = units;
  j["pc_size"] = f.pc_set().size();
  s << "|P_c|: " << f.pc_set().size() << "\n";
  if (o.table) {
    const int k = f.num_classes();
    json t = json::array();
    s << "hilbert table (rows and columns in class order):\n";
    for (int a = 0; a < k; ++a) {
      json row = json::array();
      s << "  " << class_str(f, f.class_from_index(a)) << ":";
      for (int b = 0; b < k; ++b) {
        int h = f.hilbert(f.class_from_index(a), f.class_from_index(b));
        row.push_back(h);
        s << (h > 0 ? " +" : " -");
      }
      t.push_back(row);
      s << "\n";
    }
    j["hilbert"] = t;
  }
  emit(o, j, s.str());
  return 0;
}

int cmd_defect(const Options& o) {
  Field f = make_field(o);
  Elem c = value_at(f, o, 0);
  if (c.is_zero()) throw DomainError("defect of 0 is undefined");
  SqClass cls = f.class_of(c);
  json j{{"element", c.str()}, {"ord", c.ord().str()}, {"defect", f.defect(c).str()}, {"class", class_str(f, cls)}};
  emit(o, j, "d(" + c.str() + ") = " + f.defect(c).str() + "\nclass: " + class_str(f, cls) + "\n");
  return 0;
}

int cmd_hilbert(const Options& o) {
  Field f = make_field(o);
  Elem a = value_at(f, o, 0), b = value_at(f, o, 1);
  int h = f.hilbert(a, b);
  json j{{"a", a.str()}, {"b", b.str()}, {"hilbert", h}};
  emit(o, j, "(" + a.str() + ", " + b.str() + ") = " + std::to_string(h) + "\n");
  return 0;
}

int cmd_sharp(const Options& o) {
  Field f = make_field(o);
  Elem c = value_at(f, o, 0);
  Elem s = f.sharp(c);
  json j{{"element", c.str()}, {"sharp", s.str()}, {"hilbert", f.hilbert(c, s)}};
  emit(o, j, c.str() + "# = " + s.str() + "\n");
  return 0;
}

int cmd_validate(const Options& o) {
  try {
    Bong b = lattice_from(o, o.bong, o.file, "--bong or --file");
    json j{{"valid", true}, {"lattice", json::parse(lattice_json(b))}, {"classic", b.is_classic()}};
    emit(o, j, "valid: " + b.str() + "\nclassic integral: " + std::string(b.is_classic() ? "true" : "false") + "\n");
    return 0;
  } catch (const InvalidBong& e) {
    json j{{"valid", false}, {"index", e.violation.index}, {"condition", e.violation.condition}, {"entries", strings(e.entries)}};
    emit(o, j, "invalid: " + e.violation.condition + " fails at i=" + std::to_string(e.violation.index) + "\n");
    return 2;
  }
}

int cmd_invariants(const Options& o) {
  Bong b = lattice_from(o, o.bong, o.file, "--bong or --file");
  const int m = b.rank();
  json R = json::array(), al = json::array(), pd = json::array();
  std::ostringstream s;
  s << "lattice: " << b.str() << "\n" << "i\tR\talpha\td(-a_i a_{i+1})\n";
  for (int i = 1; i <= m; ++i) {
    R.push_back(b.R(i));
    s << i << "\t" << b.R(i);
    if (i < m) {
      al.push_back(b.alpha(i).str());
      pd.push_back(b.pair_defect(i).str());
      s << "\t" << b.alpha(i).str() << "\t" << b.pair_defect(i).str();
    } else {
      s << "\t-\t-";
    }
    s << "\n";
  }
  s << "integral: " << (b.is_integral() ? "true" : "false") << "\nclassic: " << (b.is_classic() ? "true" : "false") << "\n";
  json j{{"lattice", json::parse(lattice_json(b))}, {"R", R}, {"alpha", al}, {"pair_defect", pd},
         {"integral", b.is_integral()}, {"classic", b.is_classic()}};
  emit(o, j, s.str());
  return 0;
}

int cmd_represents(const Options& o) {
  Bong M = lattice_from(o, o.m_bong, o.m_file, "--M or --M-file");
  Bong N = lattice_from(o, o.n_bong, o.n_file, "--N or --N-file");
  RepReport r = represents(M, N, o.stop_early);
  std::ostringstream s;
  s << "represents: " << (r.verdict ? "true" : "false") << "\n";
  s << "space: " << (r.space_ok ? "ok" : "fails") << "\n";
  auto line = [&](const char* name, const std::vector<CondOutcome>& v) {
    s << name << ":";
    for (const auto& c : v) s << " " << c.index << (c.triggered ? "" : "*") << (c.holds ? "+" : "-");
    s << "\n";
  };
  line("B1", r.b1);
  line("B2", r.b2);
  line("B3", r.b3);
  line("B4", r.b4);
  if (r.first_failure) s << "first failure: " << *r.first_failure << "\n";
  emit(o, json::parse(report_json(r)), s.str());
  return 0;
}

int cmd_classify(const Options& o) {
  Bong M = lattice_from(o, o.bong, o.file, "--bong or --file");
  std::vector<UniversalVerdict> vs;
  if (o.route == "theorem" || o.route == "all") vs.push_back(classify(M, o.n));
  if (o.route == "j" || o.route == "all") vs.push_back(j_conditions(M, o.n));
  if (o.route == "testset" || o.route == "all") vs.push_back(universal_via_testset(M, o.n));
  if (vs.empty()) throw ParseError("route must be theorem, j, testset or all");
  std::ostringstream s;
  json arr = json::array();
  for (const auto& v : vs) {
    s << "universal: " << (v.verdict ? "true" : "false") << "\nroute: " << v.route << "\n";
    if (!v.verdict) s << "failing clause: " << v.failing_clause << "\n";
    arr.push_back(json::parse(verdict_json(v)));
  }
  emit(o, vs.size() == 1 ? arr[0] : json{{"verdicts", arr}}, s.str());
  return 0;
}

int cmd_testset(const Options& o) {
  Field f = make_field(o);
  TestSet set = testset(f, o.n);
  ClosedFormCount cf = closed_form_count(f, o.n);
  const bool match = cf.is_integer() && static_cast<std::size_t>(cf.num / cf.den) == set.size();
  std::ostringstream s;
  s << "test set for n=" << o.n << " over " << f.name() << ": " << set.size() << " lattices\n";
  s << "closed form: " << cf.str() << (match ? "" : " (differs from enumeration)") << "\n";
  json members = json::array();
  for (const auto& c : set.members) {
    members.push_back({{"label", c.label}, {"lattice", json::parse(lattice_json(c.lattice))}});
    if (o.list) s << c.label << "\t" << c.lattice.str() << "\n";
  }
  json j{{"field", f.name()}, {"n", o.n}, {"count", set.size()}, {"closed_form", cf.str()}, {"closed_form_matches", match}};
  if (o.list) j["members"] = members;
  emit(o, j, s.str());
  return 0;
}

int cmd_minimality(const Options& o) {
  Field f = make_field(o);
  TestSet set = testset(f, o.n);
  std::ostringstream s;
  json arr = json::array();
  bool found = o.target.empty();
  for (const auto& c : set.members) {
    if (!o.target.empty() && c.label != o.target) continue;
    found = true;
    MinimalityResult r = check_minimality(set, c);
    s << c.label << "\twitness " << r.witness.str() << "\t" << (r.contract_holds() ? "ok" : "FAILS") << "\n";
    json miss = r.unrepresented;
    arr.push_back({{"target", c.label}, {"witness", json::parse(lattice_json(r.witness))}, {"unrepresented", miss},
                   {"contract_holds", r.contract_holds()}});
  }
  if (!found) throw DomainError("no test lattice labelled " + o.target);
  emit(o, json{{"field", f.name()}, {"n", o.n}, {"witnesses", arr}}, s.str());
  return 0;
}

int cmd_sweep(const Options& o) {
  Field f = make_field(o);
  SweepReport r = consistency_sweep(f, o.n, o.samples, o.seed);
  std::ostringstream s;
  s << "field: " << r.field << "  n: " << r.n << "  samples: " << r.samples << "  seed: " << r.seed << "\n";
  s << "universal: " << r.universal_count << "\ndisagreements: " << r.disagreements.size() << "\n";
  for (const auto& d : r.disagreements)
    s << "  " << d.lattice << "  classify=" << d.by_classify.verdict << " j=" << d.by_j.verdict << " testset=" << d.by_testset.verdict << "\n";
  emit(o, json::parse(sweep_json(r)), s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation and n-universality of lattices over dyadic fields"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "q2, q2(sqrt5), q2(sqrt(-1)), ...")->capture_default_str();
    c->add_option("--precision", o.precision, "relative pi-adic precision (0 = default)");
    c->add_flag("--json", o.json_out, "JSON output");
  };
  auto lattice = [&](CLI::App* c) {
    c->add_option("--bong", o.bong, "comma-separated BONG entries, e.g. \"1,1,2+sqrt(2)\"");
    c->add_option("--file", o.file, "lattice JSON file");
  };
  auto elems = [&](CLI::App* c, const char* desc) { c->add_option("values", o.values, desc)->allow_extra_args(); };

  std::map<CLI::App*, int (*)(const Options&)> run;
  auto sub = [&](const char* name, const char* desc, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, desc);
    common(c);
    run[c] = fn;
    return c;
  };

  auto* fi = sub("field-info", "constants, unit classes and optionally the Hilbert table", cmd_field_info);
  fi->add_flag("--table", o.table, "print the Hilbert symbol table");
  elems(sub("defect", "quadratic defect and square class of an element", cmd_defect), "element");
  elems(sub("hilbert", "Hilbert symbol (a, b)", cmd_hilbert), "a b");
  elems(sub("sharp", "companion class c# with (c, c#) = -1", cmd_sharp), "element");
  lattice(sub("bong-validate", "check the good-BONG conditions", cmd_validate));
  lattice(sub("invariants", "R_i, alpha_i and d(-a_i a_{i+1})", cmd_invariants));
  auto* rep = sub("represents", "decide whether N is represented by M", cmd_represents);
  rep->add_option("--M", o.m_bong, "entries of M");
  rep->add_option("--M-file", o.m_file, "lattice file for M");
  rep->add_option("--N", o.n_bong, "entries of N");
  rep->add_option("--N-file", o.n_file, "lattice file for N");
  rep->add_flag("--stop-early", o.stop_early, "stop at the first failed condition");
  auto* cl = sub("classify", "n-universality of a classic integral lattice", cmd_classify);
  lattice(cl);
  cl->add_option("--n", o.n, "rank of the lattices to represent")->capture_default_str();
  cl->add_option("--route", o.route, "theorem | j | testset | all")->capture_default_str();
  auto* ts = sub("testset", "the minimal test set for n-universality", cmd_testset);
  ts->add_option("--n", o.n, "n >= 2")->required();
  ts->add_flag("--list", o.list, "list the lattices");
  auto* mn = sub("minimality", "check the minimality witnesses of the test set", cmd_minimality);
  mn->add_option("--n", o.n, "n >= 2")->required();
  mn->add_option("--target", o.target, "only this test lattice label");
  auto* sw = sub("sweep", "random three-way consistency check", cmd_sweep);
  sw->add_option("--n", o.n, "n >= 2")->required();
  sw->add_option("--samples", o.samples, "number of random lattices")->capture_default_str();
  sw->add_option("--seed", o.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    for (auto& [c, fn] : run)
      if (c->parsed()) return fn(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
