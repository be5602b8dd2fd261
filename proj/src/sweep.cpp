#include "dyadic/universal.hpp"
#include "json.hpp"

namespace dyadic {

Bong random_classic_bong(const Field& field, int n, std::mt19937_64& rng) {
  const int e = field.e();
  const std::vector<Elem> units = field.units();
  const int boundary[] = {-2 * e, 2 - 2 * e, 0, 1, 2 * e, 2 * e + 1};
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  const Elem pi = field.pi();

  for (;;) {
    const int m = chance(0.75) ? uniform(std::max(1, n + 2), std::max(std::min(8, n + 5), n + 2)) : uniform(1, 8);
    std::vector<int> R(m);
    R[0] = chance(0.7) ? 0 : uniform(0, 3 * e);
    bool ok = true;
    for (int i = 1; i < m && ok; ++i) {
      int step;
      if (chance(0.45))
        step = 0;
      else if (chance(0.6))
        step = boundary[uniform(0, 5)];
      else
        step = uniform(-2 * e, 2 * e + 1);
      R[i] = R[i - 1] + step;
      ok = std::abs(R[i]) <= 3 * e;
    }
    if (!ok) continue;
    std::vector<Elem> entries;
    for (int i = 0; i < m; ++i) entries.push_back(units[uniform(0, static_cast<int>(units.size()) - 1)] * pi.pow(R[i]));
    if (Bong::check(field, entries)) continue;
    Bong b = Bong::make(field, std::move(entries));
    if (b.is_classic()) return b;
  }
}

SweepReport consistency_sweep(const Field& field, int n, int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("samples must be at least 1");
  if (n < 2) throw DomainError("the sweep compares three routes and needs n >= 2");
  SweepReport rep{field.name(), n, samples, 0, seed, {}};
  std::mt19937_64 rng(seed);
  const TestSet set = testset(field, n);
  for (int s = 0; s < samples; ++s) {
    const Bong M = random_classic_bong(field, n, rng);
    UniversalVerdict a = classify(M, n);
    UniversalVerdict b = j_conditions(M, n);
    UniversalVerdict c = universal_via_testset(M, set);
    if (a.verdict) ++rep.universal_count;
    if (a.verdict != b.verdict || a.verdict != c.verdict) rep.disagreements.push_back({M.str(), a, b, c});
  }
  return rep;
}

std::string sweep_json(const SweepReport& r) {
  using nlohmann::json;
  json j;
  j["field"] = r.field;
  j["n"] = r.n;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["universal"] = r.universal_count;
  json d = json::array();
  for (const auto& x : r.disagreements) {
    d.push_back({{"lattice", x.lattice},
                 {"classify", json::parse(verdict_json(x.by_classify))},
                 {"j_conditions", json::parse(verdict_json(x.by_j))},
                 {"test_set", json::parse(verdict_json(x.by_testset))}});
  }
  j["disagreements"] = d;
  return j.dump();
}

}  // namespace dyadic
