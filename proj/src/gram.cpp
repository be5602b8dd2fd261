#include <algorithm>

#include "dyadic/bong.hpp"

namespace dyadic {

namespace {

using Matrix = std::vector<std::vector<Elem>>;

struct Candidate {
  int i = 0;
  int j = -1;  // -1: the basis vector e_i alone; otherwise e_i + lambda e_j
  Elem lambda;
  Elem q;
  std::vector<int> key;
};

std::vector<int> sort_key(const Elem& q, int e) {
  std::vector<int> k{q.valuation()};
  auto d = q.digits(std::min(q.rel_precision(), 2 * e + 2));
  k.insert(k.end(), d.begin(), d.end());
  return k;
}

std::vector<Candidate> norm_generators(const Field& f, const Matrix& g) {
  const int k = static_cast<int>(g.size());
  std::vector<Elem> lambdas;
  for (int code = 1; code < f.q(); ++code) lambdas.push_back(f.from_digits({code}));
  Elem two = f.from_int(2);
  std::vector<Candidate> all;
  for (int i = 0; i < k; ++i)
    if (!g[i][i].is_zero()) all.push_back({i, -1, Elem(), g[i][i], {}});
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (const auto& l : lambdas) {
        Elem q = g[i][i] + two * l * g[i][j] + l * l * g[j][j];
        if (!q.is_zero()) all.push_back({i, j, l, q, {}});
      }
  if (all.empty()) return all;
  int best = all[0].q.valuation();
  for (const auto& c : all) best = std::min(best, c.q.valuation());
  std::vector<Candidate> out;
  for (auto& c : all)
    if (c.q.valuation() == best) {
      c.key = sort_key(c.q, f.e());
      out.push_back(c);
    }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) { return x.key < y.key; });
  return out;
}

// Gram matrix of the projection onto x^perp of the basis with e_i replaced by x.
Matrix project(const Matrix& g, const Candidate& c) {
  const int k = static_cast<int>(g.size());
  std::vector<Elem> bx(k);
  for (int r = 0; r < k; ++r) bx[r] = c.j < 0 ? g[r][c.i] : g[r][c.i] + c.lambda * g[r][c.j];
  std::vector<int> rest;
  for (int r = 0; r < k; ++r)
    if (r != c.i) rest.push_back(r);
  Matrix out(rest.size(), std::vector<Elem>(rest.size()));
  for (std::size_t u = 0; u < rest.size(); ++u)
    for (std::size_t v = 0; v < rest.size(); ++v)
      out[u][v] = g[rest[u]][rest[v]] - bx[rest[u]] * bx[rest[v]] / c.q;
  return out;
}

bool is_zero_matrix(const Matrix& g) {
  for (const auto& row : g)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

std::vector<Elem> greedy_bong(const Field& f, Matrix g) {
  std::vector<Elem> out;
  while (!g.empty()) {
    if (is_zero_matrix(g)) throw DomainError("degenerate Gram matrix");
    auto c = norm_generators(f, g).front();
    out.push_back(c.q);
    g = project(g, c);
  }
  return out;
}

// Depth-first over norm-generator choices, pruning as soon as the partial BONG fails.
bool search(const Field& f, const Matrix& g, std::vector<Elem>& acc, int& budget) {
  if (g.empty()) return true;
  if (--budget < 0) return false;
  if (is_zero_matrix(g)) throw DomainError("degenerate Gram matrix");
  for (const auto& c : norm_generators(f, g)) {
    acc.push_back(c.q);
    if (!Bong::check(f, acc) && search(f, project(g, c), acc, budget)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

Bong bong_from_gram(const Field& field, const Matrix& gram) {
  const std::size_t k = gram.size();
  for (const auto& row : gram)
    if (row.size() != k) throw DomainError("Gram matrix is not square");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!(gram[i][j] == gram[j][i])) throw DomainError("Gram matrix is not symmetric");
  if (k == 0) return Bong::make(field, {});
  std::vector<Elem> acc;
  int budget = 20000;
  if (search(field, gram, acc, budget)) return Bong::make(field, acc);
  auto raw = greedy_bong(field, gram);
  auto v = Bong::check(field, raw);
  throw InvalidBong(v.value_or(BongViolation{0, "search budget exhausted"}), raw);
}

}  // namespace dyadic
