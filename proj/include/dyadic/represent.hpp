#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyadic/bong.hpp"

namespace dyadic {

// Invariants of a pair (M, N) with rank N <= rank M; S_i, beta_i are R_i, alpha_i of N.
class PairContext {
 public:
  PairContext(const Bong& M, const Bong& N);

  const Bong& M() const { return *m_; }
  const Bong& N() const { return *n_; }
  int m() const { return m_->rank(); }
  int n() const { return n_->rank(); }
  int R(int i) const { return m_->R(i); }
  int S(int i) const { return n_->R(i); }

  // d[c a_{1,i} b_{1,j}] for 0 <= i <= m, 0 <= j <= n.
  HalfInt d_bracket(SqClass c, int i, int j) const;
  HalfInt d_bracket(int sign, int i, int j) const;
  HalfInt A(int i) const;  // 1 <= i <= min(m-1, n)
  // S_{n+1} + A_{n+1}; defined when n <= m-2.
  std::optional<HalfInt> S_plus_A_next() const;
  int P(int k) const;  // (a_{1,k} b_{1,k}, -a_{1,k+1} b_{1,k-1})

  bool B1(int i) const;
  bool B2(int i) const;
  bool B3_triggered(int i) const;
  bool B3(int i) const;
  bool B4_triggered(int i) const;
  bool B4(int i) const;

  int b2_max() const { return std::min(m() - 1, n()); }
  int b3_max() const { return std::min(m() - 1, n() + 1); }
  int b4_max() const { return std::min(m() - 2, n() + 1); }

 private:
  SqClass ab(int i, int j) const;  // class of a_{1,i} b_{1,j}
  const Bong* m_;
  const Bong* n_;
};

struct CondOutcome {
  int index = 0;
  bool triggered = true;  // B1 and B2 are unconditional
  bool holds = true;
};

struct RepReport {
  bool space_ok = false;
  std::vector<CondOutcome> b1, b2, b3, b4;
  bool verdict = false;
  std::optional<std::string> first_failure;  // "space", "rank", "B3(4)", ...
};

// Beli's criterion for N -> M. With stop_early the report ends at the first failure.
RepReport represents(const Bong& M, const Bong& N, bool stop_early = false);
bool is_represented(const Bong& M, const Bong& N);

std::string report_json(const RepReport& r);

}  // namespace dyadic
