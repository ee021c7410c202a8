#pragma once

#include <map>
#include <optional>
#include <utility>

#include "misbench/errors.hpp"
#include "misbench/independent_set.hpp"

namespace misbench {

// One row of tabulated reference constants for degree d:
//   rho_ub  — best rigorous upper bound on the MIS density,
//   ar_1rsb — replica-method estimate of the best achievable approximation ratio,
//   ar_mcmc — reference AR reached by annealing/tempering,
//   ar_bpr  — reference AR reached by reinforced belief propagation.
// Approximation ratios are always reported relative to rho_ub.
struct BoundsRow {
  int d = 0;
  std::optional<double> rho_ub;
  std::optional<double> ar_1rsb;
  std::optional<double> ar_mcmc;
  std::optional<double> ar_bpr;
};

class BoundsTable {
 public:
  // Inserts or replaces the row for row.d; validates 0 < rho_ub < 1,
  // 0 < ar <= 1 and d >= 3.
  void upsert(const BoundsRow& row);

  const BoundsRow* lookup(int d) const;
  const std::map<int, BoundsRow>& rows() const { return rows_; }

 private:
  std::map<int, BoundsRow> rows_;
};

// The built-in table: d = 3 and d = 5 literature constants.
BoundsTable builtin_bounds();

double density(const IndependentSet& s, std::uint64_t n);
double density(std::uint64_t alpha, std::uint64_t n);

// alpha/n divided by rho_ub(d); throws NoBoundForDegree when the table has no
// density bound for d. Values above 1 are possible at small n and are
// reported as-is, never clamped.
double approximation_ratio(const IndependentSet& s, std::uint64_t n, int d, const BoundsTable& table);
double approximation_ratio(std::uint64_t alpha, std::uint64_t n, int d, const BoundsTable& table);

// Large-degree asymptotics: best known algorithmic density log(d)/d and the
// true MIS density 2·log(d)/d; their ratio is identically 1/2.
std::pair<double, double> large_d_bounds(int d);

}  // namespace misbench
