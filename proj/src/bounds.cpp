#include "misbench/bounds.hpp"

#include <cmath>
#include <string>

namespace misbench {

namespace {

void check_ratio(const std::optional<double>& value, const char* field, int d) {
  if (value && (*value <= 0.0 || *value > 1.0)) {
    throw Error(errc::invalid_parameter,
                std::string(field) + "=" + std::to_string(*value) + " for d=" + std::to_string(d) +
                    " must be in (0, 1]");
  }
}

}  // namespace

void BoundsTable::upsert(const BoundsRow& row) {
  if (row.d < 3) {
    throw Error(errc::invalid_parameter, "bounds rows need d >= 3, got d=" + std::to_string(row.d));
  }
  if (row.rho_ub && (*row.rho_ub <= 0.0 || *row.rho_ub >= 1.0)) {
    throw Error(errc::invalid_parameter, "rho_ub=" + std::to_string(*row.rho_ub) + " must be in (0, 1)");
  }
  check_ratio(row.ar_1rsb, "ar_1rsb", row.d);
  check_ratio(row.ar_mcmc, "ar_mcmc", row.d);
  check_ratio(row.ar_bpr, "ar_bpr", row.d);
  rows_[row.d] = row;
}

const BoundsRow* BoundsTable::lookup(int d) const {
  auto it = rows_.find(d);
  return it == rows_.end() ? nullptr : &it->second;
}

BoundsTable builtin_bounds() {
  BoundsTable table;
  table.upsert({3, 0.45537, 0.990, 0.984, 0.987});
  table.upsert({5, 0.38443, 0.987, 0.981, 0.981});
  return table;
}

double density(const IndependentSet& s, std::uint64_t n) { return density(s.alpha(), n); }

double density(std::uint64_t alpha, std::uint64_t n) {
  if (n == 0) throw Error(errc::invalid_parameter, "density needs n > 0");
  return static_cast<double>(alpha) / static_cast<double>(n);
}

double approximation_ratio(const IndependentSet& s, std::uint64_t n, int d, const BoundsTable& table) {
  return approximation_ratio(s.alpha(), n, d, table);
}

double approximation_ratio(std::uint64_t alpha, std::uint64_t n, int d, const BoundsTable& table) {
  const BoundsRow* row = table.lookup(d);
  if (row == nullptr || !row->rho_ub) {
    throw Error(errc::no_bound_for_degree, "no rho_ub tabulated for d=" + std::to_string(d));
  }
  return density(alpha, n) / *row->rho_ub;
}

std::pair<double, double> large_d_bounds(int d) {
  if (d < 2) throw Error(errc::invalid_parameter, "large_d_bounds needs d >= 2");
  const double rho_alg = std::log(static_cast<double>(d)) / static_cast<double>(d);
  return {rho_alg, 2.0 * rho_alg};
}

}  // namespace misbench
