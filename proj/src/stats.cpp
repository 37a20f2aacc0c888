#include "spreadmx/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "spreadmx/error.hpp"

namespace spreadmx::stats {
namespace {

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sum_sq_dev(std::span<const double> v, double m) {
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s;
}

}  // namespace

double cohens_d(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw InvalidArgument("cohens_d needs at least 2 values per sample");
  const double ma = mean(a);
  const double mb = mean(b);
  const double pooled_var = (sum_sq_dev(a, ma) + sum_sq_dev(b, mb)) /
                            static_cast<double>(a.size() + b.size() - 2);
  const double diff = std::abs(ma - mb);
  if (pooled_var == 0.0) {
    if (diff == 0.0) return 0.0;
    throw InvalidArgument("cohens_d undefined: zero pooled deviation with different means");
  }
  return diff / std::sqrt(pooled_var);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double chi_square_sf(double x, double dof) {
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

KruskalWallis kruskal_wallis(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw InvalidArgument("kruskal_wallis needs at least 2 groups");
  std::vector<double> pooled;
  for (const auto& g : groups) {
    if (g.empty()) throw InvalidArgument("kruskal_wallis groups must be non-empty");
    pooled.insert(pooled.end(), g.begin(), g.end());
  }
  const double n = static_cast<double>(pooled.size());
  const auto ranks = average_ranks(pooled);

  double weighted = 0.0;
  std::size_t offset = 0;
  for (const auto& g : groups) {
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) rank_sum += ranks[offset + i];
    offset += g.size();
    weighted += rank_sum * rank_sum / static_cast<double>(g.size());
  }
  double h = 12.0 / (n * (n + 1.0)) * weighted - 3.0 * (n + 1.0);

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double ties = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    ties += t * t * t - t;
    i = j;
  }
  const double correction = 1.0 - ties / (n * n * n - n);
  if (correction <= 0.0) return {0.0, 1.0};
  h /= correction;
  h = std::max(h, 0.0);
  return {h, chi_square_sf(h, static_cast<double>(groups.size() - 1))};
}

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("kendall_tau needs equal-length vectors");
  if (x.size() < 2) throw InvalidArgument("kendall_tau needs at least 2 pairs");
  // O(n^2) pair count; sample sizes here are per-cell item counts.
  long long concordant_minus_discordant = 0;
  long long untied_x = 0;
  long long untied_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const int sx = (x[i] < x[j]) - (x[j] < x[i]);
      const int sy = (y[i] < y[j]) - (y[j] < y[i]);
      concordant_minus_discordant += sx * sy;
      untied_x += sx != 0;
      untied_y += sy != 0;
    }
  }
  if (untied_x == 0 || untied_y == 0) {
    throw InvalidArgument("kendall_tau undefined for a constant vector");
  }
  return static_cast<double>(concordant_minus_discordant) /
         std::sqrt(static_cast<double>(untied_x) * static_cast<double>(untied_y));
}

}  // namespace spreadmx::stats
