#pragma once

#include <span>
#include <vector>

namespace spreadmx::stats {

/// |mean(a) − mean(b)| over the pooled standard deviation. Zero when both
/// samples are constant and equal; throws InvalidArgument when the pooled
/// deviation is zero but the means differ, or a sample has fewer than 2 values.
double cohens_d(std::span<const double> a, std::span<const double> b);

struct KruskalWallis {
  double h = 0.0;
  double p = 1.0;
};

/// Tie-corrected Kruskal–Wallis H with a chi-square (k − 1 dof) p-value.
/// All values identical gives H = 0, p = 1.
KruskalWallis kruskal_wallis(std::span<const std::vector<double>> groups);

/// Kendall tau-b. Throws InvalidArgument when either vector is constant.
double kendall_tau(std::span<const double> x, std::span<const double> y);

/// Mid-ranks (1-based) of the values, ties sharing their average rank.
std::vector<double> average_ranks(std::span<const double> values);

/// Chi-square survival function P(X > x) for `dof` degrees of freedom.
double chi_square_sf(double x, double dof);

}  // namespace spreadmx::stats
