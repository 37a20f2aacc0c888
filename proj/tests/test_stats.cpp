#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "spreadmx/error.hpp"
#include "spreadmx/stats.hpp"

using namespace spreadmx;
using namespace spreadmx::stats;

namespace {

// H from its textbook definition with mid-ranks and the tie correction,
// computed by counting (no sorting).
double brute_h(const std::vector<std::vector<double>>& groups) {
  std::vector<double> pooled;
  for (const auto& g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  const double n = static_cast<double>(pooled.size());
  auto rank_of = [&](double v) {
    double below = 0, equal = 0;
    for (double w : pooled) {
      below += w < v;
      equal += w == v;
    }
    return below + (equal + 1) / 2;
  };
  double sum = 0;
  for (const auto& g : groups) {
    double r = 0;
    for (double v : g) r += rank_of(v);
    sum += r * r / g.size();
  }
  double h = 12 / (n * (n + 1)) * sum - 3 * (n + 1);
  double ties = 0;
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    bool first = true;
    for (std::size_t j = 0; j < i; ++j) first = first && pooled[j] != pooled[i];
    if (!first) continue;
    const double t = static_cast<double>(std::count(pooled.begin(), pooled.end(), pooled[i]));
    ties += t * t * t - t;
  }
  const double c = 1 - ties / (n * n * n - n);
  return c <= 0 ? 0.0 : h / c;
}

// Exact permutation p-value of H over all assignments of the pooled values to
// groups of the observed sizes.
double exact_kw_p(const std::vector<std::vector<double>>& groups) {
  std::vector<double> pooled;
  std::vector<int> label;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (double v : groups[g]) {
      pooled.push_back(v);
      label.push_back(static_cast<int>(g));
    }
  const double observed = brute_h(groups);
  std::sort(label.begin(), label.end());
  long total = 0, extreme = 0;
  do {
    std::vector<std::vector<double>> perm(groups.size());
    for (std::size_t i = 0; i < pooled.size(); ++i) perm[label[i]].push_back(pooled[i]);
    ++total;
    extreme += brute_h(perm) >= observed - 1e-12;
  } while (std::next_permutation(label.begin(), label.end()));
  return static_cast<double>(extreme) / total;
}

}  // namespace

TEST_CASE("Cohen's d examples") {
  const std::vector<double> a{1, 2, 3}, b{3, 4, 5};
  CHECK(cohens_d(a, b) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(cohens_d(b, a) == cohens_d(a, b));
  CHECK(cohens_d(a, a) == 0.0);
  const std::vector<double> zeros{0, 0}, ones{1, 1};
  CHECK(cohens_d(zeros, zeros) == 0.0);
  CHECK_THROWS_AS(cohens_d(zeros, ones), InvalidArgument);
  const std::vector<double> single{1};
  CHECK_THROWS_AS(cohens_d(single, a), InvalidArgument);
}

TEST_CASE("Kruskal-Wallis examples") {
  const std::vector<std::vector<double>> far{{1, 2, 3}, {10, 11, 12}};
  const auto kw = kruskal_wallis(far);
  CHECK(kw.h == doctest::Approx(3.857142857142857).epsilon(1e-12));
  CHECK(kw.p == doctest::Approx(0.049534613435626915).epsilon(1e-9));
  // Exact permutation p: only the two fully separated splits of C(6,3) = 20.
  CHECK(exact_kw_p(far) == doctest::Approx(0.1));

  const std::vector<std::vector<double>> same{{1, 2, 3}, {1, 2, 3}};
  CHECK(kruskal_wallis(same).p == doctest::Approx(1.0));
  const std::vector<std::vector<double>> flat{{4, 4}, {4, 4, 4}};
  const auto f = kruskal_wallis(flat);
  CHECK(f.h == 0.0);
  CHECK(f.p == 1.0);

  const std::vector<std::vector<double>> shuffled{{3, 1, 2}, {12, 10, 11}};
  CHECK(kruskal_wallis(shuffled).h == kw.h);

  const std::vector<std::vector<double>> one{{1, 2}};
  CHECK_THROWS_AS(kruskal_wallis(one), InvalidArgument);
  const std::vector<std::vector<double>> hollow{{1, 2}, {}};
  CHECK_THROWS_AS(kruskal_wallis(hollow), InvalidArgument);
}

TEST_CASE("Kruskal-Wallis H agrees with the counting definition over every relabelling") {
  const std::vector<std::vector<double>> groups{{1, 3, 3}, {2, 5}, {3, 7, 8}};
  std::vector<double> pooled{1, 3, 3, 2, 5, 3, 7, 8};
  std::vector<int> label{0, 0, 0, 1, 1, 2, 2, 2};
  int checked = 0;
  do {
    std::vector<std::vector<double>> perm(3);
    for (std::size_t i = 0; i < pooled.size(); ++i) perm[label[i]].push_back(pooled[i]);
    CHECK(kruskal_wallis(perm).h == doctest::Approx(brute_h(perm)).epsilon(1e-12));
    ++checked;
  } while (std::next_permutation(label.begin(), label.end()));
  CHECK(checked == 560);
  // Chi-square p is an approximation of the exact permutation p.
  CHECK(std::abs(kruskal_wallis(groups).p - exact_kw_p(groups)) < 0.1);
}

TEST_CASE("Kendall tau-b examples") {
  const std::vector<double> x{1, 2, 3, 4};
  CHECK(kendall_tau(x, x) == 1.0);
  const std::vector<double> rev{4, 3, 2, 1};
  CHECK(kendall_tau(x, rev) == -1.0);
  const std::vector<double> y{1, 3, 2, 4};
  CHECK(kendall_tau(x, y) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const std::vector<double> flat{2, 2, 2, 2};
  CHECK_THROWS_AS(kendall_tau(x, flat), InvalidArgument);
  const std::vector<double> short_y{1, 2};
  CHECK_THROWS_AS(kendall_tau(x, short_y), InvalidArgument);
}

TEST_CASE("average ranks") {
  const std::vector<double> v{10, 20, 10, 30};
  CHECK(average_ranks(v) == std::vector<double>{1.5, 3, 1.5, 4});
}

TEST_CASE("invariances") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(5 + trial % 7), b(4 + trial % 5), c(3 + trial % 4);
    for (auto* v : {&a, &b, &c})
      for (auto& x : *v) x = normal(rng);
    auto shifted = [](std::vector<double> v, double s) {
      for (auto& x : v) x += s;
      return v;
    };
    auto scaled = [](std::vector<double> v, double s) {
      for (auto& x : v) x *= s;
      return v;
    };
    auto cubed = [](std::vector<double> v) {
      for (auto& x : v) x = x * x * x + 2 * x;
      return v;
    };
    const double d = cohens_d(a, b);
    CHECK(d >= 0);
    CHECK(cohens_d(b, a) == doctest::Approx(d));
    CHECK(cohens_d(shifted(a, 3.5), shifted(b, 3.5)) == doctest::Approx(d).epsilon(1e-9));
    CHECK(cohens_d(scaled(a, -2.0), scaled(b, -2.0)) == doctest::Approx(d).epsilon(1e-9));

    const std::vector<std::vector<double>> groups{a, b, c};
    const std::vector<std::vector<double>> mono{cubed(a), cubed(b), cubed(c)};
    const auto kw = kruskal_wallis(groups);
    CHECK(kruskal_wallis(mono).h == doctest::Approx(kw.h).epsilon(1e-12));
    CHECK(kw.p >= 0.0);
    CHECK(kw.p <= 1.0);

    std::vector<double> y(a.size());
    for (auto& v : y) v = normal(rng);
    const double tau = kendall_tau(a, y);
    CHECK(tau >= -1.0);
    CHECK(tau <= 1.0);
    CHECK(kendall_tau(cubed(a), scaled(y, 3.0)) == doctest::Approx(tau).epsilon(1e-12));
  }
}

TEST_CASE("frozen reference values") {
  std::ifstream in(SPREADMX_TEST_DATA "/stats_reference.json");
  REQUIRE(in);
  const auto ref = nlohmann::json::parse(in);
  const auto& cases = ref.at("cases");
  REQUIRE(cases.size() == 100);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    INFO("case " << i);
    const auto& c = cases[i];
    const auto groups = c.at("groups").get<std::vector<std::vector<double>>>();
    CHECK(std::abs(cohens_d(groups[0], groups[1]) - c.at("cohens_d").get<double>()) < 1e-9);
    const auto kw = kruskal_wallis(groups);
    CHECK(std::abs(kw.h - c.at("kw_h").get<double>()) < 1e-9);
    CHECK(std::abs(kw.p - c.at("kw_p").get<double>()) < 1e-6);
    const auto x = c.at("x").get<std::vector<double>>();
    const auto y = c.at("y").get<std::vector<double>>();
    CHECK(std::abs(kendall_tau(x, y) - c.at("kendall_tau_b").get<double>()) < 1e-9);
  }
}
