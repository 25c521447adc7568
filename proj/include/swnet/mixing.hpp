#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "swnet/network.hpp"

namespace swnet {

// Pearson correlation of node quantities at link ends. Directed networks
// contribute one (source alpha-degree, target beta-degree) pair per link;
// undirected networks, and the (total, total) coefficient of a directed
// network, contribute both orientations of every link.
std::optional<double> degree_mixing(const Network& network, DegreeKind alpha, DegreeKind beta);

// Same convention for an arbitrary per-node quantity. `both_orientations`
// selects the symmetric form.
std::optional<double> link_end_correlation(const Network& network, std::span<const double> source_values,
                                           std::span<const double> target_values, bool both_orientations);

struct ProfileRow {
  double key = 0.0;   // node value (degree or bucketed clustering)
  double mean = 0.0;  // mean neighbour value
  std::size_t count = 0;
};

struct ConnectivityProfile {
  DegreeKind alpha = DegreeKind::total;
  DegreeKind beta = DegreeKind::total;
  std::vector<ProfileRow> rows;  // ascending key
};

// Mean beta-degree k_N of the link-adjacent neighbour, grouped by the
// alpha-degree of the node, over the same ordered link ends as degree_mixing.
ConnectivityProfile neighbor_connectivity(const Network& network, DegreeKind alpha, DegreeKind beta);

struct PowerLawFit {
  bool defined = false;  // false: too few or degenerate samples
  double gamma = 0.0;
  std::size_t k_min = 0;
  std::size_t tail_size = 0;
  double ks_distance = 0.0;
  double gof_p = 0.0;
  bool valid = false;  // gof_p >= 0.1
};

struct PowerLawOptions {
  std::size_t resamples = 100;
  std::uint64_t seed = 1;
  double valid_level = 0.1;
  std::size_t min_samples = 10;
};

// Discrete maximum-likelihood power-law fit P(k) ~ k^-gamma with k_min chosen
// by minimum Kolmogorov-Smirnov distance, and a semiparametric bootstrap
// goodness-of-fit p-value. Zero values are ignored.
PowerLawFit fit_power_law(std::span<const std::size_t> values, const PowerLawOptions& options = {});

// MLE and KS distance for a fixed cutoff; exposed for testing.
struct TailFit {
  double gamma = 0.0;
  double ks_distance = 0.0;
  std::size_t tail_size = 0;
};
TailFit fit_tail(std::span<const std::size_t> sorted_values, std::size_t k_min);

// Hurwitz zeta(s, q) = sum_{k>=0} (k + q)^-s, s > 1, q > 0.
double hurwitz_zeta(double s, double q);

// Draws from the discrete power law with exponent gamma on k >= k_min by
// exact inversion of the complementary CDF.
std::size_t sample_power_law(double gamma, std::size_t k_min, std::mt19937_64& rng);

struct MixingReport {
  std::optional<double> r;
  std::optional<double> r_in_in, r_in_out, r_out_in, r_out_out;
  double sigma_k = 0.0;  // standard deviation of node degrees
  std::vector<ConnectivityProfile> profiles;
};

MixingReport mixing_report(const Network& network);

}  // namespace swnet
