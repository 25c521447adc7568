#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace swnet {

// Pearson correlation of paired samples. Empty input or a zero-variance
// marginal yields nullopt ("undefined"), never 0 or NaN.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> values);

// Nearest-rank quantile: the ceil(q * n)-th smallest value (q in (0, 1]).
double quantile(std::vector<double> values, double q);

// Seed for stream `index` derived from `master` (splitmix64 mixing), so
// parallel or reordered consumers see identical streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace swnet
