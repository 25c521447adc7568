#include "swnet/stats.hpp"

#include <algorithm>
#include <cmath>

#include "swnet/error.hpp"

namespace swnet {

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::invalid_argument, "pearson: length mismatch");
  const auto n = x.size();
  if (n == 0) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  // Relative guard: sums of identical values can leave rounding residue.
  const double scale_x = std::max(1.0, mx * mx) * static_cast<double>(n);
  const double scale_y = std::max(1.0, my * my) * static_cast<double>(n);
  if (sxx <= 1e-24 * scale_x || syy <= 1e-24 * scale_y) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0;
  for (auto v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::invalid_argument, "quantile of empty sample");
  if (!(q > 0.0 && q <= 1.0)) throw Error(ErrorCode::invalid_argument, "quantile level outside (0, 1]");
  std::sort(values.begin(), values.end());
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size()) - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace swnet
