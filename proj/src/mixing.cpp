#include "swnet/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/math/tools/minima.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include "swnet/error.hpp"
#include "swnet/stats.hpp"

namespace swnet {

std::optional<double> link_end_correlation(const Network& network, std::span<const double> source_values,
                                           std::span<const double> target_values, bool both_orientations) {
  std::vector<double> x, y;
  const auto m = network.link_count();
  x.reserve(both_orientations ? 2 * m : m);
  y.reserve(x.capacity());
  for (const auto& l : network.links()) {
    x.push_back(source_values[l.source]);
    y.push_back(target_values[l.target]);
    if (both_orientations) {
      x.push_back(source_values[l.target]);
      y.push_back(target_values[l.source]);
    }
  }
  return pearson(x, y);
}

namespace {

bool symmetric_pair(const Network& network, DegreeKind alpha, DegreeKind beta) {
  return !network.directed() || (alpha == DegreeKind::total && beta == DegreeKind::total);
}

}  // namespace

std::optional<double> degree_mixing(const Network& network, DegreeKind alpha, DegreeKind beta) {
  auto a = degree_values(network, alpha);
  auto b = degree_values(network, beta);
  return link_end_correlation(network, a, b, symmetric_pair(network, alpha, beta));
}

ConnectivityProfile neighbor_connectivity(const Network& network, DegreeKind alpha, DegreeKind beta) {
  ConnectivityProfile profile{alpha, beta, {}};
  auto a = degree_values(network, alpha);
  auto b = degree_values(network, beta);
  std::map<double, std::pair<double, std::size_t>> acc;
  const bool both = symmetric_pair(network, alpha, beta);
  for (const auto& l : network.links()) {
    auto& fwd = acc[a[l.source]];
    fwd.first += b[l.target];
    ++fwd.second;
    if (both) {
      auto& rev = acc[a[l.target]];
      rev.first += b[l.source];
      ++rev.second;
    }
  }
  for (const auto& [k, sum] : acc) {
    profile.rows.push_back({k, sum.first / static_cast<double>(sum.second), sum.second});
  }
  return profile;
}

double hurwitz_zeta(double s, double q) {
  static const bool handler_off = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)handler_off;
  gsl_sf_result result;
  if (gsl_sf_hzeta_e(s, q, &result) != GSL_SUCCESS) {
    throw Error(ErrorCode::domain, "hurwitz zeta undefined for s=" + std::to_string(s) + " q=" + std::to_string(q));
  }
  return result.val;
}

std::size_t sample_power_law(double gamma, std::size_t k_min, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double norm = hurwitz_zeta(gamma, static_cast<double>(k_min));
  // Smallest x with P(X > x) = zeta(gamma, x + 1) / norm <= u.
  const double target = (1.0 - unif(rng)) * norm;
  double tail = norm;
  std::size_t x = k_min;
  for (std::size_t step = 0; step < 64; ++step, ++x) {
    tail -= std::pow(static_cast<double>(x), -gamma);
    if (tail <= target) return x;
  }
  auto above = [&](std::size_t v) { return hurwitz_zeta(gamma, static_cast<double>(v + 1)) > target; };
  std::size_t lo = x, hi = 2 * x;
  while (above(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (std::size_t{1} << 52)) return hi;
  }
  while (hi - lo > 1) {
    auto mid = lo + (hi - lo) / 2;
    if (above(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

namespace {

struct Sample {
  std::vector<std::size_t> sorted;    // ascending, zeros removed
  std::vector<double> log_suffix;     // log_suffix[i] = sum_{j >= i} ln sorted[j]
  std::vector<std::size_t> distinct;  // index of first occurrence of each distinct value
};

Sample prepare(std::span<const std::size_t> values) {
  Sample s;
  for (auto v : values) {
    if (v > 0) s.sorted.push_back(v);
  }
  std::sort(s.sorted.begin(), s.sorted.end());
  s.log_suffix.assign(s.sorted.size() + 1, 0.0);
  for (std::size_t i = s.sorted.size(); i-- > 0;) {
    s.log_suffix[i] = s.log_suffix[i + 1] + std::log(static_cast<double>(s.sorted[i]));
  }
  for (std::size_t i = 0; i < s.sorted.size(); ++i) {
    if (i == 0 || s.sorted[i] != s.sorted[i - 1]) s.distinct.push_back(i);
  }
  return s;
}

double mle_gamma(std::size_t k_min, std::size_t tail, double log_sum) {
  const double kmin = static_cast<double>(k_min);
  const double n = static_cast<double>(tail);
  auto negloglik = [&](double g) { return n * std::log(hurwitz_zeta(g, kmin)) + g * log_sum; };
  auto [g, f] = boost::math::tools::brent_find_minima(negloglik, 1.0001, 12.0, 40);
  (void)f;
  return g;
}

double ks_distance(const Sample& s, std::size_t first, double gamma) {
  const std::size_t k_min = s.sorted[first];
  const double n = static_cast<double>(s.sorted.size() - first);
  const double norm = hurwitz_zeta(gamma, static_cast<double>(k_min));
  double cum = 0.0;  // sum_{k = k_min}^{x} k^-gamma
  std::size_t x = k_min - 1;
  auto advance_to = [&](std::size_t y) {
    if (y <= x) return;
    if (y - x <= 64) {
      for (std::size_t k = x + 1; k <= y; ++k) cum += std::pow(static_cast<double>(k), -gamma);
    } else {
      cum = norm - hurwitz_zeta(gamma, static_cast<double>(y + 1));
    }
    x = y;
  };
  double d = 0.0;
  std::size_t i = first;
  while (i < s.sorted.size()) {
    const auto v = s.sorted[i];
    std::size_t j = i;
    while (j < s.sorted.size() && s.sorted[j] == v) ++j;
    const double below = static_cast<double>(i - first) / n;
    if (v > k_min) {
      advance_to(v - 1);
      d = std::max(d, std::abs(below - cum / norm));
    }
    advance_to(v);
    d = std::max(d, std::abs(static_cast<double>(j - first) / n - cum / norm));
    i = j;
  }
  return d;
}

struct SweepResult {
  bool defined = false;
  double gamma = 0.0;
  std::size_t k_min = 0;
  std::size_t tail = 0;
  double d = 0.0;
};

SweepResult sweep(const Sample& s) {
  SweepResult best;
  if (s.distinct.size() < 2) return best;
  // The largest value cannot start a tail with two distinct values.
  for (std::size_t c = 0; c + 1 < s.distinct.size(); ++c) {
    const auto first = s.distinct[c];
    const auto tail = s.sorted.size() - first;
    const double g = mle_gamma(s.sorted[first], tail, s.log_suffix[first]);
    const double d = ks_distance(s, first, g);
    if (!best.defined || d < best.d) best = {true, g, s.sorted[first], tail, d};
  }
  return best;
}

}  // namespace

TailFit fit_tail(std::span<const std::size_t> sorted_values, std::size_t k_min) {
  auto s = prepare(sorted_values);
  auto it = std::lower_bound(s.sorted.begin(), s.sorted.end(), k_min);
  if (k_min == 0 || it == s.sorted.end()) throw Error(ErrorCode::domain, "empty power-law tail");
  const auto first = static_cast<std::size_t>(it - s.sorted.begin());
  const auto tail = s.sorted.size() - first;
  TailFit fit;
  fit.tail_size = tail;
  fit.gamma = mle_gamma(k_min, tail, s.log_suffix[first]);
  fit.ks_distance = ks_distance(s, first, fit.gamma);
  return fit;
}

PowerLawFit fit_power_law(std::span<const std::size_t> values, const PowerLawOptions& options) {
  PowerLawFit fit;
  auto s = prepare(values);
  if (s.sorted.size() < options.min_samples) return fit;
  auto best = sweep(s);
  if (!best.defined) return fit;
  fit.defined = true;
  fit.gamma = best.gamma;
  fit.k_min = best.k_min;
  fit.tail_size = best.tail;
  fit.ks_distance = best.d;

  const auto n = s.sorted.size();
  const auto below_count = n - best.tail;
  const double p_tail = static_cast<double>(best.tail) / static_cast<double>(n);
  std::size_t exceed = 0;
  std::vector<std::size_t> synthetic(n);
  for (std::size_t b = 0; b < options.resamples; ++b) {
    std::mt19937_64 rng(derive_seed(options.seed, b));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (auto& v : synthetic) {
      if (below_count == 0 || unif(rng) < p_tail) {
        v = sample_power_law(best.gamma, best.k_min, rng);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, below_count - 1);
        v = s.sorted[pick(rng)];
      }
    }
    auto synth = sweep(prepare(synthetic));
    if (!synth.defined || synth.d >= best.d) ++exceed;
  }
  fit.gof_p = options.resamples == 0 ? 0.0 : static_cast<double>(exceed) / static_cast<double>(options.resamples);
  fit.valid = fit.gof_p >= options.valid_level;
  return fit;
}

MixingReport mixing_report(const Network& network) {
  MixingReport report;
  report.r = degree_mixing(network, DegreeKind::total, DegreeKind::total);
  auto k = degree_values(network, DegreeKind::total);
  const double mk = mean(k);
  double var = 0.0;
  for (auto v : k) var += (v - mk) * (v - mk);
  report.sigma_k = k.empty() ? 0.0 : std::sqrt(var / static_cast<double>(k.size()));
  report.profiles.push_back(neighbor_connectivity(network, DegreeKind::total, DegreeKind::total));
  if (network.directed()) {
    using enum DegreeKind;
    report.r_in_in = degree_mixing(network, in, in);
    report.r_in_out = degree_mixing(network, in, out);
    report.r_out_in = degree_mixing(network, out, in);
    report.r_out_out = degree_mixing(network, out, out);
    for (auto a : {in, out}) {
      for (auto b : {in, out}) report.profiles.push_back(neighbor_connectivity(network, a, b));
    }
  }
  return report;
}

}  // namespace swnet
