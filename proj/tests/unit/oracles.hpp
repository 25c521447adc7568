#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into
// the library except to build inputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "swnet/network.hpp"

namespace oracle {

using Edge = std::pair<unsigned, unsigned>;

inline swnet::Network make_network(std::size_t n, const std::vector<Edge>& edges, bool directed) {
  swnet::RawGraph raw;
  raw.directed = directed;
  for (std::size_t i = 0; i < n; ++i) raw.nodes.push_back({static_cast<swnet::NodeId>(i), std::to_string(i), {}});
  for (auto [a, b] : edges) raw.links.push_back({a, b});
  return swnet::reduce_to_simple(std::move(raw));
}

// Symmetric 0/1 adjacency matrix of the undirected view.
inline std::vector<std::vector<int>> adjacency(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (auto [x, y] : edges) {
    if (x == y) continue;
    a[x][y] = a[y][x] = 1;
  }
  return a;
}

inline std::vector<Edge> random_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return edges;
}

// W straight from the definition, counting over the matrix.
inline double W(const std::vector<std::vector<int>>& a, const std::vector<unsigned>& S, const std::vector<unsigned>& T) {
  const double n = static_cast<double>(a.size());
  const double s = static_cast<double>(S.size()), t = static_cast<double>(T.size());
  std::vector<int> inT(a.size(), 0);
  for (auto v : T) inT[v] = 1;
  double l_st = 0, l_stc = 0;
  for (auto i : S)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j]) (inT[j] ? l_st : l_stc) += 1;
  const double mu = 2 * s * t / (n * (s + t));
  return mu * (1 - mu) * (l_st / (s * t) - l_stc / (s * (n - t)));
}

struct Best {
  double W = -1e300;
  std::vector<unsigned> S, T;
};

// Every (S, T) with |S| >= 2 and 1 <= |T| < n.
inline Best exhaustive_best(const std::vector<std::vector<int>>& a) {
  const unsigned n = static_cast<unsigned>(a.size());
  Best best;
  auto members = [&](unsigned mask) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v < n; ++v)
      if (mask >> v & 1u) out.push_back(v);
    return out;
  };
  for (unsigned sm = 1; sm < (1u << n); ++sm) {
    auto S = members(sm);
    if (S.size() < 2) continue;
    for (unsigned tm = 1; tm + 1 < (1u << n); ++tm) {
      auto T = members(tm);
      double w = W(a, S, T);
      if (w > best.W) best = {w, S, T};
    }
  }
  return best;
}

inline std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.empty()) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n, my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0 || syy <= 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

// Degree mixing from an explicit link list. Directed: one pair per link
// using the requested degree kinds. Undirected: both orientations.
inline std::optional<double> degree_r(std::size_t n, const std::vector<Edge>& links, bool directed, int alpha,
                                      int beta) {
  // alpha/beta: 0 in, 1 out, 2 total
  std::vector<double> in(n, 0), out(n, 0);
  for (auto [a, b] : links) out[a] += 1, in[b] += 1;
  auto deg = [&](unsigned v, int kind) {
    if (!directed) return in[v] + out[v];
    return kind == 0 ? in[v] : kind == 1 ? out[v] : in[v] + out[v];
  };
  std::vector<double> x, y;
  for (auto [a, b] : links) {
    x.push_back(deg(a, alpha)), y.push_back(deg(b, beta));
    if (!directed || (alpha == 2 && beta == 2)) x.push_back(deg(b, alpha)), y.push_back(deg(a, beta));
  }
  return pearson(x, y);
}

// c_i and d_i by triple loops over the matrix.
inline std::pair<std::vector<double>, std::vector<double>> clustering(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<double> c(n, 0), d(n, 0);
  std::vector<long> k(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
  for (std::size_t i = 0; i < n; ++i) {
    if (k[i] <= 1) continue;
    long t = 0, omega2 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[i][j]) continue;
      omega2 += std::min(k[j] - 1, k[i] - 1);
      for (std::size_t l = j + 1; l < n; ++l) t += a[i][l] && a[j][l];
    }
    c[i] = static_cast<double>(t) / (static_cast<double>(k[i] * (k[i] - 1)) / 2.0);
    const long omega = omega2 / 2;
    d[i] = omega > 0 ? static_cast<double>(t) / static_cast<double>(omega) : 0.0;
  }
  return {c, d};
}

// Weak components by BFS; returns the size of each node's component.
inline std::vector<std::size_t> component_sizes(std::size_t n, const std::vector<Edge>& edges) {
  auto a = adjacency(n, edges);
  std::vector<long> comp(n, -1);
  std::vector<std::size_t> size;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = static_cast<long>(size.size());
    std::size_t count = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      ++count;
      for (std::size_t w = 0; w < n; ++w)
        if (a[v][w] && comp[w] < 0) comp[w] = comp[s], q.push(w);
    }
    size.push_back(count);
  }
  std::vector<std::size_t> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = size[static_cast<std::size_t>(comp[v])];
  return out;
}

// ceil(q n)-th smallest by sorting.
inline double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
  return v[std::max<std::size_t>(rank, 1) - 1];
}

// Implicit links by fixpoint: repeat "copy every parent's current out-links"
// until nothing changes. `copy_inheritance` false skips each parent's own
// inheritance links, but still copies what the parent itself acquired.
inline std::set<std::pair<std::string, std::string>> implicit_closure(
    const std::set<std::pair<std::string, std::string>>& explicit_links,
    const std::set<std::pair<std::string, std::string>>& inheritance, bool copy_inheritance) {
  std::map<std::string, std::set<std::string>> acquired;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [child, parent] : inheritance) {
      std::set<std::string> add = acquired[parent];
      for (const auto& [s, t] : explicit_links) {
        if (s != parent) continue;
        if (!copy_inheritance && inheritance.count({s, t})) continue;
        add.insert(t);
      }
      for (const auto& t : add) {
        if (t != child && acquired[child].insert(t).second) changed = true;
      }
    }
  }
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [v, targets] : acquired)
    for (const auto& t : targets)
      if (!explicit_links.count({v, t})) out.insert({v, t});
  return out;
}

// Group taxonomy from the set relations alone: returns the expected kind
// name and tau for sorted S and T.
inline std::pair<std::string, double> group_kind(const std::vector<unsigned>& S, const std::vector<unsigned>& T) {
  std::set<unsigned> s(S.begin(), S.end()), t(T.begin(), T.end()), both, any;
  for (auto v : s) (t.count(v) ? both : any).insert(v);
  any.insert(t.begin(), t.end());
  const double tau = static_cast<double>(both.size()) / static_cast<double>(any.size());
  const bool s_in_t = both.size() == s.size(), t_in_s = both.size() == t.size();
  if (both.empty()) return {t.size() == 1 ? "hub_spokes" : "module", tau};
  if (s_in_t && t_in_s) return {"community", tau};
  if (s_in_t || t_in_s) return {"core_periphery", tau};
  return {"mixture", tau};
}

}  // namespace oracle
