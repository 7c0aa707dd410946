#include "msregion/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace msr {

std::vector<std::pair<double, double>> default_box(const Region& region, double lo, double hi) {
  std::vector<std::pair<double, double>> box;
  for (std::size_t i = 0; i < region.dimension(); ++i)
    box.emplace_back(i < region.rate_count ? std::make_pair(lo, hi) : std::make_pair(-hi, hi));
  return box;
}

std::vector<double> to_sampling(const Region& region, const std::vector<double>& x) {
  std::vector<double> u(x);
  for (std::size_t i = 0; i < region.rate_count; ++i) u[i] = std::log(x[i]);
  return u;
}

std::vector<double> from_sampling(const Region& region, const std::vector<double>& u) {
  std::vector<double> x(u);
  for (std::size_t i = 0; i < region.rate_count; ++i) x[i] = std::exp(u[i]);
  return x;
}

namespace {

using Point = std::vector<double>;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Conjunct masks of many points given in sampling coordinates.
class Checker {
 public:
  Checker(const Region& region, Isa isa) : region_(region), bc_(region, isa) {}

  void add(const Point& u) { pending_.push_back(from_sampling(region_, u)); }

  std::vector<std::uint64_t> run() {
    const std::size_t n = pending_.size(), dim = region_.dimension();
    std::vector<double> soa(dim * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t v = 0; v < dim; ++v) soa[v * n + i] = pending_[i][v];
    pending_.clear();
    if (n == 0) return {};
    return bc_.masks(soa, n);
  }

 private:
  const Region& region_;
  BatchClassifier bc_;
  std::vector<Point> pending_;
};

// Every point inside, and consecutive points share a conjunct.
bool chain_ok(std::span<const std::uint64_t> m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) return false;
    if (i > 0 && (m[i] & m[i - 1]) == 0) return false;
  }
  return true;
}

double distance(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

Point lerp(const Point& a, const Point& b, double t) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

void check_config(const Region& region, const ProbeConfig& cfg) {
  if (cfg.box.size() != region.dimension()) throw std::invalid_argument("box dimension does not match the region");
  for (std::size_t i = 0; i < cfg.box.size(); ++i) {
    auto [lo, hi] = cfg.box[i];
    if (!(lo < hi)) throw std::invalid_argument("empty box interval");
    if (i < region.rate_count && lo <= 0) throw std::invalid_argument("rate intervals must be positive");
  }
  if (cfg.n_samples < 2) throw std::invalid_argument("need at least two samples");
  if (cfg.segment_checks < 1) throw std::invalid_argument("need at least one segment check");
  if (!(cfg.link_radius > 0)) throw std::invalid_argument("link radius must be positive");
}

Point sample_box(const Region& region, const ProbeConfig& cfg, std::mt19937_64& rng) {
  Point u(region.dimension());
  for (std::size_t v = 0; v < u.size(); ++v) {
    auto [lo, hi] = cfg.box[v];
    bool log_scale = v < region.rate_count;
    std::uniform_real_distribution<double> d(log_scale ? std::log(lo) : lo, log_scale ? std::log(hi) : hi);
    u[v] = d(rng);
  }
  return u;
}

// Straight segment, then one-waypoint detours. Works in sampling coordinates.
class PathSearch {
 public:
  PathSearch(const Region& region, const ProbeConfig& cfg) : region_(region), cfg_(cfg), checker_(region, cfg.isa) {}

  std::optional<std::vector<Point>> find(const Point& p, const Point& q, std::uint64_t seed) {
    if (polyline_ok({p, q})) return std::vector<Point>{p, q};
    std::mt19937_64 rng(seed);
    const double span = distance(p, q);
    Point mid = lerp(p, q, 0.5);
    for (unsigned r = 0; r < cfg_.waypoint_restarts; ++r) {
      Point w(mid.size());
      if (r % 2 == 0 || cfg_.box.empty()) {
        // around the midpoint, widening with each restart
        std::normal_distribution<double> g(0.0, span * (0.25 + double(r) / cfg_.waypoint_restarts));
        for (std::size_t v = 0; v < w.size(); ++v) w[v] = mid[v] + g(rng);
      } else {
        w = sample_box(region_, cfg_, rng);
      }
      if (polyline_ok({p, w, q})) return std::vector<Point>{p, w, q};
    }
    return std::nullopt;
  }

 private:
  bool polyline_ok(const std::vector<Point>& pts) {
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      double scaled = std::ceil(cfg_.segment_checks * distance(pts[k], pts[k + 1]) / cfg_.link_radius);
      unsigned m = std::max(cfg_.segment_checks, static_cast<unsigned>(std::min(scaled, 1e5)));
      for (unsigned s = k == 0 ? 0 : 1; s <= m + 1; ++s) checker_.add(lerp(pts[k], pts[k + 1], double(s) / (m + 1)));
    }
    return chain_ok(checker_.run());
  }

  const Region& region_;
  const ProbeConfig& cfg_;
  Checker checker_;
};

}  // namespace

ProbeReport probe(const Region& region, const ProbeConfig& cfg) {
  check_config(region, cfg);
  ProbeReport rep;
  rep.seed = cfg.seed;
  rep.requested = cfg.n_samples;
  if (region.empty()) return rep;

  std::mt19937_64 rng(cfg.seed);
  std::vector<Point> cand;
  for (std::size_t i = 0; i < cfg.n_samples; ++i) cand.push_back(sample_box(region, cfg, rng));
  Checker checker(region, cfg.isa);
  for (const auto& u : cand) checker.add(u);
  auto mask = checker.run();
  std::vector<Point> acc;
  std::vector<std::uint64_t> acc_mask;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (mask[i]) {
      acc.push_back(cand[i]);
      acc_mask.push_back(mask[i]);
      rep.conjunct.push_back(std::countr_zero(mask[i]));
    }
  rep.accepted = acc.size();
  if (acc.empty()) return rep;

  // Candidate edges, then batched membership over all checkpoints.
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = i + 1; j < acc.size(); ++j)
      if (distance(acc[i], acc[j]) <= cfg.link_radius) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  UnionFind uf(acc.size());
  const std::size_t chunk = 4096, per = cfg.segment_checks;
  for (std::size_t start = 0; start < edges.size(); start += chunk) {
    std::size_t stop = std::min(edges.size(), start + chunk);
    for (std::size_t e = start; e < stop; ++e)
      for (unsigned s = 1; s <= per; ++s)
        checker.add(lerp(acc[edges[e].first], acc[edges[e].second], double(s) / (per + 1)));
    auto res = checker.run();
    std::vector<std::uint64_t> chain(per + 2);
    for (std::size_t e = start; e < stop; ++e) {
      chain.front() = acc_mask[edges[e].first];
      chain.back() = acc_mask[edges[e].second];
      std::copy_n(res.begin() + static_cast<std::ptrdiff_t>((e - start) * per), per, chain.begin() + 1);
      if (chain_ok(chain)) {
        ++rep.edge_count;
        uf.unite(edges[e].first, edges[e].second);
      }
    }
  }
  auto count_components = [&] {
    std::set<int> roots;
    for (std::size_t i = 0; i < acc.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
    return roots.size();
  };
  rep.raw_component_count = count_components();

  if (cfg.bridge) {
    // Each round, every component tries its closest sample pair to each other component, nearest first.
    PathSearch search(region, cfg);
    std::set<std::pair<int, int>> failed;
    bool merged = true;
    while (merged) {
      merged = false;
      std::vector<int> roots;
      for (std::size_t i = 0; i < acc.size(); ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
      for (int root : roots) {
        if (uf.find(root) != root) continue;
        std::map<int, std::pair<double, std::pair<int, int>>> closest;  // other root -> (distance, pair)
        for (std::size_t i = 0; i < acc.size(); ++i) {
          if (uf.find(static_cast<int>(i)) != root) continue;
          for (std::size_t j = 0; j < acc.size(); ++j) {
            int other = uf.find(static_cast<int>(j));
            if (other == root) continue;
            double d = distance(acc[i], acc[j]);
            auto it = closest.find(other);
            if (it == closest.end() || d < it->second.first)
              closest[other] = {d, {static_cast<int>(i), static_cast<int>(j)}};
          }
        }
        std::vector<std::pair<double, std::pair<int, int>>> order;
        for (const auto& [other, entry] : closest) order.push_back(entry);
        std::sort(order.begin(), order.end());
        for (const auto& [d, pr] : order) {
          if (failed.count(pr)) continue;
          auto path = search.find(acc[pr.first], acc[pr.second], cfg.seed ^ (std::uint64_t(pr.first) << 32 | pr.second));
          if (path) {
            uf.unite(pr.first, pr.second);
            ++rep.bridge_count;
            merged = true;
            break;
          }
          failed.insert(pr);
        }
      }
    }
  }

  std::vector<int> label_of(acc.size(), -1);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (label_of[root] < 0) {
      label_of[root] = static_cast<int>(rep.component_count++);
      rep.representatives.push_back(from_sampling(region, acc[i]));
    }
    rep.labels.push_back(label_of[root]);
  }
  for (const auto& u : acc) rep.samples.push_back(from_sampling(region, u));
  return rep;
}

PathEvidence connect_witnesses(const Region& region, const std::vector<double>& p, const std::vector<double>& q,
                               const ProbeConfig& cfg) {
  if (p.size() != region.dimension() || q.size() != region.dimension())
    throw std::invalid_argument("point dimension does not match the region");
  Checker checker(region, cfg.isa);
  checker.add(to_sampling(region, p));
  checker.add(to_sampling(region, q));
  auto ends = checker.run();
  if (ends[0] == 0 || ends[1] == 0) throw std::invalid_argument("endpoints must lie in the region");
  PathEvidence out;
  if (p == q) {
    out.connected_evidence = true;
    out.path = std::vector<Point>{p};
    return out;
  }
  PathSearch search(region, cfg);
  if (auto path = search.find(to_sampling(region, p), to_sampling(region, q), cfg.seed)) {
    out.connected_evidence = true;
    std::vector<Point> pts;
    for (const auto& u : *path) pts.push_back(from_sampling(region, u));
    out.path = std::move(pts);
  }
  return out;
}

}  // namespace msr
