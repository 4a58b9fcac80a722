#include "growthlab/metric.hpp"

#include <algorithm>
#include <thread>

#include "growthlab/rng.hpp"

namespace growthlab {

Rational gromov_product(GroupModel& model, MetricPoint x, MetricPoint y, MetricPoint z) {
  long long dxz = model.distance(x, z);
  long long dyz = model.distance(y, z);
  long long dxy = model.distance(x, y);
  return Rational(dxz + dyz - dxy, 2);
}

Rational four_point_defect(GroupModel& model, MetricPoint x, MetricPoint y, MetricPoint z,
                           MetricPoint t) {
  Rational xy = gromov_product(model, x, y, t);
  Rational yz = gromov_product(model, y, z, t);
  Rational xz = gromov_product(model, x, z, t);
  Rational defect = std::min(xy, yz) - xz;
  return std::max(defect, Rational(0));
}

DeltaEstimate estimate_delta(GroupModel& model, int radius, std::uint64_t samples,
                             std::uint64_t seed, int threads) {
  if (samples < 1) throw DomainError("need at least one sample");
  model.ensure_radius(radius);
  if (!model.distance_is_enumeration_free()) {
    // quadruple distances reach 2*radius; enumerate once so the parallel
    // sampling below is read-only
    model.ensure_radius(2 * radius);
  }
  std::vector<VertexId> ball;
  for (int n = 0; n <= radius; ++n) {
    const auto& s = model.sphere(n);
    ball.insert(ball.end(), s.begin(), s.end());
  }
  if (ball.empty()) throw DomainError("sampling from an empty ball");

  auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    Rational best(0);
    for (std::uint64_t i = lo; i < hi; ++i) {
      Rng rng(seed, i);  // per-sample stream: result independent of chunking
      MetricPoint p[4];
      for (auto& q : p) q = MetricPoint{ball[rng.below(ball.size())]};
      best = std::max(best, four_point_defect(model, p[0], p[1], p[2], p[3]));
    }
    return best;
  };

  Rational best(0);
  threads = std::max(1, threads);
  if (threads == 1) {
    best = run_chunk(0, samples);
  } else {
    std::vector<Rational> partial(threads, Rational(0));
    std::vector<std::thread> pool;
    std::uint64_t chunk = (samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t lo = t * chunk;
      std::uint64_t hi = std::min<std::uint64_t>(samples, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, t, lo, hi] { partial[t] = run_chunk(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (const auto& r : partial) best = std::max(best, r);
  }
  return DeltaEstimate{best, samples, seed, radius};
}

bool lies_on_geodesic(GroupModel& model, MetricPoint o, MetricPoint p, MetricPoint y) {
  return model.distance(o, p) + model.distance(p, y) == model.distance(o, y);
}

namespace {

// B(center, r) for any model: bounded BFS.
std::vector<VertexId> ball_around(GroupModel& model, VertexId center, int r) {
  std::vector<VertexId> out{center};
  if (r == 0) return out;
  std::vector<VertexId> frontier{center};
  std::vector<VertexId> seen{center};
  for (int d = 1; d <= r; ++d) {
    std::vector<VertexId> next;
    for (VertexId v : frontier) {
      for (VertexId u : model.neighbors(v)) {
        if (std::find(seen.begin(), seen.end(), u) == seen.end()) {
          seen.push_back(u);
          next.push_back(u);
          out.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

bool shadow_contains(GroupModel& model, MetricPoint o, MetricPoint center, int r, MetricPoint y) {
  if (r < 0) throw DomainError("negative shadow radius");
  long long doy = model.distance(o, y);
  for (VertexId p : ball_around(model, center.id, r)) {
    MetricPoint mp{p};
    if (model.distance(o, mp) + model.distance(mp, y) == doy) return true;
  }
  return false;
}

}  // namespace growthlab
