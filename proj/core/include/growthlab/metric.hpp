#ifndef GROWTHLAB_METRIC_HPP
#define GROWTHLAB_METRIC_HPP

#include <cstdint>

#include "growthlab/model.hpp"
#include "growthlab/rational.hpp"

namespace growthlab {

// Gromov products on graph models are exact half-integers; floating point
// only enters in the series and spectral layers.
Rational gromov_product(GroupModel& model, MetricPoint x, MetricPoint y, MetricPoint z);

// max(0, min{(x|y)_t, (y|z)_t} - (x|z)_t): a valid delta for this quadruple.
Rational four_point_defect(GroupModel& model, MetricPoint x, MetricPoint y, MetricPoint z,
                           MetricPoint t);

struct DeltaEstimate {
  Rational lower_bound;  // max observed defect; never exceeds the true delta
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int radius = 0;
};

// Seeded uniform quadruples from B(o, radius); deterministic for a fixed
// seed, including under internal parallel sampling.
DeltaEstimate estimate_delta(GroupModel& model, int radius, std::uint64_t samples,
                             std::uint64_t seed, int threads = 1);

// d(o,p) + d(p,y) == d(o,y)
bool lies_on_geodesic(GroupModel& model, MetricPoint o, MetricPoint p, MetricPoint y);

// Is there a geodesic [o,y] meeting B(center, r)? Exact on graphs via the
// BFS layer criterion: some p with d(center,p) <= r has
// d(o,p) + d(p,y) = d(o,y).
bool shadow_contains(GroupModel& model, MetricPoint o, MetricPoint center, int r, MetricPoint y);

}  // namespace growthlab

#endif
