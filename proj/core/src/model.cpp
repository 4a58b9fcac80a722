#include "growthlab/model.hpp"

#include <algorithm>
#include <unordered_map>

#include "growthlab/models.hpp"

namespace growthlab {

void GroupModel::ensure_radius(int r) {
  std::lock_guard<std::mutex> lock(grow_mutex_);
  ensure_radius_locked(r);
}

void GroupModel::ensure_radius_locked(int r) {
  if (layer_.empty()) {
    // The basepoint must have been interned by the concrete constructor.
    throw InvariantViolation("model has no basepoint vertex");
  }
  if (radius_ < 0) {
    layer_[0] = 0;
    spheres_.push_back({0});
    radius_ = 0;
  }
  while (radius_ < r) {
    std::vector<VertexId> next;
    for (VertexId v : spheres_[radius_]) {
      for (VertexId u : neighbors_locked(v)) {
        if (layer_[u] < 0) {
          layer_[u] = radius_ + 1;
          next.push_back(u);
        }
      }
    }
    check_budget();
    std::sort(next.begin(), next.end());
    spheres_.push_back(std::move(next));
    ++radius_;
  }
}

const std::vector<VertexId>& GroupModel::sphere(int n) {
  if (n < 0) throw DomainError("negative radius");
  ensure_radius(n);
  return spheres_[n];
}

int GroupModel::layer_of(VertexId v) const {
  if (v >= layer_.size() || layer_[v] < 0) {
    throw RegionExhausted("vertex " + std::to_string(v) +
                              " outside the enumerated region (radius " +
                              std::to_string(radius_) + ")",
                          radius_);
  }
  return layer_[v];
}

const std::vector<VertexId>& GroupModel::neighbors(VertexId v) {
  std::lock_guard<std::mutex> lock(grow_mutex_);
  return neighbors_locked(v);
}

const std::vector<VertexId>& GroupModel::neighbors_locked(VertexId v) {
  if (v >= layer_.size()) throw DomainError("unknown vertex id");
  if (adj_.size() < layer_.size()) {
    adj_.resize(layer_.size());
    adj_done_.resize(layer_.size(), 0);
  }
  if (!adj_done_[v]) {
    adj_[v] = compute_neighbors(v);
    // compute_neighbors may have interned fresh vertices
    adj_.resize(layer_.size());
    adj_done_.resize(layer_.size(), 0);
    adj_done_[v] = 1;
  }
  return adj_[v];
}

std::vector<VertexId> GroupModel::orbit_sphere(int n) { return sphere(n); }

bool GroupModel::in_orbit_of_set(VertexId, const std::vector<VertexId>& K) const {
  if (!vertex_transitive()) {
    throw DomainError(describe() + ": orbit-of-set test requires a transitive action");
  }
  return !K.empty();
}

int GroupModel::distance(MetricPoint x, MetricPoint y) {
  if (x.id == y.id) return 0;
  if (!vertex_transitive()) {
    // bounded BFS from x until y is found
    std::vector<VertexId> frontier{x.id};
    std::unordered_map<VertexId, int> seen{{x.id, 0}};
    int d = 0;
    while (!frontier.empty()) {
      ++d;
      std::vector<VertexId> next;
      for (VertexId v : frontier) {
        for (VertexId u : neighbors(v)) {
          if (seen.emplace(u, d).second) {
            if (u == y.id) return d;
            next.push_back(u);
          }
        }
      }
      if (seen.size() > vertex_budget()) {
        throw ResourceError("distance search exceeded vertex budget", enumerated_radius());
      }
      frontier = std::move(next);
    }
    throw DomainError("vertices are not connected");
  }
  VertexId z = act(inverse(x.id), y.id);
  int bound = layer_of(x.id) + layer_of(y.id);
  while (!layer_known(z) && enumerated_radius() < bound) {
    ensure_radius(enumerated_radius() + 1);
  }
  return layer_of(z);
}

std::unique_ptr<GroupModel> make_model(const std::string& spec, std::size_t budget) {
  auto starts_with = [&](const std::string& p) { return spec.rfind(p, 0) == 0; };
  if (starts_with("free:")) {
    int rank = std::stoi(spec.substr(5));
    if (rank < 1 || rank > 8) throw UsageError("free rank must be in 1..8");
    return std::make_unique<FreeGroupModel>(rank, budget);
  }
  if (spec == "lamplighter") {
    return std::make_unique<LamplighterModel>(budget);
  }
  if (starts_with("abelian:") || starts_with("grid:")) {
    int dim = std::stoi(spec.substr(spec.find(':') + 1));
    if (dim < 1 || dim > 6) throw UsageError("abelian dimension must be in 1..6");
    return std::make_unique<FreeAbelianModel>(dim, budget);
  }
  if (starts_with("presentation-grid:")) {
    int dim = std::stoi(spec.substr(spec.find(':') + 1));
    return PresentationModel::grid(dim, budget);
  }
  if (starts_with("horoball:")) {
    // horoball:<base>,depth=<d>
    std::string rest = spec.substr(9);
    auto comma = rest.rfind(",depth=");
    if (comma == std::string::npos) {
      throw UsageError("horoball spec must look like horoball:free:1,depth=8");
    }
    std::string base_spec = rest.substr(0, comma);
    int depth = std::stoi(rest.substr(comma + 7));
    if (depth < 1 || depth > 24) throw UsageError("horoball depth must be in 1..24");
    return std::make_unique<HoroballModel>(make_model(base_spec, budget), depth, budget);
  }
  throw UsageError("unknown model spec '" + spec +
                   "' (try free:2, lamplighter, abelian:2, horoball:free:1,depth=8)");
}

}  // namespace growthlab
