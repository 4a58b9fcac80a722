#include <algorithm>

#include "growthlab/models.hpp"

namespace growthlab {

HoroballModel::HoroballModel(std::unique_ptr<GroupModel> base, int depth, std::size_t budget)
    : GroupModel(budget), base_(std::move(base)), depth_(depth) {
  if (!base_->vertex_transitive()) {
    throw UsageError("horoball base must be a Cayley-type model");
  }
  intern(base_->basepoint().id, 0);
}

VertexId HoroballModel::intern(VertexId b, int n) {
  auto key = std::make_pair(b, n);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  VertexId id = register_vertex();
  cells_.push_back(key);
  index_.emplace(key, id);
  return id;
}

VertexId HoroballModel::vertex_of(VertexId base_vertex, int depth) {
  if (depth < 0 || depth > depth_) throw DomainError("horoball depth out of range");
  return intern(base_vertex, depth);
}

std::vector<VertexId> HoroballModel::compute_neighbors(VertexId v) {
  auto [b, n] = cells_[v];
  std::vector<VertexId> out;
  if (n > 0) out.push_back(intern(b, n - 1));
  if (n < depth_) out.push_back(intern(b, n + 1));
  // horizontal edges: base vertices within distance 2^n
  long long jump = 1LL << n;
  int reach = static_cast<int>(std::min<long long>(jump, 1 << 22));
  base_->ensure_radius(reach);
  for (int r = 1; r <= reach; ++r) {
    for (VertexId u : base_->sphere(r)) {
      out.push_back(intern(base_->act(b, u), n));
    }
  }
  return out;
}

std::vector<VertexId> HoroballModel::orbit_sphere(int n) {
  std::vector<VertexId> out;
  for (VertexId v : sphere(n)) {
    if (cells_[v].second == 0) out.push_back(v);
  }
  return out;
}

VertexId HoroballModel::act(VertexId g, VertexId x) {
  if (cells_[g].second != 0) throw DomainError("only depth-0 elements act on a horoball");
  auto [b, n] = cells_[x];
  return intern(base_->act(cells_[g].first, b), n);
}

VertexId HoroballModel::act_lookup(VertexId g, VertexId x) const {
  if (cells_[g].second != 0) throw DomainError("only depth-0 elements act on a horoball");
  auto [b, n] = cells_[x];
  VertexId bb = base_->act_lookup(cells_[g].first, b);
  if (bb == kNoVertex) return kNoVertex;
  auto it = index_.find(std::make_pair(bb, n));
  return it == index_.end() ? kNoVertex : it->second;
}

VertexId HoroballModel::inverse(VertexId g) {
  if (cells_[g].second != 0) throw DomainError("only depth-0 elements act on a horoball");
  return intern(base_->inverse(cells_[g].first), 0);
}

bool HoroballModel::in_orbit_of_set(VertexId v, const std::vector<VertexId>& K) const {
  int n = cells_[v].second;
  for (VertexId k : K) {
    if (cells_[k].second == n) return true;
  }
  return false;
}

std::string HoroballModel::describe() const {
  return "horoball:" + base_->describe() + ",depth=" + std::to_string(depth_);
}

}  // namespace growthlab
