#include <algorithm>

#include "growthlab/models.hpp"

namespace growthlab {

namespace {

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

LamplighterElement lamplighter_multiply(const LamplighterElement& x, const LamplighterElement& y) {
  std::vector<int> shifted = y.lamps;
  for (int& p : shifted) p += x.position;
  LamplighterElement out;
  out.lamps = symmetric_difference(x.lamps, shifted);
  out.position = x.position + y.position;
  return out;
}

LamplighterElement lamplighter_inverse(const LamplighterElement& x) {
  LamplighterElement out;
  out.lamps = x.lamps;
  for (int& p : out.lamps) p -= x.position;
  std::sort(out.lamps.begin(), out.lamps.end());
  out.position = -x.position;
  return out;
}

int lamplighter_length(const LamplighterElement& v) {
  if (v.position != 0) {
    throw DomainError("closed-walk length formula only applies at position 0");
  }
  if (v.lamps.empty()) return 0;
  int lo = std::min(0, v.lamps.front());
  int hi = std::max(0, v.lamps.back());
  return 2 * (hi - lo) + static_cast<int>(v.lamps.size());
}

LamplighterModel::LamplighterModel(std::size_t budget) : GroupModel(budget) {
  intern(LamplighterElement{});
}

VertexId LamplighterModel::intern(const LamplighterElement& e) {
  auto it = index_.find(e);
  if (it != index_.end()) return it->second;
  VertexId id = register_vertex();
  elems_.push_back(e);
  index_.emplace(e, id);
  return id;
}

VertexId LamplighterModel::vertex_of(const LamplighterElement& e) { return intern(e); }

VertexId LamplighterModel::lookup(const LamplighterElement& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? kNoVertex : it->second;
}

std::vector<VertexId> LamplighterModel::compute_neighbors(VertexId v) {
  const LamplighterElement e = elems_[v];
  std::vector<VertexId> out;
  out.reserve(3);
  // right multiplication by a (involution), t, t^-1
  LamplighterElement toggled = e;
  auto it = std::lower_bound(toggled.lamps.begin(), toggled.lamps.end(), e.position);
  if (it != toggled.lamps.end() && *it == e.position) {
    toggled.lamps.erase(it);
  } else {
    toggled.lamps.insert(it, e.position);
  }
  out.push_back(intern(toggled));
  LamplighterElement moved = e;
  moved.position += 1;
  out.push_back(intern(moved));
  moved.position -= 2;
  out.push_back(intern(moved));
  return out;
}

VertexId LamplighterModel::act(VertexId g, VertexId x) {
  return intern(lamplighter_multiply(elems_[g], elems_[x]));
}

VertexId LamplighterModel::act_lookup(VertexId g, VertexId x) const {
  return lookup(lamplighter_multiply(elems_[g], elems_[x]));
}

VertexId LamplighterModel::inverse(VertexId g) { return intern(lamplighter_inverse(elems_[g])); }

int LamplighterModel::distance(MetricPoint x, MetricPoint y) {
  LamplighterElement z = lamplighter_multiply(lamplighter_inverse(elems_[x.id]), elems_[y.id]);
  if (z.position == 0) return lamplighter_length(z);
  VertexId id = intern(z);
  // grow one layer at a time until the BFS reaches z
  while (!layer_known(id)) ensure_radius(enumerated_radius() + 1);
  return layer_of(id);
}

std::string LamplighterModel::describe() const { return "lamplighter"; }

}  // namespace growthlab
