#include <cmath>
#include <cstdlib>

#include "growthlab/models.hpp"

namespace growthlab {

FreeAbelianModel::FreeAbelianModel(int dim, std::size_t budget) : GroupModel(budget), dim_(dim) {
  intern(std::vector<int>(dim_, 0));
}

VertexId FreeAbelianModel::intern(const std::vector<int>& c) {
  auto it = index_.find(c);
  if (it != index_.end()) return it->second;
  VertexId id = register_vertex();
  coords_.push_back(c);
  index_.emplace(c, id);
  return id;
}

VertexId FreeAbelianModel::vertex_of(const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != dim_) throw DomainError("bad coordinate arity");
  return intern(coords);
}

std::vector<VertexId> FreeAbelianModel::compute_neighbors(VertexId v) {
  std::vector<VertexId> out;
  out.reserve(2 * dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int sign : {1, -1}) {
      std::vector<int> c = coords_[v];
      c[i] += sign;
      out.push_back(intern(c));
    }
  }
  return out;
}

VertexId FreeAbelianModel::act(VertexId g, VertexId x) {
  std::vector<int> c = coords_[x];
  for (int i = 0; i < dim_; ++i) c[i] += coords_[g][i];
  return intern(c);
}

VertexId FreeAbelianModel::act_lookup(VertexId g, VertexId x) const {
  std::vector<int> c = coords_[x];
  for (int i = 0; i < dim_; ++i) c[i] += coords_[g][i];
  auto it = index_.find(c);
  return it == index_.end() ? kNoVertex : it->second;
}

VertexId FreeAbelianModel::inverse(VertexId g) {
  std::vector<int> c = coords_[g];
  for (int& x : c) x = -x;
  return intern(c);
}

int FreeAbelianModel::distance(MetricPoint x, MetricPoint y) {
  int d = 0;
  for (int i = 0; i < dim_; ++i) d += std::abs(coords_[x.id][i] - coords_[y.id][i]);
  return d;
}

std::optional<double> FreeAbelianModel::sphere_count_closed_form(int n) const {
  if (n == 0) return 1.0;
  // number of lattice points with |x|_1 = n
  double total = 0.0;
  for (int k = 1; k <= std::min(dim_, n); ++k) {
    // choose k nonzero coordinates, signs, and a composition of n into k parts
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * (dim_ - i) / (i + 1);          // C(dim, k)
    double comp = 1.0;
    for (int i = 0; i < k - 1; ++i) comp = comp * (n - 1 - i) / (i + 1);  // C(n-1, k-1)
    total += c * std::pow(2.0, k) * comp;
  }
  return total;
}

std::string FreeAbelianModel::describe() const { return "abelian:" + std::to_string(dim_); }

}  // namespace growthlab
