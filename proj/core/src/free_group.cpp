#include <cmath>

#include "growthlab/models.hpp"

namespace growthlab {

FreeGroupModel::FreeGroupModel(int rank, std::size_t budget) : GroupModel(budget), rank_(rank) {
  intern(Word::identity());
}

VertexId FreeGroupModel::intern(const Word& w) {
  auto it = index_.find(w);
  if (it != index_.end()) return it->second;
  VertexId id = register_vertex();
  words_.push_back(w);
  index_.emplace(w, id);
  return id;
}

VertexId FreeGroupModel::vertex_of(const Word& w) { return intern(w); }

VertexId FreeGroupModel::lookup(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? kNoVertex : it->second;
}

std::vector<VertexId> FreeGroupModel::compute_neighbors(VertexId v) {
  const Word w = words_[v];
  std::vector<VertexId> out;
  out.reserve(2 * rank_);
  for (int g = 1; g <= rank_; ++g) {
    for (int sign : {1, -1}) {
      Word step(std::vector<Letter>{static_cast<Letter>(sign * g)});
      out.push_back(intern(w * step));
    }
  }
  return out;
}

VertexId FreeGroupModel::act(VertexId g, VertexId x) { return intern(words_[g] * words_[x]); }

VertexId FreeGroupModel::act_lookup(VertexId g, VertexId x) const {
  return lookup(words_[g] * words_[x]);
}

VertexId FreeGroupModel::inverse(VertexId g) { return intern(words_[g].inverse()); }

int FreeGroupModel::distance(MetricPoint x, MetricPoint y) {
  return (words_[x.id].inverse() * words_[y.id]).length();
}

std::optional<double> FreeGroupModel::sphere_count_closed_form(int n) const {
  if (n == 0) return 1.0;
  return 2.0 * rank_ * std::pow(2.0 * rank_ - 1.0, n - 1);
}

std::string FreeGroupModel::describe() const { return "free:" + std::to_string(rank_); }

Word FreeGroupModel::word_of(VertexId v) const { return words_[v]; }

}  // namespace growthlab
