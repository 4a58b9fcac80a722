#include <algorithm>

#include "growthlab/models.hpp"

namespace growthlab {

PresentationModel::PresentationModel(int rank, std::vector<RewriteRule> rules, std::size_t budget)
    : GroupModel(budget), rank_(rank), rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    if (r.lhs.empty()) throw UsageError("rewrite rule with empty left side");
  }
  intern({});
}

std::unique_ptr<PresentationModel> PresentationModel::grid(int dim, std::size_t budget) {
  // commuting generators, normal form = letters sorted by generator index
  std::vector<RewriteRule> rules;
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          RewriteRule r;
          r.lhs = {static_cast<Letter>(sj * j), static_cast<Letter>(si * i)};
          r.rhs = {static_cast<Letter>(si * i), static_cast<Letter>(sj * j)};
          rules.push_back(r);
        }
      }
    }
  }
  return std::make_unique<PresentationModel>(dim, std::move(rules), budget);
}

std::vector<Letter> PresentationModel::normal_form(std::vector<Letter> w) const {
  w = free_reduce(w);
  const std::size_t cap = 4 * w.size() * w.size() + 100;
  for (std::size_t step = 0; step < cap; ++step) {
    bool changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (const auto& rule : rules_) {
        if (i + rule.lhs.size() > w.size()) continue;
        if (std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + i)) {
          std::vector<Letter> next(w.begin(), w.begin() + i);
          next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
          next.insert(next.end(), w.begin() + i + rule.lhs.size(), w.end());
          w = free_reduce(next);
          changed = true;
          break;
        }
      }
    }
    if (!changed) return w;
  }
  throw InvariantViolation("rewriting did not terminate; system is unusable for this ball");
}

VertexId PresentationModel::intern(const std::vector<Letter>& nf) {
  auto it = index_.find(nf);
  if (it != index_.end()) return it->second;
  VertexId id = register_vertex();
  forms_.push_back(nf);
  index_.emplace(nf, id);
  check_rules_at(id);
  return id;
}

void PresentationModel::check_rules_at(VertexId v) {
  // each rule must hold as a relation at v: v.lhs and v.rhs reduce alike
  const std::vector<Letter>& nf = forms_[v];
  for (const auto& rule : rules_) {
    std::vector<Letter> a = nf;
    a.insert(a.end(), rule.lhs.begin(), rule.lhs.end());
    std::vector<Letter> b = nf;
    b.insert(b.end(), rule.rhs.begin(), rule.rhs.end());
    if (normal_form(a) != normal_form(b)) {
      throw InvariantViolation("rewriting system is not confluent at vertex '" +
                               Word(nf).str() + "'");
    }
  }
}

VertexId PresentationModel::vertex_of(const Word& w) {
  return intern(normal_form(w.letters()));
}

std::vector<VertexId> PresentationModel::compute_neighbors(VertexId v) {
  std::vector<VertexId> out;
  out.reserve(2 * rank_);
  for (int g = 1; g <= rank_; ++g) {
    for (int sign : {1, -1}) {
      std::vector<Letter> w = forms_[v];
      w.push_back(static_cast<Letter>(sign * g));
      VertexId u = intern(normal_form(w));
      if (u != v) out.push_back(u);
    }
  }
  return out;
}

VertexId PresentationModel::act(VertexId g, VertexId x) {
  std::vector<Letter> w = forms_[g];
  w.insert(w.end(), forms_[x].begin(), forms_[x].end());
  return intern(normal_form(w));
}

VertexId PresentationModel::act_lookup(VertexId g, VertexId x) const {
  std::vector<Letter> w = forms_[g];
  w.insert(w.end(), forms_[x].begin(), forms_[x].end());
  auto it = index_.find(normal_form(w));
  return it == index_.end() ? kNoVertex : it->second;
}

VertexId PresentationModel::inverse(VertexId g) {
  std::vector<Letter> w(forms_[g].rbegin(), forms_[g].rend());
  for (Letter& l : w) l = static_cast<Letter>(-l);
  return intern(normal_form(w));
}

int PresentationModel::distance(MetricPoint x, MetricPoint y) {
  VertexId z = act(inverse(x.id), y.id);
  while (!layer_known(z)) ensure_radius(enumerated_radius() + 1);
  return layer_of(z);
}

std::string PresentationModel::describe() const {
  return "presentation(rank " + std::to_string(rank_) + ", " + std::to_string(rules_.size()) +
         " rules)";
}

Word PresentationModel::word_of(VertexId v) const { return Word(forms_[v]); }

}  // namespace growthlab
