#include "growthlab/coset_graph.hpp"

#include <algorithm>

#include "growthlab/errors.hpp"

namespace growthlab {

CosetGraph::CosetGraph(SubgroupSpec sub, std::size_t budget)
    : sub_(std::move(sub)), budget_(budget) {
  if (sub_.kind() == SubgroupKind::Stallings) {
    const auto& A = sub_.automaton();
    int L = 2 * sub_.rank();
    letters_out_.assign(A.num_states(), std::vector<CosetId>(L, kNoCoset));
    for (int s = 0; s < A.num_states(); ++s) {
      for (int li = 0; li < L; ++li) {
        int t = A.transition(s, letter_of(li));
        if (t >= 0) letters_out_[s][li] = static_cast<CosetId>(t);
      }
    }
    layer_.assign(letters_out_.size(), -1);
  } else {
    kernel_intern(std::vector<int>(sub_.kernel().dim(), 0));
  }
}

CosetId CosetGraph::new_coset() {
  letters_out_.emplace_back(2 * sub_.rank(), kNoCoset);
  layer_.push_back(-1);
  if (letters_out_.size() > budget_) {
    throw ResourceError("coset budget " + std::to_string(budget_) + " exceeded", radius_);
  }
  return static_cast<CosetId>(letters_out_.size() - 1);
}

CosetId CosetGraph::kernel_intern(const std::vector<int>& img) {
  auto it = image_index_.find(img);
  if (it != image_index_.end()) return it->second;
  CosetId id = new_coset();
  images_.push_back(img);
  image_index_.emplace(img, id);
  return id;
}

CosetId CosetGraph::step(CosetId y, Letter l) {
  int li = letter_index(l);
  CosetId t = letters_out_[y][li];
  if (t != kNoCoset) return t;
  if (sub_.kind() == SubgroupKind::Stallings) {
    // attach a fresh tree state; only its inverse edge is defined
    t = new_coset();
    letters_out_[y][li] = t;
    letters_out_[t][letter_index(static_cast<Letter>(-l))] = y;
  } else {
    const auto& km = sub_.kernel();
    std::vector<int> img = images_[y];
    std::vector<int> w = km.weights[(l > 0 ? l : -l) - 1];
    int sign = l > 0 ? 1 : -1;
    for (std::size_t i = 0; i < img.size(); ++i) img[i] += sign * w[i];
    km.reduce(img);
    t = kernel_intern(img);
    letters_out_[y][li] = t;
    letters_out_[t][letter_index(static_cast<Letter>(-l))] = y;
  }
  return t;
}

CosetId CosetGraph::step_lookup(CosetId y, Letter l) const {
  return letters_out_[y][letter_index(l)];
}

CosetId CosetGraph::apply(CosetId y, const Word& w) {
  for (Letter l : w.letters()) y = step(y, l);
  return y;
}

CosetId CosetGraph::apply_lookup(CosetId y, const Word& w) const {
  for (Letter l : w.letters()) {
    y = step_lookup(y, l);
    if (y == kNoCoset) return kNoCoset;
  }
  return y;
}

void CosetGraph::ensure_radius(int r) {
  if (radius_ < 0) {
    layer_[0] = 0;
    spheres_.push_back({0});
    radius_ = 0;
  }
  int L = 2 * sub_.rank();
  while (radius_ < r) {
    std::vector<CosetId> next;
    for (CosetId y : spheres_[radius_]) {
      for (int li = 0; li < L; ++li) {
        CosetId t = step(y, letter_of(li));
        if (layer_[t] < 0) {
          layer_[t] = radius_ + 1;
          next.push_back(t);
        }
      }
    }
    std::sort(next.begin(), next.end());
    spheres_.push_back(std::move(next));
    ++radius_;
  }
}

const std::vector<CosetId>& CosetGraph::sphere(int n) {
  if (n < 0) throw DomainError("negative radius");
  ensure_radius(n);
  return spheres_[n];
}

int CosetGraph::layer_of(CosetId y) const {
  if (y >= layer_.size() || layer_[y] < 0) {
    throw RegionExhausted("coset outside enumerated radius", radius_);
  }
  return layer_[y];
}

}  // namespace growthlab
