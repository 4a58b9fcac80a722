#ifndef GROWTHLAB_COSET_GRAPH_HPP
#define GROWTHLAB_COSET_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "growthlab/subgroup.hpp"

namespace growthlab {

using CosetId = std::uint32_t;
inline constexpr CosetId kNoCoset = static_cast<CosetId>(-1);

// The Schreier graph of H\F_rank, i.e. the lazily completed Stallings
// automaton (cosets = core states plus tree states attached on demand) or,
// for kernel subgroups, the image grid. The base coset y0 is the class of
// the identity; layers are graph distances from y0.
class CosetGraph {
public:
  CosetGraph(SubgroupSpec sub, std::size_t budget = 4'000'000);

  const SubgroupSpec& subgroup() const { return sub_; }
  int rank() const { return sub_.rank(); }
  CosetId base() const { return 0; }
  std::size_t size() const { return letters_out_.size(); }

  CosetId step(CosetId y, Letter l);              // interning
  CosetId step_lookup(CosetId y, Letter l) const; // kNoCoset when unexplored
  CosetId apply(CosetId y, const Word& w);
  CosetId apply_lookup(CosetId y, const Word& w) const;

  void ensure_radius(int r);
  int enumerated_radius() const { return radius_; }
  const std::vector<CosetId>& sphere(int n);
  int layer_of(CosetId y) const;
  std::optional<std::size_t> finite_index() const { return sub_.finite_index(); }

private:
  SubgroupSpec sub_;
  std::size_t budget_;
  // transitions indexed by [coset][letter index]
  std::vector<std::vector<CosetId>> letters_out_;
  std::vector<int> layer_;
  std::vector<std::vector<CosetId>> spheres_;
  int radius_ = -1;

  // kernel backing
  std::vector<std::vector<int>> images_;
  std::map<std::vector<int>, CosetId> image_index_;

  int letter_index(Letter l) const {
    int r = sub_.rank();
    return l > 0 ? l - 1 : r - l - 1;
  }
  Letter letter_of(int li) const {
    int r = sub_.rank();
    return static_cast<Letter>(li < r ? li + 1 : -(li - r + 1));
  }
  CosetId new_coset();
  CosetId kernel_intern(const std::vector<int>& img);
};

}  // namespace growthlab

#endif
