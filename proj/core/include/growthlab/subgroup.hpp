#ifndef GROWTHLAB_SUBGROUP_HPP
#define GROWTHLAB_SUBGROUP_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/word.hpp"

namespace growthlab {

// Folded core automaton of a finitely generated subgroup of F_rank.
// Deterministic: no state has two outgoing edges with the same label.
class StallingsAutomaton {
public:
  StallingsAutomaton(int rank, const std::vector<Word>& generators);

  int rank() const { return rank_; }
  int num_states() const { return static_cast<int>(trans_.size()); }
  int base() const { return 0; }
  // -1 when undefined in the core
  int transition(int state, Letter l) const;
  bool complete() const;
  // w traces a loop at the base point
  bool membership(const Word& w) const;

private:
  int rank_;
  // trans_[state][letter index]; letter l -> index (l>0 ? l-1 : rank - l - 1)
  std::vector<std::vector<int>> trans_;
  int letter_index(Letter l) const { return l > 0 ? l - 1 : rank_ - l - 1; }
};

// Kernel of a homomorphism F_rank -> prod_i Z/m_i (m_i = 0 meaning Z),
// generator g mapping to the vector weights[g-1]. Covers the commutator
// subgroup (abelianization kernel), index-two kernels and normal closures
// of a generator without a finite Stallings graph.
struct KernelMap {
  std::vector<std::vector<int>> weights;  // per generator
  std::vector<int> modulus;               // per coordinate
  int dim() const { return static_cast<int>(modulus.size()); }
  std::vector<int> image(const Word& w) const;
  void reduce(std::vector<int>& v) const;
};

enum class SubgroupKind { Stallings, Kernel };

class SubgroupSpec {
public:
  static SubgroupSpec trivial(int rank);
  static SubgroupSpec whole(int rank);
  static SubgroupSpec from_generators(int rank, const std::vector<Word>& gens);
  static SubgroupSpec commutator(int rank);
  // kernel of the map killing `gen` and sending every other generator to
  // a free Z coordinate: the normal closure of `gen`
  static SubgroupSpec normal_closure(int rank, int gen);
  // "trivial" | "whole" | "commutator" | "normal-closure:a" | "index2" |
  // "gens:a,bab^-1"
  static SubgroupSpec parse(const std::string& text, int rank);

  SubgroupKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  bool membership(const Word& w) const;
  const StallingsAutomaton& automaton() const;
  const KernelMap& kernel() const;

  // Exactly |{h in H : |h| = n}| for n = 0..R, as doubles (counts are
  // integers well below 2^53 at desk scale).
  std::vector<double> sphere_counts(int R) const;

  std::optional<std::size_t> finite_index() const;

private:
  SubgroupSpec(SubgroupKind kind, int rank, std::string name)
      : kind_(kind), rank_(rank), name_(std::move(name)) {}
  SubgroupKind kind_;
  int rank_;
  std::string name_;
  std::shared_ptr<StallingsAutomaton> automaton_;
  std::shared_ptr<KernelMap> kernel_;
};

// Reduced-word counts refined by kernel image: result[m] maps image
// vector -> number of reduced words of length m with that image.
// States are pruned to images reachable within length R.
std::vector<std::map<std::vector<int>, double>> kernel_word_counts(const KernelMap& km, int rank,
                                                                   int R);

}  // namespace growthlab

#endif
