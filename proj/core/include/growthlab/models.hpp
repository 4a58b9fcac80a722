#ifndef GROWTHLAB_MODELS_HPP
#define GROWTHLAB_MODELS_HPP

#include <map>
#include <unordered_map>
#include <vector>

#include "growthlab/model.hpp"

namespace growthlab {

// Cayley graph of the free group F_k (k=1 gives Z as a line).
class FreeGroupModel : public GroupModel {
public:
  explicit FreeGroupModel(int rank, std::size_t budget = 6'000'000);

  int rank() const { return rank_; }
  bool vertex_transitive() const override { return true; }
  VertexId act(VertexId g, VertexId x) override;
  VertexId act_lookup(VertexId g, VertexId x) const override;
  VertexId inverse(VertexId g) override;
  int distance(MetricPoint x, MetricPoint y) override;
  bool distance_is_enumeration_free() const override { return true; }
  std::optional<double> sphere_count_closed_form(int n) const override;
  std::string describe() const override;
  Word word_of(VertexId v) const override;

  VertexId vertex_of(const Word& w);                 // interns
  VertexId lookup(const Word& w) const;              // kNoVertex if absent

protected:
  std::vector<VertexId> compute_neighbors(VertexId v) override;

private:
  int rank_;
  std::vector<Word> words_;
  std::map<Word, VertexId> index_;
  VertexId intern(const Word& w);
};

// Z^d with the standard generators (L1 word metric).
class FreeAbelianModel : public GroupModel {
public:
  explicit FreeAbelianModel(int dim, std::size_t budget = 6'000'000);

  int dim() const { return dim_; }
  bool vertex_transitive() const override { return true; }
  VertexId act(VertexId g, VertexId x) override;
  VertexId act_lookup(VertexId g, VertexId x) const override;
  VertexId inverse(VertexId g) override;
  int distance(MetricPoint x, MetricPoint y) override;
  bool distance_is_enumeration_free() const override { return true; }
  std::optional<double> sphere_count_closed_form(int n) const override;
  std::string describe() const override;

  VertexId vertex_of(const std::vector<int>& coords);
  const std::vector<int>& coords_of(VertexId v) const { return coords_[v]; }

protected:
  std::vector<VertexId> compute_neighbors(VertexId v) override;

private:
  int dim_;
  std::vector<std::vector<int>> coords_;
  std::map<std::vector<int>, VertexId> index_;
  VertexId intern(const std::vector<int>& c);
};

// Lamplighter group Z2 wr Z with generators {a, t}: a toggles the lamp at
// the current position, t moves the lamplighter.
struct LamplighterElement {
  std::vector<int> lamps;  // sorted lit positions
  int position = 0;
  bool operator==(const LamplighterElement& o) const {
    return position == o.position && lamps == o.lamps;
  }
  bool operator<(const LamplighterElement& o) const {
    if (position != o.position) return position < o.position;
    return lamps < o.lamps;
  }
};

LamplighterElement lamplighter_multiply(const LamplighterElement& x, const LamplighterElement& y);
LamplighterElement lamplighter_inverse(const LamplighterElement& x);

// Word length of a position-0 element: shortest closed walk from 0
// visiting every lit lamp, plus one toggle per lamp. DomainError when the
// position is nonzero (those lengths go through BFS only).
int lamplighter_length(const LamplighterElement& v);

class LamplighterModel : public GroupModel {
public:
  explicit LamplighterModel(std::size_t budget = 6'000'000);

  bool vertex_transitive() const override { return true; }
  VertexId act(VertexId g, VertexId x) override;
  VertexId act_lookup(VertexId g, VertexId x) const override;
  VertexId inverse(VertexId g) override;
  int distance(MetricPoint x, MetricPoint y) override;
  std::string describe() const override;

  VertexId vertex_of(const LamplighterElement& e);
  VertexId lookup(const LamplighterElement& e) const;
  const LamplighterElement& element_of(VertexId v) const { return elems_[v]; }

protected:
  std::vector<VertexId> compute_neighbors(VertexId v) override;

private:
  std::vector<LamplighterElement> elems_;
  std::map<LamplighterElement, VertexId> index_;
  VertexId intern(const LamplighterElement& e);
};

// Finitely presented group enumerated through a user-supplied rewriting
// system that must confluently reduce words inside the requested ball.
// Rules are applied together with free reduction until a fixed point.
// Soundness is checked on every discovered vertex (each rule must hold as
// a relation); failure raises InvariantViolation.
struct RewriteRule {
  std::vector<Letter> lhs;
  std::vector<Letter> rhs;
};

class PresentationModel : public GroupModel {
public:
  PresentationModel(int rank, std::vector<RewriteRule> rules, std::size_t budget = 6'000'000);

  // Z^d presented by commuting generators (shortlex-confluent rules).
  static std::unique_ptr<PresentationModel> grid(int dim, std::size_t budget = 6'000'000);

  int rank() const { return rank_; }
  bool vertex_transitive() const override { return true; }
  VertexId act(VertexId g, VertexId x) override;
  VertexId act_lookup(VertexId g, VertexId x) const override;
  VertexId inverse(VertexId g) override;
  int distance(MetricPoint x, MetricPoint y) override;
  std::string describe() const override;
  Word word_of(VertexId v) const override;

  std::vector<Letter> normal_form(std::vector<Letter> w) const;
  VertexId vertex_of(const Word& w);

protected:
  std::vector<VertexId> compute_neighbors(VertexId v) override;

private:
  int rank_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<Letter>> forms_;
  std::map<std::vector<Letter>, VertexId> index_;
  VertexId intern(const std::vector<Letter>& nf);
  void check_rules_at(VertexId v);
};

// Combinatorial horoball over a vertex-transitive base graph: vertices
// (y, n) for 0 <= n <= depth, vertical edges (y,n)-(y,n+1) and horizontal
// edges (y,n)-(y',n) whenever 0 < d_base(y,y') <= 2^n. The parabolic
// group is the base group acting on the depth-0 ring.
class HoroballModel : public GroupModel {
public:
  HoroballModel(std::unique_ptr<GroupModel> base, int depth, std::size_t budget = 6'000'000);

  int depth_bound() const { return depth_; }
  GroupModel& base() { return *base_; }
  int depth_of(VertexId v) const { return cells_[v].second; }

  bool vertex_transitive() const override { return false; }
  bool in_orbit(VertexId v) const override { return depth_of(v) == 0; }
  std::vector<VertexId> orbit_sphere(int n) override;
  VertexId act(VertexId g, VertexId x) override;
  VertexId act_lookup(VertexId g, VertexId x) const override;
  VertexId inverse(VertexId g) override;
  bool in_orbit_of_set(VertexId v, const std::vector<VertexId>& K) const override;
  std::string describe() const override;

  VertexId vertex_of(VertexId base_vertex, int depth);

protected:
  std::vector<VertexId> compute_neighbors(VertexId v) override;

private:
  std::unique_ptr<GroupModel> base_;
  int depth_;
  std::vector<std::pair<VertexId, int>> cells_;  // (base vertex, depth)
  std::map<std::pair<VertexId, int>, VertexId> index_;
  VertexId intern(VertexId b, int n);
};

}  // namespace growthlab

#endif
