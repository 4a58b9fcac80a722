#ifndef GROWTHLAB_MODEL_HPP
#define GROWTHLAB_MODEL_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/errors.hpp"
#include "growthlab/word.hpp"

namespace growthlab {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

struct MetricPoint {
  VertexId id = kNoVertex;
  bool operator==(const MetricPoint& o) const { return id == o.id; }
  bool operator!=(const MetricPoint& o) const { return id != o.id; }
};

// An implicit marked graph acted on by a group. Vertices are discovered
// lazily by BFS from the basepoint; queries never see a partially built
// layer. Concrete models intern vertices behind a canonical key, so ids
// are stable and equality of points is equality of ids.
//
// Growth is serialized behind a mutex; readers of completed layers are
// safe to run concurrently with each other.
class GroupModel {
public:
  explicit GroupModel(std::size_t vertex_budget) : budget_(vertex_budget) {}
  virtual ~GroupModel() = default;

  MetricPoint basepoint() const { return MetricPoint{0}; }
  int enumerated_radius() const { return radius_; }
  std::size_t vertex_count() const { return layer_.size(); }
  std::size_t vertex_budget() const { return budget_; }

  // Grows the BFS enumeration to radius r. Throws ResourceError with the
  // achieved radius if the vertex budget would be exceeded.
  void ensure_radius(int r);

  const std::vector<VertexId>& sphere(int n);
  std::uint64_t sphere_size(int n) { return sphere(n).size(); }

  // d(o, v); RegionExhausted if v has been interned but not yet reached
  // by the layered BFS.
  int layer_of(VertexId v) const;
  bool layer_known(VertexId v) const {
    return v < layer_.size() && layer_[v] >= 0;
  }

  const std::vector<VertexId>& neighbors(VertexId v);

  // Exact graph distance. Default: grow until act(x^-1, y) is layered.
  virtual int distance(MetricPoint x, MetricPoint y);

  // --- group action -------------------------------------------------
  // True when the acting group is transitive on all vertices (Cayley
  // graphs). Models with a smaller marked orbit (horoballs) return false
  // but still provide the action on orbit elements.
  virtual bool vertex_transitive() const = 0;
  virtual bool in_orbit(VertexId) const { return true; }
  // Orbit points at distance n from o (= sphere(n) for Cayley graphs).
  virtual std::vector<VertexId> orbit_sphere(int n);
  // g.x where g is (the canonical element of) an orbit vertex. `act`
  // interns the image; `act_lookup` returns kNoVertex when the image has
  // not been interned yet.
  virtual VertexId act(VertexId g, VertexId x) = 0;
  virtual VertexId act_lookup(VertexId g, VertexId x) const = 0;
  virtual VertexId inverse(VertexId g) = 0;

  // Does v lie in the union of orbit-translates of the finite set K?
  // For a transitive action this is identically true.
  virtual bool in_orbit_of_set(VertexId v, const std::vector<VertexId>& K) const;

  // Closed-form |S(o,n)| when the model has one (free groups, Z^d).
  virtual std::optional<double> sphere_count_closed_form(int) const { return std::nullopt; }

  // True when distance() is pure arithmetic and never grows the model.
  // Parallel samplers pre-enumerate models for which this is false, so
  // that concurrent queries are read-only.
  virtual bool distance_is_enumeration_free() const { return false; }

  virtual std::string describe() const = 0;

  // Reduced word of a vertex for word-backed models; DomainError otherwise.
  virtual Word word_of(VertexId) const {
    throw DomainError(describe() + ": vertices are not words");
  }

protected:
  // Discover the neighbor list of v, interning new vertices.
  virtual std::vector<VertexId> compute_neighbors(VertexId v) = 0;

  // Called by concrete models when interning; returns the new id.
  VertexId register_vertex() {
    layer_.push_back(-1);
    return static_cast<VertexId>(layer_.size() - 1);
  }
  void check_budget() const {
    if (layer_.size() > budget_) {
      throw ResourceError("vertex budget " + std::to_string(budget_) +
                              " exceeded at radius " + std::to_string(radius_),
                          radius_);
    }
  }

  mutable std::mutex grow_mutex_;

private:
  std::size_t budget_;
  std::vector<int> layer_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<char> adj_done_;
  std::vector<std::vector<VertexId>> spheres_;
  int radius_ = -1;

  void ensure_radius_locked(int r);
  const std::vector<VertexId>& neighbors_locked(VertexId v);
};

std::unique_ptr<GroupModel> make_model(const std::string& spec, std::size_t budget = 6'000'000);

}  // namespace growthlab

#endif
