#include "growthlab/subgroup.hpp"

#include <algorithm>
#include <numeric>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

// union-find
struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

StallingsAutomaton::StallingsAutomaton(int rank, const std::vector<Word>& generators)
    : rank_(rank) {
  // bouquet of generator loops at the base vertex, then fold to a
  // deterministic core
  struct Edge {
    int u, v;
    Letter l;
  };
  std::vector<Edge> edges;
  int n_vertices = 1;
  for (const Word& g : generators) {
    if (g.empty()) continue;
    int prev = 0;
    const auto& ls = g.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int next = (i + 1 == ls.size()) ? 0 : n_vertices++;
      edges.push_back({prev, next, ls[i]});
      prev = next;
    }
  }

  DSU dsu(n_vertices);
  bool changed = true;
  while (changed) {
    changed = false;
    // map (vertex, letter) -> target; merge targets on conflicts
    std::map<std::pair<int, Letter>, int> out;
    for (const Edge& e : edges) {
      for (auto [u, v, l] : {std::tuple<int, int, Letter>{e.u, e.v, e.l},
                             std::tuple<int, int, Letter>{e.v, e.u, static_cast<Letter>(-e.l)}}) {
        int fu = dsu.find(u), fv = dsu.find(v);
        auto key = std::make_pair(fu, l);
        auto it = out.find(key);
        if (it == out.end()) {
          out.emplace(key, fv);
        } else if (dsu.find(it->second) != fv) {
          dsu.unite(it->second, fv);
          changed = true;
        }
      }
    }
  }

  // compact representatives
  std::map<int, int> relabel;
  relabel[dsu.find(0)] = 0;
  for (const Edge& e : edges) {
    for (int x : {dsu.find(e.u), dsu.find(e.v)}) {
      if (!relabel.count(x)) {
        int id = static_cast<int>(relabel.size());
        relabel[x] = id;
      }
    }
  }
  trans_.assign(relabel.size(), std::vector<int>(2 * rank_, -1));
  for (const Edge& e : edges) {
    int u = relabel[dsu.find(e.u)];
    int v = relabel[dsu.find(e.v)];
    trans_[u][letter_index(e.l)] = v;
    trans_[v][letter_index(static_cast<Letter>(-e.l))] = u;
  }
  if (trans_.empty()) trans_.assign(1, std::vector<int>(2 * rank_, -1));
}

int StallingsAutomaton::transition(int state, Letter l) const {
  return trans_[state][letter_index(l)];
}

bool StallingsAutomaton::complete() const {
  for (const auto& row : trans_) {
    for (int t : row) {
      if (t < 0) return false;
    }
  }
  return true;
}

bool StallingsAutomaton::membership(const Word& w) const {
  int state = 0;
  for (Letter l : w.letters()) {
    state = transition(state, l);
    if (state < 0) return false;
  }
  return state == 0;
}

std::vector<int> KernelMap::image(const Word& w) const {
  std::vector<int> v(modulus.size(), 0);
  for (Letter l : w.letters()) {
    int g = l > 0 ? l : -l;
    int sign = l > 0 ? 1 : -1;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += sign * weights[g - 1][i];
  }
  reduce(v);
  return v;
}

void KernelMap::reduce(std::vector<int>& v) const {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (modulus[i] > 0) {
      v[i] %= modulus[i];
      if (v[i] < 0) v[i] += modulus[i];
    }
  }
}

SubgroupSpec SubgroupSpec::trivial(int rank) {
  SubgroupSpec s(SubgroupKind::Stallings, rank, "trivial");
  s.automaton_ = std::make_shared<StallingsAutomaton>(rank, std::vector<Word>{});
  return s;
}

SubgroupSpec SubgroupSpec::whole(int rank) {
  std::vector<Word> gens;
  for (int g = 1; g <= rank; ++g) gens.push_back(Word(std::vector<Letter>{static_cast<Letter>(g)}));
  SubgroupSpec s(SubgroupKind::Stallings, rank, "whole");
  s.automaton_ = std::make_shared<StallingsAutomaton>(rank, gens);
  return s;
}

SubgroupSpec SubgroupSpec::from_generators(int rank, const std::vector<Word>& gens) {
  std::string name = "gens:";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) name += ",";
    name += gens[i].str();
  }
  SubgroupSpec s(SubgroupKind::Stallings, rank, name);
  s.automaton_ = std::make_shared<StallingsAutomaton>(rank, gens);
  return s;
}

SubgroupSpec SubgroupSpec::commutator(int rank) {
  KernelMap km;
  km.modulus.assign(rank, 0);
  km.weights.assign(rank, std::vector<int>(rank, 0));
  for (int g = 0; g < rank; ++g) km.weights[g][g] = 1;
  SubgroupSpec s(SubgroupKind::Kernel, rank, "commutator");
  s.kernel_ = std::make_shared<KernelMap>(std::move(km));
  return s;
}

SubgroupSpec SubgroupSpec::normal_closure(int rank, int gen) {
  if (gen < 1 || gen > rank) throw UsageError("normal closure generator out of range");
  KernelMap km;
  km.modulus.assign(rank - 1, 0);
  km.weights.assign(rank, std::vector<int>(rank - 1, 0));
  int coord = 0;
  for (int g = 1; g <= rank; ++g) {
    if (g == gen) continue;
    km.weights[g - 1][coord++] = 1;
  }
  char c = static_cast<char>('a' + gen - 1);
  SubgroupSpec s(SubgroupKind::Kernel, rank, std::string("normal-closure:") + c);
  s.kernel_ = std::make_shared<KernelMap>(std::move(km));
  return s;
}

SubgroupSpec SubgroupSpec::parse(const std::string& text, int rank) {
  if (text == "trivial" || text == "1") return trivial(rank);
  if (text == "whole") return whole(rank);
  if (text == "commutator") return commutator(rank);
  if (text.rfind("normal-closure:", 0) == 0) {
    std::string g = text.substr(15);
    if (g.size() != 1 || g[0] < 'a' || g[0] >= 'a' + rank) {
      throw UsageError("bad generator in '" + text + "'");
    }
    return normal_closure(rank, g[0] - 'a' + 1);
  }
  if (text == "index2") {
    // kernel of the a-exponent mod 2; equals <a^2, b, aba^-1> in F_2
    KernelMap km;
    km.modulus = {2};
    km.weights.assign(rank, std::vector<int>{0});
    km.weights[0][0] = 1;
    SubgroupSpec s(SubgroupKind::Kernel, rank, "index2");
    s.kernel_ = std::make_shared<KernelMap>(std::move(km));
    return s;
  }
  if (text.rfind("gens:", 0) == 0) {
    std::vector<Word> gens;
    std::string rest = text.substr(5);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      std::string tok = rest.substr(pos, comma - pos);
      if (!tok.empty()) gens.push_back(Word::parse(tok, rank));
      pos = comma + 1;
    }
    if (gens.empty()) throw UsageError("gens: needs at least one generator word");
    return from_generators(rank, gens);
  }
  throw UsageError("unknown subgroup spec '" + text +
                   "' (try trivial, whole, commutator, index2, normal-closure:a, gens:a,bab^-1)");
}

bool SubgroupSpec::membership(const Word& w) const {
  if (kind_ == SubgroupKind::Stallings) return automaton_->membership(w);
  auto img = kernel_->image(w);
  return std::all_of(img.begin(), img.end(), [](int x) { return x == 0; });
}

const StallingsAutomaton& SubgroupSpec::automaton() const {
  if (!automaton_) throw DomainError("subgroup '" + name_ + "' has no Stallings automaton");
  return *automaton_;
}

const KernelMap& SubgroupSpec::kernel() const {
  if (!kernel_) throw DomainError("subgroup '" + name_ + "' is not kernel-backed");
  return *kernel_;
}

std::vector<double> SubgroupSpec::sphere_counts(int R) const {
  std::vector<double> counts(R + 1, 0.0);
  counts[0] = 1.0;
  if (kind_ == SubgroupKind::Stallings) {
    // reduced paths in the core, refined by (state, last letter)
    const auto& A = *automaton_;
    int S = A.num_states();
    int L = 2 * rank_;
    auto idx = [&](int s, int li) { return s * L + li; };
    auto letter_of = [&](int li) {
      return static_cast<Letter>(li < rank_ ? li + 1 : -(li - rank_ + 1));
    };
    std::vector<double> cur(S * L, 0.0);
    for (int li = 0; li < L; ++li) {
      int t = A.transition(0, letter_of(li));
      if (t >= 0) cur[idx(t, li)] += 1.0;
    }
    for (int n = 1; n <= R; ++n) {
      double total = 0.0;
      for (int li = 0; li < L; ++li) total += cur[idx(0, li)];
      counts[n] = total;
      if (n == R) break;
      std::vector<double> next(S * L, 0.0);
      for (int s = 0; s < S; ++s) {
        for (int li = 0; li < L; ++li) {
          double c = cur[idx(s, li)];
          if (c == 0.0) continue;
          Letter prev = letter_of(li);
          for (int lj = 0; lj < L; ++lj) {
            Letter l = letter_of(lj);
            if (l == static_cast<Letter>(-prev)) continue;  // stay reduced
            int t = A.transition(s, l);
            if (t >= 0) next[idx(t, lj)] += c;
          }
        }
      }
      cur = std::move(next);
    }
  } else {
    auto by_image = kernel_word_counts(*kernel_, rank_, R);
    std::vector<int> zero(kernel_->dim(), 0);
    for (int n = 1; n <= R; ++n) {
      auto it = by_image[n].find(zero);
      counts[n] = it == by_image[n].end() ? 0.0 : it->second;
    }
  }
  return counts;
}

std::optional<std::size_t> SubgroupSpec::finite_index() const {
  if (kind_ == SubgroupKind::Stallings) {
    if (automaton_->complete()) return automaton_->num_states();
    return std::nullopt;
  }
  std::size_t idx = 1;
  for (int m : kernel_->modulus) {
    if (m == 0) return std::nullopt;
    idx *= static_cast<std::size_t>(m);
  }
  return idx;
}

std::vector<std::map<std::vector<int>, double>> kernel_word_counts(const KernelMap& km, int rank,
                                                                   int R) {
  int L = 2 * rank;
  auto letter_of = [&](int li) {
    return static_cast<Letter>(li < rank ? li + 1 : -(li - rank + 1));
  };
  auto weight_of = [&](int li) {
    std::vector<int> w = km.weights[li < rank ? li : li - rank];
    if (li >= rank) {
      for (int& x : w) x = -x;
    }
    return w;
  };

  std::vector<std::map<std::vector<int>, double>> out(R + 1);
  out[0][std::vector<int>(km.dim(), 0)] = 1.0;
  // refine by last letter during the walk
  std::map<std::pair<std::vector<int>, int>, double> cur;
  for (int li = 0; li < L; ++li) {
    std::vector<int> v = weight_of(li);
    km.reduce(v);
    cur[{v, li}] += 1.0;
  }
  for (int n = 1; n <= R; ++n) {
    for (const auto& [key, c] : cur) out[n][key.first] += c;
    if (n == R) break;
    std::map<std::pair<std::vector<int>, int>, double> next;
    for (const auto& [key, c] : cur) {
      const auto& [img, li] = key;
      Letter prev = letter_of(li);
      for (int lj = 0; lj < L; ++lj) {
        if (letter_of(lj) == static_cast<Letter>(-prev)) continue;
        std::vector<int> v = img;
        std::vector<int> w = weight_of(lj);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        km.reduce(v);
        next[{std::move(v), lj}] += c;
      }
    }
    cur = std::move(next);
  }
  return out;
}

}  // namespace growthlab
