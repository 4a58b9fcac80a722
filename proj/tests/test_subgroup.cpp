#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "growthlab/coset_graph.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/subgroup.hpp"

using namespace growthlab;

TEST_CASE("one-generator automaton") {
  auto s = SubgroupSpec::from_generators(2, {Word::parse("a", 2)});
  CHECK(s.automaton().num_states() == 1);
  CHECK(s.membership(Word::parse("a^3", 2)));
  CHECK_FALSE(s.membership(Word::parse("b", 2)));
  CHECK_FALSE(s.finite_index().has_value());
}

TEST_CASE("hand-folded example: a and bab^-1") {
  auto s = SubgroupSpec::from_generators(2, {Word::parse("a", 2), Word::parse("bab^-1", 2)});
  CHECK(s.membership(Word::parse("a", 2)));
  CHECK(s.membership(Word::parse("bab^-1", 2)));
  CHECK(s.membership(Word::parse("a bab^-1 a", 2)));
  CHECK_FALSE(s.membership(Word::parse("ab", 2)));
  CHECK_FALSE(s.membership(Word::parse("b", 2)));
}

TEST_CASE("index-two kernel has a complete two-state automaton") {
  auto s = SubgroupSpec::from_generators(
      2, {Word::parse("a^2", 2), Word::parse("b", 2), Word::parse("aba^-1", 2)});
  CHECK(s.automaton().num_states() == 2);
  CHECK(s.automaton().complete());
  CHECK(s.finite_index() == std::size_t{2});
  CHECK(s.membership(Word::parse("a^2", 2)));
  CHECK(s.membership(Word::parse("ab a^-1 b", 2)));
  CHECK_FALSE(s.membership(Word::parse("a", 2)));
  CHECK_FALSE(s.membership(Word::parse("aab a", 2)));

  // agrees with the a-exponent-parity kernel on every word up to length 8
  auto parity = SubgroupSpec::parse("index2", 2);
  std::function<void(std::vector<Letter>&)> rec = [&](std::vector<Letter>& w) {
    if (!w.empty()) {
      Word ww(w);
      if (ww.length() == static_cast<int>(w.size())) {  // reduced only
        CHECK(s.membership(ww) == parity.membership(ww));
      }
    }
    if (w.size() == 6) return;
    for (Letter l : {1, -1, 2, -2}) {
      w.push_back(static_cast<Letter>(l));
      rec(w);
      w.pop_back();
    }
  };
  std::vector<Letter> w;
  rec(w);
}

TEST_CASE("stallings membership agrees with naive subgroup products") {
  auto gens = std::vector<Word>{Word::parse("ab", 2), Word::parse("ba", 2)};
  auto s = SubgroupSpec::from_generators(2, gens);
  // naive enumeration: all products of up to 4 generator letters
  std::set<Word> elements{Word::identity()};
  std::vector<Word> sym;
  for (const auto& g : gens) {
    sym.push_back(g);
    sym.push_back(g.inverse());
  }
  std::vector<Word> frontier{Word::identity()};
  for (int step = 0; step < 4; ++step) {
    std::vector<Word> next;
    for (const auto& e : frontier) {
      for (const auto& g : sym) {
        Word p = e * g;
        if (elements.insert(p).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& e : elements) {
    if (e.length() <= 8) CHECK(s.membership(e));
  }
  CHECK_FALSE(s.membership(Word::parse("a", 2)));
}

TEST_CASE("kernel subgroups: commutator and normal closure") {
  auto c = SubgroupSpec::commutator(2);
  CHECK(c.membership(Word::parse("ab a^-1 b^-1", 2)));
  CHECK_FALSE(c.membership(Word::parse("ab", 2)));
  CHECK_FALSE(c.finite_index().has_value());

  auto n = SubgroupSpec::normal_closure(2, 1);  // <<a>>
  CHECK(n.membership(Word::parse("a", 2)));
  CHECK(n.membership(Word::parse("bab^-1", 2)));
  CHECK(n.membership(Word::parse("b a b^-1 a", 2)));
  CHECK_FALSE(n.membership(Word::parse("b", 2)));
}

TEST_CASE("subgroup sphere counts: trivial and whole") {
  auto t = SubgroupSpec::trivial(2);
  auto counts = t.sphere_counts(6);
  CHECK(counts[0] == 1.0);
  for (int n = 1; n <= 6; ++n) CHECK(counts[n] == 0.0);

  auto w = SubgroupSpec::whole(2);
  auto wc = w.sphere_counts(5);
  CHECK(wc[1] == 4.0);
  CHECK(wc[2] == 12.0);
  CHECK(wc[5] == 4 * 81.0);
}

TEST_CASE("subgroup sphere counts agree with membership filters") {
  // brute force over all reduced words of length <= 7
  for (const char* spec : {"index2", "commutator", "normal-closure:a"}) {
    auto s = SubgroupSpec::parse(spec, 2);
    auto counts = s.sphere_counts(7);
    std::vector<double> brute(8, 0.0);
    brute[0] = 1.0;
    std::function<void(std::vector<Letter>&)> rec = [&](std::vector<Letter>& w) {
      if (!w.empty() && s.membership(Word(w))) brute[w.size()] += 1.0;
      if (w.size() == 7) return;
      for (Letter l : {1, -1, 2, -2}) {
        if (!w.empty() && w.back() == -l) continue;
        w.push_back(l);
        rec(w);
        w.pop_back();
      }
    };
    std::vector<Letter> w;
    rec(w);
    for (int n = 0; n <= 7; ++n) {
      INFO(spec << " length " << n);
      CHECK(counts[n] == brute[n]);
    }
  }
}

TEST_CASE("coset graphs: whole group is a point, trivial is the tree") {
  CosetGraph whole(SubgroupSpec::whole(2));
  whole.ensure_radius(3);
  CHECK(whole.size() == 1);
  CHECK(whole.sphere(1).empty());

  CosetGraph tree(SubgroupSpec::trivial(2));
  tree.ensure_radius(5);
  CHECK(tree.sphere(1).size() == 4);
  CHECK(tree.sphere(5).size() == 4 * 81);
}

TEST_CASE("commutator coset graph is the grid") {
  CosetGraph grid(SubgroupSpec::commutator(2));
  grid.ensure_radius(6);
  CHECK(grid.sphere(1).size() == 4);
  CHECK(grid.sphere(6).size() == 24);  // |{v : |v|_1 = 6}| = 4*6
  // 4-regular with the partial right action consistent
  CosetId y = grid.base();
  for (Letter l : {1, 2, -1, 2, 1, 1}) {
    CosetId z = grid.step(y, l);
    CHECK(grid.step(z, static_cast<Letter>(-l)) == y);
    y = z;
  }
}

TEST_CASE("index-two coset graph has exactly two cosets") {
  auto s = SubgroupSpec::from_generators(
      2, {Word::parse("a^2", 2), Word::parse("b", 2), Word::parse("aba^-1", 2)});
  CosetGraph g(s);
  g.ensure_radius(4);
  CHECK(g.size() == 2);
}

TEST_CASE("coset layer equals minimal representative length") {
  auto s = SubgroupSpec::from_generators(2, {Word::parse("a", 2), Word::parse("bab^-1", 2)});
  CosetGraph g(s);
  g.ensure_radius(6);
  // enumerate reduced words by length; first visit must match the layer
  std::map<CosetId, int> first;
  first[g.base()] = 0;
  std::function<void(std::vector<Letter>&)> rec = [&](std::vector<Letter>& w) {
    if (!w.empty()) {
      CosetId y = g.apply(g.base(), Word(w));
      auto [it, inserted] = first.emplace(y, static_cast<int>(w.size()));
      if (!inserted) it->second = std::min(it->second, static_cast<int>(w.size()));
    }
    if (w.size() == 6) return;
    for (Letter l : {1, -1, 2, -2}) {
      if (!w.empty() && w.back() == -l) continue;
      w.push_back(l);
      rec(w);
      w.pop_back();
    }
  };
  std::vector<Letter> w;
  rec(w);
  for (const auto& [coset, len] : first) {
    CHECK(g.layer_of(coset) == len);
  }
}
