#include "sheafbn/fundgroup.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "sheafbn/errors.hpp"

namespace sheafbn {

Word word_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) fail("BadWord", "zero letter");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return word_reduce(std::move(out));
}

GroupPresentation make_presentation(int generators,
                                    std::vector<Word> relators) {
  require(generators >= 0, "BadPresentation", "negative generator count");
  GroupPresentation p;
  p.generators = generators;
  for (Word& w : relators) {
    for (int letter : w)
      require(letter != 0 && std::abs(letter) <= generators, "BadWord",
              "letter " + std::to_string(letter) + " out of range");
    Word r = word_reduce(std::move(w));
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

// ---- edge labeling ----------------------------------------------------------

bool EdgeLabeling::is_tree_edge(int u, int v) const {
  return parent_[static_cast<size_t>(u)] == v ||
         parent_[static_cast<size_t>(v)] == u;
}

Word EdgeLabeling::edge_word(int from, int to) const {
  if (from == to) return {};
  const int lo = std::min(from, to), hi = std::max(from, to);
  require(complex_.has({lo, hi}), "NotAnEdge",
          "{" + std::to_string(from) + "," + std::to_string(to) +
              "} is not an edge");
  const int g = generator_of_[static_cast<size_t>(complex_.index_of({lo, hi}))];
  if (g < 0) return {};
  return {from < to ? g + 1 : -(g + 1)};
}

std::pair<int, int> EdgeLabeling::generator_edge(int g) const {
  for (size_t e = 0; e < generator_of_.size(); ++e)
    if (generator_of_[e] == g) {
      const Simplex& s = complex_.simplices(1)[e];
      return {s[0], s[1]};
    }
  fail("BadWord", "no such generator " + std::to_string(g));
}

std::vector<int> EdgeLabeling::tree_path(int v) const {
  std::vector<int> path;
  for (int cur = v; cur >= 0; cur = parent_[static_cast<size_t>(cur)])
    path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

std::pair<GroupPresentation, EdgeLabeling> presentation(
    const SimplicialComplex& x, int basepoint) {
  require(basepoint >= 0 && basepoint < x.vertex_count(), "InvalidVertexIndex",
          "basepoint " + std::to_string(basepoint));
  require(x.is_connected(), "NotConnected",
          "fundamental group needs a connected complex");

  const int n = x.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const Simplex& e : x.simplices(1)) {
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    adj[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<int> parent(static_cast<size_t>(n), -2);  // -2 = unvisited
  parent[static_cast<size_t>(basepoint)] = -1;
  std::deque<int> queue{basepoint};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (parent[static_cast<size_t>(w)] == -2) {
        parent[static_cast<size_t>(w)] = v;
        queue.push_back(w);
      }
  }

  std::vector<int> generator_of(x.simplices(1).size(), -1);
  int next_gen = 0;
  for (size_t e = 0; e < x.simplices(1).size(); ++e) {
    const Simplex& s = x.simplices(1)[e];
    const bool in_tree = parent[static_cast<size_t>(s[0])] == s[1] ||
                         parent[static_cast<size_t>(s[1])] == s[0];
    if (!in_tree) generator_of[e] = next_gen++;
  }

  EdgeLabeling lab(x, basepoint, std::move(parent), std::move(generator_of),
                   next_gen);
  GroupPresentation p = labeling_presentation(lab);
  return {std::move(p), std::move(lab)};
}

GroupPresentation labeling_presentation(const EdgeLabeling& l) {
  std::vector<Word> relators;
  for (const Simplex& t : l.complex().simplices(2)) {
    Word w = word_concat(
        word_concat(l.edge_word(t[0], t[1]), l.edge_word(t[1], t[2])),
        l.edge_word(t[2], t[0]));
    relators.push_back(std::move(w));
  }
  return make_presentation(l.generator_count(), std::move(relators));
}

// ---- coset enumeration ------------------------------------------------------

namespace {

struct BudgetHit {};

// HLT enumeration with eager coincidence handling, following the classical
// scheme: one pass of the scan pointer over the (growing) table, scanning
// every relator at every live coset and filling the remaining columns.
struct Enumerator {
  int m;
  Index budget;
  std::vector<std::vector<Index>> table;  // 2m columns, -1 undefined
  std::vector<Index> rep;
  Index live = 0;

  static int col(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int inv_col(int c) { return c ^ 1; }

  Index repr(Index c) {
    while (rep[static_cast<size_t>(c)] != c) {
      rep[static_cast<size_t>(c)] =
          rep[static_cast<size_t>(rep[static_cast<size_t>(c)])];
      c = rep[static_cast<size_t>(c)];
    }
    return c;
  }

  Index new_coset() {
    if (live + 1 > budget) throw BudgetHit{};
    const Index b = static_cast<Index>(table.size());
    table.emplace_back(static_cast<size_t>(2 * m), -1);
    rep.push_back(b);
    ++live;
    return b;
  }

  void define(Index a, int c) {
    const Index b = new_coset();
    table[static_cast<size_t>(a)][static_cast<size_t>(c)] = b;
    table[static_cast<size_t>(b)][static_cast<size_t>(inv_col(c))] = a;
  }

  void merge(Index a, Index b, std::deque<Index>& q) {
    a = repr(a);
    b = repr(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep[static_cast<size_t>(b)] = a;
    --live;
    q.push_back(b);
  }

  void coincidence(Index a, Index b) {
    std::deque<Index> q;
    merge(a, b, q);
    while (!q.empty()) {
      const Index dead = q.front();
      q.pop_front();
      for (int c = 0; c < 2 * m; ++c) {
        const Index f = table[static_cast<size_t>(dead)][static_cast<size_t>(c)];
        if (f < 0) continue;
        // drop the stale back-reference into the dead coset
        auto& back = table[static_cast<size_t>(f)][static_cast<size_t>(inv_col(c))];
        if (back == dead) back = -1;
        const Index e1 = repr(dead);
        const Index f1 = repr(f);
        auto& fwd = table[static_cast<size_t>(e1)][static_cast<size_t>(c)];
        if (fwd >= 0) {
          merge(f1, fwd, q);
        } else {
          auto& bwd =
              table[static_cast<size_t>(f1)][static_cast<size_t>(inv_col(c))];
          if (bwd >= 0) {
            merge(e1, bwd, q);
          } else {
            fwd = f1;
            bwd = e1;
          }
        }
      }
    }
  }

  void scan_and_fill(Index a, const std::vector<int>& wcols) {
    a = repr(a);
    Index f = a;
    size_t i = 0;
    Index b = a;
    size_t j = wcols.size();
    for (;;) {
      while (i < j &&
             table[static_cast<size_t>(f)][static_cast<size_t>(wcols[i])] >= 0) {
        f = repr(table[static_cast<size_t>(f)][static_cast<size_t>(wcols[i])]);
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table[static_cast<size_t>(b)][static_cast<size_t>(
                          inv_col(wcols[j - 1]))] >= 0) {
        b = repr(table[static_cast<size_t>(b)][static_cast<size_t>(
            inv_col(wcols[j - 1]))]);
        --j;
      }
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table[static_cast<size_t>(f)][static_cast<size_t>(wcols[i])] = b;
        table[static_cast<size_t>(b)][static_cast<size_t>(inv_col(wcols[i]))] =
            f;
        return;
      }
      define(f, wcols[i]);
    }
  }
};

std::vector<int> word_cols(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int letter : w) out.push_back(Enumerator::col(letter));
  return out;
}

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p,
                        const std::vector<Word>& subgroup_words,
                        Index max_cosets) {
  require(max_cosets >= 1, "BadBudget", "budget must allow one coset");
  std::vector<Word> subgroup;
  for (const Word& w : subgroup_words) {
    for (int letter : w)
      require(letter != 0 && std::abs(letter) <= p.generators, "BadWord",
              "subgroup letter out of range");
    subgroup.push_back(word_reduce(w));
  }

  CosetTable result;
  result.presentation = p;
  result.subgroup = subgroup;

  Enumerator en;
  en.m = p.generators;
  en.budget = max_cosets;

  std::vector<std::vector<int>> relator_cols;
  for (const Word& r : p.relators) relator_cols.push_back(word_cols(r));

  try {
    en.new_coset();
    for (const Word& w : subgroup) en.scan_and_fill(0, word_cols(w));
    for (Index a = 0; a < static_cast<Index>(en.table.size()); ++a) {
      if (en.repr(a) != a) continue;
      for (const auto& r : relator_cols) {
        en.scan_and_fill(a, r);
        if (en.repr(a) != a) break;
      }
      if (en.repr(a) != a) continue;
      for (int c = 0; c < 2 * en.m; ++c)
        if (en.table[static_cast<size_t>(a)][static_cast<size_t>(c)] < 0)
          en.define(a, c);
    }
  } catch (const BudgetHit&) {
    result.status = CosetTable::Status::budget_exceeded;
    result.coset_count = en.live;
    return result;
  }

  // compact and standardize: breadth-first renumbering over the columns in
  // generator order, recording a shortest representative word per coset
  const Index root = en.repr(0);
  std::vector<Index> new_of(en.table.size(), -1);
  std::vector<Index> old_of;
  std::vector<Word> words;
  new_of[static_cast<size_t>(root)] = 0;
  old_of.push_back(root);
  words.push_back({});
  for (Index pos = 0; pos < static_cast<Index>(old_of.size()); ++pos) {
    const Index cur = old_of[static_cast<size_t>(pos)];
    for (int c = 0; c < 2 * en.m; ++c) {
      const Index raw =
          en.table[static_cast<size_t>(cur)][static_cast<size_t>(c)];
      require(raw >= 0, "InternalError", "incomplete closed table");
      const Index nxt = en.repr(raw);
      if (new_of[static_cast<size_t>(nxt)] >= 0) continue;
      new_of[static_cast<size_t>(nxt)] = static_cast<Index>(old_of.size());
      old_of.push_back(nxt);
      const int letter = (c % 2 == 0) ? c / 2 + 1 : -(c / 2 + 1);
      Word w = words[static_cast<size_t>(pos)];
      w.push_back(letter);
      words.push_back(std::move(w));
    }
  }
  require(static_cast<Index>(old_of.size()) == en.live, "InternalError",
          "coset table action is not transitive");

  result.status = CosetTable::Status::complete;
  result.coset_count = en.live;
  result.coset_word = std::move(words);
  result.action.assign(static_cast<size_t>(p.generators),
                       std::vector<Index>(static_cast<size_t>(en.live)));
  for (Index a = 0; a < en.live; ++a) {
    const Index old_a = old_of[static_cast<size_t>(a)];
    for (int g = 0; g < p.generators; ++g) {
      const Index img =
          en.repr(en.table[static_cast<size_t>(old_a)][static_cast<size_t>(2 * g)]);
      result.action[static_cast<size_t>(g)][static_cast<size_t>(a)] =
          new_of[static_cast<size_t>(img)];
    }
  }
  return result;
}

Index CosetTable::apply_letter(Index coset, int letter) const {
  require(complete(), "IncompleteTable", "table is not complete");
  const int g = std::abs(letter) - 1;
  require(letter != 0 && g < static_cast<int>(action.size()), "BadWord",
          "letter out of range");
  const std::vector<Index>& perm = action[static_cast<size_t>(g)];
  if (letter > 0) return perm[static_cast<size_t>(coset)];
  for (Index c = 0; c < coset_count; ++c)
    if (perm[static_cast<size_t>(c)] == coset) return c;
  fail("InternalError", "generator action is not a permutation");
}

Index CosetTable::apply_word(Index coset, const Word& w) const {
  Index cur = coset;
  for (int letter : w) cur = apply_letter(cur, letter);
  return cur;
}

std::optional<CosetTable> group_order(const GroupPresentation& p,
                                      Index budget) {
  CosetTable t = todd_coxeter(p, {}, budget);
  if (!t.complete()) return std::nullopt;
  return t;
}

// ---- induced maps -----------------------------------------------------------

namespace {

Word image_of_walk(const SimplicialMap& f, const EdgeLabeling& target,
                   const std::vector<int>& walk) {
  Word w;
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    const int a = f.apply(walk[i]);
    const int b = f.apply(walk[i + 1]);
    if (a == b) continue;
    w = word_concat(w, target.edge_word(a, b));
  }
  return w;
}

}  // namespace

std::vector<Word> induced_homomorphism(const SimplicialMap& f,
                                       const EdgeLabeling& source,
                                       const EdgeLabeling& target) {
  require(f.source() == source.complex() && f.target() == target.complex(),
          "ComplexMismatch", "labelings do not match the map");
  require(f.apply(source.basepoint()) == target.basepoint(),
          "BasepointMismatch", "map does not respect basepoints");
  std::vector<Word> images;
  for (int g = 0; g < source.generator_count(); ++g) {
    auto [u, v] = source.generator_edge(g);
    std::vector<int> in = source.tree_path(u);
    in.push_back(v);
    Word w = image_of_walk(f, target, in);
    Word back = image_of_walk(f, target, source.tree_path(v));
    images.push_back(word_concat(w, word_inverse(back)));
  }
  return images;
}

}  // namespace sheafbn
