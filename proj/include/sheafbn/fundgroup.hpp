#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sheafbn/simplicial.hpp"

namespace sheafbn {

// A word in free-group letters: +i stands for generator i-1, -i for its
// inverse (indices are 1-based so that negation is inversion).
using Word = std::vector<int>;

Word word_reduce(Word w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;  // freely reduced, nonempty

  bool operator==(const GroupPresentation& other) const {
    return generators == other.generators && relators == other.relators;
  }
};

// Validates letter ranges and free reduction; drops empty relators.
GroupPresentation make_presentation(int generators, std::vector<Word> relators);

/**
 * The edge-path data of a connected complex: a breadth-first spanning tree
 * from the basepoint (lowest-index neighbor first) and one generator per
 * non-tree edge, oriented from its lower to its higher vertex.
 *
 * Tree edges carry the empty word, so the holonomy of any loop is read off
 * by concatenating single letters at the non-tree edges it crosses.
 */
class EdgeLabeling {
 public:
  const SimplicialComplex& complex() const { return complex_; }
  int basepoint() const { return basepoint_; }
  int generator_count() const { return generator_count_; }

  bool is_tree_edge(int u, int v) const;
  // Word of the oriented step from vertex `from` to vertex `to`;
  // Error("NotAnEdge") when {from,to} is not an edge.
  Word edge_word(int from, int to) const;
  // The non-tree edge carrying generator g, as {low, high}.
  std::pair<int, int> generator_edge(int g) const;
  // Vertex sequence of the tree path basepoint -> v.
  std::vector<int> tree_path(int v) const;

 private:
  friend std::pair<GroupPresentation, EdgeLabeling> presentation(
      const SimplicialComplex& x, int basepoint);

  EdgeLabeling(SimplicialComplex complex, int basepoint,
               std::vector<int> parent, std::vector<int> generator_of,
               int generator_count)
      : complex_(std::move(complex)),
        basepoint_(basepoint),
        generator_count_(generator_count),
        parent_(std::move(parent)),
        generator_of_(std::move(generator_of)) {}

  SimplicialComplex complex_;
  int basepoint_;
  int generator_count_;
  std::vector<int> parent_;          // tree parent per vertex, -1 at basepoint
  std::vector<int> generator_of_;    // per edge index, generator or -1 (tree)
};

// Edge-path presentation of pi_1(X, basepoint): one generator per non-tree
// edge, one relator per triangle. Deterministic generator and relator order.
std::pair<GroupPresentation, EdgeLabeling> presentation(
    const SimplicialComplex& x, int basepoint);

// The presentation a labeling determines (same value presentation() paired
// it with); lets holders of a labeling alone recover the group data.
GroupPresentation labeling_presentation(const EdgeLabeling& l);

/**
 * Coset enumeration result. When status is complete, `action` holds one
 * permutation of {0..coset_count-1} per generator (coset 0 is the subgroup),
 * and `coset_word` a shortest representative word per coset; the numbering is
 * standardized by breadth-first order, so equal inputs give equal tables.
 */
struct CosetTable {
  GroupPresentation presentation;
  std::vector<Word> subgroup;
  enum class Status { complete, budget_exceeded };
  Status status = Status::budget_exceeded;
  Index coset_count = 0;
  std::vector<std::vector<Index>> action;
  std::vector<Word> coset_word;

  bool complete() const { return status == Status::complete; }
  Index apply_letter(Index coset, int letter) const;
  Index apply_word(Index coset, const Word& w) const;
};

// Todd-Coxeter enumeration of the cosets of <subgroup_words> in P, giving up
// once more than max_cosets cosets would be live at once.
CosetTable todd_coxeter(const GroupPresentation& p,
                        const std::vector<Word>& subgroup_words,
                        Index max_cosets);

// Enumerates over the trivial subgroup: a complete table proves |G| finite.
// nullopt means the budget ran out, which never asserts infiniteness.
std::optional<CosetTable> group_order(const GroupPresentation& p, Index budget);

// Image words of the source generators under a simplicial map respecting the
// basepoints: each non-tree source edge maps to the target word of its image
// loop (tree path in, edge image, tree path out).
std::vector<Word> induced_homomorphism(const SimplicialMap& f,
                                       const EdgeLabeling& source,
                                       const EdgeLabeling& target);

}  // namespace sheafbn
