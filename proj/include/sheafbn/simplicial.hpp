#pragma once

#include <vector>

#include "sheafbn/fpmodule.hpp"
#include "sheafbn/matrix.hpp"

namespace sheafbn {

// Vertices in strictly increasing order; the increasing order also fixes the
// orientation used by every boundary and coboundary sign in the library.
using Simplex = std::vector<int>;

/**
 * A finite abstract simplicial complex on vertices 0..n-1.
 *
 * Simplices are stored per dimension in lexicographic order, closed under
 * taking faces, with every vertex required to appear. This canonical storage
 * makes simplex indices (and hence all matrices built from them)
 * deterministic.
 */
class SimplicialComplex {
 public:
  // Downward closure of the given simplices. Every vertex 0..vertex_count-1
  // must occur in some simplex.
  static SimplicialComplex from_maximal(int vertex_count,
                                        const std::vector<Simplex>& maximal);

  // Accepts an already face-closed family (order and duplicates forgiven).
  static SimplicialComplex from_all(int vertex_count,
                                    const std::vector<Simplex>& simplices);

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  // All d-simplices in lexicographic order; empty list outside 0..dimension.
  const std::vector<Simplex>& simplices(int d) const;
  Index count(int d) const {
    return static_cast<Index>(simplices(d).size());
  }

  bool has(const Simplex& s) const;
  // Position of s within its dimension's list; Error("NotASimplex") if absent.
  Index index_of(const Simplex& s) const;

  // Boundary map C_d -> C_{d-1} with alternating signs on sorted vertices.
  Matrix boundary_matrix(int d, const RingSpec& ring) const;

  Index euler_characteristic() const;

  bool is_connected() const;
  // Connected component id per vertex, numbered by first appearance.
  std::vector<int> vertex_components() const;

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && by_dim_ == other.by_dim_;
  }
  bool operator!=(const SimplicialComplex& other) const {
    return !(*this == other);
  }

 private:
  SimplicialComplex() = default;

  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
};

// H_n(X; ring) in canonical form. Degrees outside 0..dim X are rejected.
FpModule homology(const SimplicialComplex& x, int n, const RingSpec& ring);

/**
 * A simplicial map given by its action on vertices. Construction validates
 * that the image of every simplex spans a simplex of the target after
 * collapsing repeated image vertices.
 */
class SimplicialMap {
 public:
  SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                std::vector<int> vertex_images);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  int apply(int vertex) const { return images_[static_cast<size_t>(vertex)]; }

  // Image simplex (sorted, deduplicated).
  Simplex image(const Simplex& s) const;

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<int> images_;
};

}  // namespace sheafbn
