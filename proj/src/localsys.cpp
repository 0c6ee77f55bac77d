#include "sheafbn/localsys.hpp"

#include <string>
#include <utility>

#include "sheafbn/errors.hpp"
#include "sheafbn/linalg.hpp"

namespace sheafbn {

namespace {

// rho must use the presentation attached to the labeling; everything
// downstream (restriction words, holonomies) silently miscomputes otherwise.
void check_presentation(const EdgeLabeling& l, const Representation& rho) {
  require(rho.presentation == labeling_presentation(l), "PresentationMismatch",
          "representation presentation does not match the labeling");
}

}  // namespace

bool Representation::operator==(const Representation& other) const {
  return ring == other.ring && dimension == other.dimension &&
         presentation == other.presentation && matrices == other.matrices;
}

Representation make_representation(const RingSpec& ring, Index dimension,
                                   GroupPresentation presentation,
                                   std::vector<Matrix> matrices) {
  require(dimension >= 0, "InvalidRepresentation", "negative dimension");
  require(static_cast<int>(matrices.size()) == presentation.generators,
          "InvalidRepresentation",
          "expected " + std::to_string(presentation.generators) +
              " matrices, got " + std::to_string(matrices.size()));
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    const Matrix& m = matrices[g];
    require(m.ring() == ring, "InvalidRepresentation",
            "generator " + std::to_string(g + 1) + " has the wrong ring");
    require(m.rows() == dimension && m.cols() == dimension,
            "InvalidRepresentation",
            "generator " + std::to_string(g + 1) + " is not " +
                std::to_string(dimension) + "x" + std::to_string(dimension));
    require(is_invertible(m), "InvalidRepresentation",
            "generator " + std::to_string(g + 1) + " is not invertible");
  }
  return Representation{ring, dimension, std::move(presentation),
                        std::move(matrices)};
}

std::vector<std::size_t> validate_representation(const Representation& rho) {
  const Matrix id = Matrix::identity(rho.ring, rho.dimension);
  std::vector<std::size_t> failing;
  for (std::size_t i = 0; i < rho.presentation.relators.size(); ++i)
    if (evaluate_word(rho, rho.presentation.relators[i]) != id)
      failing.push_back(i);
  return failing;
}

Matrix evaluate_word(const Representation& rho, const Word& w) {
  Matrix out = Matrix::identity(rho.ring, rho.dimension);
  for (int letter : w) {
    require(letter != 0 && std::abs(letter) <= rho.presentation.generators,
            "BadWord", "letter " + std::to_string(letter) + " out of range");
    const Matrix& m = rho.matrices[static_cast<size_t>(std::abs(letter)) - 1];
    out = out * (letter > 0 ? m : inverse(m));
  }
  return out;
}

CellularSheaf rep_to_sheaf(const EdgeLabeling& l, const Representation& rho) {
  check_presentation(l, rho);
  require(validate_representation(rho).empty(), "InvalidRepresentation",
          "matrices do not satisfy the relators");

  const SimplicialComplex& x = l.complex();
  CellularSheaf f(x, rho.ring);
  for (int d = 0; d <= x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d)) f.set_stalk(s, rho.dimension);

  // Transport along a path multiplies the per-edge inverses right to left,
  // so anchoring each restriction at rho of the word from the coface minimum
  // to the face minimum makes loop transport rho(loop)^-1: relators die
  // exactly when rho satisfies them.
  for (int d = 1; d <= x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d))
      for (size_t k = 0; k < s.size(); ++k) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        f.set_restriction(face, s,
                          evaluate_word(rho, l.edge_word(s[0], face[0])));
      }
  return f;
}

Representation sheaf_to_rep(const EdgeLabeling& l, const CellularSheaf& f) {
  require(f.complex() == l.complex(), "ComplexMismatch",
          "sheaf and labeling live on different complexes");
  require(is_locally_constant(f), "NotLocallyConstant",
          "sheaf is not locally constant");

  const SimplicialComplex& x = f.complex();
  const Index dim = f.stalk(Simplex{l.basepoint()});

  // Holonomy across an edge, in the direction u -> v.
  auto holonomy = [&](int u, int v) {
    Simplex e{std::min(u, v), std::max(u, v)};
    return inverse(f.restriction(Simplex{v}, e)) * f.restriction(Simplex{u}, e);
  };

  // Transport along the spanning tree: T[v] carries the stalk at v to the
  // stalk at the basepoint.
  std::vector<Matrix> transport(static_cast<size_t>(x.vertex_count()),
                                Matrix(f.ring(), 0, 0));
  for (int v = 0; v < x.vertex_count(); ++v) {
    const std::vector<int> path = l.tree_path(v);
    Matrix t = Matrix::identity(f.ring(), dim);
    for (size_t i = 1; i < path.size(); ++i)
      t = t * inverse(holonomy(path[i - 1], path[i]));
    transport[static_cast<size_t>(v)] = std::move(t);
  }

  // Loop transport composes right to left, so it reverses word order; the
  // inverse of the based loop through each generator edge is what multiplies
  // like the group does.
  std::vector<Matrix> mats;
  for (int g = 0; g < l.generator_count(); ++g) {
    const auto [u, v] = l.generator_edge(g);
    mats.push_back(inverse(transport[static_cast<size_t>(v)] * holonomy(u, v) *
                           inverse(transport[static_cast<size_t>(u)])));
  }

  Representation rho = make_representation(f.ring(), dim,
                                           labeling_presentation(l),
                                           std::move(mats));
  require(validate_representation(rho).empty(), "InternalError",
          "extracted monodromy violates a relator");
  return rho;
}

InvariantsReport invariants_match(const EdgeLabeling& l,
                                  const Representation& rho) {
  const int n = rho.presentation.generators;
  Matrix stacked(rho.ring, static_cast<Index>(n) * rho.dimension,
                 rho.dimension);
  const Matrix id = Matrix::identity(rho.ring, rho.dimension);
  for (int g = 0; g < n; ++g)
    stacked.add_block(static_cast<Index>(g) * rho.dimension, 0,
                      rho.matrices[static_cast<size_t>(g)] - id);

  FpModule invariants(rho.ring, kernel_basis(stacked).cols(), {});
  FpModule h0 = sheaf_cohomology(rep_to_sheaf(l, rho), 0);
  const bool equal = modules_isomorphic(invariants, h0);
  return InvariantsReport{std::move(invariants), std::move(h0), equal};
}

Representation pullback_rep(const GroupPresentation& source,
                            const std::vector<Word>& images,
                            const Representation& rho) {
  require(static_cast<int>(images.size()) == source.generators,
          "BadPresentation",
          "expected " + std::to_string(source.generators) +
              " generator images, got " + std::to_string(images.size()));
  std::vector<Matrix> mats;
  for (const Word& w : images) mats.push_back(evaluate_word(rho, w));
  Representation out =
      make_representation(rho.ring, rho.dimension, source, std::move(mats));
  const std::vector<std::size_t> bad = validate_representation(out);
  require(bad.empty(), "RelatorViolation",
          bad.empty() ? ""
                      : "source relator " + std::to_string(bad.front()) +
                            " does not map to the identity");
  return out;
}

}  // namespace sheafbn
