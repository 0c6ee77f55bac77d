#include "sheafbn/groupcoh.hpp"

#include <string>
#include <utility>

#include "sheafbn/errors.hpp"
#include "sheafbn/linalg.hpp"

namespace sheafbn {

namespace {

void check_rep(const FiniteGroup& g, const Representation& rho) {
  require(rho.presentation == g.presentation, "PresentationMismatch",
          "representation belongs to a different presentation");
  require(validate_representation(rho).empty(), "InvalidRepresentation",
          "matrices do not satisfy the relators");
}

}  // namespace

Index FiniteGroup::inverse(Index a) const {
  for (Index b = 0; b < order; ++b)
    if (product[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) return b;
  fail("InternalError", "element without inverse");
}

FiniteGroup multiplication_table(const CosetTable& t) {
  require(t.complete(), "IncompleteTable",
          "multiplication needs a complete enumeration");
  require(t.subgroup.empty(), "NotTrivialSubgroupTable",
          "cosets are group elements only over the trivial subgroup");
  FiniteGroup g;
  g.presentation = t.presentation;
  g.order = t.coset_count;
  g.words = t.coset_word;
  g.product.assign(static_cast<size_t>(g.order),
                   std::vector<Index>(static_cast<size_t>(g.order)));
  for (Index a = 0; a < g.order; ++a)
    for (Index b = 0; b < g.order; ++b)
      g.product[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          t.apply_word(a, g.words[static_cast<size_t>(b)]);
  return g;
}

std::vector<Matrix> element_matrices(const FiniteGroup& g,
                                     const Representation& rho) {
  check_rep(g, rho);
  std::vector<Matrix> out;
  for (const Word& w : g.words) out.push_back(evaluate_word(rho, w));
  return out;
}

CochainComplex bar_complex(const FiniteGroup& g, const Representation& rho,
                           int max_degree, Index size_cap) {
  check_rep(g, rho);
  require(max_degree >= 0, "DegreeOutOfRange",
          "bar complex degree must be nonnegative");

  const Index n_el = g.order;
  const Index d = rho.dimension;
  std::vector<Index> dims;
  Index tuples = 1;
  for (int n = 0; n <= max_degree; ++n) {
    require(tuples * d <= size_cap, "SizeCapExceeded",
            "bar complex term of size " + std::to_string(tuples * d) +
                " exceeds the cap " + std::to_string(size_cap));
    dims.push_back(tuples * d);
    if (n < max_degree) tuples *= n_el;
  }

  const std::vector<Matrix> act = element_matrices(g, rho);
  const Matrix id = Matrix::identity(rho.ring, d);

  std::vector<Matrix> diffs;
  for (int n = 0; n + 1 <= max_degree; ++n) {
    Matrix delta(rho.ring, dims[static_cast<size_t>(n) + 1],
                 dims[static_cast<size_t>(n)]);
    // row tuples (g_1, ..., g_{n+1}) as a mixed-radix counter, g_1 major
    std::vector<Index> tuple(static_cast<size_t>(n) + 1, 0);
    const Index rows = d == 0 ? 0 : dims[static_cast<size_t>(n) + 1] / d;
    for (Index r = 0; r < rows; ++r) {
      // face col index: drop or merge entries of the tuple
      auto col_of = [&](const std::vector<Index>& face) {
        Index idx = 0;
        for (Index e : face) idx = idx * n_el + e;
        return idx * d;
      };
      std::vector<Index> face(tuple.begin() + 1, tuple.end());
      delta.add_block(r * d, col_of(face), act[static_cast<size_t>(tuple[0])]);
      int sign = -1;
      for (size_t i = 0; i + 1 < tuple.size(); ++i) {
        face = tuple;
        face[i] = g.product[static_cast<size_t>(tuple[i])]
                           [static_cast<size_t>(tuple[i + 1])];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        delta.add_block(r * d, col_of(face), sign > 0 ? id : -id);
        sign = -sign;
      }
      face.assign(tuple.begin(), tuple.end() - 1);
      delta.add_block(r * d, col_of(face), sign > 0 ? id : -id);

      for (size_t i = tuple.size(); i-- > 0;) {
        if (++tuple[i] < n_el) break;
        tuple[i] = 0;
      }
    }
    diffs.push_back(std::move(delta));
  }
  return CochainComplex(rho.ring, 0, std::move(dims), std::move(diffs));
}

FpModule group_cohomology(const FiniteGroup& g, const Representation& rho,
                          int n, Index size_cap) {
  require(n >= 0, "DegreeOutOfRange", "negative cohomology degree");
  return cohomology_at(bar_complex(g, rho, n + 1, size_cap), n);
}

FoxCohomology fox_cohomology(const Representation& rho, int n) {
  require(n >= 0 && n <= 2, "DegreeOutOfRange",
          "Fox complex covers degrees 0 to 2");
  require(validate_representation(rho).empty(), "InvalidRepresentation",
          "matrices do not satisfy the relators");

  const GroupPresentation& p = rho.presentation;
  const Index d = rho.dimension;
  const Index m = p.generators;
  const Index k = static_cast<Index>(p.relators.size());
  const Matrix id = Matrix::identity(rho.ring, d);

  Matrix d0(rho.ring, m * d, d);
  for (Index i = 0; i < m; ++i)
    d0.add_block(i * d, 0,
                 rho.matrices[static_cast<size_t>(i)] - id);

  // Fox derivative of each relator with respect to each generator: for a
  // prefix u followed by letter g the derivative picks up rho(u); for g^-1
  // it picks up -rho(u g^-1).
  Matrix d1(rho.ring, k * d, m * d);
  for (Index j = 0; j < k; ++j) {
    Matrix prefix = id;
    for (int letter : p.relators[static_cast<size_t>(j)]) {
      const Index i = static_cast<Index>(std::abs(letter)) - 1;
      if (letter > 0) {
        d1.add_block(j * d, i * d, prefix);
        prefix = prefix * rho.matrices[static_cast<size_t>(i)];
      } else {
        prefix = prefix * inverse(rho.matrices[static_cast<size_t>(i)]);
        d1.add_block(j * d, i * d, -prefix);
      }
    }
  }

  CochainComplex c(rho.ring, 0, {d, m * d, k * d}, {std::move(d0),
                                                    std::move(d1)});
  return FoxCohomology{cohomology_at(c, n),
                       n < 2 ? FoxScope::exact
                             : FoxScope::presentation_complex_only};
}

}  // namespace sheafbn
