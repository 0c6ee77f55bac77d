#include "sheafbn/cellsheaf.hpp"

#include <algorithm>

#include "sheafbn/errors.hpp"
#include "sheafbn/linalg.hpp"

namespace sheafbn {
namespace {

// facets of s with the alternating incidence sign, in drop-position order
std::vector<std::pair<Simplex, int>> facets_signed(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  int sign = 1;
  for (size_t drop = 0; drop < s.size(); ++drop) {
    Simplex face;
    for (size_t i = 0; i < s.size(); ++i)
      if (i != drop) face.push_back(s[i]);
    out.emplace_back(std::move(face), sign);
    sign = -sign;
  }
  return out;
}

}  // namespace

CellularSheaf::CellularSheaf(SimplicialComplex complex, RingSpec ring)
    : complex_(std::move(complex)), ring_(std::move(ring)) {
  stalk_.resize(static_cast<size_t>(complex_.dimension()) + 1);
  restr_.resize(static_cast<size_t>(complex_.dimension()) + 1);
  for (int d = 0; d <= complex_.dimension(); ++d)
    stalk_[static_cast<size_t>(d)].assign(
        static_cast<size_t>(complex_.count(d)), 0);
}

Index CellularSheaf::stalk(int d, Index i) const {
  require(d >= 0 && d <= complex_.dimension() && i >= 0 &&
              i < complex_.count(d),
          "NotASimplex", "no simplex at that index");
  return stalk_[static_cast<size_t>(d)][static_cast<size_t>(i)];
}

Index CellularSheaf::stalk(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  return stalk(d, complex_.index_of(s));
}

void CellularSheaf::set_stalk(const Simplex& s, Index rank) {
  require(rank >= 0, "BadStalk", "negative stalk rank");
  const int d = static_cast<int>(s.size()) - 1;
  stalk_[static_cast<size_t>(d)][static_cast<size_t>(complex_.index_of(s))] =
      rank;
}

void CellularSheaf::check_incident(const Simplex& face,
                                   const Simplex& coface) const {
  require(face.size() + 1 == coface.size() &&
              std::includes(coface.begin(), coface.end(), face.begin(),
                            face.end()),
          "NotIncident", "face is not a facet of the coface");
}

Matrix CellularSheaf::restriction(int d, Index face, Index coface) const {
  const auto& layer = restr_[static_cast<size_t>(d)];
  auto it = layer.find({face, coface});
  if (it != layer.end()) return it->second;
  return Matrix(ring_, stalk(d + 1, coface), stalk(d, face));
}

Matrix CellularSheaf::restriction(const Simplex& face,
                                  const Simplex& coface) const {
  check_incident(face, coface);
  const int d = static_cast<int>(face.size()) - 1;
  return restriction(d, complex_.index_of(face), complex_.index_of(coface));
}

void CellularSheaf::set_restriction(const Simplex& face, const Simplex& coface,
                                    Matrix m) {
  check_incident(face, coface);
  require(m.ring() == ring_, "RingMismatch", "restriction ring mismatch");
  const int d = static_cast<int>(face.size()) - 1;
  restr_[static_cast<size_t>(d)][{complex_.index_of(face),
                                  complex_.index_of(coface)}] = std::move(m);
}

bool CellularSheaf::operator==(const CellularSheaf& other) const {
  if (complex_ != other.complex_ || ring_ != other.ring_ ||
      stalk_ != other.stalk_)
    return false;
  for (int d = 0; d < complex_.dimension(); ++d)
    for (const Simplex& s : complex_.simplices(d + 1)) {
      const Index j = complex_.index_of(s);
      for (const auto& [face, sign] : facets_signed(s)) {
        const Index i = complex_.index_of(face);
        if (restriction(d, i, j) != other.restriction(d, i, j)) return false;
      }
    }
  return true;
}

CellularSheaf constant_sheaf(const SimplicialComplex& x, const RingSpec& ring,
                             Index rank) {
  require(rank >= 0, "BadStalk", "negative rank");
  CellularSheaf f(x, ring);
  for (int d = 0; d <= x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d)) f.set_stalk(s, rank);
  const Matrix id = Matrix::identity(ring, rank);
  for (int d = 0; d < x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d + 1))
      for (const auto& [face, sign] : facets_signed(s))
        f.set_restriction(face, s, id);
  return f;
}

std::vector<SheafViolation> validate_sheaf(const CellularSheaf& f) {
  const SimplicialComplex& x = f.complex();
  std::vector<SheafViolation> out;
  // shape pass over all incidences
  for (int d = 0; d < x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d + 1))
      for (const auto& [face, sign] : facets_signed(s)) {
        const Matrix m = f.restriction(face, s);
        if (m.rows() != f.stalk(s) || m.cols() != f.stalk(face))
          out.push_back({face, s, "restriction shape mismatch"});
      }
  if (!out.empty()) return out;
  // codimension-2 squares commute
  for (int d = 2; d <= x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d)) {
      for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b) {
          Simplex tau, sigma_a, sigma_b;
          for (size_t i = 0; i < s.size(); ++i) {
            if (i != a && i != b) tau.push_back(s[i]);
            if (i != a) sigma_a.push_back(s[i]);
            if (i != b) sigma_b.push_back(s[i]);
          }
          const Matrix via_a = f.restriction(sigma_a, s) *
                               f.restriction(tau, sigma_a);
          const Matrix via_b = f.restriction(sigma_b, s) *
                               f.restriction(tau, sigma_b);
          if (via_a != via_b)
            out.push_back({tau, s, "codimension-2 composites differ"});
        }
    }
  return out;
}

bool is_locally_constant(const CellularSheaf& f) {
  require(validate_sheaf(f).empty(), "InvalidSheaf",
          "not a sheaf; run validate_sheaf for details");
  const SimplicialComplex& x = f.complex();
  const std::vector<int> comp = x.vertex_components();
  // one stalk rank per component
  std::vector<Index> rank_of(comp.size(), -1);
  for (int d = 0; d <= x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d)) {
      const size_t c = static_cast<size_t>(comp[static_cast<size_t>(s[0])]);
      const Index r = f.stalk(s);
      if (rank_of[c] < 0) rank_of[c] = r;
      if (rank_of[c] != r) return false;
    }
  for (int d = 0; d < x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d + 1))
      for (const auto& [face, sign] : facets_signed(s))
        if (!is_invertible(f.restriction(face, s))) return false;
  return true;
}

CochainComplex sheaf_cochain_complex(const CellularSheaf& f) {
  require(validate_sheaf(f).empty(), "InvalidSheaf",
          "not a sheaf; run validate_sheaf for details");
  const SimplicialComplex& x = f.complex();
  const int dim = x.dimension();
  std::vector<Index> dims(static_cast<size_t>(dim) + 1, 0);
  std::vector<std::vector<Index>> offset(static_cast<size_t>(dim) + 1);
  for (int d = 0; d <= dim; ++d) {
    offset[static_cast<size_t>(d)].resize(
        static_cast<size_t>(x.count(d)));
    Index acc = 0;
    for (Index i = 0; i < x.count(d); ++i) {
      offset[static_cast<size_t>(d)][static_cast<size_t>(i)] = acc;
      acc += f.stalk(d, i);
    }
    dims[static_cast<size_t>(d)] = acc;
  }
  std::vector<Matrix> diffs;
  for (int d = 0; d < dim; ++d) {
    Matrix delta(f.ring(), dims[static_cast<size_t>(d + 1)],
                 dims[static_cast<size_t>(d)]);
    for (const Simplex& s : x.simplices(d + 1)) {
      const Index j = x.index_of(s);
      for (const auto& [face, sign] : facets_signed(s)) {
        const Index i = x.index_of(face);
        Matrix block = f.restriction(d, i, j);
        if (sign < 0) block = -block;
        delta.add_block(offset[static_cast<size_t>(d + 1)][static_cast<size_t>(j)],
                        offset[static_cast<size_t>(d)][static_cast<size_t>(i)],
                        block);
      }
    }
    diffs.push_back(std::move(delta));
  }
  return CochainComplex(f.ring(), 0, std::move(dims), std::move(diffs));
}

FpModule sheaf_cohomology(const CellularSheaf& f, int n) {
  require(n >= 0, "DegreeOutOfRange", "negative cohomology degree");
  if (n > f.complex().dimension()) return FpModule::zero(f.ring());
  return cohomology_at(sheaf_cochain_complex(f), n);
}

CellularSheaf direct_sum(const CellularSheaf& f, const CellularSheaf& g) {
  require(f.complex() == g.complex(), "ComplexMismatch",
          "direct sum needs one complex");
  require(f.ring() == g.ring(), "RingMismatch", "direct sum ring mismatch");
  const SimplicialComplex& x = f.complex();
  CellularSheaf out(x, f.ring());
  for (int d = 0; d <= x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d))
      out.set_stalk(s, f.stalk(s) + g.stalk(s));
  for (int d = 0; d < x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d + 1))
      for (const auto& [face, sign] : facets_signed(s)) {
        const Matrix a = f.restriction(face, s);
        const Matrix b = g.restriction(face, s);
        Matrix block(f.ring(), a.rows() + b.rows(), a.cols() + b.cols());
        block.add_block(0, 0, a);
        block.add_block(a.rows(), a.cols(), b);
        out.set_restriction(face, s, std::move(block));
      }
  return out;
}

}  // namespace sheafbn
