#include "sheafbn/bncheck.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sheafbn/errors.hpp"
#include "sheafbn/linalg.hpp"

namespace sheafbn {

namespace {

SimplicialMap inverse_automorphism(const SimplicialMap& m) {
  std::vector<int> inv(static_cast<size_t>(m.source().vertex_count()), -1);
  for (int v = 0; v < m.source().vertex_count(); ++v)
    inv[static_cast<size_t>(m.apply(v))] = v;
  return SimplicialMap(m.target(), m.source(), std::move(inv));
}

// The universal cover with f pulled back over it, plus its cochain complex.
struct CoverData {
  Cover cover;
  CellularSheaf pulled;
  CochainComplex cochains;
};

CoverData pull_to_universal_cover(const EdgeLabeling& l,
                                  const CellularSheaf& f, Index budget) {
  require(f.complex() == l.complex(), "ComplexMismatch",
          "sheaf and labeling live on different complexes");
  const CosetTable t = todd_coxeter(labeling_presentation(l), {}, budget);
  require(t.complete(), "InfiniteOrUnknownGroup",
          "coset enumeration hit the budget of " + std::to_string(budget) +
              "; fundamental group unresolved");
  Cover c = build_cover(l, t);
  CellularSheaf pulled = pullback_sheaf(c, f);
  CochainComplex cochains = sheaf_cochain_complex(pulled);
  return CoverData{std::move(c), std::move(pulled), std::move(cochains)};
}

// Matrices of s -> s o phi_{g^-1} per generator g: the left deck action on
// degree-n cochains.
std::vector<Matrix> deck_cochain_action(const CoverData& cd, int n) {
  std::vector<Matrix> action;
  for (const SimplicialMap& d : deck_generators(cd.cover))
    action.push_back(cochain_pullback(cd.pulled, inverse_automorphism(d), n));
  return action;
}

}  // namespace

Matrix cochain_pullback(const CellularSheaf& f, const SimplicialMap& phi,
                        int n) {
  const SimplicialComplex& x = f.complex();
  require(phi.source() == x && phi.target() == x, "ComplexMismatch",
          "cochain pullback needs a self-map of the sheaf's complex");
  require(n >= 0 && n <= x.dimension(), "DegreeOutOfRange",
          "no cochains in degree " + std::to_string(n));

  const std::vector<Simplex>& simps = x.simplices(n);
  std::vector<Index> off(simps.size() + 1, 0);
  for (size_t i = 0; i < simps.size(); ++i)
    off[i + 1] = off[i] + f.stalk(n, static_cast<Index>(i));

  Matrix p(f.ring(), off.back(), off.back());
  for (size_t i = 0; i < simps.size(); ++i) {
    std::vector<int> mapped;
    for (int v : simps[i]) mapped.push_back(phi.apply(v));
    int sign = 1;
    for (size_t a = 0; a + 1 < mapped.size(); ++a)
      for (size_t b = a + 1; b < mapped.size(); ++b)
        if (mapped[a] > mapped[b]) sign = -sign;
    Simplex image(mapped.begin(), mapped.end());
    std::sort(image.begin(), image.end());
    const Index j = x.index_of(image);
    const Index d = f.stalk(n, static_cast<Index>(i));
    require(f.stalk(n, j) == d, "BadStalk",
            "cochain pullback needs matching stalks along the map");
    Matrix block = Matrix::identity(f.ring(), d);
    if (sign < 0) block = -block;
    p.add_block(off[i], off[static_cast<size_t>(j)], block);
  }
  return p;
}

GModule quasicoherator(const EdgeLabeling& l, const CellularSheaf& f,
                       Index budget) {
  const CoverData cd = pull_to_universal_cover(l, f, budget);
  // Global sections: the kernel of the first coboundary. Over Z the basis is
  // saturated, so the deck action solves integrally.
  const Matrix k = kernel_basis(cd.cochains.differential(0));
  std::vector<Matrix> action;
  for (const Matrix& p : deck_cochain_action(cd, 0)) {
    Matrix a(f.ring(), 0, 0);
    require(solve_exact(k, p * k, &a), "InternalError",
            "deck action does not preserve global sections");
    action.push_back(std::move(a));
  }
  return GModule{f.ring(), FpModule(f.ring(), k.cols(), {}),
                 std::move(action)};
}

GModule derived_quasicoherator(const EdgeLabeling& l, const CellularSheaf& f,
                               int degree, Index budget) {
  require(degree >= 0, "DegreeOutOfRange",
          "derived functors live in degrees >= 0");
  if (degree == 0) return quasicoherator(l, f, budget);

  // The universal cover of a connected 1-complex is a tree, and a locally
  // constant sheaf pulled back to a tree trivializes: positive-degree
  // cocycles integrate along the unique paths from any root. The answer is
  // zero without enumerating cosets, which keeps graphs with infinite
  // fundamental group (free of rank >= 1) in range.
  require(f.complex() == l.complex(), "ComplexMismatch",
          "sheaf and labeling live on different complexes");
  if (l.complex().dimension() <= 1 && is_locally_constant(f)) {
    std::optional<std::vector<Matrix>> action;
    if (f.ring().is_field())
      action.emplace(static_cast<size_t>(l.generator_count()),
                     Matrix(f.ring(), 0, 0));
    return GModule{f.ring(), FpModule::zero(f.ring()), std::move(action)};
  }

  const CoverData cd = pull_to_universal_cover(l, f, budget);
  const int top = cd.cover.total.dimension();
  if (degree > top) {
    std::optional<std::vector<Matrix>> action;
    if (f.ring().is_field())
      action.emplace(static_cast<size_t>(l.generator_count()),
                     Matrix(f.ring(), 0, 0));
    return GModule{f.ring(), FpModule::zero(f.ring()), std::move(action)};
  }

  FpModule h = cohomology_at(cd.cochains, degree);
  if (!f.ring().is_field())
    return GModule{f.ring(), std::move(h), std::nullopt};

  // Representatives: kernel columns completing the image to a basis of the
  // cocycles. The action of a deck generator on cohomology is the
  // representative block of its pullback, read off in the basis
  // (image | representatives).
  const Matrix z = kernel_basis(cd.cochains.differential(degree));
  const Matrix b = column_space_basis(cd.cochains.differential(degree - 1));
  const Index d = z.rows();
  Matrix span = b;
  Matrix reps(f.ring(), d, 0);
  for (Index j = 0; j < z.cols() && span.cols() < z.cols(); ++j) {
    Matrix cand = hstack(span, z.block(0, j, d, 1));
    if (rank(cand) > span.cols()) {
      reps = hstack(reps, z.block(0, j, d, 1));
      span = std::move(cand);
    }
  }
  require(reps.cols() == h.free_rank(), "InternalError",
          "cocycle representatives disagree with the cohomology rank");

  std::vector<Matrix> action;
  for (const Matrix& p : deck_cochain_action(cd, degree)) {
    Matrix coords(f.ring(), 0, 0);
    require(solve_exact(span, p * reps, &coords), "InternalError",
            "deck action does not preserve cocycles");
    action.push_back(coords.block(b.cols(), 0, reps.cols(), reps.cols()));
  }
  return GModule{f.ring(), std::move(h), std::move(action)};
}

AsphericityVerdict asphericity_check(const SimplicialComplex& x,
                                     const RingSpec& ring, Index budget) {
  require(x.is_connected(), "NotConnected",
          "asphericity is only decided for connected complexes");

  AsphericityVerdict v{AsphericityVerdict::Status::aspherical, std::nullopt,
                       {}, 0, std::nullopt, ""};
  if (x.dimension() <= 1) {
    v.certificate = AsphericityVerdict::Certificate::dimension_one;
    return v;
  }

  const auto [p, l] = presentation(x, 0);
  const CosetTable t = todd_coxeter(p, {}, budget);
  if (!t.complete()) {
    v.status = AsphericityVerdict::Status::unknown;
    v.reason = "coset enumeration hit the budget of " + std::to_string(budget) +
               "; fundamental group unresolved";
    return v;
  }

  // The universal cover is simply connected, so vanishing homology up to the
  // dimension forces contractibility, and a nonzero module is a witness
  // against asphericity either way.
  const Cover c = build_cover(l, t);
  for (int i = 1; i <= x.dimension(); ++i) {
    FpModule h = homology(c.total, i, ring);
    if (!h.is_zero()) {
      v.status = AsphericityVerdict::Status::not_aspherical;
      v.checked_degrees.clear();
      v.witness_degree = i;
      v.witness = std::move(h);
      return v;
    }
    v.checked_degrees.push_back(i);
  }
  v.certificate = AsphericityVerdict::Certificate::finite_cover_vanishing;
  return v;
}

BNReport bn_verdict(const EdgeLabeling& l, const RingSpec& ring,
                    const std::vector<Representation>& sample_reps,
                    const std::vector<CellularSheaf>& sample_sheaves,
                    int max_degree, Index budget, Index size_cap) {
  require(max_degree >= 0, "DegreeOutOfRange",
          "bn_verdict needs max_degree >= 0");
  for (const Representation& rho : sample_reps)
    require(rho.ring == ring, "RingMismatch",
            "sample representation ring differs from the report ring");
  for (const CellularSheaf& f : sample_sheaves)
    require(f.ring() == ring && f.complex() == l.complex(), "RingMismatch",
            "sample sheaf must live over the report ring on the labeled "
            "complex");

  BNReport report{asphericity_check(l.complex(), ring, budget), std::nullopt,
                  {}, {}, true};

  const CosetTable t = todd_coxeter(labeling_presentation(l), {}, budget);

  if (t.complete()) {
    for (size_t si = 0; si < sample_sheaves.size(); ++si)
      for (int i = 1; i <= max_degree; ++i) {
        GModule m = derived_quasicoherator(l, sample_sheaves[si], i, budget);
        const bool vanished = m.underlying.is_zero();
        report.condition3.push_back(
            Condition3Entry{si, i, std::move(m.underlying), vanished});
      }
  } else {
    report.condition3_skipped =
        "fundamental group unresolved within budget; derived functors over "
        "the universal cover are unavailable";
  }

  std::optional<FiniteGroup> g;
  if (t.complete()) g = multiplication_table(t);
  for (size_t ri = 0; ri < sample_reps.size(); ++ri) {
    const Representation& rho = sample_reps[ri];
    const CellularSheaf f = rep_to_sheaf(l, rho);
    for (int n = 0; n <= max_degree; ++n) {
      FpModule sheaf_side = sheaf_cohomology(f, n);
      FpModule group_side = FpModule::zero(ring);
      FoxScope scope = FoxScope::exact;
      if (g) {
        group_side = group_cohomology(*g, rho, n, size_cap);
      } else if (n <= 2) {
        FoxCohomology fox = fox_cohomology(rho, n);
        group_side = std::move(fox.value);
        scope = fox.scope;
      } else {
        continue;  // no honest group side available at all
      }
      const bool agree = modules_isomorphic(group_side, sheaf_side);
      report.condition4.push_back(Condition4Entry{
          ri, n, std::move(group_side), std::move(sheaf_side), scope, agree});
    }
  }

  bool c3_fail = false;
  for (const Condition3Entry& e : report.condition3)
    if (!e.vanished) c3_fail = true;
  bool c4_exact_fail = false;
  size_t c4_exact = 0;
  for (const Condition4Entry& e : report.condition4)
    if (e.scope == FoxScope::exact) {
      ++c4_exact;
      if (!e.agree) c4_exact_fail = true;
    }

  // A contradiction needs actual evidence: flagged rows prove nothing, and
  // an empty sample cannot contradict anything.
  const size_t evidence = report.condition3.size() + c4_exact;
  if (report.asphericity.status == AsphericityVerdict::Status::aspherical &&
      (c3_fail || c4_exact_fail))
    report.consistent = false;
  if (report.asphericity.status ==
          AsphericityVerdict::Status::not_aspherical &&
      evidence > 0 && !c3_fail && !c4_exact_fail)
    report.consistent = false;
  return report;
}

E2Page e2_page(const EdgeLabeling& l, const CellularSheaf& f, int pmax,
               int qmax, Index budget, Index size_cap) {
  require(f.ring().is_field(), "NonFieldRing",
          "the page is computed over a field");
  require(pmax >= 0 && qmax >= 0, "DegreeOutOfRange",
          "window corners must be nonnegative");
  require(f.complex() == l.complex(), "ComplexMismatch",
          "sheaf and labeling live on different complexes");

  const GroupPresentation p = labeling_presentation(l);
  const CosetTable t = todd_coxeter(p, {}, budget);
  require(t.complete(), "InfiniteOrUnknownGroup",
          "coset enumeration hit the budget of " + std::to_string(budget) +
              "; fundamental group unresolved");
  const FiniteGroup g = multiplication_table(t);

  E2Page page;
  page.pmax = pmax;
  page.qmax = qmax;
  page.entries.assign(static_cast<size_t>(pmax) + 1, {});
  for (int q = 0; q <= qmax; ++q) {
    GModule rq = derived_quasicoherator(l, f, q, budget);
    const Representation rep =
        make_representation(f.ring(), rq.underlying.free_rank(), p,
                            std::move(*rq.action));
    for (int pp = 0; pp <= pmax; ++pp)
      page.entries[static_cast<size_t>(pp)].push_back(
          group_cohomology(g, rep, pp, size_cap));
  }

  for (int n = 0; n <= pmax + qmax; ++n)
    page.abutment.push_back(sheaf_cohomology(f, n));

  // Bookkeeping only where the window holds the whole antidiagonal; entries
  // with q above the dimension vanish, so a shallow window still covers
  // every total degree up to pmax.
  const int dim = l.complex().dimension();
  for (int n = 0; n <= pmax + qmax; ++n) {
    if (n > pmax || std::min(n, dim) > qmax) continue;
    Index sum = 0;
    for (int q = 0; q <= std::min(n, qmax); ++q)
      sum += page.entries[static_cast<size_t>(n - q)][static_cast<size_t>(q)]
                 .free_rank();
    const Index ab = page.abutment[static_cast<size_t>(n)].free_rank();
    page.checks.push_back(E2Page::Check{n, sum, ab, sum >= ab, sum == ab});
  }
  return page;
}

}  // namespace sheafbn
