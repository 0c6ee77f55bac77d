#include "sheafbn/covers.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "sheafbn/errors.hpp"

namespace sheafbn {

namespace {

Simplex lift_simplex(const EdgeLabeling& l, const CosetTable& t,
                     const Simplex& base_simplex, Index sheet) {
  const int v_base = l.complex().vertex_count();
  Simplex out;
  for (int v : base_simplex) {
    const Index s = t.apply_word(sheet, l.edge_word(base_simplex[0], v));
    out.push_back(static_cast<int>(s * v_base + v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Index Cover::total_vertex(Index sheet, int base_vertex) const {
  return sheet * labeling.complex().vertex_count() + base_vertex;
}

Index Cover::sheet_of(Index v) const {
  return v / labeling.complex().vertex_count();
}

Simplex Cover::lift(const Simplex& base_simplex, Index sheet) const {
  return lift_simplex(labeling, table, base_simplex, sheet);
}

Cover build_cover(const EdgeLabeling& l, const CosetTable& t) {
  require(t.complete(), "IncompleteTable",
          "cover construction needs a complete coset table");
  require(t.presentation == labeling_presentation(l), "PresentationMismatch",
          "coset table enumerates a different presentation");

  const SimplicialComplex& base = l.complex();
  const int v_base = base.vertex_count();

  std::vector<Simplex> lifted;
  for (int d = 0; d <= base.dimension(); ++d)
    for (const Simplex& s : base.simplices(d))
      for (Index sheet = 0; sheet < t.coset_count; ++sheet)
        lifted.push_back(lift_simplex(l, t, s, sheet));
  SimplicialComplex total = SimplicialComplex::from_all(
      v_base * static_cast<int>(t.coset_count), lifted);

  std::vector<int> down(static_cast<size_t>(total.vertex_count()));
  for (size_t v = 0; v < down.size(); ++v)
    down[v] = static_cast<int>(v) % v_base;
  SimplicialMap projection(total, base, std::move(down));
  return Cover{std::move(total), std::move(projection), l, t};
}

std::vector<SimplicialMap> deck_generators(const Cover& c) {
  const CosetTable& t = c.table;
  const Index n = t.coset_count;
  const int v_base = c.labeling.complex().vertex_count();

  std::vector<SimplicialMap> out;
  for (int g = 0; g < t.presentation.generators; ++g) {
    // Left multiplication by g on cosets, via shortest representatives.
    std::vector<Index> lam(static_cast<size_t>(n));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (Index coset = 0; coset < n; ++coset) {
      const Index image = t.apply_word(t.apply_letter(0, g + 1),
                                       t.coset_word[static_cast<size_t>(coset)]);
      lam[static_cast<size_t>(coset)] = image;
      seen[static_cast<size_t>(image)] = true;
    }
    // Well-defined left multiplications commute with the right action; that
    // fails exactly when the subgroup is not normal.
    bool regular =
        std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    for (Index coset = 0; regular && coset < n; ++coset)
      for (int x = 1; x <= t.presentation.generators; ++x)
        if (lam[static_cast<size_t>(t.apply_letter(coset, x))] !=
            t.apply_letter(lam[static_cast<size_t>(coset)], x)) {
          regular = false;
          break;
        }
    require(regular, "NotRegularCover",
            "generator " + std::to_string(g + 1) +
                " does not act on the sheets");

    std::vector<int> img(static_cast<size_t>(c.total.vertex_count()));
    for (Index coset = 0; coset < n; ++coset)
      for (int v = 0; v < v_base; ++v)
        img[static_cast<size_t>(c.total_vertex(coset, v))] =
            static_cast<int>(c.total_vertex(lam[static_cast<size_t>(coset)], v));
    out.emplace_back(c.total, c.total, std::move(img));
  }
  return out;
}

CellularSheaf pullback_sheaf(const Cover& c, const CellularSheaf& f) {
  require(f.complex() == c.labeling.complex(), "ComplexMismatch",
          "sheaf does not live on the base of the cover");
  CellularSheaf out(c.total, f.ring());

  for (int d = 0; d <= c.total.dimension(); ++d)
    for (const Simplex& s : c.total.simplices(d))
      out.set_stalk(s, f.stalk(c.projection.image(s)));

  for (int d = 1; d <= c.total.dimension(); ++d)
    for (const Simplex& s : c.total.simplices(d))
      for (size_t k = 0; k < s.size(); ++k) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        out.set_restriction(
            face, s,
            f.restriction(c.projection.image(face), c.projection.image(s)));
      }
  return out;
}

CellularSheaf pushforward_sheaf(const Cover& c, const CellularSheaf& g) {
  require(g.complex() == c.total, "ComplexMismatch",
          "sheaf does not live on the total space of the cover");
  const SimplicialComplex& base = c.labeling.complex();
  const Index n = c.sheets();
  CellularSheaf out(base, g.ring());

  // offset[s] of each lift's summand inside the stalk over a base simplex.
  auto offsets = [&](const Simplex& s) {
    std::vector<Index> off(static_cast<size_t>(n) + 1, 0);
    for (Index sheet = 0; sheet < n; ++sheet)
      off[static_cast<size_t>(sheet) + 1] =
          off[static_cast<size_t>(sheet)] + g.stalk(c.lift(s, sheet));
    return off;
  };

  for (int d = 0; d <= base.dimension(); ++d)
    for (const Simplex& s : base.simplices(d))
      out.set_stalk(s, offsets(s).back());

  for (int d = 1; d <= base.dimension(); ++d)
    for (const Simplex& s : base.simplices(d)) {
      const std::vector<Index> row_off = offsets(s);
      for (size_t k = 0; k < s.size(); ++k) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        const std::vector<Index> col_off = offsets(face);
        Matrix block(g.ring(), row_off.back(), col_off.back());
        for (Index sheet = 0; sheet < n; ++sheet) {
          // The face of this lift over `face` sits on the transported sheet.
          const Index fs =
              c.table.apply_word(sheet, c.labeling.edge_word(s[0], face[0]));
          block.add_block(row_off[static_cast<size_t>(sheet)],
                          col_off[static_cast<size_t>(fs)],
                          g.restriction(c.lift(face, fs), c.lift(s, sheet)));
        }
        out.set_restriction(face, s, std::move(block));
      }
    }
  return out;
}

}  // namespace sheafbn
