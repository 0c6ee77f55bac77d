#include "sheafbn/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sheafbn/errors.hpp"

namespace sheafbn {

namespace {

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return static_cast<long>(x.get_si());
  return x.get_str();
}

Json rat_to_json(const Rat& x) {
  if (x.get_den() == 1) return int_to_json(x.get_num());
  return x.get_str();
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  require(j.is_string(), "BadInput",
          "matrix entries must be integers or \"a/b\" strings");
  try {
    Rat x(j.get<std::string>());
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    fail("BadInput", "not a rational literal: " + j.get<std::string>());
  }
}

std::string simplex_key(const Simplex& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(s[i]);
  }
  return out;
}

Simplex simplex_from_key(const std::string& key) {
  Simplex s;
  std::stringstream in(key);
  std::string tok;
  while (std::getline(in, tok, '-')) {
    try {
      size_t used = 0;
      const int v = std::stoi(tok, &used);
      require(used == tok.size() && v >= 0, "BadInput",
              "bad vertex in simplex key: " + key);
      s.push_back(v);
    } catch (const std::logic_error&) {
      fail("BadInput", "bad vertex in simplex key: " + key);
    }
  }
  require(!s.empty(), "BadInput", "empty simplex key");
  return s;
}

const Json& field(const Json& j, const char* name) {
  require(j.is_object() && j.contains(name), "BadInput",
          std::string("missing field \"") + name + "\"");
  return j.at(name);
}

RingSpec ring_field(const Json& j) {
  const Json& r = field(j, "ring");
  require(r.is_string(), "BadInput", "\"ring\" must be a string");
  return RingSpec::parse(r.get<std::string>());
}

std::string scope_name(FoxScope scope) {
  return scope == FoxScope::exact ? "exact" : "presentation-complex-only";
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const RingSpec& ring, const Json& j) {
  require(j.is_array(), "BadInput", "a matrix is an array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const Json& r : j) {
    require(r.is_array(), "BadInput", "a matrix row is an array");
    std::vector<Rat> row;
    for (const Json& e : r) row.push_back(rat_from_json(e));
    require(rows.empty() || row.size() == rows.front().size(), "BadInput",
            "matrix rows have unequal lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(ring, 0, 0);
  return Matrix::from_rows(ring, rows);
}

Json to_json(const SimplicialComplex& x) {
  // A simplex is maximal when it is not a face of any higher simplex; the
  // face-closed family reconstructs from these.
  Json maximal = Json::array();
  for (int d = 0; d <= x.dimension(); ++d) {
    std::vector<bool> covered(static_cast<size_t>(x.count(d)), false);
    for (const Simplex& c : x.simplices(d + 1)) {
      Simplex face;
      for (size_t drop = 0; drop < c.size(); ++drop) {
        face.clear();
        for (size_t i = 0; i < c.size(); ++i)
          if (i != drop) face.push_back(c[i]);
        covered[static_cast<size_t>(x.index_of(face))] = true;
      }
    }
    for (Index i = 0; i < x.count(d); ++i)
      if (!covered[static_cast<size_t>(i)])
        maximal.push_back(x.simplices(d)[static_cast<size_t>(i)]);
  }
  return Json{{"maximal_simplices", std::move(maximal)},
              {"vertices", x.vertex_count()}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& v = field(j, "vertices");
  require(v.is_number_integer(), "BadInput", "\"vertices\" must be an integer");
  const Json& ms = field(j, "maximal_simplices");
  require(ms.is_array(), "BadInput", "\"maximal_simplices\" must be an array");
  std::vector<Simplex> maximal;
  for (const Json& s : ms) {
    require(s.is_array(), "BadInput", "a simplex is an array of vertices");
    Simplex simplex;
    for (const Json& e : s) {
      require(e.is_number_integer(), "BadInput", "vertices are integers");
      simplex.push_back(e.get<int>());
    }
    maximal.push_back(std::move(simplex));
  }
  return SimplicialComplex::from_maximal(v.get<int>(), maximal);
}

Json to_json(const FpModule& m) {
  Json torsion = Json::array();
  for (const Int& d : m.torsion()) torsion.push_back(int_to_json(d));
  return Json{{"free_rank", m.free_rank()},
              {"ring", m.ring().name()},
              {"torsion", std::move(torsion)}};
}

Json to_json(const GroupPresentation& p) {
  return Json{{"generators", p.generators}, {"relators", p.relators}};
}

Json to_json(const CellularSheaf& f) {
  const SimplicialComplex& x = f.complex();
  Json stalks = Json::object();
  for (int d = 0; d <= x.dimension(); ++d)
    for (const Simplex& s : x.simplices(d))
      stalks[simplex_key(s)] = f.stalk(s);
  Json restrictions = Json::object();
  for (int d = 0; d + 1 <= x.dimension(); ++d) {
    for (Index j = 0; j < x.count(d + 1); ++j) {
      const Simplex& c = x.simplices(d + 1)[static_cast<size_t>(j)];
      Simplex face;
      for (size_t drop = 0; drop < c.size(); ++drop) {
        face.clear();
        for (size_t i = 0; i < c.size(); ++i)
          if (i != drop) face.push_back(c[i]);
        const Matrix r = f.restriction(d, x.index_of(face), j);
        if (!r.is_zero())
          restrictions[simplex_key(face) + "->" + simplex_key(c)] = to_json(r);
      }
    }
  }
  return Json{{"restrictions", std::move(restrictions)},
              {"ring", f.ring().name()},
              {"stalks", std::move(stalks)}};
}

CellularSheaf sheaf_from_json(const SimplicialComplex& x, const Json& j) {
  CellularSheaf f(x, ring_field(j));
  const Json& stalks = field(j, "stalks");
  require(stalks.is_object(), "BadInput", "\"stalks\" must be an object");
  for (const auto& [key, val] : stalks.items()) {
    require(val.is_number_integer() && val.get<long long>() >= 0, "BadInput",
            "stalk ranks are nonnegative integers");
    f.set_stalk(simplex_from_key(key), val.get<Index>());
  }
  if (j.contains("restrictions")) {
    const Json& restr = j.at("restrictions");
    require(restr.is_object(), "BadInput", "\"restrictions\" must be an object");
    for (const auto& [key, val] : restr.items()) {
      const size_t arrow = key.find("->");
      require(arrow != std::string::npos, "BadInput",
              "restriction keys look like \"face->coface\": " + key);
      f.set_restriction(simplex_from_key(key.substr(0, arrow)),
                        simplex_from_key(key.substr(arrow + 2)),
                        matrix_from_json(f.ring(), val));
    }
  }
  return f;
}

Json to_json(const Representation& rho) {
  Json mats = Json::array();
  for (const Matrix& m : rho.matrices) mats.push_back(to_json(m));
  return Json{{"dimension", rho.dimension},
              {"matrices", std::move(mats)},
              {"ring", rho.ring.name()}};
}

Representation representation_from_json(const GroupPresentation& p,
                                        const Json& j) {
  const RingSpec ring = ring_field(j);
  const Json& dim = field(j, "dimension");
  require(dim.is_number_integer() && dim.get<long long>() >= 0, "BadInput",
          "\"dimension\" must be a nonnegative integer");
  const Json& ms = field(j, "matrices");
  require(ms.is_array(), "BadInput", "\"matrices\" must be an array");
  std::vector<Matrix> matrices;
  for (const Json& m : ms) matrices.push_back(matrix_from_json(ring, m));
  return make_representation(ring, dim.get<Index>(), p, std::move(matrices));
}

Json to_json(const Cover& c) {
  Json projection = Json::array();
  Json sheet = Json::array();
  for (int v = 0; v < c.total.vertex_count(); ++v) {
    projection.push_back(c.projection.apply(v));
    sheet.push_back(c.sheet_of(v));
  }
  return Json{{"projection", std::move(projection)},
              {"sheets", c.sheets()},
              {"total", to_json(c.total)},
              {"vertex_sheet", std::move(sheet)}};
}

Json to_json(const GModule& m) {
  Json action;
  if (m.action) {
    action = Json::array();
    for (const Matrix& a : *m.action) action.push_back(to_json(a));
  }
  return Json{{"action", std::move(action)},
              {"ring", m.ring.name()},
              {"underlying", to_json(m.underlying)}};
}

Json to_json(const AsphericityVerdict& v) {
  Json out = Json::object();
  switch (v.status) {
    case AsphericityVerdict::Status::aspherical: {
      out["status"] = "aspherical";
      out["certificate"] =
          v.certificate == AsphericityVerdict::Certificate::dimension_one
              ? "dimension-1"
              : "finite-cover-vanishing";
      if (v.certificate == AsphericityVerdict::Certificate::finite_cover_vanishing)
        out["checked_degrees"] = v.checked_degrees;
      break;
    }
    case AsphericityVerdict::Status::not_aspherical:
      out["status"] = "not-aspherical";
      out["witness_degree"] = v.witness_degree;
      if (v.witness) out["witness"] = to_json(*v.witness);
      break;
    case AsphericityVerdict::Status::unknown:
      out["status"] = "unknown";
      out["reason"] = v.reason;
      break;
  }
  return out;
}

Json to_json(const BNReport& r) {
  Json out = Json::object();
  out["asphericity"] = to_json(r.asphericity);
  if (r.condition3_skipped) {
    out["condition3_skipped"] = *r.condition3_skipped;
  } else {
    Json rows = Json::array();
    for (const Condition3Entry& e : r.condition3)
      rows.push_back(Json{{"degree", e.degree},
                          {"module", to_json(e.module)},
                          {"sheaf", e.sheaf},
                          {"vanished", e.vanished}});
    out["condition3"] = std::move(rows);
  }
  Json rows = Json::array();
  for (const Condition4Entry& e : r.condition4)
    rows.push_back(Json{{"agree", e.agree},
                        {"degree", e.degree},
                        {"group_side", to_json(e.group_side)},
                        {"rep", e.rep},
                        {"scope", scope_name(e.scope)},
                        {"sheaf_side", to_json(e.sheaf_side)}});
  out["condition4"] = std::move(rows);
  out["consistent"] = r.consistent;
  return out;
}

Json to_json(const E2Page& page) {
  Json entries = Json::array();
  for (const auto& row : page.entries) {
    Json cols = Json::array();
    for (const FpModule& m : row) cols.push_back(to_json(m));
    entries.push_back(std::move(cols));
  }
  Json abutment = Json::array();
  for (const FpModule& m : page.abutment) abutment.push_back(to_json(m));
  Json checks = Json::array();
  for (const E2Page::Check& c : page.checks)
    checks.push_back(Json{{"abutment_dim", c.abutment_dim},
                          {"collapsed", c.collapsed},
                          {"degree", c.degree},
                          {"dominates", c.dominates},
                          {"entry_sum", c.entry_sum}});
  return Json{{"abutment", std::move(abutment)},
              {"checks", std::move(checks)},
              {"entries", std::move(entries)},
              {"pmax", page.pmax},
              {"qmax", page.qmax}};
}

}  // namespace sheafbn
