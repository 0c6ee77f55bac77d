// Command line front end. Every verb reads JSON documents, computes with the
// library, and prints one JSON object (or a text rendering) to stdout.
//
// Exit codes: 0 success, 1 usage, 2 a consistency check failed,
// 3 bad input, 4 a budget or size cap stopped the computation.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sheafbn/bncheck.hpp"
#include "sheafbn/cellsheaf.hpp"
#include "sheafbn/covers.hpp"
#include "sheafbn/errors.hpp"
#include "sheafbn/fundgroup.hpp"
#include "sheafbn/groupcoh.hpp"
#include "sheafbn/json_io.hpp"
#include "sheafbn/localsys.hpp"
#include "sheafbn/simplicial.hpp"

namespace {

using namespace sheafbn;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitBudget = 4;

Index env_index(const char* name, Index fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0)
      fail("BadBudget", std::string(name) + " must be a positive integer");
    return static_cast<Index>(v);
  } catch (const std::logic_error&) {
    fail("BadBudget", std::string(name) + " must be a positive integer");
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "BadInput", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("BadInput", path + ": " + e.what());
  }
}

SimplicialComplex load_complex(const std::string& path) {
  return complex_from_json(load_json(path));
}

Representation load_representation(const GroupPresentation& p,
                                   const std::string& path) {
  Representation rho = representation_from_json(p, load_json(path));
  require(validate_representation(rho).empty(), "InvalidRepresentation",
          path + ": matrices do not satisfy the relators");
  return rho;
}

// Shared output plumbing: each verb fills a Json document and, for text
// mode, a rendering; emit() picks one.
struct Output {
  std::string format = "json";
  Json doc;
  std::string text;

  void emit() const {
    if (format == "json")
      std::cout << dump_canonical(doc) << "\n";
    else
      std::cout << text;
  }
};

std::string word_text(const Word& w) {
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream out;
  for (Index i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << Rat(m(i, j)).get_str();
    }
    out << "]\n";
  }
  if (m.rows() == 0) out << "    []\n";
  return out.str();
}

std::string scope_text(FoxScope s) {
  return s == FoxScope::exact ? "exact" : "presentation complex only";
}

std::string verdict_text(const AsphericityVerdict& v) {
  std::ostringstream out;
  switch (v.status) {
    case AsphericityVerdict::Status::aspherical: {
      out << "aspherical";
      if (v.certificate == AsphericityVerdict::Certificate::dimension_one)
        out << " (dimension 1)";
      else {
        out << " (cover homology vanishes in degrees";
        for (int d : v.checked_degrees) out << " " << d;
        out << ")";
      }
      break;
    }
    case AsphericityVerdict::Status::not_aspherical:
      out << "not aspherical: H_" << v.witness_degree
          << " of the universal cover is " << v.witness->to_string();
      break;
    case AsphericityVerdict::Status::unknown:
      out << "unknown: " << v.reason;
      break;
  }
  return out.str();
}

// One cohomology verb body shared by the sheaf, representation, and plain
// variants: all degrees 0..dim unless one degree was requested.
void emit_cohomology(Output& o, const std::string& label,
                     const std::optional<int>& degree, int top,
                     const std::function<FpModule(int)>& at) {
  std::ostringstream text;
  if (degree) {
    const FpModule m = at(*degree);
    o.doc = Json{{"degree", *degree}, {"module", to_json(m)}};
    text << label << "^" << *degree << ": " << m.to_string() << "\n";
  } else {
    Json mods = Json::array();
    for (int n = 0; n <= top; ++n) {
      const FpModule m = at(n);
      mods.push_back(to_json(m));
      text << label << "^" << n << ": " << m.to_string() << "\n";
    }
    o.doc = Json{{"cohomology", std::move(mods)}};
  }
  o.text = text.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact cohomology of sheaves on finite simplicial complexes"};
  app.require_subcommand(1);

  // Flags beat environment variables, environment variables beat defaults.
  const Index default_budget = env_index("SHEAFBN_BUDGET", 10000);
  const Index default_size_cap = env_index("SHEAFBN_SIZE_CAP", 20000);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string complex_path;
  std::string sheaf_path;
  std::vector<std::string> rep_paths;
  std::vector<std::string> sheaf_paths;
  std::string ring_name = "Z";
  std::optional<int> degree;
  int max_degree = 2;
  int basepoint = 0;
  int pmax = 2;
  int qmax = 2;
  Index budget = default_budget;
  Index size_cap = default_size_cap;

  const auto add_common = [&](CLI::App* sub, bool needs_complex = true) {
    if (needs_complex)
      sub->add_option("--complex", complex_path, "Complex JSON file")
          ->required();
    sub->add_option("--budget", budget, "Coset enumeration budget")
        ->capture_default_str();
    return sub;
  };

  CLI::App* homology_cmd = add_common(
      app.add_subcommand("homology", "Simplicial homology of a complex"));
  homology_cmd->add_option("--ring", ring_name, "Z, Q, or Z/p");
  homology_cmd->add_option("--degree", degree, "Single degree (default: all)");

  CLI::App* pi1_cmd = add_common(app.add_subcommand(
      "pi1", "Edge path presentation of the fundamental group"));
  pi1_cmd->add_option("--basepoint", basepoint, "Basepoint vertex")
      ->capture_default_str();

  CLI::App* cover_cmd = add_common(
      app.add_subcommand("cover", "Universal cover of a complex"));

  CLI::App* shcoh_cmd = add_common(app.add_subcommand(
      "sheaf-cohomology", "Cohomology of a cellular sheaf"));
  shcoh_cmd->add_option("--sheaf", sheaf_path, "Sheaf JSON file")->required();
  shcoh_cmd->add_option("--degree", degree, "Single degree (default: all)");

  std::string rep_path;
  CLI::App* repcoh_cmd = add_common(app.add_subcommand(
      "rep-cohomology", "Twisted cohomology of a local system"));
  repcoh_cmd->add_option("--rep", rep_path, "Representation JSON file")
      ->required();
  repcoh_cmd->add_option("--degree", degree, "Single degree (default: all)");
  repcoh_cmd->add_option("--basepoint", basepoint, "Basepoint vertex")
      ->capture_default_str();

  CLI::App* grpcoh_cmd = add_common(app.add_subcommand(
      "group-cohomology", "Cohomology of the fundamental group"));
  grpcoh_cmd->add_option("--rep", rep_path, "Representation JSON file")
      ->required();
  grpcoh_cmd->add_option("--max-degree", max_degree, "Top degree")
      ->capture_default_str();
  grpcoh_cmd->add_option("--size-cap", size_cap, "Bar complex size cap")
      ->capture_default_str();
  grpcoh_cmd->add_option("--basepoint", basepoint, "Basepoint vertex")
      ->capture_default_str();

  CLI::App* qc_cmd = add_common(app.add_subcommand(
      "qc", "Derived functors of the quasicoherator with deck action"));
  qc_cmd->add_option("--sheaf", sheaf_path, "Sheaf JSON file")->required();
  qc_cmd->add_option("--degree", degree, "Derived degree (default: 0)");
  qc_cmd->add_option("--basepoint", basepoint, "Basepoint vertex")
      ->capture_default_str();

  CLI::App* asph_cmd = add_common(
      app.add_subcommand("aspherical", "Decide asphericity through covers"));
  asph_cmd->add_option("--ring", ring_name, "Z, Q, or Z/p");

  CLI::App* bn_cmd = add_common(app.add_subcommand(
      "bn-check", "Cross check asphericity against its cohomological tests"));
  bn_cmd->add_option("--ring", ring_name, "Z, Q, or Z/p");
  bn_cmd->add_option("--max-degree", max_degree, "Top degree for conditions")
      ->capture_default_str();
  bn_cmd->add_option("--rep", rep_paths, "Sample representation files");
  bn_cmd->add_option("--sheaf", sheaf_paths, "Sample sheaf files");
  bn_cmd->add_option("--size-cap", size_cap, "Bar complex size cap")
      ->capture_default_str();
  bn_cmd->add_option("--basepoint", basepoint, "Basepoint vertex")
      ->capture_default_str();

  CLI::App* e2_cmd = add_common(app.add_subcommand(
      "e2-page", "Descent spectral sequence page against the abutment"));
  e2_cmd->add_option("--ring", ring_name, "Field: Q or Z/p");
  e2_cmd->add_option("--sheaf", sheaf_path,
                     "Sheaf JSON file (default: constant rank 1)");
  e2_cmd->add_option("--pmax", pmax, "Columns 0..pmax")->capture_default_str();
  e2_cmd->add_option("--qmax", qmax, "Rows 0..qmax")->capture_default_str();
  e2_cmd->add_option("--size-cap", size_cap, "Bar complex size cap")
      ->capture_default_str();
  e2_cmd->add_option("--basepoint", basepoint, "Basepoint vertex")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out;
  out.format = format;
  int exit_code = kExitOk;

  try {
    if (app.got_subcommand(homology_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const RingSpec ring = RingSpec::parse(ring_name);
      std::ostringstream text;
      if (degree) {
        const FpModule m = homology(x, *degree, ring);
        out.doc = Json{{"degree", *degree}, {"module", to_json(m)}};
        text << "H_" << *degree << ": " << m.to_string() << "\n";
      } else {
        Json mods = Json::array();
        for (int n = 0; n <= x.dimension(); ++n) {
          const FpModule m = homology(x, n, ring);
          mods.push_back(to_json(m));
          text << "H_" << n << ": " << m.to_string() << "\n";
        }
        out.doc = Json{{"homology", std::move(mods)}};
      }
      out.text = text.str();
    } else if (app.got_subcommand(pi1_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const auto [p, l] = presentation(x, basepoint);
      out.doc = to_json(p);
      out.doc["basepoint"] = basepoint;
      std::ostringstream text;
      text << "generators: " << p.generators << "\n";
      for (const Word& r : p.relators)
        text << "relator: " << word_text(r) << "\n";
      out.text = text.str();
    } else if (app.got_subcommand(cover_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const auto [p, l] = presentation(x, basepoint);
      const CosetTable t = todd_coxeter(p, {}, budget);
      require(t.complete(), "InfiniteOrUnknownGroup",
              "coset enumeration hit the budget of " + std::to_string(budget));
      const Cover c = build_cover(l, t);
      out.doc = to_json(c);
      std::ostringstream text;
      text << "sheets: " << c.sheets() << "\n"
           << "total vertices: " << c.total.vertex_count() << "\n";
      out.text = text.str();
    } else if (app.got_subcommand(shcoh_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const CellularSheaf f = sheaf_from_json(x, load_json(sheaf_path));
      emit_cohomology(out, "H", degree, x.dimension(),
                      [&](int n) { return sheaf_cohomology(f, n); });
    } else if (app.got_subcommand(repcoh_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const auto [p, l] = presentation(x, basepoint);
      const Representation rho = load_representation(p, rep_path);
      const CellularSheaf f = rep_to_sheaf(l, rho);
      emit_cohomology(out, "H", degree, x.dimension(),
                      [&](int n) { return sheaf_cohomology(f, n); });
    } else if (app.got_subcommand(grpcoh_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const auto [p, l] = presentation(x, basepoint);
      const Representation rho = load_representation(p, rep_path);
      Json entries = Json::array();
      std::ostringstream text;
      const std::optional<CosetTable> t = group_order(p, budget);
      if (t) {
        const FiniteGroup g = multiplication_table(*t);
        text << "group order: " << g.order << "\n";
        for (int n = 0; n <= max_degree; ++n) {
          const FpModule m = group_cohomology(g, rho, n, size_cap);
          entries.push_back(Json{{"degree", n},
                                 {"module", to_json(m)},
                                 {"scope", "exact"}});
          text << "H^" << n << ": " << m.to_string() << "\n";
        }
        out.doc = Json{{"entries", std::move(entries)}, {"method", "bar"}};
      } else {
        require(max_degree <= 2, "InfiniteOrUnknownGroup",
                "group did not enumerate within " + std::to_string(budget) +
                    " cosets; degrees above 2 are out of reach");
        for (int n = 0; n <= max_degree; ++n) {
          const FoxCohomology fc = fox_cohomology(rho, n);
          entries.push_back(
              Json{{"degree", n},
                   {"module", to_json(fc.value)},
                   {"scope", fc.scope == FoxScope::exact
                                 ? "exact"
                                 : "presentation-complex-only"}});
          text << "H^" << n << ": " << fc.value.to_string() << " ("
               << scope_text(fc.scope) << ")\n";
        }
        out.doc = Json{{"entries", std::move(entries)}, {"method", "fox"}};
      }
      out.text = text.str();
    } else if (app.got_subcommand(qc_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const auto [p, l] = presentation(x, basepoint);
      const CellularSheaf f = sheaf_from_json(x, load_json(sheaf_path));
      const GModule m =
          derived_quasicoherator(l, f, degree.value_or(0), budget);
      out.doc = to_json(m);
      out.doc["degree"] = degree.value_or(0);
      std::ostringstream text;
      text << "underlying: " << m.underlying.to_string() << "\n";
      if (m.action) {
        for (size_t g = 0; g < m.action->size(); ++g) {
          text << "generator " << g << " acts by\n"
               << matrix_text((*m.action)[g]);
        }
      } else {
        text << "action: not computed over this ring\n";
      }
      out.text = text.str();
    } else if (app.got_subcommand(asph_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const AsphericityVerdict v =
          asphericity_check(x, RingSpec::parse(ring_name), budget);
      out.doc = to_json(v);
      out.text = verdict_text(v) + "\n";
    } else if (app.got_subcommand(bn_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const RingSpec ring = RingSpec::parse(ring_name);
      const auto [p, l] = presentation(x, basepoint);
      std::vector<Representation> reps;
      for (const std::string& path : rep_paths)
        reps.push_back(load_representation(p, path));
      std::vector<CellularSheaf> sheaves;
      for (const std::string& path : sheaf_paths)
        sheaves.push_back(sheaf_from_json(x, load_json(path)));
      if (reps.empty())
        reps.push_back(make_representation(
            ring, 1, p,
            std::vector<Matrix>(static_cast<size_t>(p.generators),
                                Matrix::identity(ring, 1))));
      if (sheaves.empty()) sheaves.push_back(constant_sheaf(x, ring, 1));
      const BNReport r =
          bn_verdict(l, ring, reps, sheaves, max_degree, budget, size_cap);
      out.doc = to_json(r);
      std::ostringstream text;
      text << "asphericity: " << verdict_text(r.asphericity) << "\n";
      if (r.condition3_skipped) {
        text << "derived functor samples skipped: " << *r.condition3_skipped
             << "\n";
      } else {
        text << "derived functor samples:\n";
        for (const Condition3Entry& e : r.condition3)
          text << "  sheaf " << e.sheaf << " degree " << e.degree << ": "
               << e.module.to_string() << (e.vanished ? "" : "  <- nonzero")
               << "\n";
      }
      text << "group cohomology vs sheaf cohomology:\n";
      for (const Condition4Entry& e : r.condition4)
        text << "  rep " << e.rep << " degree " << e.degree << ": "
             << e.group_side.to_string() << " | " << e.sheaf_side.to_string()
             << (e.agree ? "  (agree, " : "  (DISAGREE, ")
             << scope_text(e.scope) << ")\n";
      text << "consistent: " << (r.consistent ? "yes" : "no") << "\n";
      out.text = text.str();
      if (!r.consistent) exit_code = kExitInconsistent;
    } else if (app.got_subcommand(e2_cmd)) {
      const SimplicialComplex x = load_complex(complex_path);
      const RingSpec ring = RingSpec::parse(ring_name);
      const auto [p, l] = presentation(x, basepoint);
      const CellularSheaf f = sheaf_path.empty()
                                  ? constant_sheaf(x, ring, 1)
                                  : sheaf_from_json(x, load_json(sheaf_path));
      const E2Page page = e2_page(l, f, pmax, qmax, budget, size_cap);
      out.doc = to_json(page);
      std::ostringstream text;
      for (int q = qmax; q >= 0; --q) {
        text << "q=" << q << " |";
        for (int pp = 0; pp <= pmax; ++pp)
          text << " "
               << page.entries[static_cast<size_t>(pp)][static_cast<size_t>(q)]
                      .to_string();
        text << "\n";
      }
      for (const E2Page::Check& c : page.checks) {
        text << "degree " << c.degree << ": entries " << c.entry_sum
             << " vs abutment " << c.abutment_dim << " ("
             << (c.dominates ? (c.collapsed ? "collapsed" : "strict")
                             : "VIOLATION")
             << ")\n";
      }
      out.text = text.str();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const std::string& code = e.code();
    if (code == "InfiniteOrUnknownGroup" || code == "IncompleteTable" ||
        code == "SizeCapExceeded")
      return kExitBudget;
    return kExitBadInput;
  }

  out.emit();
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
