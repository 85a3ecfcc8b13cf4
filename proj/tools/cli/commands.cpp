#include "cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/formats.hpp"
#include "nilhodge/central_extension.hpp"
#include "nilhodge/exterior.hpp"
#include "nilhodge/lie_cohomology.hpp"
#include "nilhodge/minimal_model.hpp"
#include "nilhodge/transfer.hpp"

namespace nilhodge::cli {
namespace {

using io::Json;

struct Settings {
  bool json = false;
  std::size_t budget = Budget::kDefaultMaxDimension;
  std::size_t stages = 6;
  bool dual = false;
  bool hodge = false;
  std::string lie_path;
  std::string cup_path;
  std::string extension_path;
  std::string action_path;
};

// What a command produced. `flags` carries budget/stabilization state.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json flags = Json::object();
  std::ostringstream text;
  int code = kOk;
};

std::string joined(const std::vector<std::size_t>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

// "e0^e1 - 1/2*e1^e2", "0" when empty.
std::string combination(std::span<const Rational> coeffs, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (magnitude != Rational(1)) s += magnitude.to_string() + "*";
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> wedge2_names(const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  for (const auto& idx : wedge_basis(labels.size(), 2))
    names.push_back(labels[idx[0]] + "^" + labels[idx[1]]);
  return names;
}

std::vector<std::string> generator_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

void print_brackets(std::ostream& os, const LieAlgebra& algebra) {
  const auto entries = algebra.constants().entries();
  if (entries.empty()) os << "  abelian\n";
  for (const auto& b : entries) {
    os << "  [" << algebra.labels()[b.i] << "," << algebra.labels()[b.j]
       << "] = " << combination(b.value, algebra.labels()) << "\n";
  }
}

Json lie_input(const std::string& path, const LieAlgebra& algebra) {
  return Json{{"path", path}, {"algebra", io::to_json(algebra.constants())}};
}

// Aligned two-or-more column table; the first row is the header.
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line = " ";
    for (std::size_t c = 0; c < row.size(); ++c)
      line += " " + std::string(width[c] - row[c].size(), ' ') + row[c];
    os << line << "\n";
  }
}

void cmd_betti(const Settings& s, Report& r, std::ostream& err) {
  const Budget budget{s.budget};
  const LieAlgebra algebra = io::parse_lie(io::read_json_file(s.lie_path));
  r.inputs["lie"] = lie_input(s.lie_path, algebra);
  const auto betti = betti_numbers(algebra, budget);
  const bool nilpotent = is_nilpotent(algebra);
  if (!nilpotent) err << "warning: algebra is not nilpotent\n";

  long euler = 0;
  for (std::size_t k = 0; k < betti.size(); ++k)
    euler += (k % 2 ? -1 : 1) * static_cast<long>(betti[k]);
  r.results["betti"] = betti;
  r.results["euler_characteristic"] = euler;
  r.results["nilpotent"] = nilpotent;
  if (nilpotent) {
    const auto lcs = lower_central_series(algebra);
    r.results["nilpotency_class"] = lcs.nilpotency_class();
    r.results["lower_central_series"] = lcs.dims();
    r.text << "betti: " << joined(betti) << "; class " << lcs.nilpotency_class() << "\n";
  } else {
    r.results["nilpotency_class"] = nullptr;
    r.results["lower_central_series"] = nullptr;
    r.text << "betti: " << joined(betti) << "; class none\n";
  }
  for (std::size_t k = 0; k < betti.size(); ++k) r.text << "b" << k << " = " << betti[k] << "\n";
  if (nilpotent) r.text << "lower central series: " << joined(lower_central_series(algebra).dims()) << "\n";
  r.text << "euler characteristic: " << euler << "\n";
}

void cmd_lcs(const Settings& s, Report& r, std::ostream&) {
  const LieAlgebra algebra = io::parse_lie(io::read_json_file(s.lie_path));
  r.inputs["lie"] = lie_input(s.lie_path, algebra);
  const auto lcs = lower_central_series(algebra);
  const auto dims = lcs.dims();
  r.results["lower_central_series"] = dims;
  r.results["nilpotency_class"] = lcs.nilpotency_class();
  r.results["abelianization_dim"] = abelianization(algebra).dim();
  r.text << "lower central series: " << joined(dims) << "; class " << lcs.nilpotency_class() << "\n";
  std::vector<std::vector<std::string>> rows{{"i", "dim C^i", "dim C^i/C^(i+1)"}};
  for (std::size_t i = 0; i + 1 < dims.size(); ++i)
    rows.push_back({std::to_string(i + 1), std::to_string(dims[i]), std::to_string(dims[i] - dims[i + 1])});
  print_table(r.text, rows);
}

void cmd_formality(const Settings& s, Report& r, std::ostream&) {
  const LieAlgebra algebra = io::parse_lie(io::read_json_file(s.lie_path));
  r.inputs["lie"] = lie_input(s.lie_path, algebra);
  const FormalityReport f = is_one_formal(algebra, Budget{s.budget});
  r.results["h2_abelianization_dim"] = f.h2_abelianization_dim;
  r.results["image_dim"] = f.image_dim;
  r.results["h2_dim"] = f.h2_dim;
  r.results["one_formal"] = f.one_formal;
  r.text << "dim H2(L1) = " << f.h2_abelianization_dim << "\n"
         << "image dim = " << f.image_dim << "\n"
         << "dim H2(L) = " << f.h2_dim << "\n"
         << (f.one_formal ? "ONE-FORMAL" : "NOT ONE-FORMAL") << " (image " << f.image_dim << " of "
         << f.h2_dim << ")\n";
}

void cmd_minimal_model(const Settings& s, Report& r, std::ostream& err) {
  const CupData cup = io::parse_cup(io::read_json_file(s.cup_path));
  r.inputs["cup"] = Json{{"path", s.cup_path}, {"b1", cup.b1()}, {"b2", cup.b2()}, {"cup", io::to_json(cup.cup())}};
  const HirschTower tower = build_tower(cup, TowerOptions{s.stages, Budget{s.budget}});

  std::vector<std::size_t> sizes;
  for (const auto& st : tower.stages()) sizes.push_back(st.size());
  r.results["generators_per_stage"] = sizes;
  r.results["tower"] = io::to_json(tower);
  r.flags["stabilized"] = tower.stabilized();
  r.flags["budget_exceeded"] = tower.stop() == StopReason::BudgetExceeded;

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    r.text << "stage " << i + 1 << ": " << sizes[i] << " generators";
    if (i + 1 == sizes.size()) {
      switch (tower.stop()) {
        case StopReason::Stabilized: r.text << "; stabilized"; break;
        case StopReason::StageLimit: r.text << "; not stabilized"; break;
        case StopReason::BudgetExceeded: r.text << "; budget exceeded"; break;
      }
    }
    r.text << "\n";
  }
  const auto names = generator_names(tower.total_generators());
  for (const auto& st : tower.stages()) {
    for (std::size_t g = 0; g < st.size(); ++g) {
      const std::size_t index = st.first_generator + g;
      const std::vector<std::string> earlier(names.begin(), names.begin() + st.first_generator);
      r.text << "  d(" << names[index] << ") = " << combination(st.differentials[g], wedge2_names(earlier))
             << "\n";
    }
  }

  if (s.dual) {
    const LieTower lie = dual_lie_tower(tower);
    const Verdict roundtrip = roundtrip_check(tower);
    const Verdict central = central_kernels(lie);
    Json algebras = Json::array();
    for (std::size_t i = 0; i < lie.algebras.size(); ++i) {
      algebras.push_back(io::to_json(lie.algebras[i].constants()));
      r.text << "dual stage " << i + 1 << ": dim " << lie.algebras[i].dim() << "\n";
      print_brackets(r.text, lie.algebras[i]);
    }
    r.results["dual"] = algebras;
    r.results["roundtrip"] = roundtrip.ok;
    r.results["central_kernels"] = central.ok;
    r.text << "roundtrip: " << (roundtrip ? "pass" : "FAIL: " + roundtrip.message) << "\n";
    r.text << "central kernels: " << (central ? "pass" : "FAIL: " + central.message) << "\n";
  }

  if (tower.stop() == StopReason::BudgetExceeded) {
    err << "budget exceeded: next stage would exceed " << s.budget << "\n";
    r.code = kBudgetExceeded;
  }
}

std::string hodge_tuple(const HodgePiece& piece) {
  std::vector<std::size_t> h;
  for (int p = piece.weight; p >= 0; --p) h.push_back(piece.hodge_numbers.at({p, piece.weight - p}));
  return "(" + joined(h, ",") + ")";
}

void cmd_gysin(const Settings& s, Report& r, std::ostream&) {
  const Budget budget{s.budget};
  const ExtensionDatum datum = io::parse_extension(io::read_json_file(s.extension_path));
  r.inputs["extension"] = Json{{"path", s.extension_path},
                               {"rank", datum.rank()},
                               {"hodge_typed", datum.hodge_typed()},
                               {"cl", io::to_json(datum.cl())}};
  // Validate the Hodge type before doing any other work.
  if (s.hodge) gysin_mhs(datum, 0);

  const auto dims = gysin_dims(datum);
  const SurjectivityReport surj = h2ab_to_h2_surjectivity(datum);
  const Verdict nomizu = nomizu_crosscheck(datum, budget);
  r.results["dims"] = dims;
  r.results["h2_abelian_dim"] = surj.h2_abelian_dim;
  r.results["surjective"] = surj.surjective;
  r.results["nomizu"] = nomizu.ok;
  r.text << "H*: " << joined(dims) << "; surjective: " << (surj.surjective ? "yes" : "no")
         << "; nomizu: " << (nomizu ? "pass" : "FAIL");
  if (datum.rank() >= 1) {
    const CarlsonToledoReport ct = carlson_toledo_check(datum);
    r.results["carlson_toledo_nonzero"] = ct.nonzero;
    r.text << "; CT: " << (ct.nonzero ? "nonzero" : "ZERO");
  } else {
    r.results["carlson_toledo_nonzero"] = nullptr;
  }
  r.text << "\n";
  if (!nomizu) r.text << "nomizu mismatch: " << nomizu.message << "\n";

  if (s.hodge) {
    Json mhs = Json::array();
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const WeightGradedHodge graded = gysin_mhs(datum, k);
      mhs.push_back(io::to_json(graded));
      r.text << "H" << k << ":";
      if (graded.pieces.empty()) r.text << " 0";
      for (std::size_t i = 0; i < graded.pieces.size(); ++i) {
        const HodgePiece& piece = graded.pieces[i];
        r.text << (i ? "; " : " ") << "weight " << piece.weight << ", dim " << piece.dim << ", "
               << hodge_tuple(piece);
      }
      if (k == 2) r.text << "; " << (graded.is_pure_of_weight(2) ? "PURE" : "NOT PURE");
      r.text << "\n";
    }
    r.results["mhs"] = mhs;
    r.results["h2_pure"] = purity_check_h2(datum);
  }
}

LieAlgebra action_target(const Json& doc, const std::filesystem::path& action_path) {
  const Json& lie = doc.at("lie");
  if (lie.is_string()) {
    std::filesystem::path p = lie.get<std::string>();
    if (p.is_relative()) p = action_path.parent_path() / p;
    return io::parse_lie(io::read_json_file(p));
  }
  return io::parse_lie(lie);
}

void cmd_invariants(const Settings& s, Report& r, std::ostream&) {
  const Budget budget{s.budget};
  const LieAlgebra algebra = io::parse_lie(io::read_json_file(s.lie_path));
  const Json doc = io::read_json_file(s.action_path);
  if (!doc.is_object() || !doc.contains("elements")) throw InvalidInput("action: missing key \"elements\"");
  if (doc.contains("lie") && !(action_target(doc, s.action_path) == algebra))
    throw InvalidInput("action file names a different lie algebra");
  const FiniteGroupAction action(algebra, io::parse_group_elements(doc.at("elements"), algebra.dim()));
  r.inputs["lie"] = lie_input(s.lie_path, algebra);
  r.inputs["action"] = Json{{"path", s.action_path}, {"order", action.order()}};

  const auto invariant = invariant_dims(action, budget);
  const auto betti = betti_numbers(algebra, budget);
  r.results["invariant_dims"] = invariant;
  r.results["betti"] = betti;
  r.text << "invariant dims / betti: " << joined(invariant) << " / " << joined(betti) << "\n";
  std::vector<std::vector<std::string>> rows{{"k", "invariant", "betti"}};
  for (std::size_t k = 0; k < betti.size(); ++k)
    rows.push_back({std::to_string(k), std::to_string(invariant[k]), std::to_string(betti[k])});
  print_table(r.text, rows);
}

void emit(const Settings& s, Report& r, std::ostream& out) {
  if (!s.json) {
    out << r.text.str();
    return;
  }
  Json doc{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"flags", r.flags}};
  doc["flags"]["budget"] = s.budget;
  out << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Cohomology of nilpotent Lie algebras, 1-minimal models and central extensions", "nilhodge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", s.json, "Emit the machine-readable report");
  app.add_option("--budget", s.budget, "Largest exterior power dimension to materialize")
      ->check(CLI::PositiveNumber);

  auto* betti = app.add_subcommand("betti", "Betti numbers, nilpotency class, Euler characteristic");
  betti->add_option("lie", s.lie_path, "Lie algebra file")->required();
  auto* lcs = app.add_subcommand("lcs", "Lower central series");
  lcs->add_option("lie", s.lie_path, "Lie algebra file")->required();
  auto* formality = app.add_subcommand("formality", "1-formality test");
  formality->add_option("lie", s.lie_path, "Lie algebra file")->required();
  auto* model = app.add_subcommand("minimal-model", "1-minimal model tower of cup product data");
  model->add_option("cup", s.cup_path, "Cup product file")->required();
  model->add_option("--stages", s.stages, "Maximum number of stages")->check(CLI::PositiveNumber);
  model->add_flag("--dual", s.dual, "Print the dual Lie tower");
  auto* gysin = app.add_subcommand("gysin", "Cohomology of a Z-central extension");
  gysin->add_option("extension", s.extension_path, "Extension file")->required();
  gysin->add_flag("--hodge", s.hodge, "Weight-graded Hodge numbers");
  auto* invariants = app.add_subcommand("invariants", "Invariant cohomology under a finite group");
  invariants->add_option("lie", s.lie_path, "Lie algebra file")->required();
  invariants->add_option("action", s.action_path, "Group action file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  Report r;
  try {
    if (*betti) {
      r.command = "betti";
      cmd_betti(s, r, err);
    } else if (*lcs) {
      r.command = "lcs";
      cmd_lcs(s, r, err);
    } else if (*formality) {
      r.command = "formality";
      cmd_formality(s, r, err);
    } else if (*model) {
      r.command = "minimal-model";
      cmd_minimal_model(s, r, err);
    } else if (*gysin) {
      r.command = "gysin";
      cmd_gysin(s, r, err);
    } else {
      r.command = "invariants";
      cmd_invariants(s, r, err);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  emit(s, r, out);
  return r.code;
}

}  // namespace nilhodge::cli
