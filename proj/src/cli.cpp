#include "lgr/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lgr/chart.hpp"
#include "lgr/models.hpp"
#include "lgr/oracles.hpp"
#include "lgr/restriction.hpp"

namespace lgr::cli {

namespace {

struct RestrictArgs {
  int n = 0;
  std::string alpha;
  std::string beta;
  std::string theory = "H";
  std::string format = "pretty";
};

struct TableArgs {
  int n = 0;
  std::string theory = "H";
  std::string out = "csv";
  bool serial = false;
};

struct ModelArgs {
  std::string lambda;
  std::string mu;
  std::string model = "all";
  std::string format = "ascii";
};

struct RenderArgs {
  std::string lambda;
  std::string mu;
  std::string model = "subsets";
  std::string format = "svg";
  std::string rho;
  std::string out_dir;
  int index = 0;
};

struct ChartArgs {
  int n = 0;
  std::string beta;
  std::string format = "ascii";
};

struct VerifyArgs {
  int n = 2;
  std::vector<std::string> suites;
  bool corrupt = false;
  std::string format = "text";
  std::string report;
};

StrictPartition strict_arg(const std::string& text) { return StrictPartition(parse_parts(text)); }

nlohmann::json index_json(const IsotropicIndex& a) {
  return {{"labels", a.values()}, {"signed", format_signed(a)}, {"sigma", sigma(a).parts()}};
}

int cmd_restrict(const RestrictArgs& a, std::ostream& out) {
  const auto alpha = parse_isotropic(a.alpha, a.n);
  const auto beta = parse_isotropic(a.beta, a.n);
  const auto r = restrict_class(alpha, beta, parse_theory(a.theory));
  if (a.format == "json") {
    out << nlohmann::json{{"theory", theory_name(r.theory)},
                          {"alpha", index_json(alpha)},
                          {"beta", index_json(beta)},
                          {"term_count", r.term_count},
                          {"pretty", to_string(r.value)},
                          {"value", to_json(r.value)}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "theory:     " << theory_name(r.theory) << '\n'
      << "alpha:      " << format_signed(alpha) << "  sigma " << format_parts(sigma(alpha).parts()) << '\n'
      << "beta:       " << format_signed(beta) << "  sigma " << format_parts(sigma(beta).parts()) << '\n'
      << "term_count: " << r.term_count << '\n'
      << "value:      " << to_string(r.value) << '\n'
      << "json:       " << to_json(r.value).dump() << '\n';
  return kOk;
}

std::string csv_cell(const std::string& s) {
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Theory theory = parse_theory(a.theory);
  if (a.n < 1 || a.n > kMaxTableRank) {
    throw std::invalid_argument("table: n must be in 1.." + std::to_string(kMaxTableRank));
  }
  const auto t = a.serial ? restriction_table_serial(a.n, theory) : restriction_table(a.n, theory);
  if (a.out == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t ia = 0; ia < t.size(); ++ia) {
      nlohmann::json values = nlohmann::json::array();
      for (std::size_t ib = 0; ib < t.size(); ++ib) values.push_back(to_json(t.at(ia, ib)));
      rows.push_back({{"alpha", format_signed(t.points[ia])}, {"values", values}});
    }
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& p : t.points) cols.push_back(format_signed(p));
    out << nlohmann::json{{"n", t.n}, {"theory", theory_name(theory)}, {"columns", cols}, {"rows", rows}}.dump()
        << '\n';
    return kOk;
  }
  if (a.out != "csv") throw std::invalid_argument("table: --out must be csv or json");
  out << csv_cell("alpha\\beta");
  for (const auto& p : t.points) out << ',' << csv_cell(format_signed(p));
  out << '\n';
  for (std::size_t ia = 0; ia < t.size(); ++ia) {
    out << csv_cell(format_signed(t.points[ia]));
    for (std::size_t ib = 0; ib < t.size(); ++ib) out << ',' << csv_cell(to_string(t.at(ia, ib)));
    out << '\n';
  }
  return kOk;
}

nlohmann::json boxes_json(const std::set<Box>& boxes) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& b : boxes) j.push_back({b.row, b.col});
  return j;
}

// [{"row":1,"col":1,"entries":[1]}, ...] in row-major order.
nlohmann::json tableau_json(const SetValuedShiftedTableau& p) {
  nlohmann::json boxes = nlohmann::json::array();
  for (const auto& b : p.diagram().boxes()) boxes.push_back({{"row", b.row}, {"col", b.col}, {"entries", p.at(b)}});
  return boxes;
}

nlohmann::json family_json(const PathFamily& f) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& path : f.paths) {
    auto& p = paths.emplace_back(nlohmann::json::array());
    for (const auto& b : path) p.push_back({b.row, b.col});
  }
  return paths;
}

int cmd_models(const ModelArgs& a, std::ostream& out) {
  const auto lambda = strict_arg(a.lambda);
  const auto mu = strict_arg(a.mu);
  std::vector<ModelKind> kinds;
  if (a.model == "all") {
    kinds = {ModelKind::Tableaux, ModelKind::Subsets, ModelKind::Families};
  } else {
    kinds = {parse_model_kind(a.model)};
  }
  if (a.format == "json") {
    nlohmann::json j{{"lambda", lambda.parts()}, {"mu", mu.parts()}};
    for (auto k : kinds) {
      nlohmann::json items = nlohmann::json::array();
      const auto listing = enumerate_model(lambda, mu, k);
      if (const auto* ps = std::get_if<std::vector<SetValuedShiftedTableau>>(&listing)) {
        for (const auto& p : *ps) items.push_back(tableau_json(p));
      } else if (const auto* ds = std::get_if<std::vector<DiagramSubset>>(&listing)) {
        for (const auto& d : *ds) items.push_back(boxes_json(d.members));
      } else {
        for (const auto& f : std::get<std::vector<PathFamily>>(listing)) items.push_back(family_json(f));
      }
      j[model_kind_name(k)] = {{"count", items.size()}, {"items", items}};
    }
    out << j.dump() << '\n';
    return kOk;
  }
  if (a.format != "ascii") throw std::invalid_argument("models: --format must be ascii or json");
  for (auto k : kinds) {
    const auto listing = enumerate_model(lambda, mu, k);
    out << model_kind_name(k) << ": " << listing_size(listing) << '\n';
    std::visit(
        [&](const auto& items) {
          for (std::size_t i = 0; i < items.size(); ++i) {
            out << "[" << i << "]\n" << to_ascii(items[i]);
          }
        },
        listing);
  }
  return kOk;
}

std::string render_one(const ModelListing& listing, std::size_t i, bool svg) {
  return std::visit(
      [&](const auto& items) -> std::string {
        if (i >= items.size()) {
          throw std::invalid_argument("render: index " + std::to_string(i) + " out of range (" +
                                      std::to_string(items.size()) + " items)");
        }
        return svg ? to_svg(items[i]) : to_ascii(items[i]);
      },
      listing);
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
  if (a.format != "svg" && a.format != "ascii") throw std::invalid_argument("render: --format must be svg or ascii");
  const bool svg = a.format == "svg";
  if (!a.rho.empty()) {
    const Partition eta(parse_parts(a.rho));
    if (svg) {
      out << rho_svg(eta);
    } else {
      out << format_parts(eta.parts()) << " -> " << format_parts(rho(eta).parts()) << '\n';
    }
    return kOk;
  }
  if (a.lambda.empty() || a.mu.empty()) throw std::invalid_argument("render: need --lambda and --mu, or --rho");
  const auto listing = enumerate_model(strict_arg(a.lambda), strict_arg(a.mu), parse_model_kind(a.model));
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    const std::size_t count = listing_size(listing);
    for (std::size_t i = 0; i < count; ++i) {
      const auto path = std::filesystem::path(a.out_dir) / (a.model + "_" + std::to_string(i) + (svg ? ".svg" : ".txt"));
      std::ofstream f(path);
      if (!f) throw std::runtime_error("render: cannot write " + path.string());
      f << render_one(listing, i, svg);
      out << path.string() << '\n';
    }
    return kOk;
  }
  if (a.index < 0) throw std::invalid_argument("render: --index must be >= 0");
  out << render_one(listing, static_cast<std::size_t>(a.index), svg);
  return kOk;
}

int cmd_chart(const ChartArgs& a, std::ostream& out) {
  const auto beta = parse_isotropic(a.beta, a.n);
  const auto chart = chart_index_set(beta);
  const auto matrix = chart_matrix_pattern(beta);
  if (a.format == "json") {
    auto j = chart_json(chart);
    j["matrix"] = to_ascii(matrix);
    out << j.dump() << '\n';
    return kOk;
  }
  if (a.format != "ascii") throw std::invalid_argument("chart: --format must be ascii or json");
  out << "beta:  " << format_signed(beta) << "  labels " << format_parts(beta.values()) << '\n'
      << "R_beta (" << chart.pairs.size() << " coordinates):";
  for (const auto& [x, y] : chart.pairs) out << " (" << label_name(x, a.n) << "," << label_name(y, a.n) << ")";
  out << "\n\n" << to_ascii(matrix) << "\nweights: " << chart_json(chart)["coordinates"].dump() << '\n';
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  opts.n = a.n;
  opts.corrupt = a.corrupt;
  for (const auto& s : a.suites) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) opts.suites.insert(item);
    }
  }
  const auto report = run_verification(opts);
  if (a.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << summary(report);
  }
  if (!a.report.empty()) {
    std::ofstream f(a.report);
    if (!f) throw std::runtime_error("verify: cannot write " + a.report);
    f << to_json(report).dump(2) << '\n';
  }
  return report.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus-fixed-point restrictions of Schubert classes on the Lagrangian Grassmannian"};
  app.name("lgr");
  app.require_subcommand(1);

  RestrictArgs ra;
  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction of one Schubert class to one fixed point");
  restrict_cmd->add_option("--n", ra.n, "Rank")->required()->check(CLI::PositiveNumber);
  restrict_cmd->add_option("--alpha", ra.alpha, "Schubert index, e.g. 1,3,-2")->required();
  restrict_cmd->add_option("--beta", ra.beta, "Fixed point, e.g. 3,-2,-1")->required();
  restrict_cmd->add_option("--theory", ra.theory, "K or H")->check(CLI::IsMember({"K", "H", "k", "h"}));
  restrict_cmd->add_option("--format", ra.format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}));

  TableArgs ta;
  auto* table_cmd = app.add_subcommand("table", "Full table of restrictions, rows alpha, columns beta");
  table_cmd->add_option("--n", ta.n, "Rank")->required();
  table_cmd->add_option("--theory", ta.theory, "K or H")->check(CLI::IsMember({"K", "H", "k", "h"}));
  table_cmd->add_option("--out", ta.out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_flag("--serial", ta.serial, "Use the single-threaded kernel");

  ModelArgs ma;
  auto* models_cmd = app.add_subcommand("models", "List tableaux, subsets and path families");
  models_cmd->add_option("--lambda", ma.lambda, "Strict partition, e.g. 3,1")->required();
  models_cmd->add_option("--mu", ma.mu, "Strict partition, e.g. 5,3,2,1")->required();
  models_cmd->add_option("--model", ma.model, "tableaux, subsets, families or all")
      ->check(CLI::IsMember({"tableaux", "subsets", "families", "all"}));
  models_cmd->add_option("--format", ma.format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  RenderArgs rna;
  auto* render_cmd = app.add_subcommand("render", "Draw one model element, or the map rho");
  render_cmd->add_option("--lambda", rna.lambda, "Strict partition");
  render_cmd->add_option("--mu", rna.mu, "Strict partition");
  render_cmd->add_option("--model", rna.model, "tableaux, subsets or families")
      ->check(CLI::IsMember({"tableaux", "subsets", "families"}));
  render_cmd->add_option("--index", rna.index, "Element number, from 0");
  render_cmd->add_option("--format", rna.format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render_cmd->add_option("--out-dir", rna.out_dir, "Write every element to this directory");
  render_cmd->add_option("--rho", rna.rho, "Symmetric partition to draw next to its image, e.g. 5,3,2,1,1");

  ChartArgs ca;
  auto* chart_cmd = app.add_subcommand("chart", "Coordinates, matrix pattern and weights of the chart at beta");
  chart_cmd->add_option("--n", ca.n, "Rank")->required()->check(CLI::PositiveNumber);
  chart_cmd->add_option("--beta", ca.beta, "Fixed point, e.g. 1,-4,-3,-2 or 1,4,6,7")->required();
  chart_cmd->add_option("--format", ca.format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the formulas against independent oracles");
  verify_cmd->add_option("--n", va.n, "Rank (1..4)");
  verify_cmd->add_option("--suite", va.suites, "oracle, gkm, chern, positivity or all (repeatable)");
  verify_cmd->add_flag("--corrupt", va.corrupt, "Perturb one table entry (negative control)");
  verify_cmd->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--report", va.report, "Also write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*restrict_cmd) return cmd_restrict(ra, out);
    if (*table_cmd) return cmd_table(ta, out);
    if (*models_cmd) return cmd_models(ma, out);
    if (*render_cmd) return cmd_render(rna, out);
    if (*chart_cmd) return cmd_chart(ca, out);
    if (*verify_cmd) return cmd_verify(va, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace lgr::cli
