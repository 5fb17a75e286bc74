#include "conevex/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "conevex/convexity.hpp"
#include "conevex/efficiency.hpp"
#include "conevex/error.hpp"
#include "conevex/instance_json.hpp"
#include "conevex/oracles.hpp"
#include "conevex/saddle.hpp"
#include "conevex/suite.hpp"

namespace conevex {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Errors that report the outcome of a legitimate check rather than bad input.
bool is_check_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InfeasibleLabel:
    case ErrorCode::EmptyFeasibleSet:
    case ErrorCode::NotWeaklyEfficient:
    case ErrorCode::HypothesisViolation:
    case ErrorCode::NonPositiveOperator:
    case ErrorCode::NotInterior:
    case ErrorCode::NotNormalized:
    case ErrorCode::OracleDisagreement:
      return true;
    default:
      return false;
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ValidationError, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

Vec parse_csv_rats(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

json verdict_to_json(const ConvexityVerdict& v) {
  json j;
  j["verdict"] = v.verified_on_grid ? "verified_on_grid" : "refuted";
  j["skipped"] = v.skipped;
  if (v.certificate) {
    json c;
    c["x1"] = v.certificate->x1;
    c["x2"] = v.certificate->x2;
    c["alpha"] = rat_str(v.certificate->alpha);
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }
  json cells = json::array();
  for (const auto& cell : v.cells) {
    json jc;
    jc["x1"] = cell.key.x1;
    jc["x2"] = cell.key.x2;
    jc["alpha"] = rat_str(cell.key.alpha);
    jc["state"] = cell_state_name(cell.state);
    if (cell.state == CellState::Verified) {
      jc["x3"] = cell.witness_x3;
      jc["tau"] = rat_str(cell.tau);
    }
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  return j;
}

std::string verdict_text(const ConvexityVerdict& v) {
  std::ostringstream os;
  if (v.verified_on_grid) {
    os << "verified-on-grid";
    if (v.skipped) os << " (" << v.skipped << " cells skipped)";
  } else {
    os << "refuted at (" << v.certificate->x1 << ", " << v.certificate->x2
       << ", " << rat_str(v.certificate->alpha) << ")";
  }
  return os.str();
}

json saddle_report_to_json(const SaddleCheckReport& r) {
  json j;
  j["is_saddle"] = r.is_saddle;
  j["condition_i"] = r.condition_i;
  j["condition_ii"] = r.condition_ii;
  j["condition_iii"] = r.condition_iii;
  j["ybar"] = vec_to_json(r.ybar);
  j["zbar"] = vec_to_json(r.zbar);
  return j;
}

json scalar_saddle_to_json(const ScalarSaddleReport& r) {
  json j;
  j["is_saddle"] = r.is_saddle;
  j["feasible_label"] = r.feasible_label;
  j["right_inequality"] = r.right_ok;
  j["left_inequality"] = r.left_ok;
  j["eta_annihilates_g"] = r.eta_annihilates;
  j["zeta_annihilates_h"] = r.zeta_annihilates;
  j["g_within_neg_cone"] = r.g_within_neg_cone;
  j["h_only_zero"] = r.h_only_zero;
  return j;
}

std::uint64_t default_seed(std::uint64_t flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("CONEVEX_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      fail(ErrorCode::ValidationError, "CONEVEX_SEED is not an integer");
    }
  }
  return 0;
}

int cmd_classify(const std::string& path, int grid_n,
                 const std::string& json_path) {
  const auto file = load_instance_file(path);
  const auto& inst = file.instance;
  const AlphaGrid grid(grid_n);

  const auto f_pre = is_preconvexlike(inst.f, inst.y_plus, grid);
  const auto f_cvl = is_convexlike(inst.f, inst.y_plus, grid);
  const auto f_cvx = is_cone_convex(inst.f, inst.y_plus, grid, inst.domain);
  const auto g_pre = is_preconvexlike(inst.g, inst.z_plus, grid);
  const auto g_cvl = is_convexlike(inst.g, inst.z_plus, grid);
  const auto h_aff = is_preaffine(inst.h, grid);

  std::cout << "grid N=" << grid_n << "\n"
            << "f preconvexlike: " << verdict_text(f_pre) << "\n"
            << "f convexlike:    " << verdict_text(f_cvl) << "\n"
            << "f cone-convex:   " << verdict_text(f_cvx) << "\n"
            << "g preconvexlike: " << verdict_text(g_pre) << "\n"
            << "g convexlike:    " << verdict_text(g_cvl) << "\n"
            << "h preaffine:     " << verdict_text(h_aff) << "\n";
  if (!json_path.empty()) {
    json j;
    j["grid"] = grid_n;
    j["f"] = {{"preconvexlike", verdict_to_json(f_pre)},
              {"convexlike", verdict_to_json(f_cvl)},
              {"cone_convex", verdict_to_json(f_cvx)}};
    j["g"] = {{"preconvexlike", verdict_to_json(g_pre)},
              {"convexlike", verdict_to_json(g_cvl)}};
    j["h"] = {{"preaffine", verdict_to_json(h_aff)}};
    write_json(json_path, j);
  }
  return kExitPass;
}

int cmd_feasible(const std::string& path, const std::string& json_path) {
  const auto inst = load_instance_file(path).instance;
  const auto d = feasible_set(inst);
  std::cout << "feasible set (" << d.labels.size() << "):";
  for (const auto& l : d.labels) std::cout << ' ' << l;
  std::cout << "\n";
  if (!json_path.empty()) {
    json j;
    j["feasible"] = d.labels;
    write_json(json_path, j);
  }
  return kExitPass;
}

int cmd_efficient(const std::string& path, const std::string& json_path) {
  const auto inst = load_instance_file(path).instance;
  const auto witnesses = weakly_efficient(inst);
  std::cout << "weakly efficient solutions (" << witnesses.size() << "):\n";
  for (const auto& w : witnesses)
    std::cout << "  (" << w.label << ", " << vec_str(w.ybar) << ")\n";
  if (!json_path.empty()) {
    json arr = json::array();
    for (const auto& w : witnesses) {
      json jw;
      jw["label"] = w.label;
      jw["ybar"] = vec_to_json(w.ybar);
      arr.push_back(std::move(jw));
    }
    json j;
    j["witnesses"] = std::move(arr);
    write_json(json_path, j);
  }
  return kExitPass;
}

int cmd_scalarize(const std::string& path, const std::string& label,
                  const std::string& json_path) {
  const auto inst = load_instance_file(path).instance;
  const auto cert = scalarize(inst, label);
  json j;
  if (cert) {
    std::cout << "certificate: xi = " << vec_str(cert->xi) << ", ybar = "
              << vec_str(cert->ybar) << "\n";
    j["found"] = true;
    j["xi"] = vec_to_json(cert->xi);
    j["label"] = cert->label;
    j["ybar"] = vec_to_json(cert->ybar);
  } else {
    std::cout << "no scalarization certificate for '" << label << "'\n";
    j["found"] = false;
  }
  if (!json_path.empty()) write_json(json_path, j);
  return cert ? kExitPass : kExitCheckFailed;
}

int cmd_alt(const std::string& path, bool check_hypotheses, int grid_n,
            const std::string& json_path) {
  const auto inst = load_instance_file(path).instance;
  const auto rep = verify_alternative(inst, check_hypotheses, AlphaGrid(grid_n));

  std::cout << "system (i) solutions (" << rep.system_i_solutions.size()
            << "):";
  for (const auto& l : rep.system_i_solutions) std::cout << ' ' << l;
  std::cout << "\n";
  auto show = [](const char* name, const std::optional<Multipliers>& m) {
    std::cout << name << ": ";
    if (m)
      std::cout << "xi = " << vec_str(m->xi) << ", eta = " << vec_str(m->eta)
                << ", zeta = " << vec_str(m->zeta) << "\n";
    else
      std::cout << "none\n";
  };
  show("system (ii) solution", rep.system_ii_solution);
  show("system (ii) with xi != 0", rep.xi_nonzero_solution);
  std::cout << "implications: (i) empty => (ii) solvable: "
            << (rep.implication_checks.first ? "holds" : "FAILS")
            << "; xi != 0 solution => (i) empty: "
            << (rep.implication_checks.second ? "holds" : "FAILS") << "\n";
  bool ok = rep.implication_checks.first && rep.implication_checks.second;
  if (rep.hypotheses) {
    std::cout << "hypotheses: f "
              << (rep.hypotheses->f_preconvexlike.verified_on_grid ? "ok" : "refuted")
              << ", g "
              << (rep.hypotheses->g_preconvexlike.verified_on_grid ? "ok" : "refuted")
              << ", h "
              << (rep.hypotheses->h_preaffine.verified_on_grid ? "ok" : "refuted")
              << "\n";
    ok = ok && !rep.hypotheses->violated;
  }
  if (!json_path.empty()) {
    json j;
    j["system_i"] = rep.system_i_solutions;
    j["system_ii"] = rep.system_ii_solution
                         ? multipliers_to_json(*rep.system_ii_solution)
                         : json(nullptr);
    j["xi_nonzero"] = rep.xi_nonzero_solution
                          ? multipliers_to_json(*rep.xi_nonzero_solution)
                          : json(nullptr);
    j["implications"] = {rep.implication_checks.first,
                         rep.implication_checks.second};
    if (rep.hypotheses) {
      json h;
      h["violated"] = rep.hypotheses->violated;
      h["f_preconvexlike"] = verdict_to_json(rep.hypotheses->f_preconvexlike);
      h["g_preconvexlike"] = verdict_to_json(rep.hypotheses->g_preconvexlike);
      h["h_preaffine"] = verdict_to_json(rep.hypotheses->h_preaffine);
      j["hypotheses"] = std::move(h);
    } else {
      j["hypotheses"] = nullptr;
    }
    write_json(json_path, j);
  }
  return ok ? kExitPass : kExitCheckFailed;
}

OperatorPair operators_for(const InstanceFile& file,
                           const std::string& operators_path) {
  const auto& inst = file.instance;
  if (!operators_path.empty()) {
    std::ifstream in(operators_path);
    if (!in)
      fail(ErrorCode::ParseError, "cannot open '" + operators_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    json root;
    try {
      root = json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCode::ParseError, e.what());
    }
    const json block = root.contains("operators") ? root["operators"] : root;
    OperatorPair pair;
    pair.S = zero_operator(inst.dim_y, inst.dim_z);
    pair.T = zero_operator(inst.dim_y, inst.dim_w);
    auto read = [&](const char* key, LinearOperator& op) {
      if (!block.contains(key)) return;
      const json& rows = block[key];
      if (!rows.is_array() || static_cast<int>(rows.size()) != op.out_dim)
        fail(ErrorCode::ParseError, std::string("operator ") + key +
                                        " must have one row per Y coordinate");
      for (int i = 0; i < op.out_dim; ++i) {
        Vec row = vec_from_json(rows[i]);
        if (static_cast<int>(row.size()) != op.in_dim)
          fail(ErrorCode::ParseError, std::string("operator ") + key +
                                          " row width mismatch");
        op.rows[i] = std::move(row);
      }
    };
    read("S", pair.S);
    read("T", pair.T);
    return pair;
  }
  if (file.operators) return *file.operators;
  return {zero_operator(inst.dim_y, inst.dim_z),
          zero_operator(inst.dim_y, inst.dim_w)};
}

int cmd_saddle(const std::string& path, const std::string& label,
               const std::string& operators_path,
               const std::string& json_path) {
  const auto file = load_instance_file(path);
  const auto pair = operators_for(file, operators_path);
  const auto rep = vector_saddle_check(file.instance, label, pair);
  std::cout << "vector saddle point at '" << label << "': "
            << (rep.is_saddle ? "yes" : "no") << "\n"
            << "  (i) minimal anchor:  " << (rep.condition_i ? "yes" : "no")
            << "\n  (ii) feasibility:    " << (rep.condition_ii ? "yes" : "no")
            << "\n  (iii) max side:      " << (rep.condition_iii ? "yes" : "no")
            << "\n  ybar = " << vec_str(rep.ybar)
            << ", zbar = " << vec_str(rep.zbar) << "\n";
  if (!json_path.empty()) write_json(json_path, saddle_report_to_json(rep));
  return rep.is_saddle ? kExitPass : kExitCheckFailed;
}

int cmd_scalar_saddle(const std::string& path, const std::string& label,
                      const std::string& xi_csv, const std::string& eta_csv,
                      const std::string& zeta_csv,
                      const std::string& json_path) {
  const auto file = load_instance_file(path);
  const auto& inst = file.instance;
  const Vec xi = parse_csv_rats(xi_csv);
  Vec eta = eta_csv.empty() ? zero_vec(inst.dim_z) : parse_csv_rats(eta_csv);
  Vec zeta = zeta_csv.empty() ? zero_vec(inst.dim_w) : parse_csv_rats(zeta_csv);
  const auto rep = scalar_saddle_check(inst, xi, label, eta, zeta);
  std::cout << "scalar saddle point at '" << label << "': "
            << (rep.is_saddle ? "yes" : "no") << "\n"
            << "  right inequality: " << (rep.right_ok ? "holds" : "fails")
            << "\n  eta(g(xbar)) = {0}: " << (rep.eta_annihilates ? "yes" : "no")
            << "\n  zeta(h(xbar)) = {0}: "
            << (rep.zeta_annihilates ? "yes" : "no")
            << "\n  g(xbar) within -Z_plus: "
            << (rep.g_within_neg_cone ? "yes" : "no")
            << "\n  h(xbar) = {O}: " << (rep.h_only_zero ? "yes" : "no")
            << "\n";
  if (!json_path.empty()) write_json(json_path, scalar_saddle_to_json(rep));
  return rep.is_saddle ? kExitPass : kExitCheckFailed;
}

int cmd_construct(const std::string& path, const std::string& label,
                  const std::string& json_path) {
  const auto inst = load_instance_file(path).instance;
  const auto sc = construct_vector_saddle(inst, label);
  json j;
  if (!sc) {
    std::cout << "construction failed: no anchor point or no nonzero-xi "
                 "multipliers\n";
    j["constructed"] = false;
    if (!json_path.empty()) write_json(json_path, j);
    return kExitCheckFailed;
  }
  std::cout << "vector construction at '" << label << "':\n"
            << "  ybar = " << vec_str(sc->ybar) << "\n"
            << "  xi = " << vec_str(sc->multipliers.xi)
            << ", eta = " << vec_str(sc->multipliers.eta)
            << ", zeta = " << vec_str(sc->multipliers.zeta) << "\n"
            << "  y0 = " << vec_str(sc->y0) << "\n"
            << "  saddle check: " << (sc->check.is_saddle ? "passes" : "FAILS")
            << ", O in S(g(xbar)): " << (sc->zero_in_s_image ? "yes" : "no")
            << "\n";
  j["constructed"] = true;
  j["label"] = sc->label;
  j["ybar"] = vec_to_json(sc->ybar);
  j["multipliers"] = multipliers_to_json(sc->multipliers);
  j["y0"] = vec_to_json(sc->y0);
  j["S"] = operator_to_json(sc->pair.S);
  j["T"] = operator_to_json(sc->pair.T);
  j["check"] = saddle_report_to_json(sc->check);
  j["zero_in_s_image"] = sc->zero_in_s_image;

  bool ok = sc->check.is_saddle && sc->zero_in_s_image;
  const auto m = construct_scalar_multipliers(inst, label);
  if (m) {
    const auto check = scalar_saddle_check(inst, m->xi, label, m->eta, m->zeta);
    std::cout << "scalar multipliers: xi = " << vec_str(m->xi)
              << ", eta = " << vec_str(m->eta) << ", zeta = "
              << vec_str(m->zeta) << "\n  scalar saddle check: "
              << (check.is_saddle ? "passes" : "FAILS") << "\n";
    j["scalar_multipliers"] = multipliers_to_json(*m);
    j["scalar_check"] = scalar_saddle_to_json(check);
    ok = ok && check.is_saddle;
  } else {
    j["scalar_multipliers"] = nullptr;
    ok = false;
  }
  if (!json_path.empty()) write_json(json_path, j);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_gen(const std::string& family, std::uint64_t seed, bool seed_given,
            int grid_n, const std::string& out_path) {
  GeneratorConfig cfg;
  cfg.family = family_from_name(family);
  cfg.seed = default_seed(seed, seed_given);
  cfg.grid_n = grid_n;
  const auto inst = gen_random_instance(cfg);
  const std::string text = serialize_instance(inst);
  std::ofstream out(out_path);
  if (!out) fail(ErrorCode::ValidationError, "cannot write '" + out_path + "'");
  out << text;
  std::cout << "wrote " << family_name(cfg.family) << " instance (seed "
            << cfg.seed << ") to " << out_path << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& family, std::uint64_t seed, bool seed_given,
               int count, int jobs, int grid_n, const std::string& json_path) {
  SuiteConfig cfg;
  cfg.gen.family = family_from_name(family);
  cfg.gen.seed = default_seed(seed, seed_given);
  cfg.gen.grid_n = grid_n;
  cfg.count = count;
  cfg.jobs = jobs;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = run_suite(cfg);
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  std::cout << suite_report_text(rep);
  std::cerr << "elapsed " << elapsed << " s\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out)
      fail(ErrorCode::ValidationError, "cannot write '" + json_path + "'");
    out << suite_report_json_text(rep);
  }
  return rep.all_passed() ? kExitPass : kExitCheckFailed;
}

int cmd_oracle(const std::string& path, const std::string& json_path) {
  const auto inst = load_instance_file(path).instance;
  const auto rep = brute_oracles(inst);
  std::cout << "oracle agreement: pmin yes, pmax yes, weak efficiency "
            << (rep.weak_efficiency_checked ? "yes" : "skipped (empty feasible set)")
            << ",\n  tau intervals yes (" << rep.tau_cells << " cells, "
            << rep.tau_samples << " samples), system (ii) "
            << (rep.system_ii_checked ? "yes" : "skipped (multiplier space too large)")
            << "\n";
  if (!json_path.empty()) {
    json j;
    j["pmin"] = rep.pmin_ok;
    j["pmax"] = rep.pmax_ok;
    j["weak_efficiency"] = rep.weak_efficiency_ok;
    j["weak_efficiency_checked"] = rep.weak_efficiency_checked;
    j["tau_intervals"] = rep.tau_ok;
    j["tau_cells"] = rep.tau_cells;
    j["tau_samples"] = rep.tau_samples;
    j["system_ii"] = rep.system_ii_ok;
    j["system_ii_checked"] = rep.system_ii_checked;
    write_json(json_path, j);
  }
  return rep.all_ok() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"exact verification workbench for set-valued vector "
               "optimization over polyhedral cones"};
  app.require_subcommand(1);

  std::string file, label, json_path, operators_path, xi_csv, eta_csv, zeta_csv;
  std::string family = "FREE", out_path;
  std::uint64_t seed = 0;
  int grid_n = 8, count = 1, jobs = 1;
  bool check_hypotheses = false;

  auto* classify = app.add_subcommand("classify", "convexity verdicts");
  classify->add_option("file", file)->required();
  classify->add_option("--grid", grid_n)->check(CLI::PositiveNumber);
  classify->add_option("--json", json_path);

  auto* feasible = app.add_subcommand("feasible", "list the feasible set");
  feasible->add_option("file", file)->required();
  feasible->add_option("--json", json_path);

  auto* efficient =
      app.add_subcommand("efficient", "weakly efficient solutions");
  efficient->add_option("file", file)->required();
  efficient->add_option("--json", json_path);

  auto* scalarize_cmd =
      app.add_subcommand("scalarize", "scalarization certificate for a label");
  scalarize_cmd->add_option("file", file)->required();
  scalarize_cmd->add_option("--label", label)->required();
  scalarize_cmd->add_option("--json", json_path);

  auto* alt = app.add_subcommand("alt", "alternative-theorem systems");
  alt->add_option("file", file)->required();
  alt->add_flag("--check-hypotheses", check_hypotheses);
  alt->add_option("--grid", grid_n)->check(CLI::PositiveNumber);
  alt->add_option("--json", json_path);

  auto* saddle_cmd =
      app.add_subcommand("saddle", "vector saddle-point check for a label");
  saddle_cmd->add_option("file", file)->required();
  saddle_cmd->add_option("--label", label)->required();
  saddle_cmd->add_option("--operators", operators_path);
  saddle_cmd->add_option("--json", json_path);

  auto* scalar_saddle_cmd = app.add_subcommand(
      "scalar-saddle", "scalar Lagrangian saddle-point check");
  scalar_saddle_cmd->add_option("file", file)->required();
  scalar_saddle_cmd->add_option("--label", label)->required();
  scalar_saddle_cmd->add_option("--xi", xi_csv)->required();
  scalar_saddle_cmd->add_option("--eta", eta_csv);
  scalar_saddle_cmd->add_option("--zeta", zeta_csv);
  scalar_saddle_cmd->add_option("--json", json_path);

  auto* construct =
      app.add_subcommand("construct", "saddle operator and multiplier "
                                      "constructions at a label");
  construct->add_option("file", file)->required();
  construct->add_option("--label", label)->required();
  construct->add_option("--json", json_path);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--family", family);
  auto* gen_seed = gen->add_option("--seed", seed);
  gen->add_option("--grid", grid_n)->check(CLI::PositiveNumber);
  gen->add_option("-o,--output", out_path)->required();

  auto* verify = app.add_subcommand("verify", "run a theorem property suite");
  verify->add_option("--family", family);
  auto* verify_seed = verify->add_option("--seed", seed);
  verify->add_option("--count", count)->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--grid", grid_n)->check(CLI::PositiveNumber);
  verify->add_option("--json", json_path);

  auto* oracle = app.add_subcommand("oracle", "brute-force oracle agreement");
  oracle->add_option("file", file)->required();
  oracle->add_option("--json", json_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return kExitPass;
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(file, grid_n, json_path);
    if (feasible->parsed()) return cmd_feasible(file, json_path);
    if (efficient->parsed()) return cmd_efficient(file, json_path);
    if (scalarize_cmd->parsed()) return cmd_scalarize(file, label, json_path);
    if (alt->parsed()) return cmd_alt(file, check_hypotheses, grid_n, json_path);
    if (saddle_cmd->parsed())
      return cmd_saddle(file, label, operators_path, json_path);
    if (scalar_saddle_cmd->parsed())
      return cmd_scalar_saddle(file, label, xi_csv, eta_csv, zeta_csv,
                               json_path);
    if (construct->parsed()) return cmd_construct(file, label, json_path);
    if (gen->parsed())
      return cmd_gen(family, seed, !gen_seed->empty(), grid_n, out_path);
    if (verify->parsed())
      return cmd_verify(family, seed, !verify_seed->empty(), count, jobs,
                        grid_n, json_path);
    if (oracle->parsed()) return cmd_oracle(file, json_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_check_error(e.code()) ? kExitCheckFailed : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace conevex
