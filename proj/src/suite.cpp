#include "conevex/suite.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "conevex/convexity.hpp"
#include "conevex/efficiency.hpp"
#include "conevex/error.hpp"
#include "conevex/instance_json.hpp"
#include "conevex/oracles.hpp"
#include "conevex/saddle.hpp"

namespace conevex {

namespace {

struct InstanceOutcome {
  InstanceRecord record;
  std::optional<std::string> counterexample;
};

void add(InstanceRecord& rec, const std::string& name, bool pass,
         const std::string& detail = "") {
  rec.checks.push_back({name, pass ? "pass" : "fail", detail});
}

void add_skip(InstanceRecord& rec, const std::string& name,
              const std::string& why) {
  rec.checks.push_back({name, "skip", why});
}

void check_cone_identities(InstanceRecord& rec, const ProblemInstance& inst) {
  bool bidual = cone_same_set(dual_cone(dual_cone(inst.y_plus)), inst.y_plus) &&
                cone_same_set(dual_cone(dual_cone(inst.z_plus)), inst.z_plus);
  if (inst.dim_w > 0)
    bidual = bidual &&
             cone_same_set(dual_cone(dual_cone(inst.w_plus)), inst.w_plus);
  add(rec, "cone_biduality", bidual);

  // Dual pairing positivity: interior points evaluate strictly positively
  // against nonzero dual elements.
  bool positivity = true;
  for (const PolyhedralCone* c : {&inst.y_plus, &inst.z_plus}) {
    if (c->ambient_dim == 0 || c->facet_normals.empty()) continue;
    Vec x = zero_vec(c->ambient_dim);
    for (const auto& g : c->generators) x = vec_add(x, g);
    Vec xi = zero_vec(c->ambient_dim);
    for (const auto& n : c->facet_normals) xi = vec_add(xi, n);
    if (!cone_contains_interior(*c, x) || sgn(dot(x, xi)) <= 0)
      positivity = false;
  }
  add(rec, "interior_dual_positivity", positivity);

  const PointSet values = image_union(inst.f, inst.sorted_labels());
  PointSet negated;
  for (const auto& v : values) negated.push_back(vec_neg(v));
  negated = make_point_set(std::move(negated));
  PointSet conj;
  for (const auto& v : pmin(negated, inst.y_plus)) conj.push_back(vec_neg(v));
  conj = make_point_set(std::move(conj));
  PointSet maxima = pmax(values, inst.y_plus);
  std::sort(maxima.begin(), maxima.end(), vec_less);
  add(rec, "pmin_pmax_conjugation", conj == maxima);

  if (feasible_set(inst).labels.empty())
    add_skip(rec, "lemma31_cross_check", "empty feasible set");
  else
    add(rec, "lemma31_cross_check", lemma31_check(inst));
}

void check_alternative(InstanceRecord& rec, const ProblemInstance& inst,
                       const AlphaGrid& grid, bool hypothesis_family) {
  const auto rep = verify_alternative(inst, hypothesis_family, grid);
  if (hypothesis_family) {
    add(rec, "hypotheses", !rep.hypotheses->violated);
    add(rec, "alternative_forward", rep.implication_checks.first,
        rep.implication_checks.first ? "" : "system (i) empty but no multipliers");
  } else {
    add_skip(rec, "alternative_forward", "needs hypothesis family");
  }
  add(rec, "alternative_backward", rep.implication_checks.second);
  bool sound = true;
  if (rep.system_ii_solution) {
    sound = !rep.system_ii_solution->all_zero() &&
            multipliers_satisfy_system(inst, *rep.system_ii_solution);
  }
  if (rep.xi_nonzero_solution)
    sound = sound && !vec_is_zero(rep.xi_nonzero_solution->xi) &&
            multipliers_satisfy_system(inst, *rep.xi_nonzero_solution);
  add(rec, "multiplier_soundness", sound);
}

void check_scalarization(InstanceRecord& rec, const ProblemInstance& inst,
                         const AlphaGrid& grid) {
  const auto rep = verify_scalarization(inst, grid);
  add(rec, "scalarization_hypotheses", !rep.hypothesis_violated);
  std::string detail;
  if (!rep.sets_equal) {
    std::ostringstream os;
    os << "efficient {";
    for (const auto& l : rep.efficient_labels) os << ' ' << l;
    os << " } certified {";
    for (const auto& l : rep.certified_labels) os << ' ' << l;
    os << " }";
    detail = os.str();
  }
  add(rec, "scalarization_equality", rep.sets_equal, detail);
  bool certs_ok = true;
  const auto feasible = feasible_set(inst);
  for (const auto& cert : rep.certificates) {
    if (vec_is_zero(cert.xi) ||
        !cone_contains(dual_cone(inst.y_plus), cert.xi) ||
        !point_set_contains(inst.f.at(cert.label), cert.ybar)) {
      certs_ok = false;
      continue;
    }
    const Rat base = dot(cert.xi, cert.ybar);
    for (const auto& l : feasible.labels)
      for (const auto& y : inst.f.at(l))
        if (cmp(dot(cert.xi, y), base) < 0) certs_ok = false;
  }
  add(rec, "certificate_substitution", certs_ok);
}

void run_family_checks(InstanceRecord& rec, const ProblemInstance& inst,
                       const GeneratorConfig& cfg) {
  const AlphaGrid grid(cfg.grid_n);
  switch (cfg.family) {
    case Family::H1:
      check_alternative(rec, inst, grid, true);
      break;
    case Family::H2:
      check_scalarization(rec, inst, grid);
      break;
    case Family::H3: {
      const auto vrep = verify_vector_saddle_theorems(inst, grid);
      add(rec, "vector_saddle_hypotheses", !vrep.hypothesis_violated);
      add(rec, "vector_saddle_forward", vrep.forward_ok);
      add(rec, "vector_saddle_backward", vrep.backward_ok);
      const auto srep = verify_scalar_saddle_theorems(inst, grid);
      add(rec, "scalar_saddle_forward", srep.forward_ok);
      add(rec, "scalar_saddle_backward", srep.backward_ok);
      break;
    }
    case Family::FREE:
      check_alternative(rec, inst, grid, false);
      break;
  }
}

InstanceOutcome evaluate_instance(const SuiteConfig& cfg, int index) {
  InstanceOutcome out;
  InstanceRecord& rec = out.record;
  rec.index = index;
  rec.seed = mix_seed(cfg.gen.seed, static_cast<std::uint64_t>(index));

  GeneratorConfig gen_cfg = cfg.gen;
  gen_cfg.seed = rec.seed;
  ProblemInstance inst;
  try {
    inst = gen_random_instance(gen_cfg);
  } catch (const Error& e) {
    add(rec, "generate", false, e.what());
    rec.status = "fail";
    return out;
  }

  check_cone_identities(rec, inst);
  run_family_checks(rec, inst, cfg.gen);

  // Oracle pass at reduced count; bounded to the sizes it supports.
  if (index % 10 == 0) {
    if (inst.dim_y <= 3 && inst.dim_z <= 3 && inst.dim_w <= 3 &&
        inst.domain.size() <= 5) {
      try {
        brute_oracles(inst);
        add(rec, "oracle_agreement", true);
      } catch (const Error& e) {
        add(rec, "oracle_agreement", false, e.what());
      }
    } else {
      add_skip(rec, "oracle_agreement", "instance above oracle bounds");
    }
  }

  bool any_fail = false, any_pass = false;
  for (const auto& c : rec.checks) {
    if (c.status == "fail") any_fail = true;
    if (c.status == "pass") any_pass = true;
  }
  rec.status = any_fail ? "fail" : (any_pass ? "pass" : "skip");
  if (any_fail) out.counterexample = serialize_instance(inst);
  return out;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.count < 1) fail(ErrorCode::ValidationError, "count must be >= 1");
  SuiteReport rep;
  rep.family = family_name(cfg.gen.family);
  rep.seed = cfg.gen.seed;
  rep.count = cfg.count;
  rep.grid = cfg.gen.grid_n;

  std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(cfg.count));
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (int i = 0; i < cfg.count; ++i) outcomes[i] = evaluate_instance(cfg, i);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (int i = w; i < cfg.count; i += jobs)
          outcomes[i] = evaluate_instance(cfg, i);
      });
    for (auto& t : workers) t.join();
  }

  for (auto& o : outcomes) {
    if (o.record.status == "pass")
      ++rep.passed;
    else if (o.record.status == "fail")
      ++rep.failed;
    else
      ++rep.skipped;
    if (o.counterexample && !rep.first_counterexample)
      rep.first_counterexample = std::move(o.counterexample);
    rep.instances.push_back(std::move(o.record));
  }
  return rep;
}

std::string suite_report_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite family=" << rep.family << " count=" << rep.count
     << " seed=" << rep.seed << " grid=" << rep.grid << "\n";
  for (const auto& inst : rep.instances) {
    os << "  instance " << inst.index << " [" << inst.status << "]";
    if (inst.status != "pass") {
      for (const auto& c : inst.checks)
        if (c.status == "fail") {
          os << " " << c.name;
          if (!c.detail.empty()) os << " (" << c.detail << ")";
        }
    }
    os << "\n";
  }
  os << "passed " << rep.passed << ", failed " << rep.failed << ", skipped "
     << rep.skipped << "\n";
  if (rep.first_counterexample)
    os << "first counterexample:\n" << *rep.first_counterexample;
  return os.str();
}

std::string suite_report_json_text(const SuiteReport& rep) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["family"] = rep.family;
  j["seed"] = rep.seed;
  j["count"] = rep.count;
  j["grid"] = rep.grid;
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["skipped"] = rep.skipped;
  nlohmann::ordered_json instances = nlohmann::ordered_json::array();
  for (const auto& inst : rep.instances) {
    nlohmann::ordered_json ji;
    ji["index"] = inst.index;
    ji["seed"] = inst.seed;
    ji["status"] = inst.status;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : inst.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["status"] = c.status;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(std::move(jc));
    }
    ji["checks"] = std::move(checks);
    instances.push_back(std::move(ji));
  }
  j["instances"] = std::move(instances);
  if (rep.first_counterexample)
    j["first_counterexample"] =
        nlohmann::ordered_json::parse(*rep.first_counterexample);
  else
    j["first_counterexample"] = nullptr;
  return j.dump(2) + "\n";
}

}  // namespace conevex
