#include "conevex/generator.hpp"

#include "conevex/convexity.hpp"
#include "conevex/efficiency.hpp"
#include "conevex/error.hpp"

namespace conevex {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = ~0ull - (~0ull % n);
  std::uint64_t v = next();
  while (v >= limit) v = next();  // rejection keeps the draw unbiased
  return v % n;
}

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(unsigned num, unsigned den) { return below(den) < num; }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed + 0x9E3779B97F4A7C15ull * (salt + 1));
  return r.next();
}

const char* family_name(Family f) {
  switch (f) {
    case Family::H1: return "H1";
    case Family::H2: return "H2";
    case Family::H3: return "H3";
    case Family::FREE: return "FREE";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "H1") return Family::H1;
  if (name == "H2") return Family::H2;
  if (name == "H3") return Family::H3;
  if (name == "FREE") return Family::FREE;
  fail(ErrorCode::ValidationError, "unknown family '" + name + "'");
}

namespace {

Rat random_rat(Rng& rng, const GeneratorConfig& cfg) {
  Rat r(rng.range(-cfg.max_numerator, cfg.max_numerator),
        rng.range(1, cfg.max_denominator));
  r.canonicalize();
  return r;
}

Vec random_point(Rng& rng, const GeneratorConfig& cfg, int dim) {
  Vec v;
  for (int i = 0; i < dim; ++i) v.push_back(random_rat(rng, cfg));
  return v;
}

PointSet random_image(Rng& rng, const GeneratorConfig& cfg, int dim,
                      int max_size) {
  std::vector<Vec> pts;
  const int size = static_cast<int>(rng.range(1, max_size));
  for (int i = 0; i < size; ++i) pts.push_back(random_point(rng, cfg, dim));
  return make_point_set(std::move(pts));
}

// Coordinatewise minimum over every point in the map, minus one.
Vec dominated_anchor_value(const FiniteSetMap& m, int dim) {
  Vec mins;
  bool first = true;
  for (const auto& [label, img] : m.images)
    for (const auto& p : img) {
      if (first) {
        mins = p;
        first = false;
        continue;
      }
      for (int j = 0; j < dim; ++j)
        if (cmp(p[j], mins[j]) < 0) mins[j] = p[j];
    }
  for (int j = 0; j < dim; ++j) mins[j] -= 1;
  return mins;
}

PolyhedralCone random_pointed_cone(Rng& rng, const GeneratorConfig& cfg,
                                   int dim) {
  if (dim == 0) return cone_from_generators(0, {});
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Vec> gens;
    if (rng.chance(1, 2)) {
      // Orthant widened by a couple of extra rays.
      for (int i = 0; i < dim; ++i) {
        Vec e = zero_vec(dim);
        e[i] = 1;
        gens.push_back(std::move(e));
      }
      const int extra = static_cast<int>(rng.range(0, 2));
      for (int i = 0; i < extra; ++i) {
        Vec v;
        for (int j = 0; j < dim; ++j) v.push_back(Rat(rng.range(-2, 3)));
        if (!vec_is_zero(v)) gens.push_back(std::move(v));
      }
    } else {
      const int count = static_cast<int>(rng.range(dim, dim + 3));
      for (int i = 0; i < count; ++i) {
        Vec v;
        for (int j = 0; j < dim; ++j) v.push_back(Rat(rng.range(-3, 4)));
        if (!vec_is_zero(v)) gens.push_back(std::move(v));
      }
    }
    if (gens.empty()) continue;
    try {
      PolyhedralCone c = cone_from_generators(dim, std::move(gens));
      if (is_pointed(c)) return c;
    } catch (const Error&) {
      // not full-dimensional; draw again
    }
  }
  return orthant_cone(dim);
}

ProblemInstance build_candidate(Rng& rng, const GeneratorConfig& cfg) {
  ProblemInstance inst;
  const bool hypothesis_family = cfg.family != Family::FREE;

  if (hypothesis_family) {
    inst.dim_x = static_cast<int>(rng.range(1, 2));
    inst.dim_y = static_cast<int>(rng.range(1, cfg.max_dim));
    inst.dim_z = static_cast<int>(rng.range(1, cfg.max_dim));
    inst.dim_w = 0;
    inst.y_plus = orthant_cone(inst.dim_y);
    inst.z_plus = orthant_cone(inst.dim_z);
    inst.w_plus = cone_from_generators(0, {});
  } else {
    inst.dim_x = static_cast<int>(rng.range(1, 2));
    inst.dim_y = static_cast<int>(rng.range(1, cfg.max_dim));
    inst.dim_z = static_cast<int>(rng.range(0, cfg.max_dim));
    inst.dim_w = static_cast<int>(rng.range(0, 1));
    inst.y_plus = random_pointed_cone(rng, cfg, inst.dim_y);
    inst.z_plus = random_pointed_cone(rng, cfg, inst.dim_z);
    inst.w_plus = random_pointed_cone(rng, cfg, inst.dim_w);
  }

  const int min_domain = cfg.family == Family::H2 || cfg.family == Family::H3
                             ? 3
                             : (cfg.family == Family::H1 ? 2 : 1);
  const int n = static_cast<int>(rng.range(min_domain, cfg.max_domain));
  for (int i = 0; i < n; ++i) {
    DomainPoint p;
    p.label = "x" + std::to_string(i + 1);
    p.coords = random_point(rng, cfg, inst.dim_x);
    inst.domain.push_back(std::move(p));
  }

  inst.f.codomain_dim = inst.dim_y;
  inst.g.codomain_dim = inst.dim_z;
  inst.h.codomain_dim = inst.dim_w;

  const int anchor = hypothesis_family ? n - 1 : -1;
  const int slater =
      cfg.family == Family::H2 || cfg.family == Family::H3 ? n - 2 : -1;
  const int g_size = cfg.family == Family::H3 ? 1 : cfg.max_image;

  for (int i = 0; i < n; ++i) {
    const std::string& label = inst.domain[i].label;
    if (i != anchor) {
      inst.f.images[label] = random_image(rng, cfg, inst.dim_y, cfg.max_image);
      if (i == slater) {
        Vec neg;
        for (int j = 0; j < inst.dim_z; ++j)
          neg.push_back(rat(rng.range(-cfg.max_numerator, -1),
                            rng.range(1, cfg.max_denominator)));
        inst.g.images[label] = {std::move(neg)};
      } else {
        inst.g.images[label] = random_image(rng, cfg, inst.dim_z, g_size);
      }
    }
    if (inst.dim_w == 0) {
      inst.h.images[label] = {zero_vec(0)};
    } else {
      PointSet img = random_image(rng, cfg, inst.dim_w, cfg.max_image);
      if (rng.chance(1, 2)) img = point_set_union(img, {zero_vec(inst.dim_w)});
      inst.h.images[label] = std::move(img);
    }
  }
  if (anchor >= 0) {
    const std::string& label = inst.domain[anchor].label;
    inst.f.images[label] = {dominated_anchor_value(inst.f, inst.dim_y)};
    inst.g.images[label] = {dominated_anchor_value(inst.g, inst.dim_z)};
  }
  return inst;
}

bool family_guarantees_hold(const ProblemInstance& inst,
                            const GeneratorConfig& cfg) {
  try {
    validate_instance(inst);
  } catch (const Error&) {
    return false;
  }
  if (cfg.family == Family::FREE) return true;

  const AlphaGrid grid(cfg.grid_n);
  if (inst.dim_w != 0) return false;
  if (!is_convexlike(inst.f, inst.y_plus, grid).verified_on_grid) return false;
  if (!is_convexlike(inst.g, inst.z_plus, grid).verified_on_grid) return false;
  if (cfg.family == Family::H1) return true;

  if (!slater_holds(inst)) return false;
  if (feasible_set(inst).labels.empty()) return false;
  if (cfg.family == Family::H2) return true;

  for (const auto& [label, img] : inst.g.images)
    if (img.size() != 1) return false;
  return true;
}

}  // namespace

ProblemInstance gen_random_instance(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    ProblemInstance inst = build_candidate(rng, cfg);
    if (family_guarantees_hold(inst, cfg)) return inst;
  }
  fail(ErrorCode::GenerationExhausted,
       std::string("no valid ") + family_name(cfg.family) + " instance after " +
           std::to_string(cfg.max_retries) + " attempts");
}

}  // namespace conevex
