#include "conevex/setvalued.hpp"

#include <algorithm>
#include <set>

#include "conevex/error.hpp"

namespace conevex {

const PointSet& FiniteSetMap::at(const std::string& label) const {
  const auto it = images.find(label);
  if (it == images.end()) fail(ErrorCode::UnknownLabel, "label '" + label + "'");
  return it->second;
}

std::vector<std::string> ProblemInstance::sorted_labels() const {
  std::vector<std::string> out;
  out.reserve(domain.size());
  for (const auto& p : domain) out.push_back(p.label);
  std::sort(out.begin(), out.end());
  return out;
}

const DomainPoint* ProblemInstance::find_point(const std::string& label) const {
  for (const auto& p : domain)
    if (p.label == label) return &p;
  return nullptr;
}

bool FeasibleSet::contains(const std::string& label) const {
  return std::binary_search(labels.begin(), labels.end(), label);
}

namespace {

void check_map(const ProblemInstance& inst, const FiniteSetMap& m, int dim,
               const char* name) {
  if (m.codomain_dim != dim)
    fail(ErrorCode::ValidationError,
         std::string(name) + " codomain dimension mismatch");
  if (m.images.size() != inst.domain.size())
    fail(ErrorCode::ValidationError,
         std::string(name) + " must be defined on exactly the domain labels");
  for (const auto& p : inst.domain) {
    const auto it = m.images.find(p.label);
    if (it == m.images.end())
      fail(ErrorCode::ValidationError,
           std::string(name) + " missing image for '" + p.label + "'");
    if (it->second.empty())
      fail(ErrorCode::ValidationError,
           std::string(name) + " has empty image at '" + p.label + "'");
    for (const auto& v : it->second)
      if (static_cast<int>(v.size()) != dim)
        fail(ErrorCode::ValidationError,
             std::string(name) + " image vector length mismatch at '" +
                 p.label + "'");
  }
}

}  // namespace

void validate_instance(const ProblemInstance& inst) {
  if (inst.dim_y < 1) fail(ErrorCode::ValidationError, "dim Y must be >= 1");
  if (inst.dim_x < 0 || inst.dim_z < 0 || inst.dim_w < 0)
    fail(ErrorCode::ValidationError, "negative dimension");
  if (inst.domain.empty())
    fail(ErrorCode::ValidationError, "empty ground domain");
  if (inst.y_plus.ambient_dim != inst.dim_y ||
      inst.z_plus.ambient_dim != inst.dim_z ||
      inst.w_plus.ambient_dim != inst.dim_w)
    fail(ErrorCode::ValidationError, "cone ambient dimension mismatch");
  std::set<std::string> seen;
  for (const auto& p : inst.domain) {
    if (!seen.insert(p.label).second)
      fail(ErrorCode::ValidationError, "duplicate label '" + p.label + "'");
    if (static_cast<int>(p.coords.size()) != inst.dim_x)
      fail(ErrorCode::ValidationError,
           "coords length mismatch at '" + p.label + "'");
  }
  if (!is_pointed(inst.y_plus))
    fail(ErrorCode::ValidationError, "Y order cone must be pointed");
  if (!is_pointed(inst.z_plus))
    fail(ErrorCode::ValidationError, "Z order cone must be pointed");
  check_map(inst, inst.f, inst.dim_y, "f");
  check_map(inst, inst.g, inst.dim_z, "g");
  check_map(inst, inst.h, inst.dim_w, "h");
}

PointSet image_union(const FiniteSetMap& f,
                     const std::vector<std::string>& labels) {
  std::vector<Vec> all;
  for (const auto& l : labels) {
    const auto& img = f.at(l);
    all.insert(all.end(), img.begin(), img.end());
  }
  return make_point_set(std::move(all));
}

PointSet combine(const FiniteSetMap& f, const std::string& x1,
                 const std::string& x2, const Rat& alpha) {
  if (sgn(alpha) <= 0 || cmp(alpha, Rat(1)) >= 0)
    fail(ErrorCode::AlphaOutOfRange, "alpha = " + rat_str(alpha));
  const Rat beta = Rat(1) - alpha;
  std::vector<Vec> out;
  for (const auto& u : f.at(x1))
    for (const auto& v : f.at(x2))
      out.push_back(vec_add(vec_scale(alpha, u), vec_scale(beta, v)));
  return make_point_set(std::move(out));
}

std::vector<Rat> apply_functional(const FiniteSetMap& f,
                                  const std::string& label, const Vec& ell) {
  if (static_cast<int>(ell.size()) != f.codomain_dim)
    fail(ErrorCode::DimensionMismatch, "functional length vs codomain");
  std::vector<Rat> out;
  for (const auto& v : f.at(label)) out.push_back(dot(ell, v));
  return make_rat_set(std::move(out));
}

bool label_is_feasible(const ProblemInstance& inst, const std::string& label) {
  bool g_ok = false;
  for (const auto& z : inst.g.at(label))
    if (cone_contains(inst.z_plus, vec_neg(z))) {
      g_ok = true;
      break;
    }
  if (!g_ok) return false;
  // The equality constraint is vacuous in a zero-dimensional W, where every
  // image is the singleton {O} already.
  return point_set_contains(inst.h.at(label), zero_vec(inst.dim_w));
}

FeasibleSet feasible_set(const ProblemInstance& inst) {
  FeasibleSet out;
  for (const auto& l : inst.sorted_labels())
    if (label_is_feasible(inst, l)) out.labels.push_back(l);
  return out;
}

}  // namespace conevex
