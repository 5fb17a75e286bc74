#include "conevex/instance_json.hpp"

#include <fstream>
#include <sstream>

#include "conevex/error.hpp"

namespace conevex {

using json = nlohmann::ordered_json;

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rat_str(x));
  return arr;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array of rationals");
  Vec out;
  for (const auto& e : j) {
    if (!e.is_string())
      fail(ErrorCode::ParseError, "rationals must be \"p/q\" strings");
    out.push_back(parse_rat(e.get<std::string>()));
  }
  return out;
}

json points_to_json(const PointSet& s) {
  json arr = json::array();
  for (const auto& v : s) arr.push_back(vec_to_json(v));
  return arr;
}

json multipliers_to_json(const Multipliers& m) {
  json j;
  j["xi"] = vec_to_json(m.xi);
  j["eta"] = vec_to_json(m.eta);
  j["zeta"] = vec_to_json(m.zeta);
  return j;
}

json operator_to_json(const LinearOperator& op) {
  json rows = json::array();
  for (const auto& r : op.rows) rows.push_back(vec_to_json(r));
  return rows;
}

namespace {

int read_dim(const json& dims, const char* key) {
  if (!dims.contains(key) || !dims[key].is_number_integer())
    fail(ErrorCode::ParseError, std::string("dims.") + key + " must be an integer");
  const int v = dims[key].get<int>();
  if (v < 0) fail(ErrorCode::ParseError, std::string("dims.") + key + " negative");
  return v;
}

PolyhedralCone read_cone(const json& root, const char* key, int dim) {
  const json cones = root.value("cones", json::object());
  if (!cones.contains(key)) {
    if (dim == 0) return cone_from_generators(0, {});
    fail(ErrorCode::ParseError, std::string("missing cone block cones.") + key);
  }
  const json& gens = cones[key];
  if (!gens.is_array())
    fail(ErrorCode::ParseError, std::string("cones.") + key + " must be an array");
  std::vector<Vec> rays;
  for (const auto& g : gens) rays.push_back(vec_from_json(g));
  try {
    return cone_from_generators(dim, std::move(rays));
  } catch (const Error& e) {
    fail(ErrorCode::ValidationError,
         std::string("cones.") + key + ": " + e.what());
  }
}

FiniteSetMap read_map(const json& root, const char* key, int dim,
                      const std::vector<DomainPoint>& domain) {
  FiniteSetMap m;
  m.codomain_dim = dim;
  const json maps = root.value("maps", json::object());
  if (!maps.contains(key)) {
    if (dim != 0)
      fail(ErrorCode::ParseError, std::string("missing map block maps.") + key);
    for (const auto& p : domain) m.images[p.label] = {zero_vec(0)};
    return m;
  }
  const json& table = maps[key];
  if (!table.is_object())
    fail(ErrorCode::ParseError, std::string("maps.") + key + " must be an object");
  for (const auto& [label, arr] : table.items()) {
    if (!arr.is_array() || arr.empty())
      fail(ErrorCode::ParseError, std::string("maps.") + key + "." + label +
                                      " must be a nonempty array");
    std::vector<Vec> points;
    for (const auto& v : arr) points.push_back(vec_from_json(v));
    m.images[label] = make_point_set(std::move(points));
  }
  return m;
}

LinearOperator read_operator(const json& rows_json, int out_dim, int in_dim,
                             const char* name) {
  if (!rows_json.is_array())
    fail(ErrorCode::ParseError, std::string("operators.") + name +
                                    " must be an array of rows");
  LinearOperator op = zero_operator(out_dim, in_dim);
  if (static_cast<int>(rows_json.size()) != out_dim)
    fail(ErrorCode::ParseError, std::string("operators.") + name +
                                    " must have one row per Y coordinate");
  for (int i = 0; i < out_dim; ++i) {
    Vec row = vec_from_json(rows_json[i]);
    if (static_cast<int>(row.size()) != in_dim)
      fail(ErrorCode::ParseError, std::string("operators.") + name +
                                      " row width mismatch");
    op.rows[i] = std::move(row);
  }
  return op;
}

}  // namespace

InstanceFile parse_instance_file(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!root.is_object()) fail(ErrorCode::ParseError, "top level must be an object");
  if (root.value("version", -1) != kInstanceFormatVersion)
    fail(ErrorCode::ParseError, "unsupported or missing version");
  if (!root.contains("dims") || !root["dims"].is_object())
    fail(ErrorCode::ParseError, "missing dims object");

  InstanceFile out;
  ProblemInstance& inst = out.instance;
  inst.dim_x = read_dim(root["dims"], "x");
  inst.dim_y = read_dim(root["dims"], "y");
  inst.dim_z = read_dim(root["dims"], "z");
  inst.dim_w = read_dim(root["dims"], "w");
  if (inst.dim_y == 0) fail(ErrorCode::ValidationError, "dim Y must be >= 1");

  inst.y_plus = read_cone(root, "y_plus", inst.dim_y);
  inst.z_plus = read_cone(root, "z_plus", inst.dim_z);
  inst.w_plus = read_cone(root, "w_plus", inst.dim_w);

  if (!root.contains("domain") || !root["domain"].is_array())
    fail(ErrorCode::ParseError, "missing domain array");
  for (const auto& p : root["domain"]) {
    if (!p.is_object() || !p.contains("label") || !p["label"].is_string())
      fail(ErrorCode::ParseError, "domain entries need a string label");
    DomainPoint dp;
    dp.label = p["label"].get<std::string>();
    dp.coords = vec_from_json(p.value("coords", json::array()));
    inst.domain.push_back(std::move(dp));
  }

  inst.f = read_map(root, "f", inst.dim_y, inst.domain);
  inst.g = read_map(root, "g", inst.dim_z, inst.domain);
  inst.h = read_map(root, "h", inst.dim_w, inst.domain);

  try {
    validate_instance(inst);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError) throw;
    fail(ErrorCode::ValidationError, e.what());
  }

  if (root.contains("operators")) {
    const json& ops = root["operators"];
    OperatorPair pair;
    pair.S = read_operator(ops.value("S", json::array()), inst.dim_y,
                           inst.dim_z, "S");
    pair.T = read_operator(ops.value("T", json::array()), inst.dim_y,
                           inst.dim_w, "T");
    out.operators = std::move(pair);
  }
  if (root.contains("multipliers")) {
    const json& ms = root["multipliers"];
    Multipliers m;
    m.xi = vec_from_json(ms.value("xi", json::array()));
    m.eta = vec_from_json(ms.value("eta", json::array()));
    m.zeta = vec_from_json(ms.value("zeta", json::array()));
    if (static_cast<int>(m.xi.size()) != inst.dim_y ||
        static_cast<int>(m.eta.size()) != inst.dim_z ||
        static_cast<int>(m.zeta.size()) != inst.dim_w)
      fail(ErrorCode::ValidationError, "multiplier block length mismatch");
    out.multipliers = std::move(m);
  }
  return out;
}

std::string serialize_instance_file(const InstanceFile& file) {
  const ProblemInstance& inst = file.instance;
  json root;
  root["version"] = kInstanceFormatVersion;
  root["dims"] = {{"x", inst.dim_x}, {"y", inst.dim_y}, {"z", inst.dim_z},
                  {"w", inst.dim_w}};
  json cones;
  cones["y_plus"] = points_to_json(inst.y_plus.generators);
  if (inst.dim_z > 0) cones["z_plus"] = points_to_json(inst.z_plus.generators);
  if (inst.dim_w > 0) cones["w_plus"] = points_to_json(inst.w_plus.generators);
  root["cones"] = std::move(cones);
  json domain = json::array();
  for (const auto& p : inst.domain) {
    json dp;
    dp["label"] = p.label;
    dp["coords"] = vec_to_json(p.coords);
    domain.push_back(std::move(dp));
  }
  root["domain"] = std::move(domain);
  json maps;
  auto map_to_json = [](const FiniteSetMap& m) {
    json table;
    for (const auto& [label, img] : m.images) table[label] = points_to_json(img);
    return table;
  };
  maps["f"] = map_to_json(inst.f);
  if (inst.dim_z > 0) maps["g"] = map_to_json(inst.g);
  if (inst.dim_w > 0) maps["h"] = map_to_json(inst.h);
  root["maps"] = std::move(maps);
  if (file.operators) {
    json ops;
    ops["S"] = operator_to_json(file.operators->S);
    ops["T"] = operator_to_json(file.operators->T);
    root["operators"] = std::move(ops);
  }
  if (file.multipliers)
    root["multipliers"] = multipliers_to_json(*file.multipliers);
  return root.dump(2) + "\n";
}

ProblemInstance parse_instance(const std::string& text) {
  return parse_instance_file(text).instance;
}

std::string serialize_instance(const ProblemInstance& inst) {
  InstanceFile f;
  f.instance = inst;
  return serialize_instance_file(f);
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_file(buf.str());
}

}  // namespace conevex
