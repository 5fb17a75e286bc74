#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "conevex/saddle.hpp"
#include "conevex/setvalued.hpp"

namespace conevex {

// On-disk document: a validated instance plus optional operator and
// multiplier blocks. Rationals are always "p/q" strings (bare "p" when the
// denominator is one); nothing is ever written as a float.
struct InstanceFile {
  ProblemInstance instance;
  std::optional<OperatorPair> operators;
  std::optional<Multipliers> multipliers;

  bool operator==(const InstanceFile&) const = default;
};

inline constexpr int kInstanceFormatVersion = 1;

InstanceFile parse_instance_file(const std::string& text);
std::string serialize_instance_file(const InstanceFile& file);

ProblemInstance parse_instance(const std::string& text);
std::string serialize_instance(const ProblemInstance& inst);

InstanceFile load_instance_file(const std::string& path);

// JSON helpers shared by reports and bindings.
nlohmann::ordered_json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json points_to_json(const PointSet& s);
nlohmann::ordered_json multipliers_to_json(const Multipliers& m);
nlohmann::ordered_json operator_to_json(const LinearOperator& op);

}  // namespace conevex
