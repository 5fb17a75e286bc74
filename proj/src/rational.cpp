#include "conevex/rational.hpp"

#include <algorithm>
#include <sstream>

#include "conevex/error.hpp"

namespace conevex {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorCode::InfeasibleLabel: return "InfeasibleLabel";
    case ErrorCode::ZeroFunctional: return "ZeroFunctional";
    case ErrorCode::NonPositiveOperator: return "NonPositiveOperator";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotWeaklyEfficient: return "NotWeaklyEfficient";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::InvalidMultipliers: return "InvalidMultipliers";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  }
  return "Error";
}

Rat rat(long num, long den) {
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_s = text.substr(0, slash);
  const std::string den_s =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!is_integer_text(num_s) || !is_integer_text(den_s))
    fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
  mpz_class num(num_s), den(den_s);
  if (sgn(den) <= 0)
    fail(ErrorCode::ParseError, "denominator must be positive in '" + text + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int rat_cmp(const Rat& a, const Rat& b) { return cmp(a, b); }

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

int vec_cmp(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

bool vec_less(const Vec& a, const Vec& b) { return vec_cmp(a, b) < 0; }

Vec zero_vec(int dim) { return Vec(static_cast<std::size_t>(dim), Rat(0)); }

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "dot of lengths " +
                                           std::to_string(a.size()) + " and " +
                                           std::to_string(b.size()));
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vec_add");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vec_sub");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Rat& c, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= c;
  return out;
}

Vec vec_neg(const Vec& v) { return vec_scale(Rat(-1), v); }

Vec canonical_ray(const Vec& v) {
  if (vec_is_zero(v)) return v;
  mpz_class den_lcm(1);
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                             x.get_den().get_mpz_t());
  mpz_class num_gcd(0);
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  return vec_scale(factor, v);
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ')';
  return os.str();
}

PointSet make_point_set(std::vector<Vec> points) {
  std::sort(points.begin(), points.end(), vec_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool point_set_contains(const PointSet& s, const Vec& v) {
  return std::binary_search(s.begin(), s.end(), v, vec_less);
}

PointSet point_set_union(const PointSet& a, const PointSet& b) {
  std::vector<Vec> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return make_point_set(std::move(all));
}

std::vector<Rat> make_rat_set(std::vector<Rat> values) {
  std::sort(values.begin(), values.end(),
            [](const Rat& a, const Rat& b) { return cmp(a, b) < 0; });
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace conevex
