#pragma once

#include <cstdint>
#include <string>

#include "conevex/setvalued.hpp"

namespace conevex {

// SplitMix64 stream. Self-contained so generated instances are identical
// across platforms and standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);       // uniform in [0, n)
  long range(long lo, long hi);               // uniform in [lo, hi]
  bool chance(unsigned num, unsigned den);    // true with probability num/den

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

enum class Family { H1, H2, H3, FREE };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Hypothesis families:
//   H1    orthant order cones, no equality constraints, and one shared
//         anchor label whose f and g images sit strictly below every other
//         image point, making both maps convexlike for every alpha.
//   H2    H1 plus a Slater label with strictly negative constraint values
//         (the feasible set is then nonempty by construction).
//   H3    H2 with singleton constraint images everywhere.
//   FREE  arbitrary valid instances, including non-orthant cones and
//         equality constraints.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  Family family = Family::FREE;
  int max_domain = 6;
  int max_dim = 3;
  int max_image = 3;
  int max_numerator = 8;
  int max_denominator = 8;
  int grid_n = 8;
  int max_retries = 100;
};

// Deterministic in (seed, config); throws GenerationExhausted when the
// family validators keep rejecting candidates.
ProblemInstance gen_random_instance(const GeneratorConfig& cfg);

}  // namespace conevex
