#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace conevex {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, which is the canonical form used everywhere in this project.
using Rat = mpq_class;

// Coordinate tuple in Q^n. Also used for the coefficient row of a linear
// functional and for multiplier vectors; context makes the role clear.
using Vec = std::vector<Rat>;

Rat rat(long num, long den = 1);

// Accepts "p" or "p/q" with q > 0 and arbitrary-precision integers.
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& r);

int rat_cmp(const Rat& a, const Rat& b);

bool vec_is_zero(const Vec& v);
int vec_cmp(const Vec& a, const Vec& b);  // lexicographic
bool vec_less(const Vec& a, const Vec& b);

Vec zero_vec(int dim);
Rat dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);
Vec vec_neg(const Vec& v);

// Positive rescaling to coprime integer entries; direction is preserved.
Vec canonical_ray(const Vec& v);

std::string vec_str(const Vec& v);

// Canonical finite point set: lexicographically sorted and deduplicated.
using PointSet = std::vector<Vec>;

PointSet make_point_set(std::vector<Vec> points);
bool point_set_contains(const PointSet& s, const Vec& v);
PointSet point_set_union(const PointSet& a, const PointSet& b);

std::vector<Rat> make_rat_set(std::vector<Rat> values);

}  // namespace conevex
