#include "conevex/intervals.hpp"

#include <algorithm>
#include <sstream>

namespace conevex {

namespace {

bool interval_valid(const TauInterval& iv) {
  if (sgn(iv.lo.value) < 0) return false;
  if (sgn(iv.lo.value) == 0 && iv.lo.closed) return false;  // stay in (0, inf)
  if (!iv.hi) return true;
  const int c = cmp(iv.lo.value, iv.hi->value);
  if (c > 0) return false;
  if (c == 0) return iv.lo.closed && iv.hi->closed;
  return true;
}

// Orders lower bounds as positions on the line; at equal values a closed
// start lies before an open one.
bool lo_before(const TauBound& a, const TauBound& b) {
  const int c = cmp(a.value, b.value);
  if (c != 0) return c < 0;
  return a.closed && !b.closed;
}

// Whether interval b starts no later than interval a ends (overlap or touch).
bool connects(const TauInterval& a, const TauInterval& b) {
  if (!a.hi) return true;
  const int c = cmp(b.lo.value, a.hi->value);
  if (c < 0) return true;
  if (c > 0) return false;
  return b.lo.closed || a.hi->closed;
}

}  // namespace

TauIntervalSet TauIntervalSet::empty_set() { return {}; }

TauIntervalSet TauIntervalSet::full_set() {
  TauIntervalSet s;
  s.intervals_.push_back({{Rat(0), false}, std::nullopt});
  return s;
}

TauIntervalSet TauIntervalSet::single(TauInterval iv) {
  TauIntervalSet s;
  if (interval_valid(iv)) s.intervals_.push_back(std::move(iv));
  return s;
}

TauIntervalSet TauIntervalSet::point(const Rat& tau) {
  return single({{tau, true}, TauBound{tau, true}});
}

bool TauIntervalSet::contains(const Rat& tau) const {
  if (sgn(tau) <= 0) return false;
  for (const auto& iv : intervals_) {
    const int cl = cmp(tau, iv.lo.value);
    if (cl < 0 || (cl == 0 && !iv.lo.closed)) continue;
    if (!iv.hi) return true;
    const int ch = cmp(tau, iv.hi->value);
    if (ch < 0 || (ch == 0 && iv.hi->closed)) return true;
  }
  return false;
}

TauIntervalSet TauIntervalSet::unite(const TauIntervalSet& other) const {
  TauIntervalSet out;
  out.intervals_ = intervals_;
  out.intervals_.insert(out.intervals_.end(), other.intervals_.begin(),
                        other.intervals_.end());
  out.normalize();
  return out;
}

TauIntervalSet TauIntervalSet::intersect(const TauIntervalSet& other) const {
  TauIntervalSet out;
  for (const auto& a : intervals_)
    for (const auto& b : other.intervals_) {
      TauInterval iv;
      iv.lo = lo_before(a.lo, b.lo) ? b.lo : a.lo;
      if (!a.hi)
        iv.hi = b.hi;
      else if (!b.hi)
        iv.hi = a.hi;
      else {
        const int c = cmp(a.hi->value, b.hi->value);
        if (c < 0)
          iv.hi = a.hi;
        else if (c > 0)
          iv.hi = b.hi;
        else
          iv.hi = TauBound{a.hi->value, a.hi->closed && b.hi->closed};
      }
      if (interval_valid(iv)) out.intervals_.push_back(std::move(iv));
    }
  out.normalize();
  return out;
}

std::optional<Rat> TauIntervalSet::witness() const {
  if (intervals_.empty()) return std::nullopt;
  const auto& iv = intervals_.front();
  if (!iv.hi) return iv.lo.value + 1;
  return (iv.lo.value + iv.hi->value) / 2;
}

void TauIntervalSet::normalize() {
  std::sort(intervals_.begin(), intervals_.end(),
            [](const TauInterval& a, const TauInterval& b) {
              return lo_before(a.lo, b.lo);
            });
  std::vector<TauInterval> merged;
  for (auto& iv : intervals_) {
    if (!merged.empty() && connects(merged.back(), iv)) {
      auto& cur = merged.back();
      if (!cur.hi) continue;
      if (!iv.hi) {
        cur.hi = std::nullopt;
      } else {
        const int c = cmp(iv.hi->value, cur.hi->value);
        if (c > 0)
          cur.hi = iv.hi;
        else if (c == 0)
          cur.hi->closed = cur.hi->closed || iv.hi->closed;
      }
    } else {
      merged.push_back(std::move(iv));
    }
  }
  intervals_ = std::move(merged);
}

std::string TauIntervalSet::str() const {
  if (intervals_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) os << " u ";
    const auto& iv = intervals_[i];
    os << (iv.lo.closed ? '[' : '(') << rat_str(iv.lo.value) << ", ";
    if (iv.hi)
      os << rat_str(iv.hi->value) << (iv.hi->closed ? ']' : ')');
    else
      os << "inf)";
  }
  return os.str();
}

}  // namespace conevex
