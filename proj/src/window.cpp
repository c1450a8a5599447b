#include "tilegroup/window.hpp"

#include <algorithm>

namespace tilegroup {

WindowSet::WindowSet(std::vector<Interval> pieces) {
  for (const auto& p : pieces) {
    if (p.hi < p.lo) throw InvalidArgument("interval [" + p.lo.to_string() + ", " + p.hi.to_string() + "] has hi < lo");
  }
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& p : pieces) {
    if (!parts_.empty() && !(parts_.back().hi < p.lo)) {
      parts_.back().hi = max(parts_.back().hi, p.hi);
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

WindowSet WindowSet::interval(const QR& lo, const QR& hi) { return WindowSet({Interval{lo, hi}}); }

bool WindowSet::has_interior() const {
  return std::any_of(parts_.begin(), parts_.end(), [](const Interval& p) { return !p.degenerate(); });
}

bool WindowSet::contains(const QR& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return !(x < p.lo) && !(p.hi < x); });
}

bool WindowSet::is_subset_of(const WindowSet& other) const { return intersect(other) == *this; }

WindowSet WindowSet::intersect(const WindowSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    QR lo = max(a.lo, b.lo);
    QR hi = min(a.hi, b.hi);
    if (!(hi < lo)) out.push_back(Interval{std::move(lo), std::move(hi)});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return WindowSet(std::move(out));
}

WindowSet WindowSet::translate(const QR& t) const {
  WindowSet out;
  out.parts_.reserve(parts_.size());
  for (const auto& p : parts_) out.parts_.push_back(Interval{p.lo + t, p.hi + t});
  return out;
}

const QR& WindowSet::lower() const {
  if (parts_.empty()) throw InvalidArgument("empty window has no bounds");
  return parts_.front().lo;
}

const QR& WindowSet::upper() const {
  if (parts_.empty()) throw InvalidArgument("empty window has no bounds");
  return parts_.back().hi;
}

std::string WindowSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const auto& p : parts_) {
    if (!out.empty()) out += " u ";
    out += "[" + p.lo.to_string() + ", " + p.hi.to_string() + "]";
  }
  return out;
}

}  // namespace tilegroup
