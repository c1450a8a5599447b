#pragma once

#include <string>
#include <vector>

#include "tilegroup/exactnum.hpp"

namespace tilegroup {

/// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
  QR lo;
  QR hi;

  bool degenerate() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, sorted, touching pieces merged.
class WindowSet {
 public:
  WindowSet() = default;
  explicit WindowSet(std::vector<Interval> pieces);
  static WindowSet interval(const QR& lo, const QR& hi);

  const std::vector<Interval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  /// True when some component has positive length.
  bool has_interior() const;
  bool contains(const QR& x) const;
  bool is_subset_of(const WindowSet& other) const;

  WindowSet intersect(const WindowSet& other) const;
  WindowSet translate(const QR& t) const;  // {x + t}

  const QR& lower() const;
  const QR& upper() const;

  std::string to_string() const;

  friend bool operator==(const WindowSet&, const WindowSet&) = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace tilegroup
