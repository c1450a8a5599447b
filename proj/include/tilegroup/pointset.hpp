#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tilegroup/exactnum.hpp"
#include "tilegroup/sequences.hpp"

namespace tilegroup {

/// letter -> tile length; positive and injective.
using LengthFunction = std::map<char, QR>;

void validate_lengths(const LengthFunction& lengths);

/// Finite truncation of a 1-D point set {r_i}; points()[k] is r_{first_index + k}.
class PointSet1D {
 public:
  PointSet1D() = default;
  /// Points must be strictly increasing and include index 0.
  PointSet1D(std::vector<QR> points, long first_index, IndexedWord gap_word, LengthFunction lengths);

  const std::vector<QR>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  long first_index() const { return first_; }
  long last_index() const { return first_ + static_cast<long>(points_.size()) - 1; }
  const IndexedWord& gap_word() const { return gap_word_; }
  const LengthFunction& lengths() const { return lengths_; }

  /// r_i; throws OutOfTruncation outside the window.
  const QR& point(long i) const;
  const QR& anchor() const { return point(0); }
  const QR& lowest() const { return points_.front(); }
  const QR& highest() const { return points_.back(); }

  /// Index i with r_i == y, or nullopt (also for y outside the hull).
  std::optional<long> index_of(const QR& y) const;
  bool contains(const QR& y) const { return index_of(y).has_value(); }
  bool in_hull(const QR& y) const { return !(y < lowest()) && !(highest() < y); }

  QR max_gap() const;

 private:
  std::vector<QR> points_;
  long first_ = 0;
  IndexedWord gap_word_;
  LengthFunction lengths_;
};

/// r_i - r_{i-1} = |T(i)| over the window; r_0 = anchor.
PointSet1D build_pointset(const IndexedWord& window, const LengthFunction& lengths, const QR& anchor);

/// Wraps sorted points; distinct gaps are named a, b, ... by decreasing length.
/// r_0 is 0 when present, otherwise the least non-negative point.
PointSet1D pointset_from_points(std::vector<QR> sorted_points);

/// A value of D - D with every witness pair (i, j), r_i - r_j = value, in the truncation.
struct DiffElement {
  QR value;
  std::vector<std::pair<long, long>> witnesses;
};

/// All differences with |value| <= bound, sorted by value.
std::vector<DiffElement> diff_set(const PointSet1D& ps, const QR& bound);

/// a (+) b: defined when some chain x, y, z in the truncation has
/// a = x - y and b = y - z. nullopt means "no chain in this window".
std::optional<DiffElement> oplus(const QR& a, const QR& b, const PointSet1D& ps);

/// Differences of magnitude <= R; requires R >= the largest gap.
std::vector<DiffElement> generator_set_delta(const PointSet1D& ps, const QR& R);

/// r_i - r_j written as the consecutive signed gaps between them.
std::vector<QR> delta_chain(const PointSet1D& ps, long i, long j);

struct LatticeInvariants {
  long rank = 0;
  std::vector<QR> basis;  // sorted ascending
};

/// Rank and Hermite basis of the subgroup of R generated by `values`.
LatticeInvariants hd_invariants(const std::vector<QR>& values);

}  // namespace tilegroup
