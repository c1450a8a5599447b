#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tilegroup/pointset.hpp"
#include "tilegroup/table.hpp"

namespace tilegroup {

/// Translation class [p2, P, p1] of a doubly pointed finite pattern; offsets
/// are sorted with minimum 0, p2 = offsets[out_index], p1 = offsets[in_index].
struct PatternClass {
  std::vector<QR> offsets;
  std::size_t out_index = 0;
  std::size_t in_index = 0;

  const QR& out_point() const { return offsets[out_index]; }
  const QR& in_point() const { return offsets[in_index]; }

  friend bool operator==(const PatternClass&, const PatternClass&) = default;
};

/// Canonical class of (out, points, in); points need not be sorted or shifted.
PatternClass canonical_class(std::vector<QR> points, const QR& out, const QR& in);

/// Class of the pattern {r_i : i in indices} pointed at r_out, r_in.
PatternClass make_element(const PointSet1D& ps, const std::vector<long>& indices, long out, long in);

enum class Outcome { Defined, Undefined, UnknownAtTruncation };

struct ProductResult {
  Outcome outcome = Outcome::UnknownAtTruncation;
  std::optional<PatternClass> value;
  /// Translations s with (aligned union) + s inside the truncation.
  std::vector<QR> placements;
};

/// Aligned union R = (P - p1) u (Q - q2), pointed at p2 - p1 and q1 - q2.
PatternClass aligned_union(const PatternClass& x, const PatternClass& y);

/// Every translate of `pattern` lying inside the truncated point set.
std::vector<QR> embeddings(const PatternClass& pattern, const PointSet1D& ps);

/// Product in Gamma(D) decided against a truncation: Defined when the aligned
/// union embeds, UnknownAtTruncation otherwise. Never returns Undefined.
ProductResult multiply(const PatternClass& x, const PatternClass& y, const PointSet1D& ps);

PatternClass inverse(const PatternClass& x);
bool natural_leq(const PatternClass& x, const PatternClass& y);
PatternClass max_above(const PatternClass& x);
QR phi(const PatternClass& x);
bool is_idempotent(const PatternClass& x);

/// Maximal element [y, {y, x}, x] with y - x = value.
PatternClass theta(const QR& value);

/// The (D - D, (+)) table on diff_set(ps, bound); products leaving the bound are dropped.
struct DiffTable {
  std::vector<QR> values;
  OperationTable table;
};
DiffTable maxset_table(const PointSet1D& ps, const QR& bound);

}  // namespace tilegroup
