#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tilegroup/pointset.hpp"
#include "tilegroup/psgamma.hpp"
#include "tilegroup/table.hpp"
#include "tilegroup/window.hpp"

namespace tilegroup {

using Coefficients = std::pair<long, long>;

/// The subgroup Z*g1 + Z*g2 of R, with g1, g2 linearly independent over Q,
/// so membership is an exact rational 2x2 solve.
class DenseGroup {
 public:
  DenseGroup(QR g1, QR g2);

  const QR& g1() const { return g1_; }
  const QR& g2() const { return g2_; }
  QR element(long n, long m) const { return QR(n) * g1_ + QR(m) * g2_; }
  QR element(const Coefficients& c) const { return element(c.first, c.second); }

  /// Integer coordinates of x, or nullopt when x is not in the group.
  std::optional<std::pair<Integer, Integer>> coefficients(const QR& x) const;
  bool contains(const QR& x) const { return coefficients(x).has_value(); }

 private:
  QR g1_;
  QR g2_;
  Rational det_;  // of the rational coordinate matrix
};

struct LatticeVector {
  QR phys;
  QR internal;
};

/// Lattice Z*v1 + Z*v2 in R x R with window K in internal space.
class CutProjectScheme {
 public:
  CutProjectScheme(LatticeVector v1, LatticeVector v2, WindowSet window);

  const LatticeVector& v1() const { return v1_; }
  const LatticeVector& v2() const { return v2_; }
  const WindowSet& window() const { return window_; }
  const DenseGroup& physical_group() const { return phys_; }
  /// G = pi'(Lambda), dense in the internal line.
  const DenseGroup& internal_group() const { return internal_; }

  LatticeVector lattice_point(long n, long m) const;
  /// y* for y in pi(Lambda); throws InvalidArgument otherwise.
  QR star(const QR& y) const;
  std::optional<QR> try_star(const QR& y) const;
  bool in_model_set(const QR& y) const;

 private:
  LatticeVector v1_;
  LatticeVector v2_;
  WindowSet window_;
  DenseGroup phys_;
  DenseGroup internal_;
};

/// The reference scheme v1 = (1, 1), v2 = (tau, 1 - tau), K = [-999/1000, -999/1000 + tau].
CutProjectScheme fibonacci_scheme();

/// Sorted points y of the model set with |y| <= radius.
std::vector<QR> modelset_points(const CutProjectScheme& scheme, const QR& radius);
PointSet1D generate_modelset(const CutProjectScheme& scheme, const QR& radius);

/// P* = intersection of K - x* over x in P.
WindowSet pattern_window(const CutProjectScheme& scheme, const std::vector<QR>& pattern);

bool empire_equal(const CutProjectScheme& scheme, const std::vector<QR>& p, const std::vector<QR>& q);

struct EmpireVerdict {
  bool equal = true;
  /// A lattice translation g admitting exactly one of the two patterns.
  std::optional<Coefficients> separating;
  long translations_checked = 0;
};

/// Direct enumeration over g = n*v1 + m*v2, |n|, |m| <= box_bound.
EmpireVerdict empire_brute(const CutProjectScheme& scheme, const std::vector<QR>& p, const std::vector<QR>& q,
                           long box_bound);

/// Exact product in Gamma(D_K): Defined or Undefined, by testing whether the
/// window of the aligned union meets G.
ProductResult decide_product(const CutProjectScheme& scheme, const PatternClass& x, const PatternClass& y);

/// Orbit label (0, P, beta) of a triple (a, P + a, a + beta) of Gamma(X, G, H), H = R.
struct GxhElement {
  QR beta;
  WindowSet window;

  friend bool operator==(const GxhElement&, const GxhElement&) = default;
};

class GxhSemigroup {
 public:
  GxhSemigroup(WindowSet x, DenseGroup g);

  const WindowSet& base() const { return x_; }
  const DenseGroup& group() const { return g_; }

  /// Non-empty and contains a point of G.
  bool meets_group(const WindowSet& w) const;
  bool is_valid(const GxhElement& e) const;

  GxhElement identity() const { return GxhElement{QR(0), x_}; }
  std::optional<GxhElement> multiply(const GxhElement& x, const GxhElement& y) const;
  GxhElement inverse(const GxhElement& x) const;
  bool leq(const GxhElement& x, const GxhElement& y) const;
  bool is_idempotent(const GxhElement& x) const { return x.beta.is_zero(); }
  const QR& phi(const GxhElement& x) const { return x.beta; }

  /// The maximal element (0, X n (X + beta), beta) when it exists.
  std::optional<GxhElement> maximal(const QR& beta) const;
  GxhElement max_above(const GxhElement& x) const;

 private:
  WindowSet x_;
  DenseGroup g_;
};

GxhSemigroup gxh_semigroup(const CutProjectScheme& scheme);

/// Raw image (-p2*, P*, -p1*) of the pattern class placed at `placement`
/// (offset 0 sits on that point of D_K).
struct GxhTriple {
  QR a;
  WindowSet window;
  QR b;
};
GxhTriple project_raw(const CutProjectScheme& scheme, const PatternClass& x, const QR& placement);

/// Orbit label of project_raw.
GxhElement project_functor(const CutProjectScheme& scheme, const PatternClass& x, const QR& placement);

enum class OverlapRule {
  Interior,    // open sets: overlaps must have positive length
  GroupPoint,  // closed sets seen through G: overlaps must contain a point of G
};

struct MacbeathData {
  std::vector<Coefficients> elements;  // E, as coefficient pairs over (g1, g2)
  std::vector<QR> values;
  /// F': (g, h, g + h) as indices into `elements`.
  std::vector<std::array<std::size_t, 3>> relations;
  long coeff_bound = 0;
  OverlapRule rule = OverlapRule::Interior;

  std::optional<std::size_t> index_of(const Coefficients& c) const;
  /// Generators labelled "g(n,m)".
  OperationTable table() const;
};

bool overlaps(const WindowSet& w, OverlapRule rule, const DenseGroup& g);

MacbeathData macbeath_data(const DenseGroup& group, const WindowSet& v, long coeff_bound,
                           OverlapRule rule = OverlapRule::Interior);

/// Nearest integer to x / s, for x in E(X') with X = (0, r) u (s, s + r).
Integer chi_obstruction(const QR& r, const QR& s, const QR& x);

}  // namespace tilegroup
