#include "tilegroup/modelset.hpp"

#include <algorithm>
#include <cmath>

namespace tilegroup {

namespace {

QR from_integer(const Integer& n) { return QR(Rational(n)); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace

DenseGroup::DenseGroup(QR g1, QR g2) : g1_(std::move(g1)), g2_(std::move(g2)) {
  det_ = g1_.rat_part() * g2_.surd_part() - g2_.rat_part() * g1_.surd_part();
  if (det_ == 0) throw InvalidArgument("group generators " + g1_.to_string() + ", " + g2_.to_string() +
                                       " are linearly dependent over Q");
  if (g1_.discriminant() != 0 && g2_.discriminant() != 0 && g1_.discriminant() != g2_.discriminant()) {
    throw DiscriminantMismatch("group generators live in different fields");
  }
}

std::optional<std::pair<Integer, Integer>> DenseGroup::coefficients(const QR& x) const {
  const unsigned long d = std::max(g1_.discriminant(), g2_.discriminant());
  if (!x.is_rational() && x.discriminant() != d) return std::nullopt;
  const Rational& xr = x.rat_part();
  const Rational& xs = x.surd_part();
  Rational n = (xr * g2_.surd_part() - g2_.rat_part() * xs) / det_;
  Rational m = (g1_.rat_part() * xs - xr * g1_.surd_part()) / det_;
  n.canonicalize();
  m.canonicalize();
  if (!is_integral(n) || !is_integral(m)) return std::nullopt;
  return std::make_pair(Integer(n.get_num()), Integer(m.get_num()));
}

CutProjectScheme::CutProjectScheme(LatticeVector v1, LatticeVector v2, WindowSet window)
    : v1_(std::move(v1)),
      v2_(std::move(v2)),
      window_(std::move(window)),
      phys_(v1_.phys, v2_.phys),
      internal_(v1_.internal, v2_.internal) {
  if ((v1_.phys * v2_.internal - v2_.phys * v1_.internal).is_zero()) {
    throw InvalidArgument("lattice basis is degenerate");
  }
  if (window_.empty()) throw InvalidArgument("window is empty");
  for (const auto& c : window_.components()) {
    if (c.degenerate()) throw InvalidArgument("window component " + c.lo.to_string() + " is a single point");
  }
}

LatticeVector CutProjectScheme::lattice_point(long n, long m) const {
  return LatticeVector{QR(n) * v1_.phys + QR(m) * v2_.phys, QR(n) * v1_.internal + QR(m) * v2_.internal};
}

std::optional<QR> CutProjectScheme::try_star(const QR& y) const {
  const auto c = phys_.coefficients(y);
  if (!c) return std::nullopt;
  return from_integer(c->first) * v1_.internal + from_integer(c->second) * v2_.internal;
}

QR CutProjectScheme::star(const QR& y) const {
  auto s = try_star(y);
  if (!s) throw InvalidArgument(y.to_string() + " is not in the projected lattice");
  return *s;
}

bool CutProjectScheme::in_model_set(const QR& y) const {
  const auto s = try_star(y);
  return s && window_.contains(*s);
}

CutProjectScheme fibonacci_scheme() {
  const QR tau = QR::golden();
  const QR lo(Rational(-999, 1000));
  return CutProjectScheme(LatticeVector{QR(1), QR(1)}, LatticeVector{tau, QR(1) - tau},
                          WindowSet::interval(lo, lo + tau));
}

std::vector<QR> modelset_points(const CutProjectScheme& scheme, const QR& radius) {
  if (radius.sign() <= 0) throw InvalidArgument("radius must be positive");
  const auto& v1 = scheme.v1();
  const auto& v2 = scheme.v2();
  const QR det = v1.phys * v2.internal - v2.phys * v1.internal;
  // (n, m) = M^{-1} (y, y*); the box is the image of [-R, R] x hull(K), padded.
  double nlo = HUGE_VAL, nhi = -HUGE_VAL, mlo = HUGE_VAL, mhi = -HUGE_VAL;
  for (const QR& y : {-radius, radius}) {
    for (const QR& ys : {scheme.window().lower(), scheme.window().upper()}) {
      const double n = ((y * v2.internal - v2.phys * ys) / det).to_double();
      const double m = ((v1.phys * ys - y * v1.internal) / det).to_double();
      nlo = std::min(nlo, n);
      nhi = std::max(nhi, n);
      mlo = std::min(mlo, m);
      mhi = std::max(mhi, m);
    }
  }
  std::vector<QR> out;
  for (long n = static_cast<long>(std::floor(nlo)) - 2; n <= static_cast<long>(std::ceil(nhi)) + 2; ++n) {
    for (long m = static_cast<long>(std::floor(mlo)) - 2; m <= static_cast<long>(std::ceil(mhi)) + 2; ++m) {
      const LatticeVector p = scheme.lattice_point(n, m);
      if (radius < abs(p.phys)) continue;
      if (scheme.window().contains(p.internal)) out.push_back(p.phys);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet1D generate_modelset(const CutProjectScheme& scheme, const QR& radius) {
  auto pts = modelset_points(scheme, radius);
  if (pts.empty()) throw EmptyModelSet("no model-set points within radius " + radius.to_string());
  return pointset_from_points(std::move(pts));
}

WindowSet pattern_window(const CutProjectScheme& scheme, const std::vector<QR>& pattern) {
  if (pattern.empty()) throw InvalidArgument("pattern is empty");
  WindowSet w = scheme.window().translate(-scheme.star(pattern.front()));
  for (const QR& x : pattern) w = w.intersect(scheme.window().translate(-scheme.star(x)));
  return w;
}

namespace {

void require_in_model_set(const CutProjectScheme& scheme, const std::vector<QR>& pattern) {
  for (const QR& x : pattern) {
    if (!scheme.in_model_set(x)) throw InvalidArgument(x.to_string() + " is not a point of the model set");
  }
}

}  // namespace

bool empire_equal(const CutProjectScheme& scheme, const std::vector<QR>& p, const std::vector<QR>& q) {
  require_in_model_set(scheme, p);
  require_in_model_set(scheme, q);
  // Only points of G are reachable by lattice translations; isolated points outside G are invisible.
  const DenseGroup& g = scheme.internal_group();
  auto visible = [&g](const WindowSet& w) {
    std::vector<Interval> keep;
    for (const Interval& c : w.components()) {
      if (!c.degenerate() || g.contains(c.lo)) keep.push_back(c);
    }
    return WindowSet(std::move(keep));
  };
  return visible(pattern_window(scheme, p)) == visible(pattern_window(scheme, q));
}

EmpireVerdict empire_brute(const CutProjectScheme& scheme, const std::vector<QR>& p, const std::vector<QR>& q,
                           long box_bound) {
  if (box_bound < 0) throw InvalidArgument("box bound must be non-negative");
  std::vector<QR> ps, qs;
  for (const QR& x : p) ps.push_back(scheme.star(x));
  for (const QR& x : q) qs.push_back(scheme.star(x));
  const WindowSet& k = scheme.window();
  auto admits = [&k](const std::vector<QR>& stars, const QR& g) {
    return std::all_of(stars.begin(), stars.end(), [&](const QR& s) { return k.contains(s + g); });
  };
  EmpireVerdict v;
  for (long n = -box_bound; n <= box_bound; ++n) {
    for (long m = -box_bound; m <= box_bound; ++m) {
      const QR g = QR(n) * scheme.v1().internal + QR(m) * scheme.v2().internal;
      ++v.translations_checked;
      if (admits(ps, g) != admits(qs, g)) {
        v.equal = false;
        v.separating = Coefficients{n, m};
        return v;
      }
    }
  }
  return v;
}

ProductResult decide_product(const CutProjectScheme& scheme, const PatternClass& x, const PatternClass& y) {
  ProductResult res;
  const PatternClass r = aligned_union(x, y);
  const WindowSet w = pattern_window(scheme, r.offsets);
  if (overlaps(w, OverlapRule::GroupPoint, scheme.internal_group())) {
    res.outcome = Outcome::Defined;
    res.value = r;
  } else {
    res.outcome = Outcome::Undefined;
  }
  return res;
}

GxhSemigroup::GxhSemigroup(WindowSet x, DenseGroup g) : x_(std::move(x)), g_(std::move(g)) {
  if (x_.empty()) throw InvalidArgument("base set is empty");
}

bool GxhSemigroup::meets_group(const WindowSet& w) const { return overlaps(w, OverlapRule::GroupPoint, g_); }

bool GxhSemigroup::is_valid(const GxhElement& e) const {
  return g_.contains(e.beta) && meets_group(e.window) && e.window.is_subset_of(x_) &&
         e.window.is_subset_of(x_.translate(e.beta));
}

std::optional<GxhElement> GxhSemigroup::multiply(const GxhElement& x, const GxhElement& y) const {
  WindowSet w = x.window.intersect(y.window.translate(x.beta));
  if (!meets_group(w)) return std::nullopt;
  return GxhElement{x.beta + y.beta, std::move(w)};
}

GxhElement GxhSemigroup::inverse(const GxhElement& x) const { return GxhElement{-x.beta, x.window.translate(-x.beta)}; }

bool GxhSemigroup::leq(const GxhElement& x, const GxhElement& y) const {
  return x.beta == y.beta && x.window.is_subset_of(y.window);
}

std::optional<GxhElement> GxhSemigroup::maximal(const QR& beta) const {
  WindowSet w = x_.intersect(x_.translate(beta));
  if (!meets_group(w)) return std::nullopt;
  return GxhElement{beta, std::move(w)};
}

GxhElement GxhSemigroup::max_above(const GxhElement& x) const {
  auto m = maximal(x.beta);
  if (!m) throw InvalidArgument("element has no maximal element above it; it is not valid");
  return *m;
}

GxhSemigroup gxh_semigroup(const CutProjectScheme& scheme) {
  return GxhSemigroup(scheme.window(), scheme.internal_group());
}

GxhTriple project_raw(const CutProjectScheme& scheme, const PatternClass& x, const QR& placement) {
  std::vector<QR> pts;
  for (const QR& o : x.offsets) {
    pts.push_back(o + placement);
    if (!scheme.in_model_set(pts.back())) {
      throw InvalidArgument("pattern does not place inside the model set at " + placement.to_string());
    }
  }
  GxhTriple t;
  t.a = -scheme.star(x.out_point() + placement);
  t.b = -scheme.star(x.in_point() + placement);
  t.window = pattern_window(scheme, pts);
  return t;
}

GxhElement project_functor(const CutProjectScheme& scheme, const PatternClass& x, const QR& placement) {
  const GxhTriple t = project_raw(scheme, x, placement);
  return GxhElement{t.b - t.a, t.window.translate(-t.a)};
}

bool overlaps(const WindowSet& w, OverlapRule rule, const DenseGroup& g) {
  if (rule == OverlapRule::Interior) return w.has_interior();
  for (const auto& c : w.components()) {
    if (!c.degenerate() || g.contains(c.lo)) return true;
  }
  return false;
}

std::optional<std::size_t> MacbeathData::index_of(const Coefficients& c) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), c);
  if (it == elements.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

OperationTable MacbeathData::table() const {
  OperationTable t;
  for (const auto& [n, m] : elements) t.labels.push_back("g(" + std::to_string(n) + "," + std::to_string(m) + ")");
  t.entries = relations;
  return t;
}

MacbeathData macbeath_data(const DenseGroup& group, const WindowSet& v, long coeff_bound, OverlapRule rule) {
  if (coeff_bound < 0) throw InvalidArgument("coefficient bound must be non-negative");
  MacbeathData out;
  out.coeff_bound = coeff_bound;
  out.rule = rule;
  for (long n = -coeff_bound; n <= coeff_bound; ++n) {
    for (long m = -coeff_bound; m <= coeff_bound; ++m) {
      const QR g = group.element(n, m);
      if (overlaps(v.intersect(v.translate(-g)), rule, group)) out.elements.emplace_back(n, m);
    }
  }
  for (const auto& c : out.elements) out.values.push_back(group.element(c));

  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    const WindowSet vg = v.intersect(v.translate(out.values[i]));
    for (std::size_t j = 0; j < out.elements.size(); ++j) {
      const Coefficients sum{out.elements[i].first + out.elements[j].first,
                             out.elements[i].second + out.elements[j].second};
      if (std::abs(sum.first) > coeff_bound || std::abs(sum.second) > coeff_bound) continue;
      if (!overlaps(vg.intersect(v.translate(out.values[i] + out.values[j])), rule, group)) continue;
      const auto k = out.index_of(sum);
      if (!k) throw Error("triple overlap without pair overlap; overlap rule is inconsistent");
      out.relations.push_back({i, j, *k});
    }
  }
  return out;
}

Integer chi_obstruction(const QR& r, const QR& s, const QR& x) {
  if (r.sign() <= 0) throw InvalidArgument("r must be positive");
  if (!(QR(8) * r < abs(s))) throw InvalidArgument("chi needs |s| > 8r");
  const QR q = x / s;
  const Integer n = (q + QR(Rational(1, 2))).floor();
  if (!(abs(q - from_integer(n)) < QR(Rational(1, 4)))) {
    throw InvalidArgument("x/s = " + q.to_string() + " is not within 1/4 of an integer");
  }
  if (n < -1 || n > 1) throw InvalidArgument("x/s = " + q.to_string() + " is not near -1, 0 or 1");
  return n;
}

}  // namespace tilegroup
