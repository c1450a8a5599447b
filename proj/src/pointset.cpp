#include "tilegroup/pointset.hpp"

#include <algorithm>
#include <set>

#include "tilegroup/intmatrix.hpp"

namespace tilegroup {

void validate_lengths(const LengthFunction& lengths) {
  if (lengths.empty()) throw InvalidArgument("length function is empty");
  std::vector<QR> seen;
  for (const auto& [letter, len] : lengths) {
    if (len.sign() <= 0) throw InvalidArgument(std::string("length of ") + letter + " is not positive");
    for (const QR& other : seen) {
      if (other == len) throw InvalidArgument("length function is not injective");
    }
    seen.push_back(len);
  }
}

PointSet1D::PointSet1D(std::vector<QR> points, long first_index, IndexedWord gap_word, LengthFunction lengths)
    : points_(std::move(points)), first_(first_index), gap_word_(std::move(gap_word)), lengths_(std::move(lengths)) {
  if (points_.empty()) throw InvalidArgument("point set is empty");
  if (first_ > 0 || last_index() < 0) throw InvalidArgument("point set window must contain index 0");
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!(points_[k - 1] < points_[k])) throw InvalidArgument("points must be strictly increasing");
  }
}

const QR& PointSet1D::point(long i) const {
  if (i < first_ || i > last_index()) {
    throw OutOfTruncation("point index " + std::to_string(i) + " outside [" + std::to_string(first_) + ", " +
                          std::to_string(last_index()) + "]");
  }
  return points_[static_cast<std::size_t>(i - first_)];
}

std::optional<long> PointSet1D::index_of(const QR& y) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), y);
  if (it == points_.end() || !(*it == y)) return std::nullopt;
  return first_ + static_cast<long>(it - points_.begin());
}

QR PointSet1D::max_gap() const {
  QR best(0);
  for (std::size_t k = 1; k < points_.size(); ++k) best = max(best, points_[k] - points_[k - 1]);
  return best;
}

PointSet1D build_pointset(const IndexedWord& window, const LengthFunction& lengths, const QR& anchor) {
  if (window.letters.empty()) throw InvalidArgument("window is empty");
  validate_lengths(lengths);
  const long start = window.start_index;
  const long last = window.end_index() - 1;
  if (start - 1 > 0 || last < 0) throw InvalidArgument("window must cover index 0 or 1 so that r_0 is determined");
  for (char c : window.letters) {
    if (!lengths.count(c)) throw InvalidArgument(std::string("no length for letter ") + c);
  }
  // Points r_{start-1} .. r_{last}; r_i - r_{i-1} = |T(i)|.
  const std::size_t n = window.letters.size() + 1;
  std::vector<QR> pts(n);
  const auto zero_pos = static_cast<std::size_t>(-(start - 1));
  pts[zero_pos] = anchor;
  for (std::size_t k = zero_pos + 1; k < n; ++k) pts[k] = pts[k - 1] + lengths.at(window.letters[k - 1]);
  for (std::size_t k = zero_pos; k > 0; --k) pts[k - 1] = pts[k] - lengths.at(window.letters[k - 1]);
  return PointSet1D(std::move(pts), start - 1, window, lengths);
}

PointSet1D pointset_from_points(std::vector<QR> sorted_points) {
  if (sorted_points.empty()) throw InvalidArgument("no points");
  std::vector<QR> gaps;
  for (std::size_t k = 1; k < sorted_points.size(); ++k) {
    const QR g = sorted_points[k] - sorted_points[k - 1];
    if (g.sign() <= 0) throw InvalidArgument("points must be strictly increasing");
    if (std::find(gaps.begin(), gaps.end(), g) == gaps.end()) gaps.push_back(g);
  }
  std::sort(gaps.begin(), gaps.end(), [](const QR& x, const QR& y) { return y < x; });
  if (gaps.size() > 26) throw InvalidArgument("too many distinct gaps to label");
  LengthFunction lengths;
  for (std::size_t k = 0; k < gaps.size(); ++k) lengths[static_cast<char>('a' + k)] = gaps[k];

  std::size_t zero = sorted_points.size() - 1;
  for (std::size_t k = 0; k < sorted_points.size(); ++k) {
    if (sorted_points[k].sign() >= 0) {
      zero = k;
      break;
    }
  }
  const long first = -static_cast<long>(zero);
  IndexedWord word;
  word.start_index = first + 1;
  for (std::size_t k = 1; k < sorted_points.size(); ++k) {
    const QR g = sorted_points[k] - sorted_points[k - 1];
    const auto pos = std::find(gaps.begin(), gaps.end(), g) - gaps.begin();
    word.letters.push_back(static_cast<char>('a' + pos));
  }
  return PointSet1D(std::move(sorted_points), first, std::move(word), std::move(lengths));
}

std::vector<DiffElement> diff_set(const PointSet1D& ps, const QR& bound) {
  if (bound.sign() < 0) throw InvalidArgument("bound must be non-negative");
  std::map<QR, DiffElement> acc;
  const auto& pts = ps.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const QR v = pts[i] - pts[j];
      if (bound < abs(v)) continue;
      auto& e = acc[v];
      e.value = v;
      e.witnesses.emplace_back(ps.first_index() + static_cast<long>(i), ps.first_index() + static_cast<long>(j));
    }
  }
  std::vector<DiffElement> out;
  out.reserve(acc.size());
  for (auto& [v, e] : acc) out.push_back(std::move(e));
  return out;
}

std::optional<DiffElement> oplus(const QR& a, const QR& b, const PointSet1D& ps) {
  DiffElement out;
  out.value = a + b;
  for (long y = ps.first_index(); y <= ps.last_index(); ++y) {
    const QR& ry = ps.point(y);
    const auto x = ps.index_of(ry + a);
    if (!x) continue;
    const auto z = ps.index_of(ry - b);
    if (!z) continue;
    out.witnesses.emplace_back(*x, *z);
  }
  if (out.witnesses.empty()) return std::nullopt;
  return out;
}

std::vector<DiffElement> generator_set_delta(const PointSet1D& ps, const QR& R) {
  if (R.sign() <= 0) throw InvalidArgument("generator radius must be positive");
  if (R < ps.max_gap()) throw InvalidArgument("generator radius " + R.to_string() + " is below the largest gap");
  return diff_set(ps, R);
}

std::vector<QR> delta_chain(const PointSet1D& ps, long i, long j) {
  std::vector<QR> out;
  if (i >= j) {
    for (long k = i; k > j; --k) out.push_back(ps.point(k) - ps.point(k - 1));
  } else {
    for (long k = i; k < j; ++k) out.push_back(ps.point(k) - ps.point(k + 1));
  }
  return out;
}

LatticeInvariants hd_invariants(const std::vector<QR>& values) {
  unsigned long disc = 0;
  for (const QR& v : values) {
    if (v.is_rational()) continue;
    if (disc != 0 && disc != v.discriminant()) throw DiscriminantMismatch("values span more than one field");
    disc = v.discriminant();
  }
  Integer denom = 1;
  for (const QR& v : values) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.rat_part().get_den_mpz_t());
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.surd_part().get_den_mpz_t());
  }
  // Coordinates (surd, rational) so the echelon basis leads with the irrational direction.
  IntMatrix m(static_cast<Eigen::Index>(values.size()), 2);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Rational s = values[k].surd_part() * Rational(denom);
    const Rational r = values[k].rat_part() * Rational(denom);
    m(static_cast<Eigen::Index>(k), 0) = s.get_num();
    m(static_cast<Eigen::Index>(k), 1) = r.get_num();
  }
  const auto h = hermite_normal_form(m);
  LatticeInvariants out;
  out.rank = static_cast<long>(h.rank);
  for (Eigen::Index k = 0; k < h.rank; ++k) {
    const Rational s(h.basis(k, 0), denom);
    const Rational r(h.basis(k, 1), denom);
    out.basis.push_back(s == 0 ? QR(Rational(r)) : QR(Rational(r), Rational(s), disc));
  }
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

}  // namespace tilegroup
