#include "tilegroup/psgamma.hpp"

#include <algorithm>

namespace tilegroup {

namespace {

std::string compact(const QR& v) {
  std::string s = v.to_string();
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::size_t position_of(const std::vector<QR>& sorted, const QR& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || !(*it == v)) throw InvalidArgument("pointed point not in pattern");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

PatternClass canonical_class(std::vector<QR> points, const QR& out, const QR& in) {
  if (points.empty()) throw InvalidArgument("pattern is empty");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const QR shift = points.front();
  for (QR& p : points) p -= shift;
  PatternClass c;
  c.out_index = position_of(points, out - shift);
  c.in_index = position_of(points, in - shift);
  c.offsets = std::move(points);
  return c;
}

PatternClass make_element(const PointSet1D& ps, const std::vector<long>& indices, long out, long in) {
  if (indices.empty()) throw InvalidArgument("empty point subset");
  if (std::find(indices.begin(), indices.end(), out) == indices.end() ||
      std::find(indices.begin(), indices.end(), in) == indices.end()) {
    throw InvalidArgument("out/in points must belong to the subset");
  }
  std::vector<QR> pts;
  pts.reserve(indices.size());
  for (long i : indices) pts.push_back(ps.point(i));
  return canonical_class(std::move(pts), ps.point(out), ps.point(in));
}

PatternClass aligned_union(const PatternClass& x, const PatternClass& y) {
  std::vector<QR> pts;
  pts.reserve(x.offsets.size() + y.offsets.size());
  for (const QR& p : x.offsets) pts.push_back(p - x.in_point());
  for (const QR& q : y.offsets) pts.push_back(q - y.out_point());
  return canonical_class(std::move(pts), x.out_point() - x.in_point(), y.in_point() - y.out_point());
}

std::vector<QR> embeddings(const PatternClass& pattern, const PointSet1D& ps) {
  std::vector<QR> out;
  // offsets[0] = 0, so every embedding puts the minimum on some point of the set.
  for (const QR& base : ps.points()) {
    bool ok = true;
    for (std::size_t k = 1; k < pattern.offsets.size() && ok; ++k) ok = ps.contains(base + pattern.offsets[k]);
    if (ok) out.push_back(base);
  }
  return out;
}

ProductResult multiply(const PatternClass& x, const PatternClass& y, const PointSet1D& ps) {
  ProductResult res;
  const PatternClass r = aligned_union(x, y);
  res.placements = embeddings(r, ps);
  if (res.placements.empty()) return res;
  // The class read back from each embedding must not depend on the embedding.
  for (const QR& s : res.placements) {
    std::vector<QR> placed;
    for (const QR& o : r.offsets) placed.push_back(o + s);
    const PatternClass back = canonical_class(std::move(placed), r.out_point() + s, r.in_point() + s);
    if (!(back == r)) throw Error("product class depends on the embedding");
  }
  res.outcome = Outcome::Defined;
  res.value = r;
  return res;
}

PatternClass inverse(const PatternClass& x) {
  PatternClass y = x;
  std::swap(y.out_index, y.in_index);
  return y;
}

bool natural_leq(const PatternClass& x, const PatternClass& y) {
  if (!(phi(x) == phi(y))) return false;
  const QR shift = x.out_point() - y.out_point();
  for (const QR& q : y.offsets) {
    if (!std::binary_search(x.offsets.begin(), x.offsets.end(), q + shift)) return false;
  }
  return true;
}

PatternClass max_above(const PatternClass& x) { return canonical_class({x.out_point(), x.in_point()}, x.out_point(), x.in_point()); }

QR phi(const PatternClass& x) { return x.out_point() - x.in_point(); }

bool is_idempotent(const PatternClass& x) { return x.out_index == x.in_index; }

PatternClass theta(const QR& value) { return canonical_class({value, QR(0)}, value, QR(0)); }

DiffTable maxset_table(const PointSet1D& ps, const QR& bound) {
  DiffTable out;
  for (auto& e : diff_set(ps, bound)) out.values.push_back(e.value);
  for (const QR& v : out.values) out.table.labels.push_back(compact(v));
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    for (std::size_t j = 0; j < out.values.size(); ++j) {
      const auto s = oplus(out.values[i], out.values[j], ps);
      if (!s) continue;
      auto it = std::lower_bound(out.values.begin(), out.values.end(), s->value);
      if (it == out.values.end() || !(*it == s->value)) continue;
      out.table.entries.push_back({i, j, static_cast<std::size_t>(it - out.values.begin())});
    }
  }
  return out;
}

}  // namespace tilegroup
