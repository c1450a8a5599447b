#pragma once

// Hermite and Smith normal forms over the integers.
//
// Both are templated on the integer scalar so the same code runs on
// machine integers (handy in tests) and on gmp integers (what the library
// uses, since lattice and relation matrices can grow without bound).

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "tilegroup/eigen_traits.hpp"

namespace tilegroup {

template <typename Scalar>
using DynMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DynMatrix<Integer>;

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer abs_value(const Integer& a) { return abs(a); }
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }

template <typename Scalar>
void add_row_multiple(DynMatrix<Scalar>& m, Eigen::Index target, Eigen::Index source, const Scalar& factor) {
  if (factor == 0) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (m(source, c) != 0) m(target, c) += factor * m(source, c);
  }
}

template <typename Scalar>
void add_col_multiple(DynMatrix<Scalar>& m, Eigen::Index target, Eigen::Index source, const Scalar& factor) {
  if (factor == 0) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (m(r, source) != 0) m(r, target) += factor * m(r, source);
  }
}

template <typename Scalar>
void swap_rows(DynMatrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

template <typename Scalar>
void swap_cols(DynMatrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

template <typename Scalar>
DynMatrix<Scalar> identity(Eigen::Index n) {
  DynMatrix<Scalar> id(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) id(i, j) = (i == j) ? Scalar(1) : Scalar(0);
  return id;
}

}  // namespace detail

/// Exact product; avoids Eigen's blocked kernels, which assume cheap scalars.
template <typename Scalar>
DynMatrix<Scalar> exact_product(const DynMatrix<Scalar>& a, const DynMatrix<Scalar>& b) {
  DynMatrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

template <typename Scalar>
struct HermiteForm {
  Eigen::Index rank = 0;
  /// rank x cols, row echelon with positive pivots and reduced entries above
  /// each pivot (0 <= entry < pivot).
  DynMatrix<Scalar> basis;
};

/// Row Hermite normal form of the lattice spanned by the rows of `m`.
template <typename Scalar>
HermiteForm<Scalar> hermite_normal_form(DynMatrix<Scalar> m) {
  using detail::abs_value;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index row = 0;
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index r = row; r < rows; ++r) {
        if (m(r, col) == 0) continue;
        if (best < 0 || abs_value(m(r, col)) < abs_value(m(best, col))) best = r;
      }
      if (best < 0) break;
      detail::swap_rows(m, row, best);
      bool clean = true;
      for (Eigen::Index r = row + 1; r < rows; ++r) {
        if (m(r, col) == 0) continue;
        Scalar q = detail::floor_div(m(r, col), m(row, col));
        detail::add_row_multiple(m, r, row, Scalar(-q));
        if (m(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (row >= rows || m(row, col) == 0) continue;
    if (m(row, col) < 0) {
      for (Eigen::Index c = 0; c < cols; ++c) m(row, c) = -m(row, c);
    }
    for (Eigen::Index r = 0; r < row; ++r) {
      Scalar q = detail::floor_div(m(r, col), m(row, col));
      detail::add_row_multiple(m, r, row, Scalar(-q));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  HermiteForm<Scalar> out;
  out.rank = row;
  out.basis = m.topRows(row);
  return out;
}

template <typename Scalar>
struct SmithForm {
  /// Diagonal form with d_1 | d_2 | ... and d_i > 0 on the first `rank` entries.
  DynMatrix<Scalar> diagonal;
  /// Unimodular transforms with left * input * right == diagonal.
  DynMatrix<Scalar> left;
  DynMatrix<Scalar> right;
  Eigen::Index rank = 0;
  std::vector<Scalar> invariant_factors;
};

/// Smith normal form by exact elementary operations. Pivots are chosen by
/// smallest non-zero absolute value, first in row-major order.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const DynMatrix<Scalar>& input) {
  using detail::abs_value;
  DynMatrix<Scalar> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  DynMatrix<Scalar> u = detail::identity<Scalar>(rows);
  DynMatrix<Scalar> v = detail::identity<Scalar>(cols);

  auto row_op = [&](Eigen::Index target, Eigen::Index source, const Scalar& f) {
    detail::add_row_multiple(a, target, source, f);
    detail::add_row_multiple(u, target, source, f);
  };
  auto col_op = [&](Eigen::Index target, Eigen::Index source, const Scalar& f) {
    detail::add_col_multiple(a, target, source, f);
    detail::add_col_multiple(v, target, source, f);
  };

  Eigen::Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    while (true) {
      Eigen::Index pi = -1;
      Eigen::Index pj = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pi < 0 || abs_value(a(i, j)) < abs_value(a(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      detail::swap_rows(a, t, pi);
      detail::swap_rows(u, t, pi);
      detail::swap_cols(a, t, pj);
      detail::swap_cols(v, t, pj);

      bool residue = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Scalar q = detail::floor_div(a(i, t), a(t, t));
        row_op(i, t, Scalar(-q));
        if (a(i, t) != 0) residue = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Scalar q = detail::floor_div(a(t, j), a(t, t));
        col_op(j, t, Scalar(-q));
        if (a(t, j) != 0) residue = true;
      }
      if (residue) continue;

      // Row and column are clear; enforce divisibility of the remainder.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          Scalar r = a(i, j) - detail::floor_div(a(i, j), a(t, t)) * a(t, t);
          if (r != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      row_op(t, bad, Scalar(1));
    }
    if (t >= rows || t >= cols || a(t, t) == 0) break;
    if (a(t, t) < 0) {
      for (Eigen::Index c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (Eigen::Index c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SmithForm<Scalar> out;
  out.rank = 0;
  for (Eigen::Index i = 0; i < std::min(rows, cols); ++i) {
    if (a(i, i) == 0) break;
    out.invariant_factors.push_back(a(i, i));
    ++out.rank;
  }
  out.diagonal = std::move(a);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

}  // namespace tilegroup
