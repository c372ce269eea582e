#pragma once

#include <array>
#include <vector>

#include "hpoly.hpp"
#include "scalar.hpp"

namespace prj3d {

template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <class T>
Mat4<T> identity4() {
  Mat4<T> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = T(i == j ? 1 : 0);
  return m;
}

template <class T>
Mat4<T> operator*(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      T s(0);
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

template <class T>
T det2(const T& a, const T& b, const T& c, const T& d) {
  return a * d - b * c;
}

/// Determinant by Laplace expansion along the first two columns. Works for any
/// commutative ring, including HPoly entries.
template <class T>
T det4(const Mat4<T>& m) {
  static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  T r{};
  bool first = true;
  for (int p = 0; p < 6; ++p) {
    int i = pairs[p][0], j = pairs[p][1];
    int k = pairs[5 - p][0], l = pairs[5 - p][1];
    T left = det2(m[i][0], m[i][1], m[j][0], m[j][1]);
    T right = det2(m[k][2], m[k][3], m[l][2], m[l][3]);
    // sign of the permutation (i, j, k, l)
    bool neg = (i + j + 1) % 2 == 1;
    T term = left * right;
    if (neg) term = -term;
    if (first) {
      r = term;
      first = false;
    } else {
      r += term;
    }
  }
  return r;
}

/// Exact inverse by Gauss-Jordan elimination over a field.
template <class T>
Mat4<T> mat4_inverse(const Mat4<T>& m) {
  Mat4<T> a = m, inv = identity4<T>();
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if (!is_zero(a[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error(Errc::SingularMatrix, "matrix is singular");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    T s = T(1) / a[c][c];
    for (int j = 0; j < 4; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c || is_zero(a[r][c])) continue;
      T f = a[r][c];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Rank of a dense matrix over a field.
template <class T>
int rank(std::vector<std::vector<T>> a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size()), rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (!is_zero(a[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rk], a[piv]);
    for (int r = rk + 1; r < rows; ++r) {
      if (is_zero(a[r][c])) continue;
      T f = a[r][c] / a[rk][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

/// Basis of the right nullspace of a (rows x cols) over a field.
template <class T>
std::vector<std::vector<T>> nullspace(std::vector<std::vector<T>> a, int cols) {
  int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (!is_zero(a[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rk], a[piv]);
    T s = T(1) / a[rk][c];
    for (int j = 0; j < cols; ++j) a[rk][j] *= s;
    for (int r = 0; r < rows; ++r) {
      if (r == rk || is_zero(a[r][c])) continue;
      T f = a[r][c];
      for (int j = 0; j < cols; ++j) a[r][j] -= f * a[rk][j];
    }
    pivot_col.push_back(c);
    ++rk;
  }
  std::vector<std::vector<T>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (int r = 0; r < rk; ++r) v[pivot_col[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace prj3d
