#pragma once

// Independent reference computations. Nothing here calls into the engine;
// each function recomputes its answer from first principles.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

/// Young diagram as a 0/1 grid, transposed by swapping coordinates.
inline std::vector<int> transpose(const std::vector<int>& lam, int width) {
  int rows = static_cast<int>(lam.size());
  std::vector<std::vector<int>> grid(rows, std::vector<int>(width, 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lam[r]; ++c) grid[r][c] = 1;
  std::vector<int> out(width, 0);
  for (int c = 0; c < width; ++c)
    for (int r = 0; r < rows; ++r) out[c] += grid[r][c];
  return out;
}

inline int boxes(const std::vector<int>& lam) {
  int t = 0;
  for (int v : lam) t += v;
  return t;
}

/// Dimension of a type-A Schubert variety as k(n-k) minus the partition size.
inline int gr_dim(int k, int n, const std::vector<int>& a) {
  std::vector<int> lam;
  for (int i = 1; i <= k; ++i) lam.push_back(n - k + i - a[i - 1]);
  return k * (n - k) - boxes(lam);
}

/// Dimension of an OG Schubert variety by choosing a basis vector by vector:
/// a-vectors move in isotropic F_{a_i}; b-vectors (largest b first) move in the
/// isotropic cone of F_b^perp cut by the previously chosen vectors not in F_b.
inline int og_dim(int n, const std::vector<int>& a, const std::vector<int>& b) {
  const int s = static_cast<int>(a.size());
  const int q = static_cast<int>(b.size());
  int d = 0;
  for (int i = 1; i <= s; ++i) d += a[i - 1] - i;
  for (int t = 1; t <= q; ++t) {
    const int bt = b[q - t];
    int above = 0;
    for (int ai : a)
      if (ai > bt) ++above;
    const int ambient = n - bt - above - (t - 1);
    d += ambient - 1 - (s + t);
  }
  return d;
}

inline std::int64_t factorial(int m) {
  std::int64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

inline std::int64_t order_A(int rank) { return factorial(rank + 1); }
inline std::int64_t order_B(int rank) { return (std::int64_t{1} << rank) * factorial(rank); }
inline std::int64_t order_D(int rank) {
  if (rank <= 1) return 1;
  return (std::int64_t{1} << (rank - 1)) * factorial(rank);
}

/// Number of Schubert cells of OG(k,n) as |W| / |W_P|.
/// For n = 2k the variety has two components, each contributing |W(D_k)| / |W(A_{k-1})|.
inline std::int64_t og_cell_count(int k, int n) {
  const int m = n / 2;
  if (n % 2 == 1) return order_B(m) / (order_A(k - 1) * order_B(m - k));
  if (k == m) return 2 * order_D(m) / order_A(k - 1);
  return order_D(m) / (order_A(k - 1) * order_D(m - k));
}

/// A type-A term with multiplicity, keyed by the a list.
using GrSum = std::map<std::vector<int>, std::int64_t>;

/// [OG(k,n)] = 2^k sigma_a with a_i = n - 2k + 2i - 1.
inline GrSum fundamental_class(int k, int n) {
  std::vector<int> a;
  for (int i = 1; i <= k; ++i) a.push_back(n - 2 * k + 2 * i - 1);
  return {{a, std::int64_t{1} << k}};
}

inline bool strictly_increasing(const std::vector<int>& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] <= a[i - 1]) return false;
  return true;
}

/// sigma_{1..k-1}^b pushes forward to 2 sigma_{1,...,k-1,n-b-1}.
inline GrSum pushforward_head(int k, int n, int b) {
  std::vector<int> a;
  for (int i = 1; i <= k - 1; ++i) a.push_back(i);
  a.push_back(n - b - 1);
  return {{a, 2}};
}

/// sigma_{1..t,t+2..k}^t pushes forward to 2 sum_{i=1}^{k-t} sigma_{1..k-i, k-i+2..k, n-t-i}.
/// Terms whose index is not strictly increasing are zero classes and are dropped.
inline GrSum pushforward_gapped(int k, int n, int t) {
  GrSum out;
  for (int i = 1; i <= k - t; ++i) {
    std::vector<int> a;
    for (int v = 1; v <= k - i; ++v) a.push_back(v);
    for (int v = k - i + 2; v <= k; ++v) a.push_back(v);
    a.push_back(n - t - i);
    if (!strictly_increasing(a) || a.back() > n) continue;
    out[a] += 2;
  }
  return out;
}

}  // namespace oracle
