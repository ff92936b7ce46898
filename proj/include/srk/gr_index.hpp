#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "srk/errors.hpp"
#include "srk/verdict.hpp"

namespace srk {

/// Schubert index a_1 < ... < a_k <= n for G(k,n).
struct GrIndex {
  int k = 0;
  int n = 0;
  std::vector<int> a;

  auto operator<=>(const GrIndex&) const = default;
  bool operator==(const GrIndex&) const = default;
};

inline GrIndex validate_gr(int k, int n, std::vector<int> a) {
  if (k < 1 || static_cast<int>(a.size()) != k)
    throw Error(ErrorCode::BadArity, "expected " + std::to_string(k) + " parts, got " +
                                         std::to_string(a.size()));
  if (k > n) throw Error(ErrorCode::OutOfBounds, "k exceeds n");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] <= a[i - 1])
      throw Error(ErrorCode::NotStrictlyIncreasing, "a_" + std::to_string(i + 1) +
                                                        " <= a_" + std::to_string(i));
  if (a.front() < 1) throw Error(ErrorCode::OutOfBounds, "a_1 < 1");
  if (a.back() > n) throw Error(ErrorCode::OutOfBounds, "a_k > n");
  return GrIndex{k, n, std::move(a)};
}

inline int gr_dimension(const GrIndex& x) {
  int d = 0;
  for (int i = 0; i < x.k; ++i) d += x.a[i] - (i + 1);
  return d;
}

inline int gr_codimension(const GrIndex& x) { return x.k * (x.n - x.k) - gr_dimension(x); }

/// lambda_i = n - k + i - a_i, weakly decreasing.
inline std::vector<int> gr_partition(const GrIndex& x) {
  std::vector<int> lam(x.k);
  for (int i = 0; i < x.k; ++i) lam[i] = x.n - x.k + (i + 1) - x.a[i];
  return lam;
}

inline GrIndex gr_dual(const GrIndex& x) {
  const auto lam = gr_partition(x);
  const int kd = x.n - x.k;
  std::vector<int> a(kd);
  for (int i = 1; i <= kd; ++i) {
    int t = 0;
    for (int v : lam)
      if (v >= i) ++t;
    a[i - 1] = (x.n - kd) + i - t;
  }
  return GrIndex{kd, x.n, std::move(a)};
}

/// 1-based essential positions. Position k counts only when a_k < n.
inline std::vector<int> gr_essential(const GrIndex& x) {
  std::vector<int> out;
  for (int i = 1; i <= x.k; ++i) {
    bool ess = (i < x.k) ? x.a[i - 1] != x.a[i] - 1 : x.a[i - 1] < x.n;
    if (ess) out.push_back(i);
  }
  return out;
}

inline bool gr_is_essential(const GrIndex& x, int i) {
  auto e = gr_essential(x);
  return std::find(e.begin(), e.end(), i) != e.end();
}

inline Verdict gr_rigid_index(const GrIndex& x, int i) {
  if (i < 1 || i > x.k)
    throw Error(ErrorCode::PositionOutOfRange, "position " + std::to_string(i));
  if (!gr_is_essential(x, i)) return {VerdictKind::NotEssential, "", ""};
  const int ai = x.a[i - 1];
  const int prev = (i > 1) ? x.a[i - 2] : 0;
  if (i == x.k) return {VerdictKind::Rigid, "i=k", ""};
  if (ai == i) return {VerdictKind::Rigid, "a_i=i", ""};
  if (ai <= x.a[i] - 3) return {VerdictKind::Rigid, "gap>=3", ""};
  if (ai == prev + 1) return {VerdictKind::Rigid, "a_i=a_{i-1}+1", ""};
  return {VerdictKind::NotRigid, "", ""};
}

inline bool gr_rigid_class(const GrIndex& x) {
  for (int i : gr_essential(x))
    if (!gr_rigid_index(x, i).is(VerdictKind::Rigid)) return false;
  return true;
}

/// Index of the smallest Schubert variety containing every representative.
inline GrIndex gr_envelope(const GrIndex& x) {
  GrIndex out = x;
  for (int i = x.k; i >= 1; --i) {
    bool keep = gr_rigid_index(x, i).is(VerdictKind::Rigid);
    if (keep) continue;
    out.a[i - 1] = (i == x.k) ? x.n : out.a[i] - 1;
  }
  return out;
}

}  // namespace srk
