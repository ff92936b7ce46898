#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "srk/errors.hpp"

namespace srk {

/// OG(k,n) Schubert index (a_1 < ... < a_s ; b_1 < ... < b_{k-s}).
/// `prime` selects the other family of maximal isotropic spaces for a_s = n/2.
struct OgIndex {
  int k = 0;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
  bool prime = false;

  int s() const { return static_cast<int>(a.size()); }

  // Canonical order: (s, a, prime, b).
  std::strong_ordering operator<=>(const OgIndex& o) const {
    if (auto c = k <=> o.k; c != 0) return c;
    if (auto c = n <=> o.n; c != 0) return c;
    if (auto c = s() <=> o.s(); c != 0) return c;
    if (auto c = a <=> o.a; c != 0) return c;
    if (auto c = prime <=> o.prime; c != 0) return c;
    return b <=> o.b;
  }
  bool operator==(const OgIndex&) const = default;
};

inline OgIndex validate_og(int k, int n, std::vector<int> a, std::vector<int> b, bool prime = false) {
  if (k < 1) throw Error(ErrorCode::BadArity, "k must be positive");
  if (n < 2 * k) throw Error(ErrorCode::NoIsotropicRoom, "n < 2k");
  if (static_cast<int>(a.size() + b.size()) != k)
    throw Error(ErrorCode::BadArity, "|a| + |b| must equal k");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] <= a[i - 1]) throw Error(ErrorCode::NotStrictlyIncreasing, "a not increasing");
  for (std::size_t j = 1; j < b.size(); ++j)
    if (b[j] <= b[j - 1]) throw Error(ErrorCode::NotStrictlyIncreasing, "b not increasing");
  if (!a.empty() && (a.front() < 1 || 2 * a.back() > n))
    throw Error(ErrorCode::OutOfBounds, "a must lie in [1, n/2]");
  if (!b.empty() && (b.front() < 0 || 2 * b.back() > n - 2))
    throw Error(ErrorCode::OutOfBounds, "b must lie in [0, n/2 - 1]");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] == b[j] + 1) {
        SplitError::Part lower{a, b};
        lower.a[i] -= 1;
        SplitError::Part upper{a, b};
        upper.b[j] += 1;
        throw SplitError(static_cast<int>(i) + 1, static_cast<int>(j) + 1, lower, upper,
                         "a_" + std::to_string(i + 1) + " = b_" + std::to_string(j + 1) +
                             " + 1; the locus is a union of two Schubert varieties");
      }
  if (prime && !(n % 2 == 0 && !a.empty() && 2 * a.back() == n))
    throw Error(ErrorCode::BadPrime, "prime requires n even and a_s = n/2");
  return OgIndex{k, n, std::move(a), std::move(b), prime};
}

inline OgIndex validate_og(int k, int n, int s, std::vector<int> a, std::vector<int> b,
                           bool prime = false) {
  if (s < 0 || s > k || static_cast<int>(a.size()) != s)
    throw Error(ErrorCode::BadArity, "s does not match |a|");
  return validate_og(k, n, std::move(a), std::move(b), prime);
}

/// True when the index needs the even-n rewrite b_{k-s} = n/2 - 1.
inline bool og_needs_rewrite(const OgIndex& x) {
  return x.n % 2 == 0 && !x.b.empty() && 2 * (x.b.back() + 1) == x.n;
}

/// Rewrites Λ ⊂ F_{n/2-1}^⊥ as a primed bracket at n/2.
inline OgIndex og_canonical(const OgIndex& x) {
  if (!og_needs_rewrite(x)) return x;
  OgIndex y = x;
  y.b.pop_back();
  y.a.push_back(x.n / 2);
  y.prime = true;
  return y;
}

/// 1-based essential positions on the a-side and the b-side.
inline std::pair<std::vector<int>, std::vector<int>> og_essential(const OgIndex& x) {
  std::vector<int> ea, eb;
  const int s = x.s();
  for (int i = 1; i <= s; ++i) {
    bool ess;
    if (i < s) {
      ess = x.a[i] != x.a[i - 1] + 1;
    } else {
      bool exception = x.n == 2 * x.k && s < x.k && x.a[s - 1] == x.b.back() + 2 &&
                       x.a[s - 1] == x.k;
      ess = !exception;
    }
    if (ess) ea.push_back(i);
  }
  for (int j = 1; j <= static_cast<int>(x.b.size()); ++j) {
    int prev = (j > 1) ? x.b[j - 2] : -1;
    if (prev != x.b[j - 1] - 1) eb.push_back(j);
  }
  return {ea, eb};
}

/// x_j = #{i : a_i <= b_j}, for j = 1..k-s.
inline std::vector<int> og_x(const OgIndex& x) {
  std::vector<int> out;
  for (int bj : x.b)
    out.push_back(static_cast<int>(std::count_if(x.a.begin(), x.a.end(), [&](int v) { return v <= bj; })));
  return out;
}

/// z_i = #{j : a_i <= b_j < a_{i+1}}, with a_{s+1} unbounded.
inline std::vector<int> og_z(const OgIndex& x) {
  std::vector<int> out;
  for (int i = 0; i < x.s(); ++i) {
    int lo = x.a[i];
    bool last = i + 1 == x.s();
    int c = 0;
    for (int bj : x.b)
      if (bj >= lo && (last || bj < x.a[i + 1])) ++c;
    out.push_back(c);
  }
  return out;
}

}  // namespace srk
