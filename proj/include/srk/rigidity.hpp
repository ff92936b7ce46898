#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srk/degeneration.hpp"
#include "srk/errors.hpp"
#include "srk/og_index.hpp"
#include "srk/quadric_diagram.hpp"
#include "srk/verdict.hpp"

namespace srk {

namespace warn {
inline constexpr const char* RegimeSmallN = "REGIME_SMALL_N";
inline constexpr const char* NoEssentialB = "NO_ESSENTIAL_B";
inline constexpr const char* DisputedConflictA = "DISPUTED_CONFLICT_A";
inline constexpr const char* DisputedConflictB = "DISPUTED_CONFLICT_B";
inline constexpr const char* MaximalBracket = "MAXIMAL_ISOTROPIC_BRACKET";
inline constexpr const char* MethodDisagreement = "METHOD_DISAGREEMENT";
}  // namespace warn

struct RigidityReport {
  OgIndex index;
  std::vector<Verdict> a_verdicts;
  std::vector<Verdict> b_verdicts;
  bool class_rigid = false;
  bool literal_rigid = false;
  bool method_agreement = true;
  std::vector<std::string> warnings;
  std::vector<int> z;
  std::vector<int> x;

  bool has_warning(const std::string& w) const {
    return std::find(warnings.begin(), warnings.end(), w) != warnings.end();
  }
};

namespace detail {

inline int find_in_b(const OgIndex& x, int v) {
  for (int j = 0; j < static_cast<int>(x.b.size()); ++j)
    if (x.b[j] == v) return j + 1;
  return 0;
}

/// 2 x_j compared with 2(k - j + b_j) - (n - 1), kept in integers.
inline int twice_threshold(const OgIndex& x, int j) { return 2 * (x.k - j + x.b[j - 1]) - (x.n - 1); }

inline bool mt1_pattern(const OgIndex& x, int i) {
  const int s = x.s();
  if (i >= s) return false;
  const int ai = x.a[i - 1];
  const int prev = i > 1 ? x.a[i - 2] : 0;
  if (find_in_b(x, ai)) return false;
  if (ai - prev < 2) return false;
  int between = 0;
  for (int bj : x.b)
    if (ai < bj && bj < x.a[i]) ++between;
  return x.a[i] - ai == 2 + between;
}

inline bool conflict_a_region(const OgIndex& x, int i) {
  const int s = x.s();
  if (i >= s) return false;
  const int ai = x.a[i - 1];
  const int prev = i > 1 ? x.a[i - 2] : 0;
  if (find_in_b(x, ai) || ai != prev + 1 || ai == i) return false;
  int between = 0;
  for (int bj : x.b)
    if (ai < bj && bj < x.a[i]) ++between;
  return x.a[i] - ai == 2 + between;
}

inline bool is_in(const std::vector<int>& v, int e) { return std::find(v.begin(), v.end(), e) != v.end(); }

/// The x_j bound moved up by one: a_i = b_j is counted in x_j on the target index
/// but not on the OG(k,n-1) diagram it comes from. Odd n only.
inline bool conflict_b_a(const OgIndex& x, int i) {
  if (x.n % 2 == 0) return false;
  const int j = find_in_b(x, x.a[i - 1]);
  return j && 2 * (og_x(x)[j - 1] - 1) == twice_threshold(x, j);
}

inline bool conflict_b_b(const OgIndex& x, int j) {
  if (x.n % 2 == 0) return false;
  const auto xs = og_x(x);
  for (int jp = j; jp <= static_cast<int>(x.b.size()); ++jp)
    if (is_in(x.a, x.b[jp - 1]) && 2 * (xs[jp - 1] - 1) > twice_threshold(x, jp)) return false;
  return true;
}

}  // namespace detail

inline Verdict og_rigid_a(const OgIndex& x, int i) {
  if (i < 1 || i > x.s()) throw Error(ErrorCode::PositionOutOfRange, "a-position " + std::to_string(i));
  if (!detail::is_in(og_essential(x).first, i)) return {VerdictKind::NotEssential, "", ""};
  if (detail::mt1_pattern(x, i)) return {VerdictKind::NotRigid, "MT-1", ""};
  const int ai = x.a[i - 1];
  if (int j = detail::find_in_b(x, ai)) {
    if (2 * og_x(x)[j - 1] == detail::twice_threshold(x, j)) return {VerdictKind::NotRigid, "MT-2", ""};
  }
  if (detail::conflict_a_region(x, i))
    return {VerdictKind::Disputed, "CONFLICT_A",
            "theorem clauses say rigid; the a_i = a_{i-1}+1 = a_{i+1}-2 remark says not rigid"};
  if (detail::conflict_b_a(x, i))
    return {VerdictKind::Disputed, "CONFLICT_B",
            "theorem clauses say rigid; with x_j counted before a_i = b_j is formed, clause (2) fires"};
  return {VerdictKind::Rigid, "", ""};
}

inline Verdict og_rigid_b(const OgIndex& x, int j) {
  const int q = static_cast<int>(x.b.size());
  if (j < 1 || j > q) throw Error(ErrorCode::PositionOutOfRange, "b-position " + std::to_string(j));
  if (!detail::is_in(og_essential(x).second, j)) return {VerdictKind::NotEssential, "", ""};
  const auto xs = og_x(x);
  for (int jp = j; jp <= q; ++jp) {
    if (!detail::is_in(x.a, x.b[jp - 1])) continue;
    if (2 * xs[jp - 1] > detail::twice_threshold(x, jp)) {
      if (detail::conflict_b_b(x, j))
        return {VerdictKind::Disputed, "CONFLICT_B",
                "theorem says rigid; with x_j counted before a_i = b_j is formed, no b_{j'} meets the bound"};
      return {VerdictKind::Rigid, "B-RIGID", "b_" + std::to_string(jp) + " = some a_i"};
    }
  }
  return {VerdictKind::NotRigid, "B-RIGID", "no b_{j'} >= b_j meets the rigidity bound"};
}

/// The class-level conditions read literally; clause 1 is skipped without a positive essential b.
inline bool og_rigid_class_literal(const OgIndex& x, bool* skipped_clause1 = nullptr) {
  const auto eb = og_essential(x).second;
  bool ok = true;
  if (eb.empty()) {
    if (skipped_clause1) *skipped_clause1 = true;
  } else {
    if (skipped_clause1) *skipped_clause1 = false;
    const int g = eb.back();
    const int bg = x.b[g - 1];
    ok = detail::is_in(x.a, bg) && 2 * og_x(x)[g - 1] > detail::twice_threshold(x, g);
  }
  for (int i = 1; i <= x.s() && ok; ++i)
    if (detail::mt1_pattern(x, i)) ok = false;
  return ok;
}

inline RigidityReport classify_og(const OgIndex& x) {
  RigidityReport rep;
  rep.index = x;
  rep.x = og_x(x);
  rep.z = og_z(x);
  for (int i = 1; i <= x.s(); ++i) rep.a_verdicts.push_back(og_rigid_a(x, i));
  for (int j = 1; j <= static_cast<int>(x.b.size()); ++j) rep.b_verdicts.push_back(og_rigid_b(x, j));

  bool all_rigid = true;
  for (const auto* vs : {&rep.a_verdicts, &rep.b_verdicts})
    for (const auto& v : *vs)
      if (!v.is(VerdictKind::NotEssential) && !v.is(VerdictKind::Rigid)) all_rigid = false;
  rep.class_rigid = all_rigid;

  bool skipped = false;
  rep.literal_rigid = og_rigid_class_literal(x, &skipped);
  rep.method_agreement = rep.literal_rigid == rep.class_rigid;

  if (x.n <= 2 * x.k + 1) rep.warnings.push_back(warn::RegimeSmallN);
  if (skipped) rep.warnings.push_back(warn::NoEssentialB);
  bool dis_a = false, dis_b = false;
  for (const auto* vs : {&rep.a_verdicts, &rep.b_verdicts})
    for (const auto& v : *vs) {
      if (v.is(VerdictKind::Disputed) && v.clause == "CONFLICT_A") dis_a = true;
      if (v.is(VerdictKind::Disputed) && v.clause == "CONFLICT_B") dis_b = true;
    }
  if (dis_a) rep.warnings.push_back(warn::DisputedConflictA);
  if (dis_b) rep.warnings.push_back(warn::DisputedConflictB);
  if (x.n % 2 == 0 && x.s() > 0 && 2 * x.a.back() == x.n &&
      std::any_of(rep.b_verdicts.begin(), rep.b_verdicts.end(),
                  [](const Verdict& v) { return v.is(VerdictKind::NotRigid); }))
    rep.warnings.push_back(warn::MaximalBracket);
  if (!rep.method_agreement) rep.warnings.push_back(warn::MethodDisagreement);
  return rep;
}

/// Normative verdict and whether the literal reading agrees.
inline std::pair<bool, bool> og_rigid_class(const OgIndex& x) {
  auto rep = classify_og(x);
  return {rep.class_rigid, rep.method_agreement};
}

enum class Side { A, B };

struct Position {
  Side side = Side::A;
  int index = 1;
};

inline std::int64_t default_search_budget() {
  if (const char* env = std::getenv("SRK_SEARCH_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 200000;
}

/// True when D keeps the flag element that `pos` asserts is unique.
inline bool keeps_flag_element(const QuadricDiagram& D, const OgIndex& x, Position pos) {
  if (pos.side == Side::A) {
    const int ai = x.a[pos.index - 1];
    return std::any_of(D.brackets.begin(), D.brackets.end(), [&](const Bracket& B) { return B.n == ai; });
  }
  // omitted only in the Gamma shape: the ambient n - b_j survives with a smaller corank
  const int bj = x.b[pos.index - 1];
  return std::none_of(D.quadrics.begin(), D.quadrics.end(),
                      [&](const Quadric& Q) { return Q.d == x.n - bj && Q.r < bj; });
}

/// First admissible diagram, in canonical order, that lacks the flag element at `pos`
/// and whose class is exactly x. The budget caps the number of expansions.
inline std::optional<QuadricDiagram> find_nonrigid_witness(const OgIndex& x, Position pos, Engine& engine,
                                                           std::int64_t budget = default_search_budget()) {
  const int limit = pos.side == Side::A ? x.s() : static_cast<int>(x.b.size());
  if (pos.index < 1 || pos.index > limit)
    throw Error(ErrorCode::PositionOutOfRange, "position " + std::to_string(pos.index));
  const auto [ea, eb] = og_essential(x);
  if (!detail::is_in(pos.side == Side::A ? ea : eb, pos.index))
    throw Error(ErrorCode::PositionOutOfRange, "position " + std::to_string(pos.index) + " is not essential");
  const OgIndex target = og_canonical(x);
  std::int64_t spent = 0;
  for (const auto& D : enumerate_diagrams(x.k, x.n)) {
    if (keeps_flag_element(D, x, pos)) continue;
    if (!is_admissible(D)) continue;
    if (++spent > budget)
      throw Error(ErrorCode::SearchBudgetExceeded, "witness search exceeded " + std::to_string(budget) + " expansions");
    auto S = engine.expand(D);
    if (S.size() == 1 && S.begin()->first == target && S.begin()->second == 1) return D;
  }
  return std::nullopt;
}

inline std::optional<QuadricDiagram> find_nonrigid_witness(const OgIndex& x, Position pos,
                                                           std::int64_t budget = default_search_budget()) {
  Engine engine;
  return find_nonrigid_witness(x, pos, engine, budget);
}

}  // namespace srk
