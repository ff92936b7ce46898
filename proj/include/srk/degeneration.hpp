#pragma once

#include <algorithm>
#include <cstdint>
#include <list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srk/class_sum.hpp"
#include "srk/errors.hpp"
#include "srk/gr_index.hpp"
#include "srk/og_index.hpp"
#include "srk/quadric_diagram.hpp"

namespace srk {

/// OG: terminal when every d_j + r_j = m.
/// Pushforward: ambient 2m+1, terminal when no quadric is left.
enum class Mode { OG, Pushforward };

/// Two readings of the y_κ guard. Max is the default.
enum class YReading { Max, Min };

enum class Branch { DaOnly, DbOnly, Both, Terminal };

inline std::string to_string(Branch b) {
  switch (b) {
    case Branch::DaOnly: return "DaOnly";
    case Branch::DbOnly: return "DbOnly";
    case Branch::Both: return "Both";
    case Branch::Terminal: return "Terminal";
  }
  return "?";
}

/// Indices are 1-based. y_kappa is 0 when no bracket lies above r_κ.
struct BranchDecision {
  int kappa = 0;
  int x_kappa = 0;
  int y_kappa = 0;
  bool n_s_le_r = false;
  bool gap_test = false;
  Branch chosen = Branch::Terminal;
  /// Branch the other y_κ reading would pick.
  Branch alternative = Branch::Terminal;
};

enum class Rule { Root, Da, Db, FixA2, FixA1Split, FixB, Discard };

inline std::string to_string(Rule r) {
  switch (r) {
    case Rule::Root: return "Root";
    case Rule::Da: return "Da";
    case Rule::Db: return "Db";
    case Rule::FixA2: return "FixA2";
    case Rule::FixA1Split: return "FixA1Split";
    case Rule::FixB: return "FixB";
    case Rule::Discard: return "Discard";
  }
  return "?";
}

struct TraceNode {
  QuadricDiagram diagram;
  Rule rule = Rule::Root;
  std::string note;
  std::list<TraceNode> children;  // stable addresses while the tree grows
};

struct EngineOptions {
  YReading y_reading = YReading::Max;
  int max_depth = 4096;
  /// Re-check admissibility of every emitted diagram.
  bool assert_admissible = true;
};

/// Counters for events worth surfacing to a caller.
struct EngineStats {
  std::vector<std::string> diagnostics;
  std::vector<std::string> y_divergences;
};

inline bool is_terminal(const QuadricDiagram& D, Mode mode) {
  return mode == Mode::Pushforward ? D.quadrics.empty() : is_schubert_diagram(D);
}

/// Returns κ as a 1-based quadric index.
inline int kappa(const QuadricDiagram& D, Mode mode = Mode::OG) {
  if (is_terminal(D, mode)) throw Error(ErrorCode::AlreadyTerminal, print_diagram(D));
  int kap = 1;
  for (int j = 1; j < D.q(); ++j) {
    const auto& P = D.quadrics[j - 1];
    const auto& Q = D.quadrics[j];
    if (Q.d + Q.r < P.d + P.r) kap = j + 1;
  }
  return kap;
}

namespace detail {

/// Sets r_j to `r` and lifts later coranks so they stay nondecreasing.
inline void raise_corank(std::vector<Quadric>& Q, int j, int r) {
  Q[j].r = r;
  for (std::size_t t = j + 1; t < Q.size(); ++t) Q[t].r = std::max(Q[t].r, r);
}

inline QuadricDiagram derive_a(const QuadricDiagram& D, int kap) {
  QuadricDiagram E = D;
  raise_corank(E.quadrics, kap - 1, D.quadrics[kap - 1].r + 1);
  return E;
}

inline std::optional<QuadricDiagram> derive_b(const QuadricDiagram& D, int kap) {
  const int r = D.quadrics[kap - 1].r;
  for (int i = 0; i < D.s(); ++i) {
    if (D.brackets[i].n > r + 1) {
      QuadricDiagram E = derive_a(D, kap);
      E.brackets[i] = Bracket{r + 1, false};
      return E;
    }
  }
  return std::nullopt;
}

inline TraceNode* add_child(TraceNode* parent, const QuadricDiagram& D, Rule rule, std::string note = {}) {
  if (!parent) return nullptr;
  parent->children.push_back(TraceNode{D, rule, std::move(note), {}});
  return &parent->children.back();
}

/// Algorithm 1 applied as a loop: A3 gate, A2 repair, A1 split.
inline void fix_a(const QuadricDiagram& E, int kap, TraceNode* node, EngineStats* stats,
                  std::vector<std::pair<QuadricDiagram, TraceNode*>>& out) {
  if (auto p = structural_problem(E)) {
    if (stats) stats->diagnostics.push_back("Da repair left a malformed flag (" + *p + "): " + print_diagram(E));
    add_child(node, E, Rule::Discard, *p);
    return;
  }
  if (!passes_a3(E)) {
    add_child(node, E, Rule::Discard, "fails A3");
    return;
  }
  if (!passes_a2(E)) {
    QuadricDiagram F = E;
    const int d = E.quadrics[kap - 1].d;
    raise_corank(F.quadrics, kap - 1, E.quadrics[kap - 1].r + 1);
    F.quadrics[kap - 1].d = d - 1;
    if (kap < F.q() && F.quadrics[kap].d >= d - 1) {
      if (stats) stats->diagnostics.push_back("brace collision in A2 repair: " + print_diagram(E));
      add_child(node, F, Rule::Discard, "brace collision");
      return;
    }
    fix_a(F, kap, add_child(node, F, Rule::FixA2), stats, out);
    return;
  }
  if (!passes_a1(E)) {
    const int nb = E.quadrics.back().d - 1;
    if (!E.brackets.empty() && E.brackets.back().n >= nb) {
      if (stats) stats->diagnostics.push_back("bracket collision in A1 split: " + print_diagram(E));
      add_child(node, E, Rule::Discard, "bracket collision");
      return;
    }
    QuadricDiagram F = E;
    F.quadrics.pop_back();
    QuadricDiagram G = F;
    F.brackets.push_back({nb, false});
    G.brackets.push_back({nb, E.m % 2 == 0 && 2 * nb == E.m});
    fix_a(F, kap, add_child(node, F, Rule::FixA1Split), stats, out);
    fix_a(G, kap, add_child(node, G, Rule::FixA1Split), stats, out);
    return;
  }
  out.push_back({E, node});
}

/// Algorithm 2: repeat the A2 repair until admissible or two braces meet.
inline std::optional<std::pair<QuadricDiagram, TraceNode*>> fix_b(QuadricDiagram E, TraceNode* node,
                                                                  EngineStats* stats) {
  for (int guard = 0; guard < 4 * (E.m + 4); ++guard) {
    if (auto p = structural_problem(E)) {
      if (stats) stats->diagnostics.push_back("Db repair left a malformed flag (" + *p + "): " + print_diagram(E));
      add_child(node, E, Rule::Discard, *p);
      return std::nullopt;
    }
    if (passes_a2(E)) {
      if (!passes_a1(E) || !passes_a3(E)) {
        if (stats) stats->diagnostics.push_back("Db repair ended outside A1/A3: " + print_diagram(E));
        add_child(node, E, Rule::Discard, "fails A1 or A3");
        return std::nullopt;
      }
      return std::make_pair(E, node);
    }
    int n = 0;
    for (const auto& B : E.brackets) {
      bool bad = std::any_of(E.quadrics.begin(), E.quadrics.end(), [&](const Quadric& Q) { return B.n - Q.r == 1; });
      if (bad) {
        n = B.n;
        break;
      }
    }
    // Digit at position n; zero reads as q+1.
    int digit = E.q() + 1;
    int prev = 0;
    for (int j = 0; j < E.q(); ++j) {
      if (prev < n && n <= E.quadrics[j].r) {
        digit = j + 1;
        break;
      }
      prev = std::max(prev, E.quadrics[j].r);
    }
    const int t = digit - 2;
    if (t < 0) {
      if (stats) stats->diagnostics.push_back("A2 repair found no brace to move: " + print_diagram(E));
      add_child(node, E, Rule::Discard, "no brace to move");
      return std::nullopt;
    }
    QuadricDiagram F = E;
    const int d = E.quadrics[t].d;
    F.quadrics[t].d = d - 1;
    if (t + 1 < F.q() && F.quadrics[t + 1].d >= d - 1) {
      add_child(node, F, Rule::Discard, "brace collision");
      return std::nullopt;
    }
    raise_corank(F.quadrics, t, n);
    node = add_child(node, F, Rule::FixB);
    E = std::move(F);
  }
  throw Error(ErrorCode::DepthExceeded, "A2 repair did not settle");
}

inline Branch choose(bool gap, bool ns_le_r, bool da_fails_a3) {
  if (gap || ns_le_r) return Branch::DaOnly;
  if (da_fails_a3) return Branch::DbOnly;
  return Branch::Both;
}

}  // namespace detail

/// Algorithm 3's branch selection for a non-terminal admissible D.
inline BranchDecision decide(const QuadricDiagram& D, Mode mode = Mode::OG,
                             YReading reading = YReading::Max) {
  BranchDecision bd;
  bd.kappa = kappa(D, mode);
  const int r = D.quadrics[bd.kappa - 1].r;
  int x = 0;
  for (const auto& B : D.brackets)
    if (B.n <= r) ++x;
  bd.x_kappa = x;
  const int ns = D.brackets.empty() ? 0 : D.brackets.back().n;
  bd.n_s_le_r = ns <= r;

  bool gap_max = false, gap_min = false;
  int y_max = 0, y_min = 0;
  if (x < D.s()) {
    const int nx = D.brackets[x].n;
    const int q = D.q();
    bool some_ge = false;
    y_max = 0;
    y_min = q + 1;
    for (int j = 1; j <= q; ++j) {
      const int rj = D.quadrics[j - 1].r;
      if (rj >= nx) {
        some_ge = true;
        y_min = std::min(y_min, j);
      }
      if (rj <= nx) y_max = j;
    }
    if (!some_ge) y_max = q + 1;
    gap_max = nx - r - 1 > y_max - bd.kappa;
    gap_min = nx - r - 1 > y_min - bd.kappa;
  }
  const bool da_fails = !passes_a3(detail::derive_a(D, bd.kappa));
  const Branch b_max = detail::choose(gap_max, bd.n_s_le_r, da_fails);
  const Branch b_min = detail::choose(gap_min, bd.n_s_le_r, da_fails);
  if (reading == YReading::Max) {
    bd.y_kappa = y_max;
    bd.gap_test = gap_max;
    bd.chosen = b_max;
    bd.alternative = b_min;
  } else {
    bd.y_kappa = y_min;
    bd.gap_test = gap_min;
    bd.chosen = b_min;
    bd.alternative = b_max;
  }
  return bd;
}

namespace detail {

inline std::vector<std::pair<QuadricDiagram, TraceNode*>> apply_a(const QuadricDiagram& D, int kap,
                                                                    TraceNode* node, EngineStats* stats) {
  std::vector<std::pair<QuadricDiagram, TraceNode*>> out;
  QuadricDiagram E = derive_a(D, kap);
  fix_a(E, kap, add_child(node, E, Rule::Da), stats, out);
  return out;
}

inline std::optional<std::pair<QuadricDiagram, TraceNode*>> apply_b(const QuadricDiagram& D, int kap,
                                                                     TraceNode* node, EngineStats* stats) {
  auto E = derive_b(D, kap);
  if (!E) return std::nullopt;
  return fix_b(*E, add_child(node, *E, Rule::Db), stats);
}

inline std::vector<std::pair<QuadricDiagram, TraceNode*>> step_impl(const QuadricDiagram& D, Mode mode,
                                                                      const EngineOptions& opt, TraceNode* node,
                                                                      EngineStats* stats, BranchDecision* out_bd) {
  BranchDecision bd = decide(D, mode, opt.y_reading);
  if (out_bd) *out_bd = bd;
  if (stats && bd.chosen != bd.alternative)
    stats->y_divergences.push_back(print_diagram(D) + " : " + to_string(bd.chosen) + " vs " +
                                   to_string(bd.alternative));
  std::vector<std::pair<QuadricDiagram, TraceNode*>> out;
  if (bd.chosen == Branch::DaOnly || bd.chosen == Branch::Both) out = apply_a(D, bd.kappa, node, stats);
  if (bd.chosen == Branch::DbOnly || bd.chosen == Branch::Both)
    if (auto e = apply_b(D, bd.kappa, node, stats)) out.push_back(*e);
  if (opt.assert_admissible)
    for (const auto& [E, _] : out)
      if (!is_admissible(E))
        throw Error(ErrorCode::Internal, "step emitted a non-admissible diagram " + print_diagram(E));
  return out;
}

}  // namespace detail

/// D^a followed by the Algorithm 1 repairs.
inline std::vector<QuadricDiagram> derive_and_fix_a(const QuadricDiagram& D, Mode mode = Mode::OG) {
  std::vector<QuadricDiagram> out;
  for (auto& [E, _] : detail::apply_a(D, kappa(D, mode), nullptr, nullptr)) out.push_back(E);
  return out;
}

/// D^b followed by the Algorithm 2 repairs.
inline std::optional<QuadricDiagram> derive_and_fix_b(const QuadricDiagram& D, Mode mode = Mode::OG) {
  auto e = detail::apply_b(D, kappa(D, mode), nullptr, nullptr);
  if (!e) return std::nullopt;
  return e->first;
}

inline std::pair<BranchDecision, std::vector<QuadricDiagram>> step(const QuadricDiagram& D, Mode mode = Mode::OG,
                                                                   const EngineOptions& opt = {}) {
  BranchDecision bd;
  auto kids = detail::step_impl(D, mode, opt, nullptr, nullptr, &bd);
  std::vector<QuadricDiagram> out;
  for (auto& [E, _] : kids) out.push_back(E);
  return {bd, out};
}

/// The diagram whose expansion gives the pushforward to G(k,m).
inline QuadricDiagram pushforward_lift(const QuadricDiagram& D) {
  QuadricDiagram E = D;
  E.m = 2 * D.m + 1;
  for (auto& B : E.brackets) B.prime = false;
  return E;
}

inline ClassSum<OgIndex> merge_primes(const ClassSum<OgIndex>& S) {
  ClassSum<OgIndex> out;
  for (const auto& [x, c] : S) {
    OgIndex y = x;
    y.prime = false;
    out.add(y, c);
  }
  return out;
}

/// Memoizing expander. One instance is not safe to share across threads.
class Engine {
 public:
  using Terminals = std::map<QuadricDiagram, std::int64_t>;

  explicit Engine(EngineOptions opt = {}) : opt_(opt) {}

  const EngineOptions& options() const { return opt_; }
  const EngineStats& stats() const { return stats_; }

  /// Terminal diagrams with multiplicity.
  Terminals terminals(const QuadricDiagram& D, Mode mode) {
    require_admissible(D);
    std::vector<QuadricDiagram> path;
    return expand_rec(D, mode, path);
  }

  ClassSum<OgIndex> expand(const QuadricDiagram& D) {
    ClassSum<OgIndex> out;
    for (const auto& [T, c] : terminals(D, Mode::OG)) out.add(diagram_to_og(T), c);
    return out;
  }

  ClassSum<GrIndex> pushforward_diagram(const QuadricDiagram& D) {
    ClassSum<GrIndex> out;
    for (const auto& [T, c] : terminals(pushforward_lift(D), Mode::Pushforward)) {
      std::vector<int> a;
      for (const auto& B : T.brackets) a.push_back(B.n);
      out.add(validate_gr(D.k, D.m, std::move(a)), c);
    }
    return out;
  }

  ClassSum<GrIndex> pushforward(const OgIndex& x) { return pushforward_diagram(og_to_diagram(x)); }

  /// Dimension read off the type-A pushforward; every term must agree.
  int og_dimension(const OgIndex& x) {
    auto S = pushforward(x);
    if (S.empty()) throw Error(ErrorCode::Internal, "empty pushforward");
    const int d = gr_dimension(S.begin()->first);
    for (const auto& [g, c] : S)
      if (gr_dimension(g) != d) throw Error(ErrorCode::Internal, "pushforward is not homogeneous");
    return d;
  }

  /// Full derivation tree; not memoized.
  TraceNode trace(const QuadricDiagram& D, Mode mode) {
    require_admissible(D);
    TraceNode root{D, Rule::Root, {}, {}};
    std::vector<QuadricDiagram> path;
    trace_rec(root, mode, path);
    return root;
  }

  void clear_cache() {
    memo_[0].clear();
    memo_[1].clear();
  }

 private:
  static void require_admissible(const QuadricDiagram& D) {
    auto rep = check_conditions(D);
    if (!rep.pass()) {
      std::string why;
      if (!rep.a1.pass) why += " A1(" + rep.a1.witness + ")";
      if (!rep.a2.pass) why += " A2(" + rep.a2.witness + ")";
      if (!rep.a3.pass) why += " A3(" + rep.a3.witness + ")";
      if (!rep.c3.pass) why += " (3)(" + rep.c3.witness + ")";
      throw Error(ErrorCode::NotAdmissible, print_diagram(D) + ":" + why);
    }
  }

  void enter(const QuadricDiagram& D, std::vector<QuadricDiagram>& path) {
    if (static_cast<int>(path.size()) >= opt_.max_depth)
      throw Error(ErrorCode::DepthExceeded, "derivation deeper than " + std::to_string(opt_.max_depth));
    if (std::find(path.begin(), path.end(), D) != path.end())
      throw Error(ErrorCode::DepthExceeded, "diagram repeats on a derivation path: " + print_diagram(D));
    path.push_back(D);
  }

  Terminals expand_rec(const QuadricDiagram& D, Mode mode, std::vector<QuadricDiagram>& path) {
    auto& memo = memo_[mode == Mode::OG ? 0 : 1];
    if (auto it = memo.find(D); it != memo.end()) return it->second;
    Terminals out;
    if (is_terminal(D, mode)) {
      out.emplace(D, 1);
    } else {
      enter(D, path);
      auto kids = detail::step_impl(D, mode, opt_, nullptr, &stats_, nullptr);
      for (const auto& [E, _] : kids)
        for (const auto& [T, c] : expand_rec(E, mode, path)) out[T] += c;
      path.pop_back();
    }
    memo.emplace(D, out);
    return out;
  }

  void trace_rec(TraceNode& node, Mode mode, std::vector<QuadricDiagram>& path) {
    if (is_terminal(node.diagram, mode)) return;
    enter(node.diagram, path);
    auto kids = detail::step_impl(node.diagram, mode, opt_, &node, &stats_, nullptr);
    for (auto& [E, leaf] : kids) trace_rec(*leaf, mode, path);
    path.pop_back();
  }

  EngineOptions opt_;
  EngineStats stats_;
  std::map<QuadricDiagram, Terminals> memo_[2];
};

inline ClassSum<OgIndex> expand(const QuadricDiagram& D, const EngineOptions& opt = {}) {
  return Engine(opt).expand(D);
}

inline ClassSum<GrIndex> pushforward_diagram(const QuadricDiagram& D, const EngineOptions& opt = {}) {
  return Engine(opt).pushforward_diagram(D);
}

inline ClassSum<GrIndex> pushforward(const OgIndex& x, const EngineOptions& opt = {}) {
  return Engine(opt).pushforward(x);
}

inline int og_dimension(const OgIndex& x, const EngineOptions& opt = {}) {
  return Engine(opt).og_dimension(x);
}

}  // namespace srk
