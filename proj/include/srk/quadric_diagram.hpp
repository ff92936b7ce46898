#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srk/errors.hpp"
#include "srk/og_index.hpp"

namespace srk {

/// Isotropic flag element F_n; `prime` marks the other family at n = m/2.
struct Bracket {
  int n = 0;
  bool prime = false;
  auto operator<=>(const Bracket&) const = default;
  bool operator==(const Bracket&) const = default;
};

/// Sub-quadric Q_d^r: a d-dimensional section with r-dimensional singular locus.
struct Quadric {
  int d = 0;
  int r = 0;
  auto operator<=>(const Quadric&) const = default;
  bool operator==(const Quadric&) const = default;
};

/// Flag F_{n_1} ⊂ ... ⊂ F_{n_s} ⊂ Q_{d_q} ⊂ ... ⊂ Q_{d_1} in an m-dimensional space.
/// quadrics[0] is the largest quadric (j = 1).
struct QuadricDiagram {
  int m = 0;
  int k = 0;
  std::vector<Bracket> brackets;
  std::vector<Quadric> quadrics;

  int s() const { return static_cast<int>(brackets.size()); }
  int q() const { return static_cast<int>(quadrics.size()); }

  std::strong_ordering operator<=>(const QuadricDiagram& o) const {
    if (auto c = m <=> o.m; c != 0) return c;
    if (auto c = k <=> o.k; c != 0) return c;
    if (auto c = s() <=> o.s(); c != 0) return c;
    if (auto c = brackets <=> o.brackets; c != 0) return c;
    return quadrics <=> o.quadrics;
  }
  bool operator==(const QuadricDiagram&) const = default;
};

/// Largest isotropic subspace inside Q_d^r.
inline int max_isotropic(const Quadric& Q) { return Q.r + (Q.d - Q.r) / 2; }

/// First structural defect, or nullopt when D is a well-formed flag.
inline std::optional<std::string> structural_problem(const QuadricDiagram& D) {
  if (D.k < 1) return "k must be positive";
  if (D.s() + D.q() != D.k) return "brackets plus braces must equal k";
  for (int i = 0; i < D.s(); ++i) {
    const auto& B = D.brackets[i];
    if (B.n < 1) return "bracket below 1";
    if (2 * B.n > D.m) return "bracket exceeds m/2";
    if (i > 0 && B.n <= D.brackets[i - 1].n) return "brackets not strictly increasing";
    if (B.prime && 2 * B.n != D.m) return "prime marker away from m/2";
  }
  for (int j = 0; j < D.q(); ++j) {
    const auto& Q = D.quadrics[j];
    if (Q.r < 0 || Q.r > Q.d) return "corank outside [0, d]";
    if (Q.d + Q.r > D.m) return "d + r exceeds m";
    if (j > 0) {
      const auto& P = D.quadrics[j - 1];
      if (Q.d >= P.d) return "quadric dimensions not strictly decreasing";
      if (Q.r < P.r) return "coranks not nondecreasing";
      if (Q.d + Q.r > P.d + P.r) return "d + r increases along the chain";
    }
  }
  if (D.s() > 0 && D.q() > 0) {
    const int ns = D.brackets.back().n;
    if (ns > D.quadrics.back().d) return "last bracket not inside the smallest quadric";
    for (const auto& Q : D.quadrics)
      if (ns > max_isotropic(Q)) return "bracket too large to be isotropic in a quadric";
  }
  return std::nullopt;
}

inline bool is_structural(const QuadricDiagram& D) { return !structural_problem(D); }

inline const QuadricDiagram& validate_diagram(const QuadricDiagram& D) {
  if (auto p = structural_problem(D)) throw Error(ErrorCode::StructurallyInvalid, *p);
  return D;
}

struct ConditionVerdict {
  bool pass = true;
  std::string witness;
};

struct AdmissibilityReport {
  ConditionVerdict c1;  // coranks nested
  ConditionVerdict c2;  // recorded only; encoded by the diagram itself
  ConditionVerdict c3;
  ConditionVerdict a1;
  ConditionVerdict a2;
  ConditionVerdict a3;
  std::vector<int> x;
  bool c3_first_clause_decided = false;

  bool pass() const { return c1.pass && c2.pass && c3.pass && a1.pass && a2.pass && a3.pass; }
};

/// x_j = #{i : n_i <= r_j}, 0-based j.
inline int diagram_x(const QuadricDiagram& D, int j) {
  int r = D.quadrics[j].r;
  int c = 0;
  for (const auto& B : D.brackets)
    if (B.n <= r) ++c;
  return c;
}

inline bool passes_a1(const QuadricDiagram& D) {
  return D.q() == 0 || D.quadrics.back().r <= D.quadrics.back().d - 3;
}

inline bool passes_a2(const QuadricDiagram& D) {
  for (const auto& B : D.brackets)
    for (const auto& Q : D.quadrics)
      if (B.n - Q.r == 1) return false;
  return true;
}

inline bool passes_a3(const QuadricDiagram& D) {
  for (int j = 0; j < D.q(); ++j) {
    const auto& Q = D.quadrics[j];
    if (diagram_x(D, j) < D.k - (j + 1) + 1 - (Q.d - Q.r) / 2) return false;
  }
  return true;
}

namespace detail {

inline bool spacing_clause(const QuadricDiagram& D, std::string* witness) {
  const int q = D.q();
  for (int i = 0; i < q; ++i)
    for (int t = i + 1; t < q; ++t)
      if (D.quadrics[t].r - D.quadrics[i].r < t - i - 1) {
        if (witness)
          *witness = "r_" + std::to_string(t + 1) + " - r_" + std::to_string(i + 1) + " < " +
                     std::to_string(t - i - 1);
        return false;
      }
  for (int t = 2; t < q; ++t) {
    const int rt = D.quadrics[t].r;
    if (rt == D.quadrics[t - 1].r && rt > D.quadrics[0].r) {
      for (int i = t; i + 1 < q; ++i)
        if (D.quadrics[i].d - D.quadrics[i + 1].d != D.quadrics[i + 1].r - D.quadrics[i].r) {
          if (witness) *witness = "tail spacing fails at j=" + std::to_string(i + 1);
          return false;
        }
      if (D.quadrics[t - 1].d - D.quadrics[t].d != 1) {
        if (witness) *witness = "d_" + std::to_string(t) + " - d_" + std::to_string(t + 1) + " != 1";
        return false;
      }
    }
  }
  return true;
}

inline bool equal_corank_clause(const QuadricDiagram& D) {
  if (D.q() == 0) return false;
  const int r1 = D.quadrics[0].r;
  for (const auto& Q : D.quadrics)
    if (Q.r != r1) return false;
  for (const auto& B : D.brackets)
    if (B.n == r1) return true;
  return false;
}

}  // namespace detail

inline bool passes_c3(const QuadricDiagram& D) {
  return detail::equal_corank_clause(D) || detail::spacing_clause(D, nullptr);
}

inline bool is_admissible(const QuadricDiagram& D) {
  return is_structural(D) && passes_a1(D) && passes_a2(D) && passes_a3(D) && passes_c3(D);
}

inline AdmissibilityReport check_conditions(const QuadricDiagram& D) {
  validate_diagram(D);
  AdmissibilityReport rep;
  for (int j = 0; j < D.q(); ++j) rep.x.push_back(diagram_x(D, j));

  rep.c2.witness = "convention: containments are encoded by the diagram";

  std::string w3;
  const bool equal_clause = detail::equal_corank_clause(D);
  const bool spacing = detail::spacing_clause(D, &w3);
  rep.c3.pass = equal_clause || spacing;
  rep.c3_first_clause_decided = equal_clause && !spacing;
  if (!rep.c3.pass) rep.c3.witness = w3;

  if (!passes_a1(D)) {
    rep.a1.pass = false;
    rep.a1.witness = "r_q=" + std::to_string(D.quadrics.back().r) +
                     " > d_q-3=" + std::to_string(D.quadrics.back().d - 3);
  }
  for (int i = 0; i < D.s() && rep.a2.pass; ++i)
    for (int j = 0; j < D.q(); ++j)
      if (D.brackets[i].n - D.quadrics[j].r == 1) {
        rep.a2.pass = false;
        rep.a2.witness = "n_" + std::to_string(i + 1) + " - r_" + std::to_string(j + 1) + " = 1";
        break;
      }
  for (int j = 0; j < D.q(); ++j) {
    const auto& Q = D.quadrics[j];
    int need = D.k - (j + 1) + 1 - (Q.d - Q.r) / 2;
    if (rep.x[j] < need) {
      rep.a3.pass = false;
      rep.a3.witness = "x_" + std::to_string(j + 1) + "=" + std::to_string(rep.x[j]) + " < " +
                       std::to_string(need);
      break;
    }
  }
  return rep;
}

/// Digit l (1-based) is j when r_{j-1} < l <= r_j, else 0.
inline std::vector<int> digits(const QuadricDiagram& D) {
  std::vector<int> out(D.m, 0);
  int prev = 0;
  for (int j = 0; j < D.q(); ++j) {
    for (int l = prev + 1; l <= D.quadrics[j].r && l <= D.m; ++l) out[l - 1] = j + 1;
    prev = std::max(prev, D.quadrics[j].r);
  }
  return out;
}

/// Terminal in OG(k,m): every quadric satisfies d + r = m.
inline bool is_schubert_diagram(const QuadricDiagram& D) {
  for (const auto& Q : D.quadrics)
    if (Q.d + Q.r != D.m) return false;
  return true;
}

inline QuadricDiagram og_to_diagram(const OgIndex& x, bool rewrite = true) {
  OgIndex y = x;
  if (og_needs_rewrite(x)) {
    if (!rewrite)
      throw Error(ErrorCode::NotDiagramRepresentable,
                  "b_{k-s} = n/2 - 1 has no quadric form; enable the bracket rewrite");
    y = og_canonical(x);
  }
  QuadricDiagram D{y.n, y.k, {}, {}};
  for (int i = 0; i < y.s(); ++i) D.brackets.push_back({y.a[i], y.prime && i + 1 == y.s()});
  for (int bj : y.b) D.quadrics.push_back({y.n - bj, bj});
  return D;
}

inline OgIndex diagram_to_og(const QuadricDiagram& D) {
  if (!is_schubert_diagram(D))
    throw Error(ErrorCode::NotSchubertDiagram, "some quadric has d + r != m");
  std::vector<int> a, b;
  bool prime = false;
  for (const auto& B : D.brackets) a.push_back(B.n);
  if (!D.brackets.empty()) prime = D.brackets.back().prime;
  for (const auto& Q : D.quadrics) b.push_back(Q.r);
  OgIndex x = validate_og(D.k, D.m, std::move(a), std::move(b), prime);
  if (og_needs_rewrite(x))
    throw Error(ErrorCode::NotDiagramRepresentable, "quadric with d - r = 2 is not canonical");
  return x;
}

namespace detail {

inline void combinations(int lo, int hi, int count, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (count == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi - count + 1; ++v) {
    cur.push_back(v);
    combinations(v + 1, hi, count - 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> combinations(int lo, int hi, int count) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (count >= 0 && hi - lo + 1 >= count) combinations(lo, hi, count, cur, out);
  return out;
}

inline void multisets(int lo, int hi, int count, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (count == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    multisets(v, hi, count - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every structurally valid diagram with k parts in ambient m, in canonical order.
inline std::vector<QuadricDiagram> enumerate_diagrams(int k, int m) {
  std::vector<QuadricDiagram> out;
  for (int s = 0; s <= k; ++s) {
    const int q = k - s;
    auto bracket_sets = detail::combinations(1, m / 2, s);
    auto dim_sets = detail::combinations(1, m, q);
    std::vector<std::vector<int>> corank_sets;
    std::vector<int> cur;
    detail::multisets(0, m, q, cur, corank_sets);
    for (const auto& ns : bracket_sets) {
      std::vector<bool> primes{false};
      if (m % 2 == 0 && s > 0 && 2 * ns.back() == m) primes.push_back(true);
      for (bool p : primes) {
        QuadricDiagram D{m, k, {}, {}};
        for (int i = 0; i < s; ++i) D.brackets.push_back({ns[i], p && i + 1 == s});
        for (const auto& ds : dim_sets) {
          for (const auto& rs : corank_sets) {
            D.quadrics.clear();
            for (int j = 0; j < q; ++j) D.quadrics.push_back({ds[q - 1 - j], rs[j]});
            if (is_structural(D)) out.push_back(D);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class DiagramForm { Canonical, Compact, Verbose };

inline bool compact_representable(const QuadricDiagram& D) {
  for (int v : digits(D))
    if (v > 9) return false;
  return true;
}

inline std::string print_diagram(const QuadricDiagram& D, DiagramForm form = DiagramForm::Canonical) {
  if (form == DiagramForm::Canonical)
    form = compact_representable(D) ? DiagramForm::Compact : DiagramForm::Verbose;
  std::string out;
  if (form == DiagramForm::Compact) {
    if (!compact_representable(D))
      throw Error(ErrorCode::SyntaxError, "compact form needs every digit <= 9");
    auto dig = digits(D);
    for (int l = 1; l <= D.m; ++l) {
      out += static_cast<char>('0' + dig[l - 1]);
      for (const auto& B : D.brackets)
        if (B.n == l) out += B.prime ? "]'" : "]";
      for (auto it = D.quadrics.rbegin(); it != D.quadrics.rend(); ++it)
        if (it->d == l) out += "}";
    }
    return out;
  }
  out = "m=" + std::to_string(D.m) + " k=" + std::to_string(D.k) + " a=";
  if (D.brackets.empty()) out += "-";
  for (int i = 0; i < D.s(); ++i) {
    if (i) out += ",";
    out += std::to_string(D.brackets[i].n);
    if (D.brackets[i].prime) out += "'";
  }
  out += " q=";
  if (D.quadrics.empty()) out += "-";
  for (int j = 0; j < D.q(); ++j) {
    if (j) out += ",";
    out += std::to_string(D.quadrics[j].d) + ":" + std::to_string(D.quadrics[j].r);
  }
  return out;
}

namespace detail {

class VerboseReader {
 public:
  explicit VerboseReader(std::string_view t) : t_(t) {}

  void expect(std::string_view lit) {
    if (t_.substr(pos_, lit.size()) != lit)
      throw SyntaxError(ErrorCode::SyntaxError, pos_, "expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  int number() {
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(ErrorCode::SyntaxError, pos_, "expected a number");
    if (pos_ - start > 6) throw SyntaxError(ErrorCode::SyntaxError, start, "number too large");
    return std::stoi(std::string(t_.substr(start, pos_ - start)));
  }

  bool peek(char c) const { return pos_ < t_.size() && t_[pos_] == c; }
  bool done() const { return pos_ == t_.size(); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view t_;
  std::size_t pos_ = 0;
};

inline QuadricDiagram parse_verbose(std::string_view t) {
  VerboseReader rd(t);
  QuadricDiagram D;
  rd.expect("m=");
  D.m = rd.number();
  rd.expect(" k=");
  D.k = rd.number();
  rd.expect(" a=");
  if (rd.peek('-')) {
    rd.expect("-");
  } else {
    do {
      if (!D.brackets.empty()) rd.expect(",");
      Bracket B{rd.number(), false};
      if (rd.peek('\'')) {
        rd.expect("'");
        B.prime = true;
      }
      D.brackets.push_back(B);
    } while (rd.peek(','));
  }
  rd.expect(" q=");
  if (rd.peek('-')) {
    rd.expect("-");
  } else {
    do {
      if (!D.quadrics.empty()) rd.expect(",");
      Quadric Q;
      Q.d = rd.number();
      rd.expect(":");
      Q.r = rd.number();
      D.quadrics.push_back(Q);
    } while (rd.peek(','));
  }
  if (!rd.done()) throw SyntaxError(ErrorCode::SyntaxError, rd.pos(), "trailing characters");
  for (const auto& B : D.brackets)
    if (B.prime && 2 * B.n != D.m)
      throw SyntaxError(ErrorCode::MarkerMisplaced, 0, "primed bracket must sit at m/2");
  if (D.s() + D.q() != D.k)
    throw SyntaxError(ErrorCode::SyntaxError, 0, "k does not match brackets plus braces");
  return D;
}

inline QuadricDiagram parse_compact(std::string_view t) {
  std::vector<int> dig;
  std::vector<std::pair<int, std::size_t>> primed;
  QuadricDiagram D;
  std::vector<int> braces;
  for (std::size_t p = 0; p < t.size(); ++p) {
    char c = t[p];
    if (c >= '0' && c <= '9') {
      dig.push_back(c - '0');
    } else if (c == ']' || c == '}') {
      if (dig.empty()) throw SyntaxError(ErrorCode::SyntaxError, p, "marker before any digit");
      const int at = static_cast<int>(dig.size());
      if (c == '}') {
        if (std::find(braces.begin(), braces.end(), at) != braces.end())
          throw SyntaxError(ErrorCode::SyntaxError, p, "two braces at one position");
        braces.push_back(at);
      } else {
        Bracket B{at, false};
        if (p + 1 < t.size() && t[p + 1] == '\'') {
          B.prime = true;
          primed.push_back({at, p});
          ++p;
        }
        if (!D.brackets.empty() && D.brackets.back().n == at)
          throw SyntaxError(ErrorCode::SyntaxError, p, "two brackets at one position");
        D.brackets.push_back(B);
      }
    } else {
      throw SyntaxError(ErrorCode::SyntaxError, p, std::string("unexpected character '") + c + "'");
    }
  }
  if (dig.empty()) throw SyntaxError(ErrorCode::SyntaxError, 0, "empty diagram");
  D.m = static_cast<int>(dig.size());
  for (auto [at, p] : primed)
    if (2 * at != D.m) throw SyntaxError(ErrorCode::MarkerMisplaced, p, "]' must follow digit m/2");

  std::sort(braces.rbegin(), braces.rend());
  const int q = static_cast<int>(braces.size());
  std::size_t nonzero = 0;
  while (nonzero < dig.size() && dig[nonzero] != 0) ++nonzero;
  for (std::size_t l = nonzero; l < dig.size(); ++l)
    if (dig[l] != 0)
      throw SyntaxError(ErrorCode::InconsistentDigits, l, "nonzero digit after a zero");
  for (std::size_t l = 0; l < nonzero; ++l) {
    if (dig[l] > q)
      throw SyntaxError(ErrorCode::InconsistentDigits, l, "digit exceeds the number of braces");
    if (l > 0 && dig[l] < dig[l - 1])
      throw SyntaxError(ErrorCode::InconsistentDigits, l, "digits decrease");
  }
  for (int j = 1; j <= q; ++j) {
    int r = 0;
    for (std::size_t l = 0; l < nonzero; ++l)
      if (dig[l] <= j) ++r;
    D.quadrics.push_back({braces[j - 1], r});
  }
  D.k = D.s() + q;
  return D;
}

}  // namespace detail

/// Reads either grammar and checks the result is a well-formed flag.
inline QuadricDiagram parse_diagram(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  QuadricDiagram D = text.substr(0, 2) == "m=" ? detail::parse_verbose(text) : detail::parse_compact(text);
  validate_diagram(D);
  return D;
}

}  // namespace srk
