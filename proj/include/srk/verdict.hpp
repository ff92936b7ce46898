#pragma once

#include <string>

namespace srk {

enum class VerdictKind { Rigid, NotRigid, NotEssential, Disputed };

/// Outcome for one sub-index. `clause` names the rule that decided it.
struct Verdict {
  VerdictKind kind = VerdictKind::NotEssential;
  std::string clause;
  std::string note;

  bool operator==(const Verdict&) const = default;

  bool is(VerdictKind k) const { return kind == k; }
};

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Rigid: return "Rigid";
    case VerdictKind::NotRigid: return "NotRigid";
    case VerdictKind::NotEssential: return "NotEssential";
    case VerdictKind::Disputed: return "Disputed";
  }
  return "?";
}

/// Compact label such as "NotRigid:MT-1" or "Rigid".
inline std::string label(const Verdict& v) {
  std::string out = to_string(v.kind);
  if ((v.kind == VerdictKind::NotRigid || v.kind == VerdictKind::Disputed) && !v.clause.empty())
    out += ":" + v.clause;
  return out;
}

}  // namespace srk
