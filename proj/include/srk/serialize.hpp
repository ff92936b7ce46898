#pragma once

#include <string>

#include "json.hpp"

#include "srk/class_sum.hpp"
#include "srk/degeneration.hpp"
#include "srk/gr_index.hpp"
#include "srk/og_index.hpp"
#include "srk/quadric_diagram.hpp"
#include "srk/rigidity.hpp"
#include "srk/verdict.hpp"

namespace srk {

using Json = nlohmann::ordered_json;

inline Json to_json(const Verdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["clause"] = v.clause;
  j["note"] = v.note;
  return j;
}

inline Json to_json(const GrIndex& x) {
  Json j;
  j["space"] = "G";
  j["k"] = x.k;
  j["n"] = x.n;
  j["a"] = x.a;
  return j;
}

inline Json to_json(const OgIndex& x) {
  Json j;
  j["space"] = "OG";
  j["k"] = x.k;
  j["n"] = x.n;
  j["a"] = x.a;
  j["b"] = x.b;
  j["prime"] = x.prime;
  return j;
}

inline Json to_json(const QuadricDiagram& D) {
  Json j;
  j["m"] = D.m;
  j["k"] = D.k;
  Json br = Json::array();
  for (const auto& B : D.brackets) br.push_back({{"n", B.n}, {"prime", B.prime}});
  Json qu = Json::array();
  for (const auto& Q : D.quadrics) qu.push_back({{"d", Q.d}, {"r", Q.r}});
  j["brackets"] = br;
  j["quadrics"] = qu;
  j["text"] = print_diagram(D);
  return j;
}

/// {"space", "k", "n", "terms": [{"a", ["b", "prime",] "coeff"}]} in canonical order.
template <class B>
Json to_json(const ClassSum<B>& S, int k, int n) {
  Json j;
  j["space"] = std::is_same_v<B, OgIndex> ? "OG" : "G";
  j["k"] = k;
  j["n"] = n;
  Json terms = Json::array();
  for (const auto& [x, c] : S) {
    Json t;
    t["a"] = x.a;
    if constexpr (std::is_same_v<B, OgIndex>) {
      t["b"] = x.b;
      t["prime"] = x.prime;
    }
    t["coeff"] = c;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

inline Json to_json(const RigidityReport& r) {
  Json j;
  j["index"] = to_json(r.index);
  Json av = Json::array(), bv = Json::array();
  for (const auto& v : r.a_verdicts) av.push_back(to_json(v));
  for (const auto& v : r.b_verdicts) bv.push_back(to_json(v));
  j["a_verdicts"] = av;
  j["b_verdicts"] = bv;
  j["class_rigid"] = r.class_rigid;
  j["method_agreement"] = r.method_agreement;
  j["warnings"] = r.warnings;
  j["z"] = r.z;
  j["x"] = r.x;
  return j;
}

inline Json to_json(const AdmissibilityReport& r) {
  Json j;
  auto cond = [](const ConditionVerdict& c) { return Json{{"pass", c.pass}, {"witness", c.witness}}; };
  j["c1"] = cond(r.c1);
  j["c2"] = cond(r.c2);
  j["c3"] = cond(r.c3);
  j["a1"] = cond(r.a1);
  j["a2"] = cond(r.a2);
  j["a3"] = cond(r.a3);
  j["x"] = r.x;
  j["admissible"] = r.pass();
  return j;
}

inline Json to_json(const TraceNode& t) {
  Json j;
  j["diagram"] = print_diagram(t.diagram);
  j["rule"] = to_string(t.rule);
  if (!t.note.empty()) j["note"] = t.note;
  Json kids = Json::array();
  for (const auto& c : t.children) kids.push_back(to_json(c));
  j["children"] = kids;
  return j;
}

}  // namespace srk
