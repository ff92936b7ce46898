#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "srk/degeneration.hpp"
#include "srk/errors.hpp"
#include "srk/gr_index.hpp"
#include "srk/og_index.hpp"
#include "srk/rigidity.hpp"

namespace srk {

/// Every valid GrIndex for G(k,n) in lexicographic order.
inline std::vector<GrIndex> enumerate_gr(int k, int n) {
  if (k < 1 || k > n) throw Error(ErrorCode::OutOfBounds, "need 1 <= k <= n");
  std::vector<GrIndex> out;
  for (auto& a : detail::combinations(1, n, k)) out.push_back(GrIndex{k, n, a});
  return out;
}

/// Every canonical OgIndex for OG(k,n), ordered by (s, a, prime, b).
/// Even-n indices with b_{k-s} = n/2 - 1 appear in their primed-bracket form.
inline std::vector<OgIndex> enumerate_og(int k, int n) {
  if (k < 1 || n < 2 * k) throw Error(ErrorCode::NoIsotropicRoom, "need n >= 2k");
  std::vector<OgIndex> out;
  const int half = n / 2;
  for (int s = 0; s <= k; ++s) {
    for (auto& a : detail::combinations(1, half, s)) {
      for (auto& b : detail::combinations(0, (n - 2) / 2, k - s)) {
        bool clash = false;
        for (int ai : a)
          for (int bj : b)
            if (ai == bj + 1) clash = true;
        if (clash) continue;
        OgIndex x{k, n, a, b, false};
        if (og_needs_rewrite(x)) continue;
        out.push_back(x);
        if (n % 2 == 0 && s > 0 && a.back() == half) {
          x.prime = true;
          out.push_back(x);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CatalogRecord {
  std::string space;
  int k = 0;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
  bool prime = false;
  int dim = 0;
  std::vector<int> essential_a;
  std::vector<int> essential_b;
  std::vector<std::string> rigid_a;
  std::vector<std::string> rigid_b;
  bool class_rigid = false;
  std::optional<std::vector<int>> envelope;
  std::vector<std::string> warnings;

  bool operator==(const CatalogRecord&) const = default;

  auto key() const { return std::tie(space, k, n, a, prime, b); }
};

inline bool canonical_less(const CatalogRecord& l, const CatalogRecord& r) {
  if (l.space != r.space) return l.space < r.space;
  if (l.k != r.k) return l.k < r.k;
  if (l.n != r.n) return l.n < r.n;
  if (l.a.size() != r.a.size()) return l.a.size() < r.a.size();
  if (l.a != r.a) return l.a < r.a;
  if (l.prime != r.prime) return l.prime < r.prime;
  return l.b < r.b;
}

inline CatalogRecord make_record(const GrIndex& x) {
  CatalogRecord rec;
  rec.space = "G";
  rec.k = x.k;
  rec.n = x.n;
  rec.a = x.a;
  rec.dim = gr_dimension(x);
  rec.essential_a = gr_essential(x);
  for (int i = 1; i <= x.k; ++i) rec.rigid_a.push_back(label(gr_rigid_index(x, i)));
  rec.class_rigid = gr_rigid_class(x);
  rec.envelope = gr_envelope(x).a;
  return rec;
}

inline CatalogRecord make_record(const OgIndex& x, Engine& engine) {
  CatalogRecord rec;
  rec.space = "OG";
  rec.k = x.k;
  rec.n = x.n;
  rec.a = x.a;
  rec.b = x.b;
  rec.prime = x.prime;
  rec.dim = engine.og_dimension(x);
  auto [ea, eb] = og_essential(x);
  rec.essential_a = ea;
  rec.essential_b = eb;
  auto rep = classify_og(x);
  for (const auto& v : rep.a_verdicts) rec.rigid_a.push_back(label(v));
  for (const auto& v : rep.b_verdicts) rec.rigid_b.push_back(label(v));
  rec.class_rigid = rep.class_rigid;
  rec.warnings = rep.warnings;
  return rec;
}

inline nlohmann::ordered_json to_json(const CatalogRecord& r) {
  nlohmann::ordered_json j;
  j["space"] = r.space;
  j["k"] = r.k;
  j["n"] = r.n;
  j["a"] = r.a;
  j["b"] = r.b;
  j["prime"] = r.prime;
  j["dim"] = r.dim;
  j["essential_a"] = r.essential_a;
  j["essential_b"] = r.essential_b;
  j["rigid_a"] = r.rigid_a;
  j["rigid_b"] = r.rigid_b;
  j["class_rigid"] = r.class_rigid;
  if (r.envelope)
    j["envelope"] = *r.envelope;
  else
    j["envelope"] = nullptr;
  j["warnings"] = r.warnings;
  return j;
}

inline const std::vector<std::string>& catalog_fields() {
  static const std::vector<std::string> f{"space", "k", "n", "a", "b", "prime", "dim", "essential_a", "essential_b",
                                          "rigid_a", "rigid_b", "class_rigid", "envelope", "warnings"};
  return f;
}

inline CatalogRecord record_from_json(const nlohmann::ordered_json& j, std::size_t line) {
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::SchemaError, "line " + std::to_string(line) + ": " + why);
  };
  if (!j.is_object()) fail("not an object");
  const auto& fields = catalog_fields();
  if (j.size() != fields.size()) fail("expected " + std::to_string(fields.size()) + " fields");
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i)
    if (it.key() != fields[i]) fail("field '" + it.key() + "' out of order, expected '" + fields[i] + "'");

  auto ints = [&](const char* key) {
    const auto& v = j.at(key);
    if (!v.is_array()) fail(std::string(key) + " must be an array");
    std::vector<int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) fail(std::string(key) + " must hold integers");
      out.push_back(e.get<int>());
    }
    return out;
  };
  auto strings = [&](const char* key) {
    const auto& v = j.at(key);
    if (!v.is_array()) fail(std::string(key) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
      if (!e.is_string()) fail(std::string(key) + " must hold strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  auto integer = [&](const char* key) {
    if (!j.at(key).is_number_integer()) fail(std::string(key) + " must be an integer");
    return j.at(key).get<int>();
  };
  auto boolean = [&](const char* key) {
    if (!j.at(key).is_boolean()) fail(std::string(key) + " must be a boolean");
    return j.at(key).get<bool>();
  };

  CatalogRecord r;
  if (!j.at("space").is_string()) fail("space must be a string");
  r.space = j.at("space").get<std::string>();
  if (r.space != "G" && r.space != "OG") fail("space must be G or OG");
  r.k = integer("k");
  r.n = integer("n");
  r.a = ints("a");
  r.b = ints("b");
  r.prime = boolean("prime");
  r.dim = integer("dim");
  r.essential_a = ints("essential_a");
  r.essential_b = ints("essential_b");
  r.rigid_a = strings("rigid_a");
  r.rigid_b = strings("rigid_b");
  r.class_rigid = boolean("class_rigid");
  if (!j.at("envelope").is_null()) r.envelope = ints("envelope");
  r.warnings = strings("warnings");
  return r;
}

inline std::string to_line(const CatalogRecord& r) { return to_json(r).dump(); }

inline void write_catalog(std::vector<CatalogRecord> records, const std::string& path) {
  std::stable_sort(records.begin(), records.end(), canonical_less);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  for (const auto& r : records) out << to_line(r) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

inline std::vector<CatalogRecord> read_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::vector<CatalogRecord> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.empty()) continue;
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::SchemaError, "line " + std::to_string(no) + ": " + e.what());
    }
    out.push_back(record_from_json(j, no));
  }
  return out;
}

}  // namespace srk
