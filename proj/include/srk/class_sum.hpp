#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "srk/errors.hpp"

namespace srk {

/// Formal sum with nonzero integer coefficients over GrIndex or OgIndex.
/// Iteration follows the basis type's ordering.
template <class B>
class ClassSum {
 public:
  using map_type = std::map<B, std::int64_t>;
  using const_iterator = typename map_type::const_iterator;

  ClassSum() = default;

  void add(const B& basis, std::int64_t coeff = 1) {
    if (coeff == 0) return;
    if (!terms_.empty()) {
      const B& head = terms_.begin()->first;
      if (head.k != basis.k || head.n != basis.n)
        throw Error(ErrorCode::Internal, "mixed (k,n) in one class sum");
    }
    auto [it, inserted] = terms_.try_emplace(basis, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ClassSum& operator+=(const ClassSum& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }

  ClassSum scaled(std::int64_t f) const {
    ClassSum out;
    if (f == 0) return out;
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, c * f);
    return out;
  }

  std::int64_t coefficient(const B& basis) const {
    auto it = terms_.find(basis);
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [b, c] : terms_) t += c;
    return t;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  bool operator==(const ClassSum& o) const { return terms_ == o.terms_; }

 private:
  map_type terms_;
};

}  // namespace srk
