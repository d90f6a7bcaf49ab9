#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// Finite linear combination of words. Terms are kept in lexicographic word
/// order and no stored coefficient is ever zero.
template <Scalar S>
class FockVector {
 public:
  using Terms = std::map<Word, S>;
  using value_type = typename Terms::value_type;

  FockVector() = default;
  explicit FockVector(Word word, S coefficient = S(1)) { add(std::move(word), std::move(coefficient)); }

  static FockVector vacuum() { return FockVector(Word()); }

  /// Accumulates coefficient * word, erasing the term if it cancels.
  void add(const Word& word, const S& coefficient) {
    if (is_zero(coefficient)) return;
    auto [it, inserted] = terms_.try_emplace(word, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(Word&& word, S&& coefficient) {
    if (is_zero(coefficient)) return;
    auto it = terms_.lower_bound(word);
    if (it != terms_.end() && it->first == word) {
      it->second += coefficient;
      if (is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.emplace_hint(it, std::move(word), std::move(coefficient));
    }
  }

  /// this += factor * other
  void add_scaled(const FockVector& other, const S& factor) {
    if (is_zero(factor)) return;
    for (const auto& [w, c] : other.terms_) add(w, c * factor);
  }

  /// Coefficient of word (zero when absent).
  S coefficient(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? S(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  bool is_zero_vector() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
    return d;
  }

  FockVector& operator+=(const FockVector& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, -c);
    return *this;
  }
  FockVector& operator*=(const S& factor) {
    if (is_zero(factor)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= factor;
    return *this;
  }

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(FockVector a, const S& f) { return a *= f; }
  friend FockVector operator*(const S& f, FockVector a) { return a *= f; }
  friend FockVector operator-(FockVector a) { return a *= S(-1); }

  friend bool operator==(const FockVector&, const FockVector&) = default;

  /// "c·e0⊗e1 + c'·Ω"; "0" for the zero vector.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += qfock::to_string(c) + "·" + pretty_word(w);
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace qfock
