#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qfock {

/// Index of an orthonormal basis vector of the one-particle space.
/// Letter 0 is the distinguished generator e.
using Letter = std::uint16_t;

inline constexpr Letter kGenerator = 0;

/// Default caps guarding runaway enumeration.
struct Limits {
  std::size_t degree_cap = 64;
  std::size_t wick_degree_cap = 20;
  std::size_t bruteforce_degree_cap = 8;
};

/// A simple tensor e_{i1} (x) ... (x) e_{in}; the empty word is the vacuum.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// The word letter^n.
  static Word repeated(Letter letter, std::size_t n);
  static Word vacuum() { return Word(); }

  std::size_t degree() const { return letters_.size(); }
  bool is_vacuum() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// True when every letter is the generator (the vacuum included).
  bool is_pure_generator() const;
  Letter max_letter() const;

  Word prepended(Letter letter) const;
  Word appended(Letter letter) const;
  Word without(std::size_t position) const;
  Word suffix(std::size_t start) const;

  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Parses "0,1,1,0"; the empty string is the vacuum.
Word parse_word(std::string_view text);
/// Inverse of parse_word.
std::string format_word(const Word& word);
/// Human rendering: "Ω" for the vacuum, "e0⊗e1" otherwise.
std::string pretty_word(const Word& word);

/// Orthonormal basis {e_0 = e, e_1, ..., e_{d-1}}.
class Basis {
 public:
  explicit Basis(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  bool contains(Letter letter) const { return letter < dimension_; }

  /// Throws DomainError if a letter is outside the basis.
  void validate(const Word& word) const;
  /// Mixing computations need at least one letter orthogonal to e.
  void require_mixing_dimension() const;

 private:
  std::size_t dimension_;
};

/// All words of degree <= max_degree, grouped by degree then
/// lexicographically.
std::vector<Word> enumerate_words(const Basis& basis, std::size_t max_degree);

/// Throws CapExceeded when degree > cap.
void check_degree(std::size_t degree, std::size_t cap, std::string_view what);

}  // namespace qfock
