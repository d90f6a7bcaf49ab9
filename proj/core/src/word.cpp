#include "qfock/word.hpp"

#include <algorithm>
#include <charconv>

#include "qfock/errors.hpp"

namespace qfock {

Word Word::repeated(Letter letter, std::size_t n) {
  return Word(std::vector<Letter>(n, letter));
}

bool Word::is_pure_generator() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l == kGenerator; });
}

Letter Word::max_letter() const {
  if (letters_.empty()) return kGenerator;
  return *std::max_element(letters_.begin(), letters_.end());
}

Word Word::prepended(Letter letter) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(letter);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::appended(Letter letter) const {
  auto out = letters_;
  out.push_back(letter);
  return Word(std::move(out));
}

Word Word::without(std::size_t position) const {
  auto out = letters_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(position));
  return Word(std::move(out));
}

Word Word::suffix(std::size_t start) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                                  letters_.end()));
}

Word operator+(const Word& a, const Word& b) {
  auto out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  if (text.empty()) return Word();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
        value > 0xFFFF) {
      throw ParseError("bad letter '" + std::string(token) + "' in word '" +
                       std::string(text) + "'");
    }
    letters.push_back(static_cast<Letter>(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string pretty_word(const Word& word) {
  if (word.is_vacuum()) return "Ω";
  std::string out;
  for (std::size_t i = 0; i < word.degree(); ++i) {
    if (i) out += "⊗";
    out += "e" + std::to_string(word[i]);
  }
  return out;
}

Basis::Basis(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw DomainError("basis dimension must be >= 1");
  if (dimension_ > 0x10000) throw DomainError("basis dimension exceeds letter range");
}

void Basis::validate(const Word& word) const {
  for (Letter l : word) {
    if (!contains(l)) {
      throw DomainError("letter " + std::to_string(l) + " outside basis of dimension " +
                        std::to_string(dimension_));
    }
  }
}

void Basis::require_mixing_dimension() const {
  if (dimension_ < 2) {
    throw DomainError("mixing computations need basis dimension >= 2, got " +
                      std::to_string(dimension_));
  }
}

std::vector<Word> enumerate_words(const Basis& basis, std::size_t max_degree) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t n = 1; n <= max_degree; ++n) {
    std::vector<Word> next;
    next.reserve(layer.size() * basis.dimension());
    for (const auto& w : layer) {
      for (std::size_t l = 0; l < basis.dimension(); ++l) {
        next.push_back(w.appended(static_cast<Letter>(l)));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

void check_degree(std::size_t degree, std::size_t cap, std::string_view what) {
  if (degree > cap) {
    throw CapExceeded(std::string(what) + ": degree " + std::to_string(degree) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace qfock
