#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "qfock/fock_vector.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// Seeded source of random words and vectors. Uses only the raw mt19937_64
/// stream so that samples are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  /// Uniform integer in [lo, hi].
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1)));
  }

  Word word(const Basis& basis, std::size_t degree) {
    std::vector<Letter> letters(degree);
    for (auto& l : letters) l = static_cast<Letter>(below(basis.dimension()));
    return Word(std::move(letters));
  }

  /// Small nonzero rational p/d with |p| <= 5, 1 <= d <= 4.
  template <Scalar S>
  S coefficient() {
    long num = between(1, 5) * (below(2) ? 1 : -1);
    long den = between(1, 4);
    return S(num) / S(den);
  }

  /// Up to max_terms words of degree <= max_degree with random coefficients.
  template <Scalar S>
  FockVector<S> vector(const Basis& basis, std::size_t max_degree, std::size_t max_terms) {
    FockVector<S> out;
    std::size_t terms = 1 + below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
      out.add(word(basis, below(max_degree + 1)), coefficient<S>());
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qfock
