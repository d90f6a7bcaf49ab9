#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qfock/fock_vector.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// Vector symbol of E_A(W(ξ)) for the generator subalgebra A = Γ_q(ℝe):
/// F_q(E_e)ξ.
template <Scalar S>
FockVector<S> cond_exp_vector(const FockVector<S>& xi);

/// C_N = ‖E_A(a v_N b) - E_A(a) v_N E_A(b)‖₂² for a = W(word_a), b = W(word_b)
/// and v_N = W(e^{⊗N}) / ‖W(e^{⊗N})‖₂. The normalization is applied as a
/// division of the squared norm by [N]_q!, so the value stays exact.
template <Scalar S>
S mixing_coefficient(const Word& word_a, const Word& word_b, std::size_t n,
                     const QParam<S>& q, const Basis& basis, const Limits& limits = {});

enum class Verdict { summable_evidence, inconclusive };

const char* to_string(Verdict verdict);

template <Scalar S>
struct MixingEntry {
  std::size_t n = 0;
  S value;
  S partial_sum;
  /// C_N / C_{N-1}; empty for N = 0 or when C_{N-1} = 0.
  std::optional<S> ratio;
};

template <Scalar S>
struct MixingSeries {
  QParam<S> q;
  Word word_a;
  Word word_b;
  std::vector<MixingEntry<S>> entries;
  /// exp(slope) of a least-squares line through log C_N over the positive
  /// values among the last ⌈N_max/2⌉ points; 0 when that tail is all zero,
  /// empty when fewer than two positive points remain.
  std::optional<double> fitted_rate;
  /// Smallest N₀ with C_{N+1} < C_N (or both zero) for every N₀ <= N < N_max.
  std::optional<std::size_t> decay_onset;
  Verdict verdict = Verdict::inconclusive;

  std::size_t n_max() const { return entries.empty() ? 0 : entries.back().n; }
};

/// C_N for 0 <= N <= n_max with diagnostics. Coefficients for distinct N are
/// computed on up to `threads` workers (0 = hardware concurrency); the result
/// does not depend on the thread count.
template <Scalar S>
MixingSeries<S> mixing_series(const Word& word_a, const Word& word_b, std::size_t n_max,
                              const QParam<S>& q, const Basis& basis,
                              const Limits& limits = {}, unsigned threads = 0);

template <Scalar S>
struct OrthonormalityViolation {
  std::size_t i;
  std::size_t j;
  S expected;
  S actual;
};

template <Scalar S>
struct OrthonormalityReport {
  std::size_t j_max = 0;
  std::size_t pairs_checked = 0;
  std::vector<OrthonormalityViolation<S>> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks <e^{⊗i}, e^{⊗j}>_q = δ_ij [j]_q! for 0 <= i, j <= j_max.
template <Scalar S>
OrthonormalityReport<S> basis_orthonormality_check(std::size_t j_max, const QParam<S>& q);

/// E_A(a x b) - a E_A(x) b at the vector level, for a, b in A given by pure
/// generator words and x = W(ξ). Always zero; throws DomainError when a
/// word is not pure.
template <Scalar S>
FockVector<S> bimodularity_check(const Word& pure_word_a, const FockVector<S>& xi,
                                 const Word& pure_word_b, const QParam<S>& q,
                                 const Limits& limits = {});

}  // namespace qfock
