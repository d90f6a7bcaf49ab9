#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// ℓ(e_letter): prepends the letter to every word.
template <Scalar S>
FockVector<S> create(Letter letter, const FockVector<S>& v, const Limits& limits = {});

/// ℓ*(e_letter): removes a matching letter at position i with weight q^{i-1};
/// kills the vacuum.
template <Scalar S>
FockVector<S> annihilate(Letter letter, const FockVector<S>& v, const QParam<S>& q);

enum class LadderKind : std::uint8_t { create, annihilate };

struct Ladder {
  LadderKind kind;
  Letter letter;

  friend bool operator==(const Ladder&, const Ladder&) = default;
  friend auto operator<=>(const Ladder&, const Ladder&) = default;
};

/// Product of ladder factors written left to right, applied right to left.
template <Scalar S>
struct LadderMonomial {
  std::vector<Ladder> factors;
  S weight;
  /// |σ| of the coset representative; empty once identical monomials have
  /// been merged.
  std::optional<std::size_t> inversions;

  std::size_t annihilator_count() const;
  /// True when every create factor stands left of every annihilate factor.
  bool is_normal_ordered() const;
};

/// Normal-ordered expansion of W(source).
template <Scalar S>
struct WickExpansion {
  Word source;
  std::vector<LadderMonomial<S>> monomials;
};

/// A minimal-length representative of a coset of S_{n-i} × S_i in S_n:
/// permutation[k] is the source position (0-based) feeding slot k; slots
/// [0, n-i) are the creation block, [n-i, n) the annihilation block, each
/// increasing.
struct ShuffleRep {
  std::vector<std::size_t> permutation;
  std::size_t inversions = 0;
};

/// All (n-i, i)-shuffles, creation positions in lexicographic order.
std::vector<ShuffleRep> shuffle_representatives(std::size_t n, std::size_t i,
                                                const Limits& limits = {});

/// Full Wick expansion, one monomial per coset representative (2^n terms).
/// Throws CapExceeded above limits.wick_degree_cap.
template <Scalar S>
WickExpansion<S> wick_expand(const Word& word, const QParam<S>& q, const Limits& limits = {});

/// The same operator with identical monomials merged, built by a dynamic
/// program over letters rather than by enumerating cosets. For e^{⊗N} this has
/// N+1 monomials ℓ(e)^{N-i} ℓ*(e)^i weighted by q-binomials.
template <Scalar S>
WickExpansion<S> wick_expand_grouped(const Word& word, const QParam<S>& q,
                                     const Limits& limits = {});

template <Scalar S>
FockVector<S> apply_monomial(const LadderMonomial<S>& monomial, const FockVector<S>& v,
                             const QParam<S>& q, const Limits& limits = {});

template <Scalar S>
FockVector<S> apply_wick(const WickExpansion<S>& expansion, const FockVector<S>& v,
                         const QParam<S>& q, const Limits& limits = {});

/// W(word)v through the grouped Wick expansion.
template <Scalar S>
FockVector<S> apply_w(const Word& word, const FockVector<S>& v, const QParam<S>& q,
                      const Limits& limits = {});

/// W(ξ)v for a finite vector ξ, by linearity in ξ.
template <Scalar S>
FockVector<S> apply_w(const FockVector<S>& xi, const FockVector<S>& v, const QParam<S>& q,
                      const Limits& limits = {});

/// W(word)v by the recursion
///   W(f⊗η) = W(f)W(η) - Σ_k q^{k-1} <f, η_k> W(η without k),
/// independent of the Wick expansion.
template <Scalar S>
FockVector<S> apply_w_recursive(const Word& word, const FockVector<S>& v, const QParam<S>& q,
                                const Limits& limits = {});

/// (ℓ*(e_a)ℓ(e_b) - q ℓ(e_b)ℓ*(e_a) - δ_ab)(v); always zero.
template <Scalar S>
FockVector<S> q_commutation_defect(Letter a, Letter b, const FockVector<S>& v,
                                   const QParam<S>& q, const Limits& limits = {});

/// Vector symbol of Γ_q(T)(W(ξ)), i.e. F_q(T)ξ.
template <Scalar S>
FockVector<S> second_quantization_vector(const Contraction<S>& t, const FockVector<S>& xi);

/// τ(W(ξ)) = <W(ξ)Ω, Ω>, the vacuum coefficient of ξ.
template <Scalar S>
S trace(const FockVector<S>& xi);

/// "q^2 · c1 c0 a1"; merged monomials print their weight instead of q^k.
template <Scalar S>
std::string format_monomial(const LadderMonomial<S>& monomial);

}  // namespace qfock
