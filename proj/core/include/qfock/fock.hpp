#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qfock/fock_vector.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"

namespace qfock {

/// q-inner product by literal enumeration of S_m: for words of equal degree m,
/// sum over permutations σ of q^{inv(σ)} · Π_k δ(u_k, w_{σ(k)}).
/// Throws CapExceeded when any term exceeds limits.bruteforce_degree_cap.
template <Scalar S>
S inner_product_bruteforce(const FockVector<S>& v, const FockVector<S>& w,
                           const QParam<S>& q, const Limits& limits = {});

/// Same value as inner_product_bruteforce, computed through the adjoint
/// identity <f⊗ξ, η> = <ξ, ℓ*(f)η> with memoization on (suffix, subword).
template <Scalar S>
S inner_product(const FockVector<S>& v, const FockVector<S>& w, const QParam<S>& q);

template <Scalar S>
S norm_sq(const FockVector<S>& v, const QParam<S>& q);

/// Keeps exactly the terms whose words use only the generator letter.
template <Scalar S>
FockVector<S> project_pure_e(const FockVector<S>& v);

/// Dense row-major square matrix.
template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, S(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<S> data_;
};

/// A real-linear contraction of the one-particle space, as a d×d matrix in
/// the basis {e_i}: column j is the image of e_j. The largest singular value
/// is checked in double precision against 1 + 1e-9.
template <Scalar S>
class Contraction {
 public:
  explicit Contraction(Matrix<S> matrix);

  static Contraction identity(std::size_t d);
  /// E_e: orthogonal projection onto the generator line.
  static Contraction generator_projection(std::size_t d);

  std::size_t dimension() const { return matrix_.size(); }
  const Matrix<S>& matrix() const { return matrix_; }
  double largest_singular_value() const { return sigma_max_; }

 private:
  Matrix<S> matrix_;
  double sigma_max_ = 0.0;
};

/// F_q(T): identity on Ω, T^{⊗n} on degree-n words.
template <Scalar S>
FockVector<S> first_quantization(const Contraction<S>& t, const FockVector<S>& v);

/// Gram matrix G(i, j) = <words[i], words[j]>_q.
template <Scalar S>
Matrix<S> gram_matrix(std::span<const Word> words, const QParam<S>& q);

template <Scalar S>
struct LdltResult {
  std::vector<S> pivots;
  /// False when a negative pivot appears, or a zero pivot has a nonzero
  /// column below it.
  bool positive_semidefinite = true;
};

/// Unpivoted LDLᵀ of a symmetric matrix, exact in the rational backend.
template <Scalar S>
LdltResult<S> ldlt(const Matrix<S>& a);

}  // namespace qfock
