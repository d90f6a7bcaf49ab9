#include "qfock/fock.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include <Eigen/SVD>

#include "qfock/errors.hpp"

namespace qfock {

namespace {

std::size_t count_inversions(const std::vector<std::size_t>& perm) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) ++inv;
    }
  }
  return inv;
}

template <Scalar S>
S pair_bruteforce(const Word& u, const Word& w, const QParam<S>& q) {
  if (u.degree() != w.degree()) return S(0);
  std::vector<std::size_t> sigma(w.degree());
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  // Histogram of inversion counts over matching permutations.
  std::vector<unsigned long> by_inversions(sigma.size() * sigma.size() / 2 + 1, 0);
  do {
    bool match = true;
    for (std::size_t k = 0; k < sigma.size() && match; ++k) {
      match = u[k] == w[sigma[k]];
    }
    if (match) ++by_inversions[count_inversions(sigma)];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  S sum = 0;
  S power = 1;
  for (unsigned long count : by_inversions) {
    if (count) sum += S(static_cast<long>(count)) * power;
    power *= q.value();
  }
  return sum;
}

/// <u.suffix(depth), w>_q for one fixed left word u, memoized per depth.
template <Scalar S>
class WordPairing {
 public:
  WordPairing(const Word& u, const QParam<S>& q) : u_(u), q_(q), memo_(u.degree()) {}

  S evaluate(std::size_t depth, const Word& w) {
    if (depth == u_.degree()) return S(1);
    auto& table = memo_[depth];
    if (auto it = table.find(w); it != table.end()) return it->second;
    const Letter f = u_[depth];
    S sum = 0;
    S power = 1;
    for (std::size_t k = 0; k < w.degree(); ++k) {
      if (w[k] == f) sum += power * evaluate(depth + 1, w.without(k));
      power *= q_.value();
    }
    table.emplace(w, sum);
    return sum;
  }

 private:
  const Word& u_;
  const QParam<S>& q_;
  std::vector<std::map<Word, S>> memo_;
};

}  // namespace

template <Scalar S>
S inner_product_bruteforce(const FockVector<S>& v, const FockVector<S>& w,
                           const QParam<S>& q, const Limits& limits) {
  check_degree(v.max_degree(), limits.bruteforce_degree_cap, "brute-force inner product");
  check_degree(w.max_degree(), limits.bruteforce_degree_cap, "brute-force inner product");
  S sum = 0;
  for (const auto& [u, cu] : v) {
    for (const auto& [x, cx] : w) {
      if (u.degree() != x.degree()) continue;
      S pair = pair_bruteforce(u, x, q);
      if (!is_zero(pair)) sum += cu * cx * pair;
    }
  }
  return sum;
}

template <Scalar S>
S inner_product(const FockVector<S>& v, const FockVector<S>& w, const QParam<S>& q) {
  S sum = 0;
  for (const auto& [u, cu] : v) {
    WordPairing<S> pairing(u, q);
    for (const auto& [x, cx] : w) {
      if (u.degree() != x.degree()) continue;
      S pair = pairing.evaluate(0, x);
      if (!is_zero(pair)) sum += cu * cx * pair;
    }
  }
  return sum;
}

template <Scalar S>
S norm_sq(const FockVector<S>& v, const QParam<S>& q) {
  return inner_product(v, v, q);
}

template <Scalar S>
FockVector<S> project_pure_e(const FockVector<S>& v) {
  FockVector<S> out;
  for (const auto& [w, c] : v) {
    if (w.is_pure_generator()) out.add(w, c);
  }
  return out;
}

template <Scalar S>
Matrix<S> Matrix<S>::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <Scalar S>
Contraction<S>::Contraction(Matrix<S> matrix) : matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(matrix_.size());
  if (d == 0) throw DomainError("contraction on a zero-dimensional space");
  Eigen::MatrixXd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = to_double(matrix_(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  sigma_max_ = svd.singularValues()(0);
  if (sigma_max_ > 1.0 + 1e-9) {
    throw DomainError("map is not a contraction: largest singular value " +
                      format_double(sigma_max_));
  }
}

template <Scalar S>
Contraction<S> Contraction<S>::identity(std::size_t d) {
  return Contraction(Matrix<S>::identity(d));
}

template <Scalar S>
Contraction<S> Contraction<S>::generator_projection(std::size_t d) {
  Matrix<S> m(d);
  m(kGenerator, kGenerator) = S(1);
  return Contraction(std::move(m));
}

template <Scalar S>
FockVector<S> first_quantization(const Contraction<S>& t, const FockVector<S>& v) {
  const Matrix<S>& m = t.matrix();
  const std::size_t d = m.size();
  FockVector<S> out;
  for (const auto& [word, coeff] : v) {
    FockVector<S> image(Word(), coeff);
    for (Letter j : word) {
      if (j >= d) {
        throw DomainError("letter " + std::to_string(j) + " outside contraction of dimension " +
                          std::to_string(d));
      }
      FockVector<S> next;
      for (const auto& [prefix, c] : image) {
        for (std::size_t i = 0; i < d; ++i) {
          const S& entry = m(i, j);
          if (!is_zero(entry)) next.add(prefix.appended(static_cast<Letter>(i)), c * entry);
        }
      }
      image = std::move(next);
      if (image.empty()) break;
    }
    out += image;
  }
  return out;
}

template <Scalar S>
Matrix<S> gram_matrix(std::span<const Word> words, const QParam<S>& q) {
  Matrix<S> g(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      S value = inner_product(FockVector<S>(words[i]), FockVector<S>(words[j]), q);
      g(i, j) = value;
      g(j, i) = value;
    }
  }
  return g;
}

template <Scalar S>
LdltResult<S> ldlt(const Matrix<S>& a) {
  const std::size_t n = a.size();
  Matrix<S> l = Matrix<S>::identity(n);
  LdltResult<S> result;
  result.pivots.assign(n, S(0));
  auto& d = result.pivots;
  for (std::size_t k = 0; k < n; ++k) {
    S pivot = a(k, k);
    for (std::size_t j = 0; j < k; ++j) pivot -= l(k, j) * l(k, j) * d[j];
    d[k] = pivot;
    if (pivot < S(0)) result.positive_semidefinite = false;
    for (std::size_t i = k + 1; i < n; ++i) {
      S entry = a(i, k);
      for (std::size_t j = 0; j < k; ++j) entry -= l(i, j) * l(k, j) * d[j];
      if (is_zero(pivot)) {
        if (!is_zero(entry)) result.positive_semidefinite = false;
        l(i, k) = S(0);
      } else {
        l(i, k) = entry / pivot;
      }
    }
  }
  return result;
}

#define QFOCK_INSTANTIATE_FOCK(S)                                                        \
  template S inner_product_bruteforce(const FockVector<S>&, const FockVector<S>&,       \
                                      const QParam<S>&, const Limits&);                 \
  template S inner_product(const FockVector<S>&, const FockVector<S>&, const QParam<S>&); \
  template S norm_sq(const FockVector<S>&, const QParam<S>&);                           \
  template FockVector<S> project_pure_e(const FockVector<S>&);                          \
  template class Matrix<S>;                                                             \
  template class Contraction<S>;                                                        \
  template FockVector<S> first_quantization(const Contraction<S>&, const FockVector<S>&); \
  template Matrix<S> gram_matrix(std::span<const Word>, const QParam<S>&);              \
  template LdltResult<S> ldlt(const Matrix<S>&);

QFOCK_INSTANTIATE_FOCK(Rational)
QFOCK_INSTANTIATE_FOCK(double)

#undef QFOCK_INSTANTIATE_FOCK

}  // namespace qfock
