#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qfock/errors.hpp"
#include "qfock/fock.hpp"
#include "qfock/sampling.hpp"

namespace qfock {
namespace {

using Vec = FockVector<Rational>;
const Rational kHalf(1, 2);

Vec vec(const char* word, Rational c = 1) { return Vec(parse_word(word), c); }

TEST(Word, ParseAndFormat) {
  EXPECT_EQ(parse_word(""), Word());
  EXPECT_EQ(parse_word("0,1,1,0"), (Word{0, 1, 1, 0}));
  EXPECT_EQ(format_word(Word{0, 1, 1, 0}), "0,1,1,0");
  EXPECT_EQ(pretty_word(Word()), "Ω");
  EXPECT_THROW(parse_word("0,,1"), ParseError);
  EXPECT_THROW(parse_word("0,x"), ParseError);
  EXPECT_THROW(parse_word("1,"), ParseError);
  EXPECT_THROW(parse_word("70000"), ParseError);
}

TEST(Basis, ValidatesLetters) {
  Basis basis(2);
  EXPECT_NO_THROW(basis.validate(Word{0, 1}));
  EXPECT_THROW(basis.validate(Word{0, 2}), DomainError);
  EXPECT_THROW(Basis(0), DomainError);
  EXPECT_THROW(Basis(1).require_mixing_dimension(), DomainError);
  EXPECT_EQ(enumerate_words(basis, 4).size(), 31u);
}

TEST(FockVector, CanonicalSparseForm) {
  Vec v = vec("0,1", 2);
  v.add(parse_word("0,1"), Rational(-2));
  EXPECT_TRUE(v.empty());
  v.add(parse_word("1"), Rational(0));
  EXPECT_TRUE(v.empty());
  Vec w = vec("1") * Rational(0);
  EXPECT_TRUE(w.empty());
}

TEST(InnerProductBruteforce, Examples) {
  const ExactQ q(kHalf);
  EXPECT_EQ(inner_product_bruteforce(Vec::vacuum(), Vec::vacuum(), q), Rational(1));
  EXPECT_EQ(inner_product_bruteforce(vec("0,0"), vec("0,0"), q), Rational(3, 2));
  EXPECT_EQ(inner_product_bruteforce(vec("0,1"), vec("1,0"), q), kHalf);
  EXPECT_EQ(inner_product_bruteforce(vec("0,1"), vec("0,1"), q), Rational(1));
  EXPECT_THROW(inner_product_bruteforce(vec("0,0,0,0,0,0,0,0,0"), Vec::vacuum(), q),
               CapExceeded);
}

TEST(InnerProduct, Examples) {
  const ExactQ q(kHalf);
  Vec e5(Word::repeated(kGenerator, 5));
  EXPECT_EQ(inner_product(e5, e5, q), Rational(9765, 1024));
  EXPECT_EQ(inner_product(e5, e5, q), q_factorial(5, q));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      EXPECT_TRUE(inner_product(Vec(Word::repeated(0, i)), Vec(Word::repeated(0, j)), q)
                      .is_zero());
    }
  }
}

TEST(InnerProduct, AgreesWithBruteforceOnAllShortWordPairs) {
  const auto words = enumerate_words(Basis(2), 7);
  for (const Rational& qv : {Rational(0), kHalf, -kHalf, Rational(-3, 10)}) {
    const ExactQ q(qv);
    for (const auto& u : words) {
      for (const auto& w : words) {
        if (u.degree() != w.degree()) continue;
        ASSERT_EQ(inner_product(Vec(u), Vec(w), q), inner_product_bruteforce(Vec(u), Vec(w), q))
            << format_word(u) << " vs " << format_word(w) << " q=" << qv;
      }
    }
  }
}

TEST(InnerProduct, DistinctDegreesAreOrthogonal) {
  Sampler sampler(3);
  const Basis basis(3);
  const ExactQ q(Rational(-1, 2));
  for (int s = 0; s < 30; ++s) {
    const std::size_t d1 = sampler.below(5);
    const std::size_t d2 = (d1 + 1 + sampler.below(4)) % 6;
    Vec v;
    Vec w;
    for (int t = 0; t < 3; ++t) {
      v.add(sampler.word(basis, d1), sampler.coefficient<Rational>());
      w.add(sampler.word(basis, d2), sampler.coefficient<Rational>());
    }
    EXPECT_TRUE(inner_product(v, w, q).is_zero());
  }
}

TEST(InnerProduct, FreeCaseIsKroneckerDelta) {
  const ExactQ q(0);
  const auto words = enumerate_words(Basis(2), 4);
  for (const auto& u : words) {
    for (const auto& w : words) {
      EXPECT_EQ(inner_product(Vec(u), Vec(w), q), Rational(u == w ? 1 : 0));
    }
  }
}

TEST(NormSq, Examples) {
  const ExactQ q(kHalf);
  EXPECT_EQ(norm_sq(Vec::vacuum(), q), Rational(1));
  EXPECT_EQ(norm_sq(vec("0,0,0"), q), Rational(21, 8));
  // ‖e⊗f - f⊗e‖² = 2 - 2q
  EXPECT_EQ(norm_sq(vec("0,1") - vec("1,0"), q), Rational(1));
  EXPECT_EQ(norm_sq(vec("0,1") - vec("1,0"), ExactQ(Rational(3, 10))), Rational(7, 5));
}

TEST(Gram, LdltPivotsArePositiveAndMatchMinors) {
  const auto words = enumerate_words(Basis(2), 4);
  for (const Rational& qv : {kHalf, -kHalf, Rational(3, 10), Rational(-3, 10)}) {
    const ExactQ q(qv);
    const auto gram = gram_matrix<Rational>(words, q);
    const auto result = ldlt(gram);
    EXPECT_TRUE(result.positive_semidefinite);
    const auto minors = oracle::leading_minors(gram);
    Rational previous = 1;
    for (std::size_t k = 0; k < words.size(); ++k) {
      EXPECT_GT(result.pivots[k], Rational(0));
      EXPECT_EQ(result.pivots[k], minors[k] / previous);
      previous = minors[k];
    }
  }
}

TEST(Gram, LdltFlagsIndefiniteMatrix) {
  Matrix<Rational> m(2);
  m(0, 0) = 1;
  m(0, 1) = m(1, 0) = 2;
  m(1, 1) = 1;
  auto result = ldlt(m);
  EXPECT_FALSE(result.positive_semidefinite);
  EXPECT_EQ(result.pivots[1], Rational(-3));

  Matrix<Rational> singular(2);
  singular(0, 1) = singular(1, 0) = 1;
  EXPECT_FALSE(ldlt(singular).positive_semidefinite);
}

TEST(ProjectPureE, Examples) {
  EXPECT_EQ(project_pure_e(Vec::vacuum() + vec("0,1")), Vec::vacuum());
  EXPECT_EQ(project_pure_e(vec("0,0,0,0")), vec("0,0,0,0"));
  EXPECT_EQ(project_pure_e(vec("1,1", 3) + vec("0,0", 2)), vec("0,0", 2));
}

TEST(ProjectPureE, IdempotentAndNormNonincreasing) {
  Sampler sampler(11);
  const Basis basis(3);
  const ExactQ q(Rational(-3, 10));
  for (int s = 0; s < 40; ++s) {
    const Vec v = sampler.vector<Rational>(basis, 5, 6);
    const Vec p = project_pure_e(v);
    EXPECT_EQ(project_pure_e(p), p);
    EXPECT_LE(norm_sq(p, q), norm_sq(v, q));
  }
}

TEST(FirstQuantization, Examples) {
  const auto identity = Contraction<Rational>::identity(3);
  const auto projection = Contraction<Rational>::generator_projection(3);
  const Vec v = vec("0,1", 2) + vec("2,2,1", Rational(-1, 3));
  EXPECT_EQ(first_quantization(identity, v), v);
  EXPECT_TRUE(first_quantization(projection, vec("1,2")).empty());
  EXPECT_EQ(first_quantization(projection, vec("0,0,0") + vec("0,1")), vec("0,0,0"));
}

TEST(FirstQuantization, MultilinearExpansion) {
  Matrix<Rational> m(2);
  // e0 -> (e0 + e1)/2, e1 -> e1/2
  m(0, 0) = kHalf;
  m(1, 0) = kHalf;
  m(1, 1) = kHalf;
  const Contraction<Rational> t(m);
  const Vec image = first_quantization(t, vec("0,1") + Vec::vacuum());
  const Vec expected = Vec::vacuum() + vec("0,1", Rational(1, 4)) + vec("1,1", Rational(1, 4));
  EXPECT_EQ(image, expected);
}

TEST(FirstQuantization, GeneratorProjectionEqualsPureFilter) {
  Sampler sampler(5);
  const Basis basis(3);
  const auto projection = Contraction<Rational>::generator_projection(3);
  for (int s = 0; s < 40; ++s) {
    const Vec v = sampler.vector<Rational>(basis, 6, 8);
    EXPECT_EQ(first_quantization(projection, v), project_pure_e(v));
  }
}

TEST(Contraction, RejectsExpandingMaps) {
  Matrix<Rational> m = Matrix<Rational>::identity(2);
  m(0, 1) = Rational(1, 10);
  EXPECT_THROW(Contraction<Rational>{m}, DomainError);
  Matrix<Rational> rotation(2);
  rotation(0, 1) = 1;
  rotation(1, 0) = -1;
  EXPECT_NO_THROW(Contraction<Rational>{rotation});
  EXPECT_THROW(first_quantization(Contraction<Rational>::identity(2), vec("2")), DomainError);
}

TEST(FloatBackend, InnerProductTracksExact) {
  const FloatQ qf(0.5);
  FockVector<double> e4(Word::repeated(0, 4));
  EXPECT_NEAR(inner_product(e4, e4, qf), to_double(q_factorial(4, ExactQ(kHalf))), 1e-12);
  FockVector<double> v(Word{0, 1});
  v.add(Word{1, 0}, -1.0);
  EXPECT_NEAR(norm_sq(v, qf), 1.0, 1e-15);
}

}  // namespace
}  // namespace qfock
