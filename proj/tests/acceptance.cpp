// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Every comparison is exact equality in rational arithmetic; the runtime of
// each criterion is checked against its stated limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qfock/qfock.hpp"

namespace {

using namespace qfock;
using Vec = FockVector<Rational>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> check;
};

const Rational kHalf(1, 2);
const Rational kThreeTenths(3, 10);

std::vector<Rational> five_qs() {
  return {Rational(0), kHalf, -kHalf, kThreeTenths, -kThreeTenths};
}

Outcome norm_formula() {
  Outcome out;
  std::size_t checks = 0;
  for (const auto& qv : five_qs()) {
    const ExactQ q(qv);
    for (std::size_t n = 0; n <= 10; ++n) {
      const Vec en(Word::repeated(kGenerator, n));
      const Rational expected = q_factorial(n, q);
      if (inner_product(en, en, q) != expected) out.fail("recursive n=" + std::to_string(n));
      ++checks;
      if (n <= 8) {
        if (inner_product_bruteforce(en, en, q) != expected) {
          out.fail("brute force n=" + std::to_string(n));
        }
        ++checks;
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checks) + " exact equalities";
  return out;
}

Outcome q_commutation() {
  Outcome out;
  const Basis basis(2);
  std::size_t checks = 0;
  for (const Rational& qv : {Rational(0), kHalf, -kHalf}) {
    const ExactQ q(qv);
    Sampler sampler(2024);
    for (int s = 0; s < 100; ++s) {
      const Vec v = sampler.vector<Rational>(basis, 6, 6);
      for (Letter a = 0; a < 2; ++a) {
        for (Letter b = 0; b < 2; ++b) {
          if (!q_commutation_defect(a, b, v, q).empty()) {
            out.fail("nonzero defect a=" + std::to_string(a) + " b=" + std::to_string(b));
          }
          ++checks;
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checks) + " defects, all zero";
  return out;
}

Outcome wick_consistency() {
  Outcome out;
  const Basis basis(2);
  std::size_t words_checked = 0;
  std::size_t pairs_checked = 0;
  for (const Rational& qv : {Rational(0), kHalf, -kHalf, -kThreeTenths}) {
    const ExactQ q(qv);
    for (const auto& w : enumerate_words(basis, 6)) {
      const auto ex = wick_expand(w, q);
      if (ex.monomials.size() != (std::size_t{1} << w.degree())) out.fail("monomial count");
      if (apply_wick(ex, Vec::vacuum(), q) != Vec(w)) out.fail("W(ξ)Ω ≠ ξ for " + format_word(w));
      ++words_checked;
    }
    Sampler sampler(77);
    for (int s = 0; s < 50; ++s) {
      const Word w = sampler.word(basis, 1 + sampler.below(5));
      const Vec v = sampler.vector<Rational>(basis, 5, 4);
      if (apply_wick(wick_expand(w, q), v, q) != apply_w_recursive(w, v, q)) {
        out.fail("dual path mismatch for " + format_word(w));
      }
      ++pairs_checked;
    }
  }
  if (out.ok) {
    out.detail = std::to_string(words_checked) + " words (127 per q), " +
                 std::to_string(pairs_checked) + " dual-path pairs";
  }
  return out;
}

Outcome hermite_ladder() {
  Outcome out;
  for (const auto& qv : five_qs()) {
    const ExactQ q(qv);
    const auto generator = wick_expand(Word{kGenerator}, q);
    for (std::size_t n = 0; n <= 12; ++n) {
      Vec expected(Word::repeated(kGenerator, n + 1));
      if (n > 0) expected.add(Word::repeated(kGenerator, n - 1), q_int(n, q));
      if (apply_wick(generator, Vec(Word::repeated(kGenerator, n)), q) != expected) {
        out.fail("ladder n=" + std::to_string(n));
      }
    }
    const auto report = basis_orthonormality_check(8, q);
    if (!report.passed() || report.pairs_checked != 81) out.fail("orthogonality q=" + qv.to_string());
  }
  if (out.ok) out.detail = "n <= 12 ladder and 81 orthogonality pairs, 5 values of q";
  return out;
}

Outcome mixing_closed_form() {
  Outcome out;
  const Basis basis(2);
  for (const Rational& qv : {kHalf, -kHalf, kThreeTenths, -kThreeTenths}) {
    const ExactQ q(qv);
    const auto series = mixing_series(Word{1}, Word{1}, 12, q, basis);
    const Rational q2 = qv * qv;
    for (const auto& e : series.entries) {
      const auto k = static_cast<unsigned>(e.n);
      if (e.value != pow(q2, k)) out.fail("C_N ≠ q^2N at N=" + std::to_string(e.n));
      if (e.partial_sum != (Rational(1) - pow(q2, k + 1)) / (Rational(1) - q2)) {
        out.fail("partial sum at K=" + std::to_string(e.n));
      }
    }
  }
  if (out.ok) out.detail = "C_N = q^2N and partial sums exact for N <= 12";
  return out;
}

std::size_t count_letter(const Word& w, Letter l) {
  std::size_t c = 0;
  for (Letter x : w) c += x == l;
  return c;
}

Outcome decay_evidence() {
  Outcome out;
  const Basis basis(2);
  const auto words = enumerate_words(basis, 3);
  std::size_t nonzero_series = 0;
  std::size_t zero_series = 0;
  std::size_t worst_onset = 0;
  for (const Rational& qv : {kHalf, -kHalf}) {
    const ExactQ q(qv);
    for (const auto& a : words) {
      for (const auto& b : words) {
        const bool pure = a.is_pure_generator() || b.is_pure_generator();
        const bool matched = count_letter(a, 1) == count_letter(b, 1);
        if (!pure && !matched) continue;
        const auto series = mixing_series(a, b, 24, q, basis);
        const std::string tag = "a=" + format_word(a) + " b=" + format_word(b) + " q=" + qv.to_string();
        if (pure) {
          for (const auto& e : series.entries) {
            if (!e.value.is_zero()) out.fail("nonzero C_N for pure-e pair " + tag);
          }
          ++zero_series;
        } else {
          ++nonzero_series;
        }
        if (series.verdict != Verdict::summable_evidence) out.fail("inconclusive " + tag);
        if (!series.decay_onset || *series.decay_onset > 16) {
          out.fail("no decay onset by N0 = 16 for " + tag);
        } else {
          worst_onset = std::max(worst_onset, *series.decay_onset);
        }
      }
    }
  }
  if (out.ok) {
    out.detail = std::to_string(nonzero_series) + " matched series + " +
                 std::to_string(zero_series) + " pure-e series, latest onset N0 = " +
                 std::to_string(worst_onset);
  }
  return out;
}

Outcome conditional_expectation() {
  Outcome out;
  const Basis basis(2);
  Sampler sampler(99);
  const ExactQ q(kHalf);
  for (int s = 0; s < 50; ++s) {
    const Vec xi = sampler.vector<Rational>(basis, 5, 6);
    const Vec p = cond_exp_vector(xi);
    if (cond_exp_vector(p) != p) out.fail("idempotence");
    if (trace(p) != trace(xi)) out.fail("trace preservation");
    if (norm_sq(p, q) > norm_sq(xi, q)) out.fail("norm increase");
    const Word a = Word::repeated(kGenerator, sampler.below(4));
    const Word b = Word::repeated(kGenerator, sampler.below(4));
    const Vec x = sampler.vector<Rational>(basis, 4, 3);
    if (!bimodularity_check(a, x, b, q).empty()) out.fail("bimodularity");
  }
  if (out.ok) out.detail = "50 samples, all defects zero";
  return out;
}

Outcome positivity() {
  Outcome out;
  const auto words = enumerate_words(Basis(2), 4);
  for (const Rational& qv : {kHalf, -kHalf, kThreeTenths, -kThreeTenths}) {
    const auto result = ldlt(gram_matrix<Rational>(words, ExactQ(qv)));
    for (const auto& p : result.pivots) {
      if (p < Rational(0)) out.fail("negative pivot at q=" + qv.to_string());
    }
    if (!result.positive_semidefinite) out.fail("not PSD at q=" + qv.to_string());
  }
  if (out.ok) out.detail = "31x31 Gram, all pivots >= 0 at 4 values of q";
  return out;
}

Outcome combinatorics() {
  Outcome out;
  for (const auto& qv : five_qs()) {
    const ExactQ q(qv);
    for (std::size_t n = 0; n <= 10; ++n) {
      unsigned long long binom = 1;
      for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) binom = binom * (n - i + 1) / i;
        const auto reps = shuffle_representatives(n, i);
        if (reps.size() != binom) out.fail("coset count n=" + std::to_string(n));
        Rational sum = 0;
        for (const auto& r : reps) sum += q.pow(r.inversions);
        if (sum != q_binomial(n, i, q)) out.fail("q-binomial n=" + std::to_string(n));
      }
    }
  }
  if (out.ok) out.detail = "0 <= i <= n <= 10, 5 values of q";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "norm formula ‖e^n‖² = [n]_q!", 10, norm_formula},
      {"AC2", "q-commutation defect vanishes", 10, q_commutation},
      {"AC3", "Wick expansion consistency", 30, wick_consistency},
      {"AC4", "q-Hermite ladder and generator-basis orthogonality", 5, hermite_ladder},
      {"AC5", "mixing closed form C_N = q^2N", 60, mixing_closed_form},
      {"AC6", "decay evidence for short words", 600, decay_evidence},
      {"AC7", "conditional-expectation contract", 30, conditional_expectation},
      {"AC8", "Gram positivity via exact LDLᵀ", 30, positivity},
      {"AC9", "shuffle / q-binomial combinatorics", 5, combinatorics},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      outcome.fail("runtime " + std::to_string(seconds) + " s over limit");
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] %s %s: %s (%.3f s, limit %.0f s)\n", outcome.ok ? "PASS" : "FAIL", c.id,
                c.title, outcome.detail.c_str(), seconds, c.limit_seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
