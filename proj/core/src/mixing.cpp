#include "qfock/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "qfock/errors.hpp"
#include "qfock/fock.hpp"
#include "qfock/ops.hpp"

namespace qfock {

template <Scalar S>
FockVector<S> cond_exp_vector(const FockVector<S>& xi) {
  return project_pure_e(xi);
}

template <Scalar S>
S mixing_coefficient(const Word& word_a, const Word& word_b, std::size_t n,
                     const QParam<S>& q, const Basis& basis, const Limits& limits) {
  basis.require_mixing_dimension();
  basis.validate(word_a);
  basis.validate(word_b);
  check_degree(n + word_a.degree() + word_b.degree(), limits.degree_cap, "mixing coefficient");

  const Word generator_power = Word::repeated(kGenerator, n);
  const FockVector<S> b_vector(word_b);

  // E_A(a W(e^N) b) Ω
  FockVector<S> delta =
      cond_exp_vector(apply_w(word_a, apply_w(generator_power, b_vector, q, limits), q, limits));

  // E_A(a) W(e^N) E_A(b) Ω, with E_A(a), E_A(b) represented by pure-e vectors.
  const FockVector<S> a_part = cond_exp_vector(FockVector<S>(word_a));
  const FockVector<S> b_part = cond_exp_vector(b_vector);
  if (!a_part.empty() && !b_part.empty()) {
    delta -= apply_w(a_part, apply_w(generator_power, b_part, q, limits), q, limits);
  }
  if (delta.empty()) return S(0);
  return norm_sq(delta, q) / q_factorial(n, q);
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::summable_evidence:
      return "summable-evidence";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::optional<double> fit_geometric_rate(const std::vector<std::pair<double, double>>& points,
                                         bool tail_all_zero) {
  if (tail_all_zero) return 0.0;
  if (points.size() < 2) return std::nullopt;
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  return std::exp(sxy / sxx);
}

}  // namespace

template <Scalar S>
MixingSeries<S> mixing_series(const Word& word_a, const Word& word_b, std::size_t n_max,
                              const QParam<S>& q, const Basis& basis, const Limits& limits,
                              unsigned threads) {
  if (n_max < 4) throw DomainError("mixing series needs N_max >= 4");
  basis.require_mixing_dimension();
  basis.validate(word_a);
  basis.validate(word_b);

  const std::size_t count = n_max + 1;
  std::vector<S> values(count, S(0));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  // Largest N first so the expensive coefficients spread across workers.
  auto work = [&](unsigned worker) {
    for (std::size_t k = worker; k < count; k += threads) {
      const std::size_t n = n_max - k;
      values[n] = mixing_coefficient(word_a, word_b, n, q, basis, limits);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> jobs;
    jobs.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) jobs.push_back(std::async(std::launch::async, work, w));
    for (auto& job : jobs) job.get();
  }

  MixingSeries<S> series{q, word_a, word_b, {}, std::nullopt, std::nullopt, Verdict::inconclusive};
  S running = 0;
  for (std::size_t n = 0; n < count; ++n) {
    running += values[n];
    MixingEntry<S> entry{n, values[n], running, std::nullopt};
    if (n > 0 && !is_zero(values[n - 1])) entry.ratio = values[n] / values[n - 1];
    series.entries.push_back(std::move(entry));
  }

  const std::size_t tail_len = (n_max + 1) / 2;  // ⌈N_max/2⌉
  std::vector<std::pair<double, double>> points;
  bool tail_all_zero = true;
  for (std::size_t n = n_max + 1 - tail_len; n <= n_max; ++n) {
    if (values[n] > S(0)) {
      tail_all_zero = false;
      points.emplace_back(static_cast<double>(n), std::log(to_double(values[n])));
    }
  }
  series.fitted_rate = fit_geometric_rate(points, tail_all_zero);

  auto decreasing_at = [&](std::size_t n) {
    return values[n + 1] < values[n] || (is_zero(values[n]) && is_zero(values[n + 1]));
  };
  std::optional<std::size_t> onset;
  for (std::size_t n = n_max; n-- > 0;) {
    if (!decreasing_at(n)) break;
    onset = n;
  }
  series.decay_onset = onset;

  if (series.fitted_rate && *series.fitted_rate < 1.0) {
    const double bound = (1.0 + *series.fitted_rate) / 2.0;
    const std::size_t quarter = (n_max + 3) / 4;  // ⌈N_max/4⌉
    bool ratios_ok = true;
    for (std::size_t n = n_max + 1 - quarter; n <= n_max; ++n) {
      const auto& e = series.entries[n];
      if (e.ratio) {
        ratios_ok = ratios_ok && to_double(*e.ratio) <= bound;
      } else if (!is_zero(values[n])) {
        ratios_ok = false;  // growth out of a zero coefficient
      }
    }
    if (ratios_ok) series.verdict = Verdict::summable_evidence;
  }
  return series;
}

template <Scalar S>
OrthonormalityReport<S> basis_orthonormality_check(std::size_t j_max, const QParam<S>& q) {
  if (j_max < 1) throw DomainError("orthonormality check needs j_max >= 1");
  OrthonormalityReport<S> report;
  report.j_max = j_max;
  for (std::size_t i = 0; i <= j_max; ++i) {
    const FockVector<S> left(Word::repeated(kGenerator, i));
    for (std::size_t j = 0; j <= j_max; ++j) {
      const FockVector<S> right(Word::repeated(kGenerator, j));
      S expected = i == j ? q_factorial(j, q) : S(0);
      S actual = inner_product(left, right, q);
      ++report.pairs_checked;
      if (!(actual == expected)) report.violations.push_back({i, j, expected, actual});
    }
  }
  return report;
}

template <Scalar S>
FockVector<S> bimodularity_check(const Word& pure_word_a, const FockVector<S>& xi,
                                 const Word& pure_word_b, const QParam<S>& q,
                                 const Limits& limits) {
  if (!pure_word_a.is_pure_generator() || !pure_word_b.is_pure_generator()) {
    throw DomainError("bimodularity check needs words in the generator letter only");
  }
  const FockVector<S> b_vector(pure_word_b);
  FockVector<S> lhs =
      cond_exp_vector(apply_w(pure_word_a, apply_w(xi, b_vector, q, limits), q, limits));
  FockVector<S> rhs =
      apply_w(pure_word_a, apply_w(cond_exp_vector(xi), b_vector, q, limits), q, limits);
  return lhs - rhs;
}

#define QFOCK_INSTANTIATE_MIXING(S)                                                           \
  template FockVector<S> cond_exp_vector(const FockVector<S>&);                               \
  template S mixing_coefficient(const Word&, const Word&, std::size_t, const QParam<S>&,      \
                                const Basis&, const Limits&);                                 \
  template MixingSeries<S> mixing_series(const Word&, const Word&, std::size_t,               \
                                         const QParam<S>&, const Basis&, const Limits&,       \
                                         unsigned);                                           \
  template OrthonormalityReport<S> basis_orthonormality_check(std::size_t, const QParam<S>&); \
  template FockVector<S> bimodularity_check(const Word&, const FockVector<S>&, const Word&,    \
                                            const QParam<S>&, const Limits&);

QFOCK_INSTANTIATE_MIXING(Rational)
QFOCK_INSTANTIATE_MIXING(double)

#undef QFOCK_INSTANTIATE_MIXING

}  // namespace qfock
