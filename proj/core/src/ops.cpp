#include "qfock/ops.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "qfock/errors.hpp"

namespace qfock {

template <Scalar S>
FockVector<S> create(Letter letter, const FockVector<S>& v, const Limits& limits) {
  FockVector<S> out;
  for (const auto& [w, c] : v) {
    check_degree(w.degree() + 1, limits.degree_cap, "creation");
    out.add(w.prepended(letter), c);
  }
  return out;
}

template <Scalar S>
FockVector<S> annihilate(Letter letter, const FockVector<S>& v, const QParam<S>& q) {
  FockVector<S> out;
  for (const auto& [w, c] : v) {
    S power = c;
    for (std::size_t i = 0; i < w.degree(); ++i) {
      if (w[i] == letter) out.add(w.without(i), power);
      power *= q.value();
      if (is_zero(power)) break;
    }
  }
  return out;
}

template <Scalar S>
std::size_t LadderMonomial<S>::annihilator_count() const {
  return static_cast<std::size_t>(std::count_if(
      factors.begin(), factors.end(),
      [](const Ladder& l) { return l.kind == LadderKind::annihilate; }));
}

template <Scalar S>
bool LadderMonomial<S>::is_normal_ordered() const {
  bool seen_annihilator = false;
  for (const auto& f : factors) {
    if (f.kind == LadderKind::annihilate) {
      seen_annihilator = true;
    } else if (seen_annihilator) {
      return false;
    }
  }
  return true;
}

namespace {

void choose_positions(std::size_t n, std::size_t k, std::size_t start,
                      std::vector<std::size_t>& chosen,
                      std::vector<std::vector<std::size_t>>& out) {
  if (chosen.size() == k) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t p = start; p + (k - chosen.size()) <= n; ++p) {
    chosen.push_back(p);
    choose_positions(n, k, p + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<ShuffleRep> shuffle_representatives(std::size_t n, std::size_t i,
                                                const Limits& limits) {
  check_degree(n, limits.degree_cap, "shuffle enumeration");
  if (i > n) {
    throw DomainError("shuffle_representatives requires i <= n (n=" + std::to_string(n) +
                      ", i=" + std::to_string(i) + ")");
  }
  std::vector<std::vector<std::size_t>> creation_sets;
  std::vector<std::size_t> chosen;
  choose_positions(n, n - i, 0, chosen, creation_sets);

  std::vector<ShuffleRep> reps;
  reps.reserve(creation_sets.size());
  std::vector<bool> in_creation(n);
  for (const auto& creation : creation_sets) {
    std::fill(in_creation.begin(), in_creation.end(), false);
    for (auto p : creation) in_creation[p] = true;
    ShuffleRep rep;
    rep.permutation = creation;
    for (std::size_t p = 0; p < n; ++p) {
      if (!in_creation[p]) rep.permutation.push_back(p);
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rep.permutation[a] > rep.permutation[b]) ++rep.inversions;
      }
    }
    reps.push_back(std::move(rep));
  }
  return reps;
}

template <Scalar S>
WickExpansion<S> wick_expand(const Word& word, const QParam<S>& q, const Limits& limits) {
  check_degree(word.degree(), limits.wick_degree_cap, "wick expansion");
  const std::size_t n = word.degree();
  WickExpansion<S> out{word, {}};
  out.monomials.reserve(std::size_t{1} << n);
  std::vector<S> powers;
  for (std::size_t k = 0, top = n * n / 4; k <= top; ++k) powers.push_back(q.pow(k));
  for (std::size_t i = 0; i <= n; ++i) {
    for (const auto& rep : shuffle_representatives(n, i, limits)) {
      LadderMonomial<S> m{{}, powers[rep.inversions], rep.inversions};
      m.factors.reserve(n);
      for (std::size_t slot = 0; slot < n; ++slot) {
        const LadderKind kind = slot < n - i ? LadderKind::create : LadderKind::annihilate;
        m.factors.push_back({kind, word[rep.permutation[slot]]});
      }
      out.monomials.push_back(std::move(m));
    }
  }
  return out;
}

template <Scalar S>
WickExpansion<S> wick_expand_grouped(const Word& word, const QParam<S>& q,
                                     const Limits& limits) {
  check_degree(word.degree(), limits.degree_cap, "grouped wick expansion");
  // State: (creation letters, annihilation letters) in source order. Sending a
  // letter to the creation block passes it over every letter already
  // annihilated, one inversion each.
  using State = std::pair<Word, Word>;
  std::map<State, S> states;
  states.emplace(State{}, S(1));
  for (Letter letter : word) {
    std::map<State, S> next;
    auto accumulate = [&next](State key, S weight) {
      if (is_zero(weight)) return;
      auto [it, inserted] = next.try_emplace(std::move(key), weight);
      if (!inserted) {
        it->second += weight;
      }
    };
    for (const auto& [state, weight] : states) {
      const auto& [created, annihilated] = state;
      accumulate({created.appended(letter), annihilated},
                 weight * q.pow(annihilated.degree()));
      accumulate({created, annihilated.appended(letter)}, weight);
    }
    std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
    states = std::move(next);
  }

  WickExpansion<S> out{word, {}};
  for (auto& [state, weight] : states) {
    LadderMonomial<S> m{{}, weight, std::nullopt};
    for (Letter l : state.first) m.factors.push_back({LadderKind::create, l});
    for (Letter l : state.second) m.factors.push_back({LadderKind::annihilate, l});
    out.monomials.push_back(std::move(m));
  }
  std::stable_sort(out.monomials.begin(), out.monomials.end(),
                   [](const auto& a, const auto& b) {
                     return a.annihilator_count() < b.annihilator_count();
                   });
  return out;
}

template <Scalar S>
FockVector<S> apply_monomial(const LadderMonomial<S>& monomial, const FockVector<S>& v,
                             const QParam<S>& q, const Limits& limits) {
  FockVector<S> current = v;
  for (auto it = monomial.factors.rbegin(); it != monomial.factors.rend(); ++it) {
    if (current.empty()) return current;
    current = it->kind == LadderKind::create ? create(it->letter, current, limits)
                                             : annihilate(it->letter, current, q);
  }
  current *= monomial.weight;
  return current;
}

template <Scalar S>
FockVector<S> apply_wick(const WickExpansion<S>& expansion, const FockVector<S>& v,
                         const QParam<S>& q, const Limits& limits) {
  FockVector<S> out;
  for (const auto& m : expansion.monomials) {
    out += apply_monomial(m, v, q, limits);
  }
  return out;
}

template <Scalar S>
FockVector<S> apply_w(const Word& word, const FockVector<S>& v, const QParam<S>& q,
                      const Limits& limits) {
  if (word.is_vacuum()) return v;
  return apply_wick(wick_expand_grouped(word, q, limits), v, q, limits);
}

template <Scalar S>
FockVector<S> apply_w(const FockVector<S>& xi, const FockVector<S>& v, const QParam<S>& q,
                      const Limits& limits) {
  FockVector<S> out;
  for (const auto& [word, coeff] : xi) {
    out.add_scaled(apply_w(word, v, q, limits), coeff);
  }
  return out;
}

template <Scalar S>
FockVector<S> apply_w_recursive(const Word& word, const FockVector<S>& v, const QParam<S>& q,
                                const Limits& limits) {
  if (word.is_vacuum()) return v;
  const Letter f = word[0];
  const Word rest = word.suffix(1);
  FockVector<S> inner = apply_w_recursive(rest, v, q, limits);
  FockVector<S> out = create(f, inner, limits) + annihilate(f, inner, q);
  S power = 1;
  for (std::size_t k = 0; k < rest.degree(); ++k) {
    if (rest[k] == f) out.add_scaled(apply_w_recursive(rest.without(k), v, q, limits), -power);
    power *= q.value();
  }
  return out;
}

template <Scalar S>
FockVector<S> q_commutation_defect(Letter a, Letter b, const FockVector<S>& v,
                                   const QParam<S>& q, const Limits& limits) {
  FockVector<S> out = annihilate(a, create(b, v, limits), q);
  out.add_scaled(create(b, annihilate(a, v, q), limits), -q.value());
  if (a == b) out -= v;
  return out;
}

template <Scalar S>
FockVector<S> second_quantization_vector(const Contraction<S>& t, const FockVector<S>& xi) {
  return first_quantization(t, xi);
}

template <Scalar S>
S trace(const FockVector<S>& xi) {
  return xi.coefficient(Word());
}

template <Scalar S>
std::string format_monomial(const LadderMonomial<S>& monomial) {
  std::string out = monomial.inversions ? "q^" + std::to_string(*monomial.inversions)
                                        : to_string(monomial.weight);
  out += " ·";
  if (monomial.factors.empty()) return out + " 1";
  for (const auto& f : monomial.factors) {
    out += f.kind == LadderKind::create ? " c" : " a";
    out += std::to_string(f.letter);
  }
  return out;
}

#define QFOCK_INSTANTIATE_OPS(S)                                                              \
  template FockVector<S> create(Letter, const FockVector<S>&, const Limits&);                 \
  template FockVector<S> annihilate(Letter, const FockVector<S>&, const QParam<S>&);          \
  template struct LadderMonomial<S>;                                                          \
  template WickExpansion<S> wick_expand(const Word&, const QParam<S>&, const Limits&);        \
  template WickExpansion<S> wick_expand_grouped(const Word&, const QParam<S>&, const Limits&); \
  template FockVector<S> apply_monomial(const LadderMonomial<S>&, const FockVector<S>&,       \
                                        const QParam<S>&, const Limits&);                     \
  template FockVector<S> apply_wick(const WickExpansion<S>&, const FockVector<S>&,            \
                                    const QParam<S>&, const Limits&);                         \
  template FockVector<S> apply_w(const Word&, const FockVector<S>&, const QParam<S>&,         \
                                 const Limits&);                                              \
  template FockVector<S> apply_w(const FockVector<S>&, const FockVector<S>&,                  \
                                 const QParam<S>&, const Limits&);                            \
  template FockVector<S> apply_w_recursive(const Word&, const FockVector<S>&,                 \
                                           const QParam<S>&, const Limits&);                  \
  template FockVector<S> q_commutation_defect(Letter, Letter, const FockVector<S>&,           \
                                              const QParam<S>&, const Limits&);               \
  template FockVector<S> second_quantization_vector(const Contraction<S>&,                    \
                                                    const FockVector<S>&);                    \
  template S trace(const FockVector<S>&);                                                     \
  template std::string format_monomial(const LadderMonomial<S>&);

QFOCK_INSTANTIATE_OPS(Rational)
QFOCK_INSTANTIATE_OPS(double)

#undef QFOCK_INSTANTIATE_OPS

}  // namespace qfock
