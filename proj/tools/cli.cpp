#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfock/qfock.hpp"

namespace qfock::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string q = "1/2";
  std::size_t dim = 2;
  std::size_t degree_cap = 64;
  std::uint64_t seed = 0;
  std::string json_path;
  std::string csv_path;

  std::string word;
  std::string a;
  std::string b;
  bool bruteforce = false;
  bool grouped = false;
  std::size_t max_degree = 4;
  std::size_t sample_degree = 6;
  std::size_t nmax = 12;
  std::size_t jmax = 6;
  std::size_t samples = 20;
  unsigned threads = 0;
};

struct Rendered {
  Json exact;
  Json floating;
};

template <Scalar S>
Rendered render(const S& value) {
  if constexpr (std::same_as<S, Rational>) {
    return {value.to_string(), value.to_double()};
  } else {
    return {nullptr, value};
  }
}

/// "21/8\t2.625" for exact values, "2.625" for floats.
template <Scalar S>
std::string render_text(const S& value) {
  if constexpr (std::same_as<S, Rational>) {
    return value.to_string() + "\t" + format_double(value.to_double());
  } else {
    return format_double(value);
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open output file '" + path + "'");
  file << text;
}

void emit_json(const Options& opt, const Json& doc, std::ostream& out) {
  if (opt.json_path.empty()) return;
  write_text(opt.json_path, doc.dump(2) + "\n", out);
}

Word checked_word(const std::string& text, const Basis& basis) {
  Word w = parse_word(text);
  basis.validate(w);
  return w;
}

Limits limits_from(const Options& opt) {
  Limits limits;
  limits.degree_cap = opt.degree_cap;
  return limits;
}

template <Scalar S>
Json q_json(const QParam<S>& q) {
  if constexpr (std::same_as<S, Rational>) {
    return q.value().to_string();
  } else {
    return q.value();
  }
}

template <Scalar S>
int cmd_inner(const Options& opt, const QParam<S>& q, std::ostream& out) {
  const Basis basis(opt.dim);
  const FockVector<S> u(checked_word(opt.a, basis));
  const FockVector<S> w(checked_word(opt.b, basis));
  Limits limits = limits_from(opt);
  check_degree(std::max(u.max_degree(), w.max_degree()), limits.degree_cap, "inner");
  S value = opt.bruteforce ? inner_product_bruteforce(u, w, q, limits) : inner_product(u, w, q);
  auto r = render(value);
  if (!r.exact.is_null()) out << r.exact.template get<std::string>() << "\n";
  out << format_double(to_double(value)) << "\n";
  emit_json(opt, Json{{"q", q_json(q)}, {"a", opt.a}, {"b", opt.b},
                      {"value_exact", r.exact}, {"value_float", r.floating}}, out);
  return kExitOk;
}

template <Scalar S>
int cmd_norm(const Options& opt, const QParam<S>& q, std::ostream& out) {
  const Basis basis(opt.dim);
  const Word w = checked_word(opt.word, basis);
  check_degree(w.degree(), opt.degree_cap, "norm");
  S value = norm_sq(FockVector<S>(w), q);
  auto r = render(value);
  if (!r.exact.is_null()) out << r.exact.template get<std::string>() << "\n";
  out << format_double(to_double(value)) << "\n";
  emit_json(opt, Json{{"q", q_json(q)}, {"word", opt.word},
                      {"norm_sq_exact", r.exact}, {"norm_sq_float", r.floating}}, out);
  return kExitOk;
}

template <Scalar S>
int cmd_gram(const Options& opt, const QParam<S>& q, std::ostream& out) {
  const Basis basis(opt.dim);
  check_degree(opt.max_degree, opt.degree_cap, "gram");
  const auto words = enumerate_words(basis, opt.max_degree);
  const auto result = ldlt(gram_matrix<S>(words, q));
  Json pivots = Json::array();
  out << "index\tword\tpivot\n";
  for (std::size_t k = 0; k < words.size(); ++k) {
    const S& p = result.pivots[k];
    out << k << "\t" << pretty_word(words[k]) << "\t" << render_text(p) << "\n";
    auto r = render(p);
    pivots.push_back(Json{{"word", format_word(words[k])}, {"pivot_exact", r.exact},
                          {"pivot_float", r.floating}});
  }
  out << "positive-semidefinite\t" << (result.positive_semidefinite ? "PASS" : "FAIL") << "\n";
  emit_json(opt, Json{{"q", q_json(q)}, {"dim", opt.dim}, {"max_degree", opt.max_degree},
                      {"pivots", pivots},
                      {"positive_semidefinite", result.positive_semidefinite}}, out);
  return result.positive_semidefinite ? kExitOk : kExitCheckFailed;
}

template <Scalar S>
int cmd_wick(const Options& opt, const QParam<S>& q, std::ostream& out) {
  const Basis basis(opt.dim);
  const Word w = checked_word(opt.word, basis);
  Limits limits = limits_from(opt);
  const auto expansion = opt.grouped ? wick_expand_grouped(w, q, limits) : wick_expand(w, q, limits);
  Json monomials = Json::array();
  for (const auto& m : expansion.monomials) {
    out << format_monomial(m) << "\n";
    std::string factors;
    for (const auto& f : m.factors) {
      if (!factors.empty()) factors += ' ';
      factors += (f.kind == LadderKind::create ? 'c' : 'a') + std::to_string(f.letter);
    }
    auto r = render(m.weight);
    Json entry{{"factors", factors}};
    entry["inversions"] = m.inversions ? Json(*m.inversions) : Json(nullptr);
    entry["weight_exact"] = r.exact;
    entry["weight_float"] = r.floating;
    monomials.push_back(std::move(entry));
  }
  // The expansion must reproduce its source word on the vacuum.
  const bool reproduces = apply_wick(expansion, FockVector<S>::vacuum(), q, limits) ==
                          FockVector<S>(w);
  emit_json(opt, Json{{"q", q_json(q)}, {"word", format_word(w)},
                      {"grouped", opt.grouped}, {"monomials", monomials},
                      {"vacuum_check", reproduces}}, out);
  return reproduces ? kExitOk : kExitCheckFailed;
}

template <Scalar S>
int cmd_commutator_check(const Options& opt, const QParam<S>& q, std::ostream& out) {
  const Basis basis(opt.dim);
  Limits limits = limits_from(opt);
  check_degree(opt.sample_degree + 1, limits.degree_cap, "commutator-check");
  Sampler sampler(opt.seed);
  bool all_ok = true;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const auto v = sampler.vector<S>(basis, opt.sample_degree, 4);
    bool ok = true;
    for (std::size_t a = 0; a < basis.dimension() && ok; ++a) {
      for (std::size_t b = 0; b < basis.dimension() && ok; ++b) {
        ok = q_commutation_defect(static_cast<Letter>(a), static_cast<Letter>(b), v, q, limits)
                 .is_zero_vector();
      }
    }
    all_ok = all_ok && ok;
    out << (ok ? "PASS" : "FAIL") << "\tsample " << s << "\t" << v.to_string() << "\n";
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

template <Scalar S>
int cmd_hermite_check(const Options& opt, const QParam<S>& q, std::ostream& out) {
  Limits limits = limits_from(opt);
  check_degree(opt.nmax + 1, limits.degree_cap, "hermite-check");
  bool all_ok = true;
  for (std::size_t n = 0; n <= opt.nmax; ++n) {
    const auto result = apply_w(Word{kGenerator},
                                FockVector<S>(Word::repeated(kGenerator, n)), q, limits);
    FockVector<S> expected(Word::repeated(kGenerator, n + 1));
    if (n > 0) expected.add(Word::repeated(kGenerator, n - 1), q_int(n, q));
    const bool ok = result == expected;
    all_ok = all_ok && ok;
    out << (ok ? "PASS" : "FAIL") << "\tn " << n << "\t" << result.to_string() << "\n";
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

template <Scalar S>
int cmd_ortho_check(const Options& opt, const QParam<S>& q, std::ostream& out) {
  check_degree(opt.jmax, opt.degree_cap, "ortho-check");
  const auto report = basis_orthonormality_check(opt.jmax, q);
  for (const auto& v : report.violations) {
    out << "FAIL\ti " << v.i << "\tj " << v.j << "\texpected " << to_string(v.expected)
        << "\tactual " << to_string(v.actual) << "\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << "\t" << report.pairs_checked << " pairs, "
      << report.violations.size() << " violations\n";
  return report.passed() ? kExitOk : kExitCheckFailed;
}

template <Scalar S>
Json mixing_json(const MixingSeries<S>& series) {
  Json entries = Json::array();
  for (const auto& e : series.entries) {
    auto c = render(e.value);
    auto p = render(e.partial_sum);
    Json entry{{"N", e.n}, {"c_exact", c.exact}, {"c_float", c.floating},
               {"partial_sum_exact", p.exact}, {"partial_sum_float", p.floating}};
    if (e.ratio) {
      auto r = render(*e.ratio);
      entry["ratio_exact"] = r.exact;
      entry["ratio_float"] = r.floating;
    } else {
      entry["ratio_exact"] = nullptr;
      entry["ratio_float"] = nullptr;
    }
    entries.push_back(std::move(entry));
  }
  Json doc{{"q", q_json(series.q)}, {"a", format_word(series.word_a)},
           {"b", format_word(series.word_b)}, {"entries", entries}};
  doc["fitted_rate"] = series.fitted_rate ? Json(*series.fitted_rate) : Json(nullptr);
  doc["decay_onset"] = series.decay_onset ? Json(*series.decay_onset) : Json(nullptr);
  doc["verdict"] = to_string(series.verdict);
  return doc;
}

template <Scalar S>
std::string mixing_csv(const MixingSeries<S>& series) {
  std::ostringstream csv;
  csv << "N,c_exact,c_float,partial_sum_exact,partial_sum_float,ratio_exact,ratio_float\n";
  auto cell = [](const Json& j) {
    if (j.is_null()) return std::string();
    if (j.is_string()) return j.get<std::string>();
    return format_double(j.get<double>());
  };
  for (const auto& e : series.entries) {
    auto c = render(e.value);
    auto p = render(e.partial_sum);
    Rendered r{nullptr, nullptr};
    if (e.ratio) r = render(*e.ratio);
    csv << e.n << ',' << cell(c.exact) << ',' << cell(c.floating) << ',' << cell(p.exact) << ','
        << cell(p.floating) << ',' << cell(r.exact) << ',' << cell(r.floating) << '\n';
  }
  return csv.str();
}

template <Scalar S>
int cmd_mixing(const Options& opt, const QParam<S>& q, std::ostream& out) {
  const Basis basis(opt.dim);
  basis.require_mixing_dimension();
  const Word a = checked_word(opt.a, basis);
  const Word b = checked_word(opt.b, basis);
  const auto series = mixing_series(a, b, opt.nmax, q, basis, limits_from(opt), opt.threads);

  out << "q\t" << q.to_string() << "\ta\t" << format_word(a) << "\tb\t" << format_word(b)
      << "\tN_max\t" << opt.nmax << "\n";
  out << "N\tC_N\tpartial_sum\tratio\n";
  for (const auto& e : series.entries) {
    out << e.n << "\t" << render_text(e.value) << "\t" << render_text(e.partial_sum) << "\t"
        << (e.ratio ? render_text(*e.ratio) : std::string("-")) << "\n";
  }
  out << "fitted_rate\t"
      << (series.fitted_rate ? format_double(*series.fitted_rate) : std::string("-")) << "\n";
  out << "decay_onset\t"
      << (series.decay_onset ? std::to_string(*series.decay_onset) : std::string("-")) << "\n";
  out << "verdict\t" << to_string(series.verdict) << "\n";

  emit_json(opt, mixing_json(series), out);
  if (!opt.csv_path.empty()) write_text(opt.csv_path, mixing_csv(series), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-deformed Fock space computations"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&opt](CLI::App* sub) {
    sub->add_option("--q", opt.q, "deformation parameter: p/d (exact) or decimal (float)");
    sub->add_option("--dim", opt.dim, "basis dimension d")->check(CLI::PositiveNumber);
    sub->add_option("--degree-cap", opt.degree_cap, "maximal word degree");
    sub->add_option("--seed", opt.seed, "sampling seed");
    sub->add_option("--json", opt.json_path, "write JSON to this path ('-' for stdout)");
  };

  std::function<int(std::ostream&)> action;
  auto bind = [&](CLI::App* sub, auto command) {
    sub->callback([&, sub, command] {
      (void)sub;
      action = [&opt, command](std::ostream& o) {
        return std::visit([&](const auto& q) { return command(opt, q, o); }, parse_q(opt.q));
      };
    });
  };

  auto* inner = app.add_subcommand("inner", "q-inner product of two words");
  common(inner);
  inner->add_option("--a", opt.a, "left word, e.g. 0,1")->required();
  inner->add_option("--b", opt.b, "right word")->required();
  inner->add_flag("--bruteforce", opt.bruteforce, "enumerate S_m instead of recursing");
  bind(inner, [](const Options& o, const auto& q, std::ostream& s) { return cmd_inner(o, q, s); });

  auto* norm = app.add_subcommand("norm", "squared q-norm of a word");
  common(norm);
  norm->add_option("--word", opt.word, "word, e.g. 0,0,0")->required();
  bind(norm, [](const Options& o, const auto& q, std::ostream& s) { return cmd_norm(o, q, s); });

  auto* gram = app.add_subcommand("gram", "LDLᵀ pivots of the Gram matrix of all short words");
  common(gram);
  gram->add_option("--max-degree", opt.max_degree, "largest word degree");
  bind(gram, [](const Options& o, const auto& q, std::ostream& s) { return cmd_gram(o, q, s); });

  auto* wick = app.add_subcommand("wick", "normal-ordered Wick expansion of W(word)");
  common(wick);
  wick->add_option("word", opt.word, "word, e.g. 1,2 (empty string for Ω)")->required();
  wick->add_flag("--grouped", opt.grouped, "merge identical monomials");
  bind(wick, [](const Options& o, const auto& q, std::ostream& s) { return cmd_wick(o, q, s); });

  auto* comm = app.add_subcommand("commutator-check", "q-commutation relation on random vectors");
  common(comm);
  comm->add_option("--samples", opt.samples, "number of random vectors");
  comm->add_option("--max-degree", opt.sample_degree, "largest sampled degree");
  bind(comm, [](const Options& o, const auto& q, std::ostream& s) {
    return cmd_commutator_check(o, q, s);
  });

  auto* hermite = app.add_subcommand("hermite-check", "W(e)e^n = e^(n+1) + [n]_q e^(n-1)");
  common(hermite);
  hermite->add_option("--nmax", opt.nmax, "largest n");
  bind(hermite, [](const Options& o, const auto& q, std::ostream& s) {
    return cmd_hermite_check(o, q, s);
  });

  auto* mixing = app.add_subcommand("mixing", "mixing coefficients C_N and decay diagnostics");
  common(mixing);
  mixing->add_option("--a", opt.a, "word of a")->required();
  mixing->add_option("--b", opt.b, "word of b")->required();
  mixing->add_option("--nmax", opt.nmax, "largest N (>= 4)");
  mixing->add_option("--csv", opt.csv_path, "write CSV to this path ('-' for stdout)");
  mixing->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
  bind(mixing, [](const Options& o, const auto& q, std::ostream& s) { return cmd_mixing(o, q, s); });

  auto* ortho = app.add_subcommand("ortho-check", "<e^i, e^j> = δ_ij [j]_q!");
  common(ortho);
  ortho->add_option("--jmax", opt.jmax, "largest power");
  bind(ortho, [](const Options& o, const auto& q, std::ostream& s) {
    return cmd_ortho_check(o, q, s);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action(out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qfock::cli
