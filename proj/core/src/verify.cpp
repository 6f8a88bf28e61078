#include "carrymix/verify.hpp"

#include "carrymix/bijections.hpp"
#include "carrymix/carries_chain.hpp"
#include "carrymix/combinatorics.hpp"
#include "carrymix/gf_sections.hpp"
#include "carrymix/montecarlo.hpp"
#include "carrymix/mult_carries.hpp"
#include "carrymix/shuffling.hpp"

#include "carrymix/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace carrymix {

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

// A check body fills `detail` and returns whether it passed.
template <class Body>
CheckResult run_check(std::string name, Body&& body) {
  std::string detail;
  try {
    const bool ok = body(detail);
    return {std::move(name), ok, std::move(detail)};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::string cfg(std::initializer_list<std::pair<const char*, long>> values) {
  std::string out;
  for (const auto& [key, value] : values) {
    if (!out.empty()) out += ' ';
    out += std::string(key) + '=' + std::to_string(value);
  }
  return out;
}

Rational q(long num, long den) { return make_rational(num, den); }

RationalMatrix holte_n3(long b) {
  const long b2 = b * b;
  RationalMatrix m{{b2 + 3 * b + 2, 4 * b2 - 4, b2 - 3 * b + 2},
                   {b2 - 1, 4 * b2 + 2, b2 - 1},
                   {b2 - 3 * b + 2, 4 * b2 - 4, b2 + 3 * b + 2}};
  return m.scaled(q(1, 6 * b2));
}

RationalMatrix binary_carries(long n) {
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const BigInt scale = big_pow(2, static_cast<unsigned long>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = make_rational(binomial(n + 1, 2 * j - i + 1), scale);
  return m;
}

RationalMatrix multiplication_k7_b10() {
  const int rows[7][7] = {{2, 1, 2, 1, 2, 1, 1}, {2, 1, 2, 1, 1, 2, 1}, {2, 1, 1, 2, 1, 2, 1}, {1, 2, 1, 2, 1, 2, 1},
                          {1, 2, 1, 2, 1, 1, 2}, {1, 2, 1, 1, 2, 1, 2}, {1, 1, 2, 1, 2, 1, 2}};
  RationalMatrix m(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) m(i, j) = q(rows[i][j], 10);
  return m;
}

RationalMatrix card_display(long n, long b) {
  if (n == 2) return RationalMatrix{{b + 1, b - 1}, {b - 1, b + 1}}.scaled(q(1, 2 * b));
  const long b2 = b * b;
  RationalMatrix m{{(b + 1) * (2 * b + 1), 2 * (b2 - 1), (b - 1) * (2 * b - 1)},
                   {2 * (b2 - 1), 2 * (b2 + 2), 2 * (b2 - 1)},
                   {(b - 1) * (2 * b - 1), 2 * (b2 - 1), (b + 1) * (2 * b + 1)}};
  return m.scaled(q(1, 6 * b2));
}

Polynomial geometric_spectrum_poly(long n, long b) {
  std::vector<Rational> roots;
  for (long k = 0; k < n; ++k) roots.push_back(make_rational(1, big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(k))));
  return poly_from_roots(roots);
}

bool within_standard_errors(std::uint64_t hits, std::uint64_t trials, double p, double k_se, double& excess) {
  const double freq = static_cast<double>(hits) / static_cast<double>(trials);
  if (p <= 0.0) {
    excess = freq;
    return hits == 0;
  }
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  excess = std::abs(freq - p) / se;
  return std::abs(freq - p) <= k_se * se;
}

}  // namespace

VerifyReport verify_golden(const VerifyOptions& /*opts*/) {
  VerifyReport report;
  report.checks.push_back(run_check("golden: n=3 carries matrix for b=2..10", [](std::string& detail) {
    for (long b = 2; b <= 10; ++b) {
      if (build_P(ChainSpec{3, b}) != holte_n3(b)) {
        detail = cfg({{"b", b}});
        return false;
      }
    }
    return true;
  }));
  report.checks.push_back(run_check("golden: base-2 carries matrix for n<=8", [](std::string& detail) {
    for (long n = 1; n <= 8; ++n) {
      if (build_P(ChainSpec{n, 2}) != binary_carries(n)) {
        detail = cfg({{"n", n}});
        return false;
      }
    }
    return true;
  }));
  report.checks.push_back(run_check("golden: multiplication matrix k=7 b=10", [](std::string&) {
    return build_K(MultSpec{7, 10}) == multiplication_k7_b10();
  }));
  report.checks.push_back(run_check("golden: card-tracking matrices n=2,3 b=2..6", [](std::string& detail) {
    for (long n = 2; n <= 3; ++n) {
      for (long b = 2; b <= 6; ++b) {
        if (card_tracking_matrix(n, b) != card_display(n, b)) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
      }
    }
    return true;
  }));
  return report;
}

VerifyReport verify_stationary(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 4 : 6;
  report.checks.push_back(run_check("stationary: pi P = pi, independent of b", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n) {
      const RationalVector pi = stationary(n);
      Rational mass = 0;
      for (const auto& x : pi) mass += x;
      if (mass != 1) {
        detail = "pi does not sum to 1 for n=" + std::to_string(n);
        return false;
      }
      for (long b : {2L, 3L, 5L, 10L}) {
        if (vec_mat_mul(pi, build_P(ChainSpec{n, b})) != pi) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
      }
    }
    detail = "n<=" + std::to_string(n_max) + ", b in {2,3,5,10}";
    return true;
  }));
  return report;
}

VerifyReport verify_eigen(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 4 : 6;
  report.checks.push_back(run_check("eigen: char_poly(P) = prod (x - b^-k)", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n) {
      for (long b : {2L, 3L}) {
        if (char_poly(build_P(ChainSpec{n, b})) != geometric_spectrum_poly(n, b)) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
      }
    }
    return true;
  }));
  report.checks.push_back(run_check("eigen: char_poly(card-tracking) = prod (x - b^-k)", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n) {
      for (long b : {2L, 3L}) {
        if (char_poly(card_tracking_matrix(n, b)) != geometric_spectrum_poly(n, b)) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
      }
    }
    return true;
  }));
  return report;
}

VerifyReport verify_semigroup(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 3 : 5;
  const long k_max = opts.quick ? 5 : 9;
  const long bases[] = {2, 3, 4};
  report.checks.push_back(run_check("semigroup: P_a P_b = P_ab", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long a : bases)
        for (long b : bases)
          if (build_P(ChainSpec{n, a}) * build_P(ChainSpec{n, b}) != build_P(ChainSpec{n, a * b})) {
            detail = cfg({{"n", n}, {"a", a}, {"b", b}});
            return false;
          }
    return true;
  }));
  report.checks.push_back(run_check("semigroup: Q_a Q_b = Q_ab (card tracking)", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long a : bases)
        for (long b : bases)
          if (card_tracking_matrix(n, a) * card_tracking_matrix(n, b) != card_tracking_matrix(n, a * b)) {
            detail = cfg({{"n", n}, {"a", a}, {"b", b}});
            return false;
          }
    return true;
  }));
  report.checks.push_back(run_check("semigroup: K_a K_b = K_ab", [&](std::string& detail) {
    for (long k = 1; k <= k_max; ++k)
      for (long a : bases)
        for (long b : bases)
          if (build_K(MultSpec{k, a}) * build_K(MultSpec{k, b}) != build_K(MultSpec{k, a * b})) {
            detail = cfg({{"k", k}, {"a", a}, {"b", b}});
            return false;
          }
    return true;
  }));
  return report;
}

VerifyReport verify_tp2(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 5 : 8;
  const long b_max = opts.quick ? 5 : 10;
  auto describe = [](const TotalPositivityReport& tp) {
    std::ostringstream out;
    out << "rows {";
    for (auto r : tp.violation->rows) out << ' ' << r;
    out << " } cols {";
    for (auto c : tp.violation->cols) out << ' ' << c;
    out << " } minor " << to_string(tp.violation->value);
    return out.str();
  };
  report.checks.push_back(run_check("tp2: every 2x2 minor of P is non-negative", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b = 2; b <= b_max; ++b) {
        const auto tp = is_totally_positive(build_P(ChainSpec{n, b}), 2);
        if (!tp) {
          detail = cfg({{"n", n}, {"b", b}}) + ": " + describe(tp);
          return false;
        }
      }
    return true;
  }));
  report.checks.push_back(run_check("tp2: base-2 minors of order <= 4 are non-negative", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n) {
      const auto tp = is_totally_positive(build_P(ChainSpec{n, 2}), 4);
      if (!tp) {
        detail = cfg({{"n", n}}) + ": " + describe(tp);
        return false;
      }
    }
    return true;
  }));
  return report;
}

VerifyReport verify_theorem_main(long n, long m, long b, TheoremMode mode, std::uint64_t samples,
                                 const VerifyOptions& opts) {
  VerifyReport report;
  const std::string where = cfg({{"n", n}, {"m", m}, {"b", b}});
  if (mode == TheoremMode::exhaustive) {
    report.checks.push_back(run_check("theorem-main: carries law = descents law = Markov product (" + where + ")",
                                      [&](std::string& detail) {
                                        const JointLaw carries = exhaustive_joint_carries(n, m, b, opts.jobs);
                                        const JointLaw descents_law = exhaustive_joint_descents(n, m, b, opts.jobs);
                                        const JointLaw markov = markov_joint_law(n, m, b);
                                        const bool same_cd = same_law(carries, descents_law);
                                        const bool same_cm = same_law(carries, markov);
                                        detail = std::string("carries==descents: ") + (same_cd ? "yes" : "no") +
                                                 ", carries==markov: " + (same_cm ? "yes" : "no");
                                        return same_cd && same_cm;
                                      }));
  } else {
    report.checks.push_back(run_check("theorem-main: sampled carries vs Markov product, chi-square (" + where + ")",
                                      [&](std::string& detail) {
                                        const JointLaw observed = sample_joint_carries(n, m, b, samples, opts.seed, opts.jobs);
                                        const JointLaw expected = markov_joint_law(n, m, b);
                                        const ChiSquareResult chi = chi_square(observed, expected);
                                        const double limit = chi_square_quantile(chi.dof, 0.999);
                                        std::ostringstream out;
                                        out << "statistic " << chi.statistic << ", dof " << chi.dof << ", 0.999 quantile "
                                            << limit;
                                        detail = out.str();
                                        return chi.dof == 0 ? chi.statistic == 0.0 : chi.statistic < limit;
                                      }));
  }
  return report;
}

VerifyReport verify_theorem_main_grid(const VerifyOptions& opts) {
  VerifyReport report;
  const std::vector<std::array<long, 3>> grid = opts.quick
      ? std::vector<std::array<long, 3>>{{2, 2, 2}, {3, 2, 2}}
      : std::vector<std::array<long, 3>>{{2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {2, 3, 2}};
  for (const auto& [n, m, b] : grid) report.append(verify_theorem_main(n, m, b, TheoremMode::exhaustive, 0, opts));
  return report;
}

namespace {

// Position-set identities on one array; returns an empty string on success.
std::string bijection_identities(const ColumnArray& c) {
  if (bar_inverse(bar_map(c)) != c) return "bar round trip";
  if (star_inverse(star_map(c)) != c) return "star round trip";
  for (std::size_t j = 1; j <= c.m(); ++j) {
    const ColumnArray prefix = c.rightmost(j);
    const TupleList barred = bar_map(prefix);
    if (descent_positions(barred) != carry_positions(TupleList::from_columns(prefix))) return "descar at j=" + std::to_string(j);
    if (descent_positions(barred) != descent_set(pi_label(barred))) return "samedes (bar) at j=" + std::to_string(j);
    const TupleList raw = TupleList::from_columns(prefix);
    if (descent_positions(raw) != descent_set(pi_label(raw))) return "samedes (raw) at j=" + std::to_string(j);
  }
  if (!starkey_product_check(c)) return "starkey";
  tau_trace(c);  // asserts d(tau_j) = kappa_j internally
  return {};
}

void for_each_array(long n, long m, long b, const std::function<bool(const ColumnArray&)>& visit) {
  ColumnArray a(static_cast<std::size_t>(n), static_cast<std::size_t>(m), b);
  const std::size_t cells = static_cast<std::size_t>(n * m);
  std::vector<int> digits(cells, 0);
  while (true) {
    for (std::size_t i = 0; i < cells; ++i) a.set(i / static_cast<std::size_t>(m), i % static_cast<std::size_t>(m), digits[i]);
    if (!visit(a)) return;
    std::size_t k = cells;
    while (k > 0 && digits[k - 1] == b - 1) digits[--k] = 0;
    if (k == 0) return;
    ++digits[k - 1];
  }
}

std::string array_text(const ColumnArray& a) {
  std::string out;
  for (std::size_t r = 0; r < a.n(); ++r) {
    if (r > 0) out += '/';
    for (int d : a.row_digits(r)) out += std::to_string(d);
  }
  return out;
}

}  // namespace

VerifyReport verify_bijections(long n, long m, long b, bool exhaustive, std::uint64_t samples,
                               const VerifyOptions& opts) {
  VerifyReport report;
  const std::string where = cfg({{"n", n}, {"m", m}, {"b", b}});
  report.checks.push_back(run_check(std::string("bijections: position identities, ") + (exhaustive ? "exhaustive " : "sampled ") + where,
                                    [&](std::string& detail) {
                                      std::uint64_t count = 0;
                                      bool ok = true;
                                      auto visit = [&](const ColumnArray& a) {
                                        ++count;
                                        const std::string failure = bijection_identities(a);
                                        if (!failure.empty()) {
                                          detail = failure + " fails on " + array_text(a);
                                          ok = false;
                                        }
                                        return ok;
                                      };
                                      if (exhaustive) {
                                        if (big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n * m)) > kJointEnumerationCap) {
                                          throw ResourceCapError("b^(n m) exceeds enumeration cap");
                                        }
                                        for_each_array(n, m, b, visit);
                                      } else {
                                        Rng rng(opts.seed);
                                        for (std::uint64_t s = 0; s < samples && ok; ++s) visit(sample_columns(n, m, b, rng));
                                      }
                                      if (ok) detail = std::to_string(count) + " arrays";
                                      return ok;
                                    }));
  return report;
}

VerifyReport verify_bijections_grid(const VerifyOptions& opts) {
  VerifyReport report;

  report.checks.push_back(run_check("bijections: worked example (n=6, m=3, b=3)", [](std::string& detail) {
    const ColumnArray c = ColumnArray::from_rows({{0, 1, 2}, {0, 1, 2}, {1, 1, 2}, {1, 1, 1}, {2, 1, 2}, {1, 2, 1}}, 3);
    const TupleList expected_bar({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}, {1, 0, 1}, {0, 2, 0}, {2, 1, 1}}, 3);
    const ShuffleTrace trace = tau_trace(c);
    const std::vector<Permutation> expected_tau{Permutation({6, 3, 1, 4, 2, 5}), Permutation({4, 1, 5, 2, 6, 3}),
                                                Permutation({1, 3, 6, 4, 2, 5})};
    const bool ok = column_carry_trace(c) == CarryTrace{3, 3, 2} && bar_map(c) == expected_bar &&
                    trace.perms == expected_tau;
    if (!ok) detail = "carries, bar image or tau trace differ from the worked example";
    return ok;
  }));

  report.checks.push_back(run_check("bijections: star example and starkey product", [](std::string& detail) {
    const ColumnArray a = ColumnArray::from_rows({{1, 2, 2}, {1, 2, 1}, {2, 0, 0}, {0, 0, 1}, {2, 1, 0}, {0, 1, 1}}, 3);
    const ColumnArray expected = ColumnArray::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}, {1, 0, 1}, {0, 2, 0}, {2, 1, 1}}, 3);
    const ColumnArray starred = star_map(a);
    const bool ok = starred == expected && starkey_product_check(a) &&
                    pi_label(starred) == Permutation({1, 3, 6, 4, 2, 5});
    if (!ok) detail = "star image or product mismatch";
    return ok;
  }));

  report.checks.push_back(run_check("bijections: bar and star injective on n=2 m=2 b=2", [](std::string& detail) {
    std::set<std::vector<std::vector<int>>> bars;
    std::set<ColumnArray> stars;
    for_each_array(2, 2, 2, [&](const ColumnArray& a) {
      bars.insert(bar_map(a).tuples());
      stars.insert(star_map(a));
      return true;
    });
    detail = std::to_string(bars.size()) + " bar images, " + std::to_string(stars.size()) + " star images";
    return bars.size() == 16 && stars.size() == 16;
  }));

  const long n_max = opts.quick ? 2 : 3;
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= 2; ++m)
      for (long b = 2; b <= 3; ++b) report.append(verify_bijections(n, m, b, true, 0, opts));

  report.checks.push_back(run_check("bijections: starkey on all 64 arrays n=3 m=2 b=2", [](std::string& detail) {
    int passed = 0;
    int total_arrays = 0;
    for_each_array(3, 2, 2, [&](const ColumnArray& a) {
      ++total_arrays;
      if (starkey_product_check(a)) ++passed;
      return true;
    });
    detail = std::to_string(passed) + "/" + std::to_string(total_arrays);
    return passed == 64 && total_arrays == 64;
  }));

  const std::uint64_t random_arrays = opts.quick ? 200 : 1000;
  report.checks.push_back(run_check("bijections: position identities on random arrays n<=6 m<=4 b<=4", [&](std::string& detail) {
    Rng rng(opts.seed);
    std::uniform_int_distribution<long> pick_n(1, 6);
    std::uniform_int_distribution<long> pick_m(1, 4);
    std::uniform_int_distribution<long> pick_b(2, 4);
    for (std::uint64_t s = 0; s < random_arrays; ++s) {
      const long n = pick_n(rng);
      const long m = pick_m(rng);
      const long b = pick_b(rng);
      const ColumnArray a = sample_columns(n, m, b, rng);
      const std::string failure = bijection_identities(a);
      if (!failure.empty()) {
        detail = failure + " fails on " + array_text(a) + " (b=" + std::to_string(b) + ")";
        return false;
      }
    }
    detail = std::to_string(random_arrays) + " arrays";
    return true;
  }));
  return report;
}

VerifyReport verify_separation(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 5 : 8;
  const unsigned r_max = opts.quick ? 4 : 6;
  report.checks.push_back(run_check("separation: exact = closed form", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b : {2L, 3L})
        for (unsigned r = 0; r <= r_max; ++r)
          if (separation_exact(ChainSpec{n, b}, r) != separation_closed(ChainSpec{n, b}, r)) {
            detail = cfg({{"n", n}, {"b", b}, {"r", r}});
            return false;
          }
    return true;
  }));
  report.checks.push_back(run_check("separation: f_r(i) non-increasing in i", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b : {2L, 3L})
        for (unsigned r = 0; r <= r_max; ++r) {
          const RationalVector f = separation_ratios(ChainSpec{n, b}, r);
          for (std::size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i + 1] > f[i]) {
              detail = cfg({{"n", n}, {"b", b}, {"r", r}, {"i", static_cast<long>(i)}});
              return false;
            }
        }
    return true;
  }));
  report.checks.push_back(run_check("separation: n=512 b=2 b^r=c n^2 within 0.01 of 1-exp(-1/2c)", [](std::string& detail) {
    std::ostringstream out;
    bool ok = true;
    for (unsigned r : {16U, 18U, 20U}) {
      const double c = std::ldexp(1.0, static_cast<int>(r)) / (512.0 * 512.0);
      const double sep = to_double(separation_closed(ChainSpec{512, 2}, r));
      const double limit = 1.0 - std::exp(-1.0 / (2.0 * c));
      out << "c=" << c << " sep=" << sep << " limit=" << limit << "; ";
      ok = ok && std::abs(sep - limit) < 0.01;
    }
    detail = out.str();
    return ok;
  }));
  return report;
}

VerifyReport verify_moments(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 5 : 8;
  const long b_max = opts.quick ? 3 : 5;
  const unsigned j_max = opts.quick ? 4 : 6;
  report.checks.push_back(run_check("moments: closed forms equal chain moments", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b = 2; b <= b_max; ++b)
        for (unsigned j = 1; j <= j_max; ++j) carry_moments(ChainSpec{n, b}, j);
    detail = "n<=" + std::to_string(n_max) + ", b<=" + std::to_string(b_max) + ", j<=" + std::to_string(j_max);
    return true;
  }));
  report.checks.push_back(run_check("moments: total carries mean equals summed column means", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b = 2; b <= b_max; ++b) {
        Rational running = 0;
        for (unsigned m = 1; m <= j_max; ++m) {
          running += carry_moments(ChainSpec{n, b}, m).mean;
          if (total_carries_mean(ChainSpec{n, b}, m) != running) {
            detail = cfg({{"n", n}, {"b", b}, {"m", m}});
            return false;
          }
        }
      }
    return true;
  }));
  return report;
}

VerifyReport verify_shuffle(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 4 : 5;
  report.checks.push_back(run_check("shuffle: exhaustive law equals the closed formula", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b : {2L, 3L}) {
        const DistributionTable dist = exhaustive_shuffle_dist(n, b);
        for (const auto& sigma : all_permutations(static_cast<std::size_t>(n))) {
          const auto it = dist.find(sigma);
          const Rational observed = it == dist.end() ? Rational(0) : it->second;
          if (observed != qb_probability(sigma, b)) {
            detail = cfg({{"n", n}, {"b", b}}) + " sigma=" + sigma.to_string();
            return false;
          }
        }
      }
    return true;
  }));

  const std::uint64_t draws = opts.quick ? 20'000 : 100'000;
  auto sampler_check = [&](const char* name, auto&& draw) {
    return run_check(std::string("shuffle: ") + name + " sampler within 4 SE per permutation (n=4, b=2)",
                     [&](std::string& detail) {
                       Rng rng(opts.seed);
                       std::map<Permutation, std::uint64_t> hits;
                       for (std::uint64_t s = 0; s < draws; ++s) ++hits[draw(rng)];
                       double worst = 0.0;
                       for (const auto& sigma : all_permutations(4)) {
                         double excess = 0.0;
                         const bool ok = within_standard_errors(hits[sigma], draws, to_double(qb_probability(sigma, 2)), 4.0, excess);
                         worst = std::max(worst, excess);
                         if (!ok) {
                           detail = "sigma=" + sigma.to_string() + " deviates by " + std::to_string(excess) + " SE";
                           return false;
                         }
                       }
                       detail = "max deviation " + std::to_string(worst) + " SE over " + std::to_string(draws) + " draws";
                       return true;
                     });
  };
  report.checks.push_back(sampler_check("digit", [](Rng& rng) { return gsr_sample(4, 2, rng); }));
  report.checks.push_back(sampler_check("cut-and-drop", [](Rng& rng) { return gsr_sample_cut_and_drop(4, rng); }));

  report.checks.push_back(run_check("shuffle: Q_2 convolved h times equals Q_{2^h}", [&](std::string& detail) {
    const long n_lim = opts.quick ? 3 : 4;
    for (long n = 1; n <= n_lim; ++n) {
      const DistributionTable q2 = exhaustive_shuffle_dist(n, 2);
      DistributionTable power = q2;
      for (long h = 2; h <= 3; ++h) {
        power = convolve(power, q2);
        if (power != exhaustive_shuffle_dist(n, 1L << h)) {
          detail = cfg({{"n", n}, {"h", h}});
          return false;
        }
      }
    }
    return true;
  }));
  return report;
}

VerifyReport verify_mult(const VerifyOptions& opts) {
  VerifyReport report;
  const long k_max = opts.quick ? 8 : 12;
  const long b_max = opts.quick ? 8 : 12;
  report.checks.push_back(run_check("mult: doubly stochastic and circulant shift by b mod k", [&](std::string& detail) {
    for (long k = 1; k <= k_max; ++k)
      for (long b = 2; b <= b_max; ++b) {
        const RationalMatrix km = build_K(MultSpec{k, b});
        if (!km.is_doubly_stochastic() || !is_generalized_circulant(km, b % k)) {
          detail = cfg({{"k", k}, {"b", b}});
          return false;
        }
      }
    return true;
  }));
  report.checks.push_back(run_check("mult: total variation within k/(2 b^r), r<=4", [&](std::string& detail) {
    for (long k = 1; k <= k_max; ++k)
      for (long b = 2; b <= b_max; ++b)
        for (unsigned r = 1; r <= 4; ++r) {
          if (mult_tv_exact(MultSpec{k, b}, r) > mult_tv_bound(MultSpec{k, b}, r)) {
            detail = cfg({{"k", k}, {"b", b}, {"r", r}});
            return false;
          }
        }
    return true;
  }));
  const unsigned long window_cap = opts.quick ? 10'000 : 1'000'000;
  report.checks.push_back(run_check("mult: K^r(0, .) equals the counting identity", [&](std::string& detail) {
    long cases = 0;
    for (long k = 1; k <= k_max; ++k)
      for (long b = 2; b <= b_max; ++b) {
        const RationalMatrix km = build_K(MultSpec{k, b});
        RationalMatrix power = km;
        for (unsigned r = 1; big_pow(static_cast<unsigned long>(b), r) <= window_cap; ++r) {
          if (r > 1) power = power * km;
          const auto row = power.row(0);
          if (RationalVector(row.begin(), row.end()) != mult_counting_row(MultSpec{k, b}, r)) {
            detail = cfg({{"k", k}, {"b", b}, {"r", r}});
            return false;
          }
          ++cases;
        }
      }
    detail = std::to_string(cases) + " (k, b, r) cases up to b^r=" + std::to_string(window_cap);
    return true;
  }));
  report.checks.push_back(run_check("mult: worked trace 1423 x 26", [](std::string&) {
    const std::vector<int> digits{3, 2, 4, 1};
    return mult_carry_trace(MultSpec{26, 10}, digits) == CarryTrace{7, 5, 10, 3};
  }));
  return report;
}

VerifyReport verify_sections(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 4 : 6;
  const long b_max = opts.quick ? 3 : 5;
  report.checks.push_back(run_check("sections: trimmed section matrix equals P", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b = 2; b <= b_max; ++b) {
        if (trim_to_P(n, b) != build_P(ChainSpec{n, b})) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
      }
    return true;
  }));
  report.checks.push_back(run_check("sections: section_poly matches series sectioning", [&](std::string& detail) {
    Rng rng(opts.seed);
    std::uniform_int_distribution<long> coeff(0, 9);
    for (long n = 0; n <= 4; ++n) {
      // a_k = k^n has numerator 1 for n = 0 and x * (Eulerian polynomial) otherwise.
      std::vector<Rational> powers(static_cast<std::size_t>(n + 2), Rational(0));
      if (n == 0) {
        powers[0] = 1;
      } else {
        for (long j = 0; j < n; ++j) powers[static_cast<std::size_t>(j + 1)] = Rational(eulerian(n, j));
      }
      std::vector<Rational> random(static_cast<std::size_t>(n + 2));
      for (auto& x : random) x = coeff(rng);
      for (long r = 1; r <= 4; ++r) {
        const HPolynomial h_powers(n, powers);
        const HPolynomial sectioned = section_poly(h_powers, r);  // asserts the series oracle
        section_poly(HPolynomial(n, random), r);
        // sum (rk)^n x^k = r^n sum k^n x^k, so the numerator scales by r^n.
        for (std::size_t i = 0; i < powers.size(); ++i) {
          const Rational expected = powers[i] * Rational(big_pow(static_cast<unsigned long>(r), static_cast<unsigned long>(n)));
          if (sectioned.coefficients()[i] != expected) {
            detail = cfg({{"n", n}, {"r", r}});
            return false;
          }
        }
      }
    }
    return true;
  }));
  return report;
}

VerifyReport verify_card(const VerifyOptions& opts) {
  VerifyReport report;
  const long n_max = opts.quick ? 4 : 6;
  report.checks.push_back(run_check("card: displayed matrices n=2,3", [](std::string& detail) {
    for (long n = 2; n <= 3; ++n)
      for (long b = 2; b <= 6; ++b)
        if (card_tracking_matrix(n, b) != card_display(n, b)) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
    return true;
  }));
  report.checks.push_back(run_check("card: doubly stochastic, uniform stationary law, spectrum", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long b = 1; b <= 4; ++b) {
        const RationalMatrix qm = card_tracking_matrix(n, b);
        const RationalVector uniform(static_cast<std::size_t>(n), make_rational(1, n));
        if (!qm.is_doubly_stochastic() || vec_mat_mul(uniform, qm) != uniform ||
            char_poly(qm) != geometric_spectrum_poly(n, b)) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
      }
    return true;
  }));
  report.checks.push_back(run_check("card: Q_a Q_b = Q_ab for a,b <= 4", [&](std::string& detail) {
    for (long n = 1; n <= n_max; ++n)
      for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
          if (card_tracking_matrix(n, a) * card_tracking_matrix(n, b) != card_tracking_matrix(n, a * b)) {
            detail = cfg({{"n", n}, {"a", a}, {"b", b}});
            return false;
          }
    return true;
  }));
  report.checks.push_back(run_check("card: formula equals the law induced by exhaustive shuffles", [&](std::string& detail) {
    for (long n = 1; n <= 5; ++n)
      for (long b = 1; b <= 3; ++b)
        if (card_tracking_from_distribution(exhaustive_shuffle_dist(n, b), n) != card_tracking_matrix(n, b)) {
          detail = cfg({{"n", n}, {"b", b}});
          return false;
        }
    return true;
  }));
  const std::uint64_t steps = opts.quick ? 20'000 : 100'000;
  report.checks.push_back(run_check("card: simulated position of card 1 within 4 SE (n=4, b=2)", [&](std::string& detail) {
    const long n = 4;
    const RationalMatrix qm = card_tracking_matrix(n, 2);
    std::vector<std::vector<std::uint64_t>> counts(n, std::vector<std::uint64_t>(n, 0));
    Rng rng(opts.seed);
    int position = 1;
    for (std::uint64_t s = 0; s < steps; ++s) {
      const Permutation sigma = gsr_sample(n, 2, rng);
      const int next = sigma.inverse()(position);
      ++counts[static_cast<std::size_t>(position - 1)][static_cast<std::size_t>(next - 1)];
      position = next;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      std::uint64_t row_total = 0;
      for (auto c : counts[i]) row_total += c;
      if (row_total == 0) continue;
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        double excess = 0.0;
        if (!within_standard_errors(counts[i][j], row_total, to_double(qm(i, j)), 4.0, excess)) {
          detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") off by " + std::to_string(excess) + " SE";
          return false;
        }
        worst = std::max(worst, excess);
      }
    }
    detail = "max deviation " + std::to_string(worst) + " SE over " + std::to_string(steps) + " transitions";
    return true;
  }));
  return report;
}

VerifyReport verify_all(const VerifyOptions& opts) {
  VerifyReport report;
  report.append(verify_golden(opts));
  report.append(verify_stationary(opts));
  report.append(verify_eigen(opts));
  report.append(verify_semigroup(opts));
  report.append(verify_tp2(opts));
  report.append(verify_theorem_main_grid(opts));
  report.append(verify_bijections_grid(opts));
  report.append(verify_separation(opts));
  report.append(verify_moments(opts));
  report.append(verify_shuffle(opts));
  report.append(verify_mult(opts));
  report.append(verify_sections(opts));
  report.append(verify_card(opts));
  return report;
}

}  // namespace carrymix
