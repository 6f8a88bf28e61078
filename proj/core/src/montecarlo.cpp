#include "carrymix/montecarlo.hpp"

#include "carrymix/bijections.hpp"
#include "carrymix/carries_chain.hpp"
#include "carrymix/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace carrymix {

Rational JointLaw::total() const {
  Rational sum = 0;
  if (mode == LawMode::exact) {
    for (const auto& [key, p] : probabilities) sum += p;
  } else {
    for (const auto& [key, c] : counts) sum += Rational(static_cast<unsigned long>(c));
  }
  return sum;
}

namespace {

using CountMap = std::map<TraceKey, std::uint64_t>;

void validate_shape(long n, long m, long b) {
  if (n < 1) throw ValidationError("n must be at least 1");
  if (m < 1) throw ValidationError("m must be at least 1");
  if (b < 2) throw ValidationError("b must be at least 2");
}

std::uint64_t enumeration_size(long n, long m, long b) {
  const BigInt total = big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n * m));
  if (total > kJointEnumerationCap) {
    throw ResourceCapError("b^(n m) = " + total.get_str() + " exceeds enumeration cap " +
                           std::to_string(kJointEnumerationCap));
  }
  return total.get_ui();
}

// Array number `index`: column C_1 is the fastest-moving block, the bottom row fastest within a column.
void decode_array(std::uint64_t index, ColumnArray& array) {
  const auto b = static_cast<std::uint64_t>(array.base());
  for (std::size_t c = 0; c < array.m(); ++c) {
    for (std::size_t r = array.n(); r-- > 0;) {
      array.set(r, c, static_cast<int>(index % b));
      index /= b;
    }
  }
}

// Runs visit(array, counts) over [0, total) split into `jobs` contiguous ranges, then merges.
CountMap enumerate_partitioned(long n, long m, long b, unsigned jobs,
                               const std::function<TraceKey(const ColumnArray&)>& trace_of) {
  const std::uint64_t total = enumeration_size(n, m, b);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
  std::vector<CountMap> partial(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      const std::uint64_t begin = total * t / jobs;
      const std::uint64_t end = total * (t + 1) / jobs;
      workers.emplace_back([&, begin, end, t] {
        ColumnArray array(static_cast<std::size_t>(n), static_cast<std::size_t>(m), b);
        for (std::uint64_t index = begin; index < end; ++index) {
          decode_array(index, array);
          ++partial[t][trace_of(array)];
        }
      });
    }
  }
  CountMap merged;
  for (const auto& part : partial)
    for (const auto& [key, count] : part) merged[key] += count;
  return merged;
}

JointLaw exact_from_counts(long n, long m, long b, const CountMap& counts) {
  JointLaw law{n, m, b, LawMode::exact, {}, {}, 0, std::nullopt};
  std::uint64_t total = 0;
  for (const auto& [key, count] : counts) total += count;
  for (const auto& [key, count] : counts) {
    law.probabilities.emplace(key, make_rational(static_cast<unsigned long>(count), static_cast<unsigned long>(total)));
  }
  law.samples = total;
  return law;
}

TraceKey descent_trace(const ColumnArray& words) {
  TraceKey key(words.m());
  Permutation tau = Permutation::identity(words.n());
  for (std::size_t j = 0; j < words.m(); ++j) {
    tau = pi_label(words.column(j)) * tau;
    key[j] = descents(tau);
  }
  return key;
}

}  // namespace

ColumnArray sample_columns(long n, long m, long b, Rng& rng) {
  validate_shape(n, m, b);
  ColumnArray array(static_cast<std::size_t>(n), static_cast<std::size_t>(m), b);
  std::uniform_int_distribution<long> digit(0, b - 1);
  for (std::size_t r = 0; r < array.n(); ++r)
    for (std::size_t c = 0; c < array.m(); ++c) array.set(r, c, static_cast<int>(digit(rng)));
  return array;
}

JointLaw exhaustive_joint_carries(long n, long m, long b, unsigned jobs) {
  validate_shape(n, m, b);
  const CountMap counts = enumerate_partitioned(n, m, b, jobs, [](const ColumnArray& a) { return column_carry_trace(a); });
  return exact_from_counts(n, m, b, counts);
}

JointLaw exhaustive_joint_descents(long n, long m, long b, unsigned jobs) {
  validate_shape(n, m, b);
  const CountMap counts = enumerate_partitioned(n, m, b, jobs, descent_trace);
  return exact_from_counts(n, m, b, counts);
}

JointLaw markov_joint_law(long n, long m, long b) {
  validate_shape(n, m, b);
  const RationalMatrix p = build_P(ChainSpec{n, b});
  JointLaw law{n, m, b, LawMode::exact, {}, {}, 0, std::nullopt};

  std::map<TraceKey, Rational> frontier{{TraceKey{}, Rational(1)}};
  for (long step = 0; step < m; ++step) {
    std::map<TraceKey, Rational> next;
    for (const auto& [key, prob] : frontier) {
      const std::size_t from = key.empty() ? 0 : static_cast<std::size_t>(key.back());
      for (std::size_t to = 0; to < p.cols(); ++to) {
        if (p(from, to) == 0) continue;
        TraceKey extended = key;
        extended.push_back(static_cast<int>(to));
        next.emplace(std::move(extended), prob * p(from, to));
      }
    }
    frontier = std::move(next);
  }
  law.probabilities = std::move(frontier);
  return law;
}

JointLaw sample_joint_carries(long n, long m, long b, std::uint64_t samples, std::uint64_t seed, unsigned jobs) {
  validate_shape(n, m, b);
  jobs = std::max(1U, jobs);
  std::vector<CountMap> partial(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      const std::uint64_t quota = samples * (t + 1) / jobs - samples * t / jobs;
      workers.emplace_back([&, t, quota] {
        Rng rng(seed + t);
        for (std::uint64_t s = 0; s < quota; ++s) ++partial[t][column_carry_trace(sample_columns(n, m, b, rng))];
      });
    }
  }
  JointLaw law{n, m, b, LawMode::empirical, {}, {}, samples, seed};
  for (const auto& part : partial)
    for (const auto& [key, count] : part) law.counts[key] += count;
  return law;
}

ChiSquareResult chi_square(const JointLaw& observed, const JointLaw& expected) {
  if (observed.mode != LawMode::empirical || expected.mode != LawMode::exact) {
    throw ValidationError("chi_square: needs an empirical law and an exact law");
  }
  if (observed.n != expected.n || observed.m != expected.m || observed.b != expected.b) {
    throw ValidationError("chi_square: laws describe different (n, m, b)");
  }
  for (const auto& [key, count] : observed.counts) {
    auto it = expected.probabilities.find(key);
    if (count > 0 && (it == expected.probabilities.end() || it->second == 0)) {
      throw ValidationError("chi_square: observed trace outside the expected support");
    }
  }

  const auto n_samples = static_cast<double>(observed.samples);
  struct Group {
    std::vector<TraceKey> cells;
    double expected = 0.0;
    double observed = 0.0;
  };
  std::vector<Group> groups;
  Group current;
  for (const auto& [key, prob] : expected.probabilities) {
    if (prob == 0) continue;
    current.cells.push_back(key);
    current.expected += to_double(prob) * n_samples;
    auto it = observed.counts.find(key);
    if (it != observed.counts.end()) current.observed += static_cast<double>(it->second);
    if (current.expected >= kMinExpectedCount) {
      groups.push_back(std::move(current));
      current = Group{};
    }
  }
  if (!current.cells.empty()) {
    if (groups.empty()) {
      groups.push_back(std::move(current));
    } else {
      auto& last = groups.back();
      last.cells.insert(last.cells.end(), current.cells.begin(), current.cells.end());
      last.expected += current.expected;
      last.observed += current.observed;
    }
  }

  ChiSquareResult result;
  for (auto& g : groups) {
    if (g.expected > 0.0) result.statistic += (g.observed - g.expected) * (g.observed - g.expected) / g.expected;
    result.groups.push_back(std::move(g.cells));
  }
  result.dof = groups.empty() ? 0 : static_cast<long>(groups.size()) - 1;
  return result;
}

double chi_square_quantile(long dof, double p) {
  if (dof < 1) return 0.0;
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(dist, p);
}

bool same_law(const JointLaw& lhs, const JointLaw& rhs) {
  auto nonzero = [](const JointLaw& law) {
    std::map<TraceKey, Rational> out;
    for (const auto& [key, p] : law.probabilities)
      if (p != 0) out.emplace(key, p);
    return out;
  };
  return nonzero(lhs) == nonzero(rhs);
}

}  // namespace carrymix
