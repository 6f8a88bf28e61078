#include "carrymix/bijections.hpp"
#include "carrymix/errors.hpp"
#include "carrymix/montecarlo.hpp"
#include "carrymix/permutation.hpp"
#include "carrymix/shuffling.hpp"

#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace carrymix;

namespace {

const std::vector<std::vector<int>> kCarryExample{{0, 1, 2}, {0, 1, 2}, {1, 1, 2}, {1, 1, 1}, {2, 1, 2}, {1, 2, 1}};
const std::vector<std::vector<int>> kBarExample{{0, 1, 2}, {1, 0, 1}, {2, 2, 0}, {1, 0, 1}, {0, 2, 0}, {2, 1, 1}};
const std::vector<std::vector<int>> kStarInput{{1, 2, 2}, {1, 2, 1}, {2, 0, 0}, {0, 0, 1}, {2, 1, 0}, {0, 1, 1}};

std::vector<std::vector<int>> rows_of(const ColumnArray& a) {
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < a.n(); ++r) rows.push_back(a.row_digits(r));
  return rows;
}

template <class F>
void for_each_array(int n, int m, int b, F&& f) {
  oracle::for_each_word(n * m, b, [&](const std::vector<int>& w) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) rows[r].assign(w.begin() + r * m, w.begin() + (r + 1) * m);
    f(ColumnArray::from_rows(rows, b));
  });
}

/// Prefix sums mod b^j, written back as j digits.
std::vector<std::vector<int>> bar_oracle(const std::vector<std::vector<int>>& rows, int b) {
  const std::size_t j = rows.front().size();
  long mod = 1;
  for (std::size_t i = 0; i < j; ++i) mod *= b;
  std::vector<std::vector<int>> out;
  long sum = 0;
  for (const auto& row : rows) {
    long v = 0;
    for (int d : row) v = v * b + d;
    sum = (sum + v) % mod;
    std::vector<int> digits(j);
    long t = sum;
    for (std::size_t i = j; i-- > 0;) {
      digits[i] = static_cast<int>(t % b);
      t /= b;
    }
    out.push_back(digits);
  }
  return out;
}

}  // namespace

TEST_CASE("column array layout") {
  const ColumnArray a = ColumnArray::from_rows(kCarryExample, 3);
  CHECK(a.n() == 6);
  CHECK(a.m() == 3);
  CHECK(a.column(0) == std::vector<int>{2, 2, 2, 1, 2, 1});  // C_1 is the rightmost column
  CHECK(a.row_value(0, 3) == 5);
  CHECK(a.rightmost(1).column(0) == a.column(0));
  CHECK(ColumnArray::from_columns({a.column(0), a.column(1), a.column(2)}, 3) == a);
  CHECK_THROWS_AS(ColumnArray::from_rows({{0, 3}}, 3), ValidationError);
}

TEST_CASE("carries of the worked example") {
  const ColumnArray c = ColumnArray::from_rows(kCarryExample, 3);
  CHECK(column_carry_trace(c) == CarryTrace{3, 3, 2});
  CHECK(column_carry_trace(c) == oracle::add_rows(kCarryExample, 3));
  CHECK(column_carry_trace(ColumnArray(4, 3, 5)) == CarryTrace{0, 0, 0});
  CHECK(column_carry_trace(ColumnArray::from_rows({{1}, {1}}, 2)) == CarryTrace{1});
  for_each_array(3, 2, 3, [](const ColumnArray& a) { CHECK(column_carry_trace(a) == oracle::add_rows(rows_of(a), 3)); });
}

TEST_CASE("carry and descent positions") {
  CHECK(carry_positions(TupleList(kCarryExample, 3)) == std::vector<int>{3, 4});
  CHECK(descent_positions(TupleList(kBarExample, 3)) == std::vector<int>{3, 4});
  CHECK(carry_positions(TupleList({{0, 0}, {0, 0}, {0, 0}}, 2)).empty());
  CHECK(carry_positions(TupleList({{1}, {1}}, 2)) == std::vector<int>{1});
  CHECK(descent_positions(TupleList({{0, 1}, {1, 0}, {1, 1}}, 2)).empty());
  CHECK(descent_positions(TupleList({{1, 1}, {1, 0}, {0, 1}, {0, 0}}, 2)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("bar map") {
  const ColumnArray c = ColumnArray::from_rows(kCarryExample, 3);
  CHECK(bar_map(c) == TupleList(kBarExample, 3));
  CHECK(bar_inverse(bar_map(c)) == c);
  const ColumnArray single = ColumnArray::from_rows({{2, 1, 0}}, 3);
  CHECK(bar_map(single).tuples() == std::vector<std::vector<int>>{{2, 1, 0}});
  CHECK(bar_map(ColumnArray::from_rows({{2}, {2}, {2}}, 3)).tuples() == std::vector<std::vector<int>>{{2}, {1}, {0}});
  for_each_array(3, 2, 3, [](const ColumnArray& a) {
    CHECK(bar_map(a).tuples() == bar_oracle(rows_of(a), 3));
    CHECK(bar_inverse(bar_map(a)) == a);
  });
}

TEST_CASE("star map") {
  const ColumnArray a = ColumnArray::from_rows(kStarInput, 3);
  const ColumnArray starred = star_map(a);
  CHECK(starred == ColumnArray::from_rows(kBarExample, 3));
  CHECK(starred.column(0) == a.column(0));
  CHECK(star_inverse(starred) == a);
  const ColumnArray single = ColumnArray::from_rows({{1}, {0}, {1}}, 2);
  CHECK(star_map(single) == single);

  // definition: column k+1 of the output is A_{k+1} read through the labels of output columns 1..k
  for_each_array(2, 3, 2, [](const ColumnArray& in) {
    const ColumnArray out = star_map(in);
    for (std::size_t k = 1; k < in.m(); ++k) {
      std::vector<std::vector<int>> prefix;
      for (std::size_t r = 0; r < in.n(); ++r) {
        std::vector<int> t;
        for (std::size_t c = k; c-- > 0;) t.push_back(out.column(c)[r]);
        prefix.push_back(t);
      }
      const std::vector<int> lab = oracle::label(prefix);
      const std::vector<int> src = in.column(k);
      const std::vector<int> got = out.column(k);
      for (std::size_t r = 0; r < in.n(); ++r) CHECK(got[r] == src[static_cast<std::size_t>(lab[r] - 1)]);
    }
  });

  Rng rng(5);
  for (int s = 0; s < 200; ++s) {
    std::uniform_int_distribution<long> pn(1, 6), pm(1, 4), pb(2, 4);
    const ColumnArray x = sample_columns(pn(rng), pm(rng), pb(rng), rng);
    CHECK(star_inverse(star_map(x)) == x);
    CHECK(bar_inverse(bar_map(x)) == x);
  }
}

TEST_CASE("labelling") {
  const TupleList t({{1, 2}, {2, 1}, {1, 0}, {0, 1}, {0, 0}, {2, 1}}, 3);
  CHECK(pi_label(t) == Permutation({4, 5, 3, 2, 1, 6}));
  CHECK(pi_label(std::vector<int>{2, 1, 0, 1, 0, 1}) == Permutation({6, 3, 1, 4, 2, 5}));
  CHECK(pi_label(std::vector<int>{1, 1, 1, 1}).is_identity());
  for_each_array(3, 2, 2, [](const ColumnArray& a) {
    CHECK(pi_label(TupleList::from_columns(a)) == Permutation(oracle::label(rows_of(a))));
  });
}

TEST_CASE("tau trace of the worked example") {
  const ShuffleTrace trace = tau_trace(ColumnArray::from_rows(kCarryExample, 3));
  REQUIRE(trace.perms.size() == 3);
  CHECK(trace.perms[0] == Permutation({6, 3, 1, 4, 2, 5}));
  CHECK(trace.perms[1] == Permutation({4, 1, 5, 2, 6, 3}));
  CHECK(trace.perms[2] == Permutation({1, 3, 6, 4, 2, 5}));
  CHECK(descents(trace.perms[0]) == 3);
  CHECK(descents(trace.perms[1]) == 3);
  CHECK(descents(trace.perms[2]) == 2);
  for (const auto& p : tau_trace(ColumnArray(4, 3, 3)).perms) CHECK(p.is_identity());
  for_each_array(3, 1, 2, [](const ColumnArray& a) {
    const ShuffleTrace t = tau_trace(a);
    CHECK(t.perms[0] == pi_label(bar_map(a)));
    CHECK(descents(t.perms[0]) == column_carry_trace(a)[0]);
  });
}

TEST_CASE("carries equal descents of tau, pointwise") {
  for (int b = 2; b <= 3; ++b)
    for_each_array(3, 2, b, [b](const ColumnArray& a) {
      const std::vector<int> carries = oracle::add_rows(rows_of(a), b);
      const ShuffleTrace t = tau_trace(a);
      for (std::size_t j = 0; j < carries.size(); ++j) {
        CHECK(descents(t.perms[j]) == carries[j]);
        // identity chain on the rightmost j+1 columns
        const TupleList bar = bar_map(a.rightmost(j + 1));
        CHECK(descent_positions(bar) == carry_positions(TupleList::from_columns(a.rightmost(j + 1))));
        CHECK(descent_positions(bar) == descent_set(pi_label(bar)));
      }
    });
}

TEST_CASE("starkey product") {
  const ColumnArray a = ColumnArray::from_rows(kStarInput, 3);
  CHECK(starkey_product_check(a));
  CHECK(pi_label(star_map(a)) == Permutation({1, 3, 6, 4, 2, 5}));
  const Permutation product = pi_label(a.column(2)) * pi_label(a.column(1)) * pi_label(a.column(0));
  CHECK(product == Permutation({1, 3, 6, 4, 2, 5}));
  CHECK(starkey_product_check(ColumnArray::from_rows({{1}, {0}}, 2)));
  int count = 0;
  for_each_array(3, 2, 2, [&](const ColumnArray& x) {
    ++count;
    CHECK(starkey_product_check(x));
    CHECK(pi_label(star_map(x)) == pi_label(x.column(1)) * pi_label(x.column(0)));
  });
  CHECK(count == 64);
}

TEST_CASE("bar and star are injective on n=2 m=2 b=2") {
  std::set<std::vector<std::vector<int>>> bars;
  std::set<ColumnArray> stars;
  for_each_array(2, 2, 2, [&](const ColumnArray& a) {
    bars.insert(bar_map(a).tuples());
    stars.insert(star_map(a));
  });
  CHECK(bars.size() == 16);
  CHECK(stars.size() == 16);
}
