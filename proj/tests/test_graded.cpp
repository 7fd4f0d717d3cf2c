#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "sqas/graded.hpp"
#include "sqas/scalar.hpp"

using namespace sqas;

namespace {

Scalar random_scalar(std::mt19937& rng, bool irrational) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  Rational a = Rational(num(rng)) / Rational(den(rng));
  Rational b = irrational ? Rational(num(rng)) / Rational(den(rng)) : Rational(0);
  return Scalar(a, b);
}

}  // namespace

TEST_CASE("scalar field axioms on random elements of Q(sqrt3)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar x = random_scalar(rng, trial % 2), y = random_scalar(rng, true), z = random_scalar(rng, trial % 3);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Scalar());
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("sqrt3 squares to three and inverts exactly") {
  const Scalar r = Scalar::sqrt3();
  CHECK(r * r == Scalar(3));
  CHECK(r.inverse() == Scalar(Rational(0), Rational(1, 3)));
  const Scalar u(Rational(2), Rational(1));  // 2 + sqrt3 is a unit
  CHECK(u * Scalar(Rational(2), Rational(-1)) == Scalar(1));
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("scalar text round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar x = random_scalar(rng, trial % 2);
    CHECK(Scalar::parse(x.to_string()) == x);
  }
  CHECK(Scalar::fraction(6, -4) == Scalar::parse("-3/2"));
  CHECK(factorial(5) == Scalar(120));
}

TEST_CASE("graded sort returns the Koszul sign") {
  const OddMask odd{0, 0, 1, 1, 0};  // 2 and 3 odd
  Tuple t{3, 2};
  CHECK(sort_graded(t, odd) == -1);
  CHECK(t == Tuple{2, 3});
  t = {4, 3, 1, 2};
  CHECK(sort_graded(t, odd) == -1);
  CHECK(t == Tuple{1, 2, 3, 4});
  t = {1, 1, 4};
  CHECK(sort_graded(t, odd) == 1);
  t = {2, 4, 2};
  CHECK(sort_graded(t, odd) == 0);
}

TEST_CASE("graded sort agrees with koszul_sign on random tuples") {
  std::mt19937 rng(3);
  const OddMask odd{0, 1, 0, 1, 1, 0, 1};
  std::uniform_int_distribution<int> pick(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    Tuple t(1 + trial % 5);
    for (int& a : t) a = pick(rng);
    std::vector<int> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) { return t[i] < t[j]; });
    std::vector<Parity> par;
    for (int a : t) par.push_back(odd[a] ? Parity::odd : Parity::even);
    bool repeated = false;
    for (std::size_t k = 0; k + 1 < perm.size(); ++k)
      if (t[perm[k]] == t[perm[k + 1]] && odd[t[perm[k]]]) repeated = true;
    Tuple s = t;
    const int sign = sort_graded(s, odd);
    if (repeated) {
      CHECK(sign == 0);
    } else {
      CHECK(sign == koszul_sign(perm, par));
      CHECK(std::is_sorted(s.begin(), s.end()));
    }
  }
}

TEST_CASE("merge and move-to-front signs") {
  const OddMask odd{0, 1, 1, 0, 1};
  Tuple out;
  CHECK(merge_graded({2, 4}, {1, 3}, odd, out) == 1);  // 1 passes the odd 2 and 4
  CHECK(out == Tuple{1, 2, 3, 4});
  CHECK(merge_graded({1}, {1}, odd, out) == 0);
  CHECK(move_to_front_sign({1, 2, 4}, 2, odd) == 1);
  CHECK(move_to_front_sign({1, 3, 4}, 2, odd) == -1);
  CHECK(tuple_parity({1, 2, 3}, odd) == 0);
  CHECK(tuple_parity({1, 3}, odd) == 1);
}

TEST_CASE("basis bookkeeping") {
  const GradedBasis b = GradedBasis::from_labels({Parity::even, Parity::odd}, true);
  CHECK(b.max_index() == 2);
  CHECK(b.size() == 3);
  CHECK(b.first_index() == 0);
  CHECK(b.is_odd(0));
  CHECK(b.valid(0));
  CHECK_FALSE(b.is_label(0));
  CHECK_THROWS_AS(b.require_label(0), std::invalid_argument);
  CHECK_THROWS_AS(b.require_valid(3), std::invalid_argument);
  const GradedBasis c = GradedBasis::from_labels({Parity::even}, false);
  CHECK_FALSE(c.valid(0));
}

TEST_CASE("sparse tensor graded symmetry in the last two slots") {
  const GradedBasis b = GradedBasis::from_labels({Parity::even, Parity::odd, Parity::odd}, false);
  SparseGradedTensor A(3, {{1, 2}});
  A.set({1, 3, 2}, Scalar(5), b);
  CHECK(A.get({1, 2, 3}, b) == Scalar(-5));
  CHECK(A.get({1, 3, 2}, b) == Scalar(5));
  CHECK(A.entries().size() == 1);
  A.add({1, 2, 3}, Scalar(5), b);
  CHECK(A.empty());
  CHECK_THROWS_AS(A.set({1, 2, 2}, Scalar(1), b), std::invalid_argument);
  CHECK(A.get({1, 2, 2}, b) == Scalar());
  CHECK_THROWS_AS(A.set({1, 1, 2}, Scalar(1), b), std::invalid_argument);  // odd total parity
  CHECK_THROWS_AS(A.get({1, 1}, b), std::invalid_argument);

  A.set({2, 1, 3}, Scalar(1), b);
  const auto full = A.expanded(b);
  CHECK(full.at({2, 1, 3}) == Scalar(1));
  CHECK(full.at({2, 3, 1}) == Scalar(1));
  CHECK(full.size() == 2);
}

TEST_CASE("canonicalize sorts with sign and kills repeated odd indices") {
  const GradedBasis b = GradedBasis::from_labels({Parity::odd, Parity::odd}, false);
  auto [t, c] = canonicalize({2, 1}, Scalar(3), b);
  CHECK(t == Tuple{1, 2});
  CHECK(c == Scalar(-3));
  CHECK(canonicalize({1, 1}, Scalar(3), b).second.is_zero());
}
