#include <catch_amalgamated.hpp>

#include <random>

#include "sqas/series.hpp"
#include "sqas/weyl.hpp"

using namespace sqas;

namespace {

// Variables 1, 2 even; 3, 4 odd.
const OddMask kOdd{0, 0, 0, 1, 1};

Operator random_operator(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> var(1, 4), len(0, 2), coef(-3, 3), hb(0, 1);
  Operator op;
  for (int k = 0; k < terms; ++k) {
    Tuple xs(len(rng)), ds(len(rng));
    for (int& a : xs) a = var(rng);
    for (int& a : ds) a = var(rng);
    op.add(Scalar(coef(rng)), hb(rng), xs, ds, kOdd);
  }
  return op;
}

Series random_series(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> var(1, 4), len(1, 3), coef(-3, 3), hb(0, 1);
  Series s;
  for (int k = 0; k < terms; ++k) {
    Tuple xs(len(rng));
    for (int& a : xs) a = var(rng);
    s.add(Scalar(coef(rng)), hb(rng), xs, kOdd);
  }
  return s;
}

Operator x(int a) { return Operator().add(Scalar(1), 0, {a}, {}, kOdd); }
Operator d(int a) { return Operator().add(Scalar(1), 0, {}, {a}, kOdd); }

}  // namespace

TEST_CASE("canonical commutation relations") {
  CHECK(commutator(d(1), x(1), kOdd) == constant_operator(Scalar(1)));
  CHECK(commutator(d(1), x(2), kOdd).is_zero());
  // graded: [d_3, theta^3] is the anticommutator
  CHECK(commutator(d(3), x(3), kOdd) == constant_operator(Scalar(1)));
  CHECK(multiply(x(3), x(3), kOdd).is_zero());
  CHECK(multiply(d(4), d(4), kOdd).is_zero());
  CHECK(commutator(x(3), x(4), kOdd).is_zero());
}

TEST_CASE("normal ordering of a written product") {
  Operator dx = multiply(d(1), x(1), kOdd);  // d x = x d + 1
  Operator expect;
  expect.add(Scalar(1), 0, {1}, {1}, kOdd);
  expect.add(Scalar(1), 0, {}, {}, kOdd);
  CHECK(dx == expect);
  Operator dt = multiply(d(3), x(3), kOdd);  // d theta = -theta d + 1
  Operator expect_t;
  expect_t.add(Scalar(-1), 0, {3}, {3}, kOdd);
  expect_t.add(Scalar(1), 0, {}, {}, kOdd);
  CHECK(dt == expect_t);
}

TEST_CASE("Weyl algebra associativity and graded Jacobi on random operators") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Operator a = random_operator(rng, 3).even_part(kOdd) + random_operator(rng, 2).odd_part(kOdd);
    const Operator b = random_operator(rng, 3).odd_part(kOdd);
    const Operator c = random_operator(rng, 3).even_part(kOdd);
    CHECK(multiply(multiply(a, b, kOdd), c, kOdd) == multiply(a, multiply(b, c, kOdd), kOdd));
    // homogeneous b, c: [b,[c,a]] = [[b,c],a] + (-1)^{|b||c|} [c,[b,a]]
    for (const Operator& h : {a.even_part(kOdd), a.odd_part(kOdd)}) {
      const Operator lhs = commutator(b, commutator(c, h, kOdd), kOdd);
      const Operator rhs = commutator(commutator(b, c, kOdd), h, kOdd) + commutator(c, commutator(b, h, kOdd), kOdd);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("series exp and log are inverse") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Series f = random_series(rng, 4).truncated(4);
    const Series z = exp_series(f, kOdd, 6);
    CHECK(log_series(z, kOdd, 6) == f.truncated(6));
    Series one;
    one.add(SeriesKey{0, {}}, Scalar(1));
    CHECK(multiply(z, inverse_series(z, kOdd, 6), kOdd, 6) == one);
  }
}

TEST_CASE("left derivative is a graded derivation") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Series f = random_series(rng, 3), g = random_series(rng, 3);
    for (int a = 1; a <= 4; ++a) {
      const Series lhs = derivative(multiply(f, g, kOdd, 20), a, kOdd);
      Series rhs = multiply(derivative(f, a, kOdd), g, kOdd, 20);
      // f of definite parity only: split f into parts
      Series f_even, f_odd;
      for (const auto& [k, v] : f.terms()) {
        int p = 0;
        for (int s : k.mono) p ^= kOdd[s];
        (p && kOdd[a] ? f_odd : f_even).add(k, v);
      }
      rhs += multiply(f_even, derivative(g, a, kOdd), kOdd, 20);
      rhs -= multiply(f_odd, derivative(g, a, kOdd), kOdd, 20);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("operator action is a module action") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator a = random_operator(rng, 3), b = random_operator(rng, 3);
    const Series s = random_series(rng, 4);
    CHECK(apply(multiply(a, b, kOdd), s, kOdd, 30) == apply(a, apply(b, s, kOdd, 30), kOdd, 30));
  }
  Series s;
  s.add(Scalar(1), 0, {1, 1, 3}, kOdd);
  Series expect;
  expect.add(Scalar(2), 1, {1, 3}, kOdd);
  CHECK(apply(Operator().add(Scalar(1), 1, {}, {1}, kOdd), s, kOdd, 10) == expect);
}

TEST_CASE("series degree bookkeeping") {
  Series s;
  s.add(Scalar(1), -1, {1, 1, 1}, kOdd);
  s.add(Scalar(2), 1, {3, 4}, kOdd);
  CHECK(s.truncated(1).terms().size() == 1);
  CHECK(s.shifted(1).coeff(0, {1, 1, 1}) == Scalar(1));
  Series t;
  t.add(Scalar(1), 0, {4, 3}, kOdd);
  CHECK(t.coeff(0, {3, 4}) == Scalar(-1));
}
