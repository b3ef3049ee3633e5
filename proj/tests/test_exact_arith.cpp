#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "soltower/errors.hpp"
#include "soltower/exact_arith.hpp"

using namespace soltower;

namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Io;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rationals are reduced and print as p/q") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 5)) == "0/1");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+1/3") == make_rational(1, 3));
  CHECK(error_of([] { make_rational(1, 0); }) == Errc::InvalidInput);
  CHECK(error_of([] { parse_rational("1/0"); }) == Errc::InvalidInput);
  CHECK(error_of([] { parse_rational("abc"); }) == Errc::InvalidInput);
  CHECK(error_of([] { parse_rational("1/2/3"); }) == Errc::InvalidInput);
  CHECK(error_of([] { parse_integer(""); }) == Errc::InvalidInput);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational q = oracle::random_rational(rng, 1000, 997);
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("floor, ceil and frac") {
  CHECK(floor(make_rational(-1, 2)) == -1);
  CHECK(ceil(make_rational(-1, 2)) == 0);
  CHECK(floor(make_rational(7, 3)) == 2);
  CHECK(ceil(make_rational(7, 3)) == 3);
  CHECK(frac(make_rational(-1, 3)) == make_rational(2, 3));
  CHECK(frac(Rational(5)) == 0);
  CHECK(is_integer(make_rational(8, 4)));
  CHECK(!is_integer(make_rational(8, 3)));
  CHECK(abs(make_rational(-2, 3)) == make_rational(2, 3));
}

TEST_CASE("gcd, lcm, pow and residues") {
  CHECK(gcd(12, -18) == 6);
  CHECK(lcm(4, 6) == 12);
  CHECK(pow(Integer(3), 5) == 243);
  CHECK(pow(Integer(7), 0) == 1);
  CHECK(mod_floor(-7, 3) == 2);
  CHECK(mod_floor(7, 3) == 1);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> pick(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    const Integer a = pick(rng), b = pick(rng);
    const ExtendedGcd e = extended_gcd(a, b);
    CHECK(e.g >= 0);
    CHECK(a * e.x + b * e.y == e.g);
    CHECK(e.g == Integer(std::gcd(a.get_si(), b.get_si())));
  }
}

TEST_CASE("modular inverse against exhaustive search") {
  for (long m = 1; m <= 30; ++m)
    for (long a = -10; a <= 40; ++a) {
      std::optional<long> brute;
      for (long x = 0; x < m && !brute; ++x)
        if (oracle::posmod(a * x - 1, m) == 0) brute = x;
      const auto inv = mod_inverse(a, m);
      REQUIRE(inv.has_value() == brute.has_value());
      if (inv) CHECK(*inv == *brute);
    }
}

TEST_CASE("to_u64 guards the range") {
  CHECK(to_u64(Integer("9223372036854775807")) == 9223372036854775807ull);
  CHECK(to_u64(0) == 0);
  CHECK(error_of([] { to_u64(Integer("9223372036854775808")); }) == Errc::SizeGuardExceeded);
  CHECK(error_of([] { to_u64(-1); }) == Errc::SizeGuardExceeded);
}

TEST_CASE("moduli validation") {
  CHECK_NOTHROW(Moduli(ints({2, 3, 5})));
  CHECK(error_of([] { Moduli({}); }) == Errc::InvalidInput);
  CHECK(error_of([] { Moduli(ints({1, 3})); }) == Errc::InvalidInput);
  CHECK(error_of([] { Moduli(ints({4, 6})); }) == Errc::ModuliNotCoprime);
  const Moduli m(ints({2, 3}));
  CHECK(m.max() == 3);
  CHECK(m.product_power(2) == 36);
  CHECK(m.product_power(0) == 1);
}

TEST_CASE("crt_solve examples") {
  const auto r1 = ints({1, 2}), m1 = ints({2, 3});
  CHECK(crt_solve(r1, m1) == 5);
  const auto r2 = ints({0, 0, 0}), m2 = ints({2, 3, 5});
  CHECK(crt_solve(r2, m2) == 0);
  const auto r3 = ints({1}), m3 = ints({7});
  CHECK(crt_solve(r3, m3) == 1);
  const auto r4 = ints({5, -1}), m4 = ints({1, 4});
  CHECK(crt_solve(r4, m4) == 3);
  const auto bad = ints({4, 6});
  CHECK(error_of([&] { crt_solve(r1, bad); }) == Errc::ModuliNotCoprime);
  CHECK(error_of([&] { crt_solve(r2, m1); }) == Errc::InvalidInput);
  const auto zero = ints({0, 3});
  CHECK(error_of([&] { crt_solve(r1, zero); }) == Errc::InvalidInput);
}

TEST_CASE("crt_solve against exhaustive search") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 3;
    const oracle::Vec m = oracle::random_moduli(rng, r, 0, 1'000'000);
    oracle::Vec res;
    std::uniform_int_distribution<long> pick(-50, 50);
    for (std::size_t i = 0; i < r; ++i) res.push_back(pick(rng));
    const Integer x = crt_solve(oracle::to_ints(res), oracle::to_ints(m));
    const auto brute = oracle::crt(res, m);
    REQUIRE(brute.has_value());
    CHECK(x == Integer(static_cast<long>(*brute)));
    for (std::size_t i = 0; i < r; ++i) CHECK(mod_floor(Integer(x - static_cast<long>(res[i])), Integer(static_cast<long>(m[i]))) == 0);
  }
}

TEST_CASE("paper_decomposition examples and errors") {
  MAdicDecomposition d = paper_decomposition(12, 2);
  CHECK(d.alpha == 2);
  CHECK(d.q == 3);
  d = paper_decomposition(5, 3);
  CHECK(d.alpha == 0);
  CHECK(d.q == 5);
  d = paper_decomposition(-18, 3);
  CHECK(d.alpha == 2);
  CHECK(d.q == -2);
  CHECK(error_of([] { paper_decomposition(2, 4); }) == Errc::NoDecomposition);
  CHECK(error_of([] { paper_decomposition(0, 4); }) == Errc::InvalidInput);
}

TEST_CASE("paper_decomposition against exhaustive alpha search") {
  for (long m = 2; m <= 30; ++m)
    for (long s = -200; s <= 200; ++s) {
      if (s == 0) continue;
      const auto brute = oracle::alphas(s, m);
      CHECK(brute.size() <= 1);
      if (brute.empty()) {
        CHECK(error_of([&] { paper_decomposition(s, m); }) == Errc::NoDecomposition);
        continue;
      }
      const MAdicDecomposition d = paper_decomposition(s, m);
      CHECK(d.alpha == brute.front());
      CHECK(pow(Integer(m), d.alpha) * d.q == s);
      CHECK(gcd(d.q, m) == 1);
    }
}

TEST_CASE("prime moduli always decompose with alpha the valuation") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
    for (long s = 1; s <= 3000; ++s) {
      unsigned v = 0;
      for (long t = s; t % p == 0; t /= p) ++v;
      CHECK(paper_decomposition(s, p).alpha == v);
      CHECK(paper_decomposition(-s, p).alpha == v);
    }
}

TEST_CASE("gcd_certificate_condition examples") {
  CHECK_FALSE(gcd_certificate_condition(2, 2, 0));
  CHECK(gcd_certificate_condition(2, 2, 1));
  CHECK(gcd_certificate_condition(1, 6, 0));
  CHECK_FALSE(gcd_certificate_condition(8, 2, 2));
  CHECK(gcd_certificate_condition(8, 2, 3));
  CHECK(gcd_certificate_condition(2, 4, 1));
  CHECK_FALSE(gcd_certificate_condition(2, 4, 0));
}

TEST_CASE("gcd_certificate_condition is solvability of the congruence") {
  // s k = j m^n (mod m^{n+1}) solvable for every j, by enumerating k.
  for (long m = 2; m <= 12; ++m)
    for (long s = -40; s <= 40; ++s) {
      if (s == 0) continue;
      bool prev = false;
      for (unsigned n = 0; n <= 3; ++n) {
        const long big = oracle::ipow(m, n + 1), small = oracle::ipow(m, n);
        std::set<long> reached;
        for (long k = 0; k < big; ++k) {
          const long v = oracle::posmod(s * k, big);
          if (v % small == 0) reached.insert(v / small);
        }
        const bool brute = static_cast<long>(reached.size()) == m;
        const bool got = gcd_certificate_condition(s, m, n);
        CHECK(got == brute);
        if (prev) CHECK(got);  // monotone in n
        prev = got;
      }
    }
}
