#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "soltower/errors.hpp"
#include "soltower/solenoid.hpp"
#include "soltower/torus.hpp"

using namespace soltower;

namespace {

Rational q(long n, long d) { return make_rational(n, d); }

TorusPoint pt(std::initializer_list<Rational> xs) {
  return TorusPoint::from_cover(CoverVector(xs));
}

Moduli moduli(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return Moduli(v);
}

TorusPoint random_point(std::mt19937_64& rng, std::size_t r) {
  CoverVector c;
  for (std::size_t i = 0; i < r; ++i) c.push_back(oracle::random_rational(rng, 50, 48));
  return TorusPoint::from_cover(c);
}

// A coherent point built from a random deepest level.
SolenoidPoint random_coherent(std::mt19937_64& rng, const Moduli& m, std::size_t depth) {
  std::vector<TorusPoint> levels(depth);
  levels[depth - 1] = random_point(rng, m.size());
  for (std::size_t k = depth - 1; k >= 1; --k) levels[k - 1] = apply_f(levels[k], m);
  return SolenoidPoint(m, levels);
}

}  // namespace

TEST_CASE("angles reduce mod 1") {
  CHECK(Angle(q(5, 4)).value() == q(1, 4));
  CHECK(Angle(q(-1, 3)).value() == q(2, 3));
  CHECK(Angle(Rational(7)).value() == 0);
  CHECK(pt({q(3, 2), q(-2, 3)}) == pt({q(1, 2), q(1, 3)}));
  CHECK(TorusPoint::base(3).is_base());
  CHECK_FALSE(pt({q(1, 2)}).is_base());
}

TEST_CASE("apply_f examples") {
  const Moduli m = moduli({2, 3});
  CHECK(apply_f(pt({q(1, 2), q(1, 3)}), m) == TorusPoint::base(2));
  CHECK(apply_f(pt({q(1, 4), q(1, 9)}), m) == pt({q(1, 2), q(1, 3)}));
  CHECK(apply_f(TorusPoint::base(2), m) == TorusPoint::base(2));
  CHECK(apply_f_power(pt({q(1, 8), q(1, 27)}), m, 3) == TorusPoint::base(2));
  CHECK_THROWS_AS(apply_f(TorusPoint::base(3), m), Error);
}

TEST_CASE("f_preimages examples") {
  const Moduli m = moduli({2, 3});
  const auto base = f_preimages(TorusPoint::base(2), m);
  REQUIRE(base.size() == 6);
  std::set<TorusPoint> expected;
  for (long j1 = 0; j1 < 2; ++j1)
    for (long j2 = 0; j2 < 3; ++j2) expected.insert(pt({q(j1, 2), q(j2, 3)}));
  CHECK(std::set<TorusPoint>(base.begin(), base.end()) == expected);
  CHECK(std::is_sorted(base.begin(), base.end()));

  const auto circle = f_preimages(pt({Rational(0)}), moduli({2}));
  REQUIRE(circle.size() == 2);
  CHECK(circle[0] == pt({Rational(0)}));
  CHECK(circle[1] == pt({q(1, 2)}));

  const auto shifted = f_preimages(pt({q(1, 2), Rational(0)}), m);
  REQUIRE(shifted.size() == 6);
  for (const TorusPoint& p : shifted) {
    CHECK((p[0].value() == q(1, 4) || p[0].value() == q(3, 4)));
    CHECK(apply_f(p, m) == pt({q(1, 2), Rational(0)}));
  }
}

TEST_CASE("f_preimages round trip on random points") {
  std::mt19937_64 rng(3);
  const Moduli m = moduli({2, 3, 5});
  for (int i = 0; i < 60; ++i) {
    const TorusPoint p = random_point(rng, 3);
    const auto pre = f_preimages(p, m);
    CHECK(pre.size() == 30);
    CHECK(std::set<TorusPoint>(pre.begin(), pre.end()).size() == 30);
    for (const TorusPoint& x : pre) CHECK(apply_f(x, m) == p);
  }
}

TEST_CASE("arc and torus distance") {
  CHECK(arc_distance(Angle(q(1, 10)), Angle(q(9, 10))) == q(1, 5));
  CHECK(arc_distance(Angle(0), Angle(q(1, 2))) == q(1, 2));
  CHECK(torus_distance(pt({q(1, 10), q(1, 3)}), pt({q(9, 10), q(1, 2)})) == q(1, 5));
  CHECK_THROWS_AS(torus_distance(TorusPoint::base(1), TorusPoint::base(2)), Error);
}

TEST_CASE("torus distance is a metric on sampled points") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const TorusPoint a = random_point(rng, 2), b = random_point(rng, 2), c = random_point(rng, 2);
    const Rational ab = torus_distance(a, b);
    CHECK(ab >= 0);
    CHECK(ab <= q(1, 2));
    CHECK((ab == 0) == (a == b));
    CHECK(ab == torus_distance(b, a));
    CHECK(torus_distance(a, c) <= ab + torus_distance(b, c));
  }
}

TEST_CASE("f expands distance by at most max m per step") {
  std::mt19937_64 rng(23);
  const Moduli m = moduli({2, 3});
  for (int i = 0; i < 300; ++i) {
    const TorusPoint a = random_point(rng, 2), b = random_point(rng, 2);
    CHECK(torus_distance(apply_f_power(a, m, 3), apply_f_power(b, m, 3)) <=
          27 * torus_distance(a, b));
  }
}

TEST_CASE("solenoid points check coherence") {
  const Moduli m = moduli({2, 3});
  CHECK_NOTHROW(SolenoidPoint(m, {pt({q(1, 2), q(1, 3)}), pt({q(1, 4), q(1, 9)})}));
  try {
    SolenoidPoint(m, {pt({q(1, 2), q(1, 3)}), pt({q(1, 8), q(1, 9)})});
    FAIL("incoherent sequence accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IncoherentSequence);
  }
  const SolenoidPoint b = SolenoidPoint::base(m, 4);
  CHECK(b.depth() == 4);
  for (std::size_t k = 1; k <= 4; ++k) CHECK(b.level(k).is_base());
}

TEST_CASE("solenoid distance examples") {
  const Moduli m1 = moduli({2});
  const SolenoidPoint x(m1, {pt({Rational(0)})});
  const SolenoidPoint y(m1, {pt({q(1, 2)})});
  const SolenoidDistance d = solenoid_distance(x, y);
  CHECK(d.truncated == q(1, 4));
  CHECK(d.tail_bound == q(1, 4));
  CHECK(solenoid_distance(x, x).truncated == 0);
  try {
    solenoid_distance(x, SolenoidPoint::base(m1, 2));
    FAIL("depth mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DepthMismatch);
  }
}

TEST_CASE("solenoid distance against the weighted sum, and triangle inequality") {
  std::mt19937_64 rng(29);
  const Moduli m = moduli({2, 3});
  for (int i = 0; i < 100; ++i) {
    const SolenoidPoint a = random_coherent(rng, m, 5);
    const SolenoidPoint b = random_coherent(rng, m, 5);
    const SolenoidPoint c = random_coherent(rng, m, 5);
    Rational sum = 0, w = q(1, 2);
    for (std::size_t k = 1; k <= 5; ++k, w /= 2) {
      Rational dk = 0;
      for (std::size_t j = 0; j < 2; ++j) {
        Rational diff = a.level(k)[j].value() - b.level(k)[j].value();
        if (diff < 0) diff = -diff;
        dk = std::max(dk, std::min(diff, Rational(1 - diff)));
      }
      sum += w * dk;
    }
    CHECK(solenoid_distance(a, b).truncated == sum);
    CHECK(solenoid_distance(a, b).tail_bound == q(1, 64));
    CHECK(solenoid_distance(a, c).truncated <=
          solenoid_distance(a, b).truncated + solenoid_distance(b, c).truncated);
  }
}

TEST_CASE("level closeness up to N0 bounds the solenoid distance") {
  // d_T < eps/2 on levels 1..N0 and 2^{-N0} < eps/2 give distance < eps.
  std::mt19937_64 rng(31);
  const Moduli m = moduli({2, 3});
  const Rational eps = q(1, 2);
  const std::size_t N0 = 3, depth = 6;
  std::size_t tested = 0;
  for (int i = 0; i < 400; ++i) {
    const SolenoidPoint a = random_coherent(rng, m, depth);
    // Perturb the deepest level slightly so the lower levels stay close.
    std::vector<TorusPoint> levels(depth);
    CoverVector c = a.level(depth).cover();
    c[0] += oracle::random_rational(rng, 1, 400);
    c[1] += oracle::random_rational(rng, 1, 400);
    levels[depth - 1] = TorusPoint::from_cover(c);
    for (std::size_t k = depth - 1; k >= 1; --k) levels[k - 1] = apply_f(levels[k], m);
    const SolenoidPoint b(m, levels);
    bool close = true;
    for (std::size_t k = 1; k <= N0; ++k) close = close && torus_distance(a.level(k), b.level(k)) < eps / 2;
    if (!close) continue;
    ++tested;
    CHECK(solenoid_distance(a, b).upper_bound() < eps);
  }
  CHECK(tested > 50);
}
