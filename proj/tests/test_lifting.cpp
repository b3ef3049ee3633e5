#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "soltower/errors.hpp"
#include "soltower/lifting.hpp"

using namespace soltower;

namespace {

Rational q(long n, long d) { return make_rational(n, d); }

CoverVector cv(std::initializer_list<Rational> xs) { return CoverVector(xs); }

TorusPoint pt(std::initializer_list<Rational> xs) { return TorusPoint::from_cover(CoverVector(xs)); }

Moduli moduli(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return Moduli(v);
}

WindingVector wv(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return WindingVector(v);
}

}  // namespace

TEST_CASE("loop validation") {
  CHECK_THROWS_AS(PLLoop({cv({0})}), Error);
  CHECK_THROWS_AS(PLLoop({cv({q(1, 2)}), cv({1})}), Error);
  CHECK_THROWS_AS(PLLoop({cv({0}), cv({q(1, 2)})}), Error);
  CHECK_THROWS_AS(PLLoop({cv({0}), cv({1, 1})}), Error);
  CHECK_NOTHROW(PLLoop({cv({0, 0}), cv({q(1, 2), q(-7, 3)}), cv({1, -2})}));
}

TEST_CASE("winding examples") {
  CHECK(winding(PLLoop::straight(wv({3}))) == wv({3}));
  CHECK(winding(PLLoop::constant(3)) == wv({0, 0, 0}));
  const PLLoop a({cv({0, 0}), cv({q(1, 2), 5}), cv({2, -1})});
  const PLLoop b = PLLoop::straight(wv({-3, 4}));
  CHECK(winding(a.then(b)) == wv({-1, 3}));
  CHECK(winding(a.reversed()) == wv({-2, 1}));
  CHECK(a.then(b).segment_count() == 3);
}

TEST_CASE("liftable coordinates") {
  const PLLoop lambda1 = PLLoop::straight(wv({1}));
  CHECK_FALSE(liftable(lambda1, 0));
  CHECK(liftable(PLLoop::constant(2), 1));
  CHECK(liftable(lambda1.then(lambda1.reversed()), 0));
  CHECK_THROWS_AS(liftable(lambda1, 1), Error);
}

TEST_CASE("extend_periodic examples") {
  CoverPath p = extend_periodic(PLLoop::straight(wv({1})), 3);
  CHECK(p.breakpoints == std::vector<CoverVector>{cv({0}), cv({1}), cv({2}), cv({3})});
  p = extend_periodic(PLLoop::constant(2), 4);
  for (const CoverVector& x : p.breakpoints) CHECK(x == cv({0, 0}));
  p = extend_periodic(PLLoop({cv({0}), cv({q(1, 2)}), cv({1})}), 2);
  CHECK(p.breakpoints == std::vector<CoverVector>{cv({0}), cv({q(1, 2)}), cv({1}), cv({q(3, 2)}), cv({2})});
  CHECK(p.block_size == 2);
  CHECK_THROWS_AS(extend_periodic(PLLoop::constant(1), 0), Error);
}

TEST_CASE("periodic extension shifts each block by the winding") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const PLLoop loop = oracle::random_loop(rng, oracle::to_ints(oracle::random_winding(rng, 2, 4)), 3);
    const CoverPath p = extend_periodic(loop, 4);
    const CoverVector& s = loop.breakpoints().back();
    for (std::size_t k = 0; k + p.block_size < p.breakpoints.size(); ++k)
      for (std::size_t i = 0; i < 2; ++i)
        CHECK(p.breakpoints[k + p.block_size][i] == p.breakpoints[k][i] + s[i]);
  }
}

TEST_CASE("lift examples") {
  const LiftedPath l = lift(PLLoop::straight(wv({1})), 1, moduli({2}), 1);
  CHECK(l.cover_at(q(1, 3)) == cv({q(1, 6)}));
  CHECK(TorusPoint::from_cover(l.at_integer_time(1)) == pt({q(1, 2)}));

  std::mt19937_64 rng(67);
  const PLLoop loop = oracle::random_loop(rng, {2, -1}, 2);
  CHECK(lift(loop, 0, moduli({2, 3}), 3).path.breakpoints == extend_periodic(loop, 3).breakpoints);
}

TEST_CASE("f of the (n+1)-lift is the n-lift") {
  std::mt19937_64 rng(71);
  const Moduli m = moduli({2, 3});
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = oracle::to_ints(oracle::random_winding(rng, 2, 5));
    const PLLoop loop = oracle::random_loop(rng, s, 1 + trial % 3);
    for (unsigned long n = 0; n <= 4; ++n) {
      // Horizon T for the n-lift needs T * prod m for the (n+1)-lift.
      const LiftedPath low = lift(loop, n, m, 2);
      const LiftedPath high = lift(loop, n + 1, m, 2);
      for (std::size_t k = 0; k < high.path.breakpoints.size(); ++k)
        CHECK(apply_f(TorusPoint::from_cover(high.path.breakpoints[k]), m) ==
              TorusPoint::from_cover(low.path.breakpoints[k]));
      // Same check at interior times.
      for (int j = 1; j < 8; ++j) {
        const Rational t = q(j, 4);
        CHECK(apply_f(TorusPoint::from_cover(high.cover_at(t)), m) ==
              TorusPoint::from_cover(low.cover_at(t)));
      }
    }
  }
}

TEST_CASE("sigma examples") {
  const Moduli m = moduli({2, 3});
  CHECK(sigma_point(wv({2, 3}), 2, m, 1) == pt({q(1, 2), q(1, 3)}));
  CHECK(sigma_point(wv({5, -7}), 3, m, 0) == TorusPoint::base(2));
  CHECK(sigma_point(wv({1, 1}), 1, m, 6) == TorusPoint::base(2));
  const auto pts = sigma_points(wv({1, 1}), 1, m, 6);
  CHECK(pts.size() == 7);
  CHECK(pts.front() == TorusPoint::base(2));
  CHECK(pts[1] == pt({q(1, 2), q(1, 3)}));
}

TEST_CASE("image_period examples and least-period oracle") {
  const Moduli m = moduli({2, 3});
  CHECK(image_period(wv({1, 1}), 1, m) == 6);
  CHECK(image_period(wv({2, 3}), 1, m) == 1);
  CHECK(sigma_point(wv({2, 3}), 1, m, 1) == TorusPoint::base(2));
  CHECK(image_period(wv({7, -5}), 0, m) == 1);

  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const oracle::Vec mv = oracle::random_moduli(rng, 2, 2, 5000);
    const Moduli mm(oracle::to_ints(mv));
    const WindingVector s(oracle::to_ints(oracle::random_winding(rng, 2, 30)));
    for (unsigned long n = 0; n <= 2; ++n) {
      Integer p = 1;
      while (!sigma_point(s, n, mm, p).is_base()) ++p;
      CHECK(image_period(s, n, mm) == p);
    }
  }
}

TEST_CASE("image_set examples") {
  const Moduli m = moduli({2, 3});
  const PLLoop diag = PLLoop::straight(wv({1, 1}));
  const SegmentSet im0 = image_set(diag, 0, m);
  CHECK(im0 == SegmentSet::from_segments(2, std::vector{TorusSegment(cv({0, 0}), cv({1, 1}))}));
  const SegmentSet im1 = image_set(diag, 1, m);
  REQUIRE(im1.pieces().size() == 1);
  CHECK(im1.pieces()[0].line.direction == std::vector<Integer>{3, 2});
  CHECK(im1.pieces()[0].arc.full());
  CHECK(im1.contains(TorusPoint::base(2)));

  const SegmentSet still = image_set(PLLoop::constant(2), 3, m, 5);
  CHECK(still == SegmentSet::single_point(TorusPoint::base(2)));
  try {
    image_set(PLLoop::straight(wv({0, 1})), 1, m);
    FAIL("missing horizon accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonperiodicWithoutHorizon);
  }
  CHECK_NOTHROW(image_set(PLLoop::straight(wv({0, 1})), 1, m, 3));
}

TEST_CASE("images of straight loops follow sigma") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const oracle::Vec mv = oracle::random_moduli(rng, 2, 1, 400);
    const Moduli m(oracle::to_ints(mv));
    const WindingVector s(oracle::to_ints(oracle::random_winding(rng, 2, 6)));
    for (unsigned long n = 0; n <= 2; ++n) {
      const std::uint64_t P = to_u64(image_period(s, n, m));
      const auto ints = integer_time_points(PLLoop::straight(s), n, m, P);
      const auto sig = sigma_points(s, n, m, P);
      CHECK(ints == sig);
      // The image is the sigma path over one period: one straight segment
      // from 0 to P s / m^n.
      CoverVector end;
      for (std::size_t i = 0; i < 2; ++i)
        end.push_back(make_rational(s[i] * Integer(static_cast<unsigned long>(P)), pow(m[i], n)));
      const SegmentSet want = SegmentSet::from_segments(2, std::vector{TorusSegment(CoverVector(2, 0), end)});
      CHECK(image_set(PLLoop::straight(s), n, m) == want);
      for (const TorusPoint& p : sig) CHECK(want.contains(p));
    }
  }
}

TEST_CASE("integer-time points depend only on the winding") {
  std::mt19937_64 rng(83);
  const Moduli m = moduli({2, 3});
  for (long s1 : {1L, -2L, 3L})
    for (long s2 : {1L, 2L, -3L}) {
      const std::vector<Integer> s{s1, s2};
      const WindingVector w(s);
      for (int pair = 0; pair < 10; ++pair) {
        const PLLoop a = oracle::random_loop(rng, s, 1 + pair % 4);
        const PLLoop b = oracle::random_loop(rng, s, 2 + pair % 3);
        for (unsigned long n : {0ul, 1ul, 2ul}) {
          const auto pa = integer_time_points(a, n, m, 20);
          CHECK(pa == integer_time_points(b, n, m, 20));
          CHECK(pa == sigma_points(w, n, m, 20));
        }
      }
    }
}

TEST_CASE("integer-time points are preimages of the base point") {
  std::mt19937_64 rng(89);
  const Moduli m = moduli({2, 3});
  const PLLoop loop = oracle::random_loop(rng, {1, 1}, 3);
  CHECK(integer_time_points(loop, 1, m, 1)[1] == pt({q(1, 2), q(1, 3)}));
  for (unsigned long n = 0; n <= 3; ++n)
    for (const TorusPoint& p : integer_time_points(loop, n, m, 40)) {
      CHECK(apply_f_power(p, m, n).is_base());
      for (std::size_t i = 0; i < 2; ++i)
        CHECK(pow(m[i], n) % p[i].value().get_den() == 0);
    }
}

TEST_CASE("pushed images stay in the base image and lifted images are connected") {
  std::mt19937_64 rng(97);
  const Moduli m = moduli({2, 3});
  for (int trial = 0; trial < 15; ++trial) {
    const auto s = oracle::to_ints(oracle::random_winding(rng, 2, 3));
    const PLLoop loop = oracle::random_loop(rng, s, 1 + trial % 3);
    const SegmentSet base = image_set(loop, 0, m);
    for (unsigned long n = 0; n <= 2; ++n) {
      const SegmentSet im = image_set(loop, n, m);
      SegmentSet pushed = im;
      for (unsigned long k = 0; k < n; ++k) pushed = image_under_f(pushed, m);
      CHECK(base.contains(pushed));
      CHECK(components(im).size() == 1);
      // Cross-check the canonical set against dense samples of the lift.
      const std::uint64_t P = to_u64(image_period(WindingVector(s), n, m));
      const LiftedPath l = lift(loop, n, m, P);
      for (std::size_t k = 0; k + 1 < l.path.breakpoints.size(); ++k) {
        if (l.path.breakpoints[k] == l.path.breakpoints[k + 1]) continue;
        const TorusSegment seg(l.path.breakpoints[k], l.path.breakpoints[k + 1]);
        for (const TorusPoint& p : oracle::dense({seg}, {}, 5)) CHECK(im.contains(p));
      }
    }
  }
}
