#include <doctest.h>

#include <latloc/character.hpp>

#include <string>

using namespace latloc;

namespace {

Halfspace hs(std::initializer_list<long long> normal, long long num) {
  Halfspace h;
  for (long long v : normal) h.normal.push_back(Int(v));
  h.offset = Rat(num);
  return h;
}

Weight wt(std::initializer_list<long long> xs) {
  Weight w;
  for (long long v : xs) w.push_back(Int(v));
  return w;
}

Polyhedron square2() {
  return make_polyhedron(2,
                         {hs({1, 0}, 0), hs({-1, 0}, -2), hs({0, 1}, 0),
                          hs({0, -1}, -2)},
                         "square");
}

Polyhedron segment(long long a, long long b) {
  return make_polyhedron(1, {hs({1}, a), hs({-1}, -b)}, "segment");
}

Polyhedron quadrant() {
  return make_polyhedron(2, {hs({1, 0}, 0), hs({0, 1}, 0)}, "quadrant");
}

}  // namespace

TEST_CASE("delta and evaluation") {
  FormalCharacter d = delta(wt({1, -2}));
  CHECK(d.rank == 2);
  CHECK(evaluate(d, wt({1, -2})) == 1);
  CHECK(evaluate(d, wt({0, 0})) == 0);
  CHECK(d.is_finite_support());
}

TEST_CASE("add and scale prune to zero") {
  FormalCharacter d = delta(wt({4}));
  FormalCharacter z = add(d, scale(-1, d));
  CHECK(evaluate(z, wt({4})) == 0);
  CHECK(support(z).empty());
  CHECK(total_multiplicity(z) == 0);
  CHECK_THROWS_AS((void)add(d, delta(wt({1, 1}))), domain_error);
}

TEST_CASE("same-torus tensor is convolution") {
  FormalCharacter a = delta(wt({1}));
  FormalCharacter b = delta(wt({2}));
  FormalCharacter ab = tensor(a, b, TensorMode::same_torus);
  CHECK(evaluate(ab, wt({3})) == 1);
  CHECK(total_multiplicity(ab) == 1);

  // (1 + q)^2 = 1 + 2q + q^2
  FormalCharacter one_plus_q = add(delta(wt({0})), delta(wt({1})));
  FormalCharacter sq = tensor(one_plus_q, one_plus_q, TensorMode::same_torus);
  CHECK(evaluate(sq, wt({0})) == 1);
  CHECK(evaluate(sq, wt({1})) == 2);
  CHECK(evaluate(sq, wt({2})) == 1);
  CHECK(total_multiplicity(sq) == 4);
}

TEST_CASE("same-torus tensor shifts indicator terms losslessly") {
  FormalCharacter ind = indicator(segment(0, 2));
  FormalCharacter shifted = tensor(ind, delta(wt({3})), TensorMode::same_torus);
  CHECK(evaluate(shifted, wt({2})) == 0);
  CHECK(evaluate(shifted, wt({3})) == 1);
  CHECK(evaluate(shifted, wt({5})) == 1);
  CHECK(evaluate(shifted, wt({6})) == 0);
  // two infinite-support factors cannot convolve
  FormalCharacter q1 = indicator(quadrant());
  CHECK_THROWS_AS((void)tensor(q1, q1, TensorMode::same_torus), domain_error);
}

TEST_CASE("outer tensor concatenates weights") {
  FormalCharacter d = tensor(delta(wt({1})), delta(wt({2})), TensorMode::outer);
  CHECK(d.rank == 2);
  CHECK(evaluate(d, wt({1, 2})) == 1);
  CHECK(evaluate(d, wt({2, 1})) == 0);

  FormalCharacter seg = indicator(segment(0, 2));
  FormalCharacter sq = tensor(seg, seg, TensorMode::outer);
  CHECK(probably_equal(sq, indicator(square2())));
  CHECK(total_multiplicity(sq) == 9);
}

TEST_CASE("restriction of a bounded indicator is eager and exact") {
  FormalCharacter sq = indicator(square2());
  FormalCharacter rx = restrict_character(sq, wt({1, 0}));
  CHECK(rx.rank == 1);
  for (long long m = -1; m <= 3; ++m)
    CHECK(evaluate(rx, wt({m})) == ((m >= 0 && m <= 2) ? 3 : 0));

  FormalCharacter rd = restrict_character(sq, wt({1, 1}));
  long long want[5] = {1, 2, 3, 2, 1};
  for (long long m = 0; m <= 4; ++m) CHECK(evaluate(rd, wt({m})) == want[m]);
  CHECK(total_multiplicity(rd) == 9);  // Fubini
}

TEST_CASE("restriction with unbounded but proper fibers stays lazy") {
  FormalCharacter q = indicator(quadrant());
  FormalCharacter r = restrict_character(q, wt({1, 1}));
  CHECK(r.rank == 1);
  CHECK_FALSE(r.is_finite_support());
  for (long long m = -2; m <= 5; ++m)
    CHECK(evaluate(r, wt({m})) == (m >= 0 ? m + 1 : 0));
  CHECK_THROWS_AS((void)support(r), domain_error);
}

TEST_CASE("restriction with noncompact fibers reports at evaluation") {
  FormalCharacter q = indicator(quadrant());
  FormalCharacter r = restrict_character(q, wt({1, 0}));
  CHECK_THROWS_WITH_AS((void)evaluate(r, wt({1})),
                       doctest::Contains("unbounded"), domain_error);
}

TEST_CASE("rank-one restrictions: identity and reflection") {
  FormalCharacter d = delta(wt({-3}));
  CHECK(evaluate(restrict_character(d, wt({1})), wt({-3})) == 1);
  FormalCharacter refl = restrict_character(d, wt({-1}));
  CHECK(evaluate(refl, wt({3})) == 1);
  CHECK(evaluate(refl, wt({-3})) == 0);
  // reflection of a lazy pushforward evaluates through
  FormalCharacter push =
      restrict_character(indicator(quadrant()), wt({1, 1}));
  FormalCharacter rp = restrict_character(push, wt({-1}));
  CHECK(evaluate(rp, wt({-4})) == 5);
  CHECK(evaluate(rp, wt({4})) == 0);
}

TEST_CASE("restriction validates xi") {
  FormalCharacter sq = indicator(square2());
  CHECK_THROWS_AS((void)restrict_character(sq, wt({2, 2})), domain_error);
  CHECK_THROWS_AS((void)restrict_character(sq, wt({1})), domain_error);
}

TEST_CASE("evaluate validates the weight size") {
  CHECK_THROWS_AS((void)evaluate(delta(wt({1, 2})), wt({1})), domain_error);
}

TEST_CASE("probably_equal distinguishes characters") {
  FormalCharacter a = indicator(segment(0, 3));
  FormalCharacter b =
      add(add(delta(wt({0})), delta(wt({1}))),
          add(delta(wt({2})), delta(wt({3}))));
  CHECK(probably_equal(a, b));
  CHECK_FALSE(probably_equal(a, delta(wt({0}))));
  FormalCharacter qr = restrict_character(indicator(quadrant()), wt({1, 1}));
  CHECK(probably_equal(qr, qr));
  CHECK_FALSE(probably_equal(qr, indicator(segment(0, 3))));
}

TEST_CASE("character JSON round trip across term kinds") {
  FormalCharacter fin = add(delta(wt({1, 2})), scale(3, delta(wt({-1, 0}))));
  FormalCharacter fin2 = character_from_json(character_to_json(fin));
  CHECK(probably_equal(fin, fin2));

  FormalCharacter ind = indicator(square2());
  CHECK(probably_equal(ind, character_from_json(character_to_json(ind))));

  FormalCharacter push =
      restrict_character(indicator(quadrant()), wt({1, 1}));
  FormalCharacter push2 = character_from_json(character_to_json(push));
  for (long long m = 0; m <= 4; ++m)
    CHECK(evaluate(push2, wt({m})) == m + 1);
  // emitter determinism
  CHECK(character_to_json(push) == character_to_json(push));
  CHECK_THROWS_AS((void)character_from_json("[]"), parse_error);
}
