#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wildcert/fq.hpp"

#include <random>

using namespace wildcert;

TEST_CASE("bundled moduli are accepted for p in {2,3,5,7}, e <= 4") {
  for (uint32_t p : {2u, 3u, 5u, 7u})
    for (uint32_t e : {1u, 2u, 3u, 4u}) {
      auto F = Fq::make(p, e);
      uint32_t q = 1;
      for (uint32_t i = 0; i < e; ++i) q *= p;
      CHECK(F->q() == q);
    }
}

TEST_CASE("field construction rejects bad specs") {
  CHECK_THROWS_AS(Fq::make(FieldSpec{4, 1, {}}), error);        // not prime
  CHECK_THROWS_AS(Fq::make(FieldSpec{2, 2, {1, 0, 1}}), error); // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(Fq::make(FieldSpec{2, 2, {1, 1, 0}}), error); // not monic
  CHECK_NOTHROW(Fq::make(FieldSpec{2, 2, {1, 1, 1}}));
}

TEST_CASE("prime field arithmetic") {
  auto F = Fq::make(5);
  CHECK(F->add(3, 4) == 2);
  CHECK(F->mul(3, 4) == 2);
  CHECK(F->neg(2) == 3);
  CHECK(F->sub(1, 3) == 3);
  CHECK(F->inv(2) == 3);
  CHECK(F->from_int(-1) == 4);
  CHECK(F->from_int(12) == 2);
}

TEST_CASE("extension field arithmetic in F_4") {
  auto F = Fq::make(2, 2);  // modulus 1 + x + x^2, w = index 2
  const uint32_t w = 2;
  CHECK(F->mul(w, w) == F->add(w, 1));  // w^2 = w + 1
  CHECK(F->pow(w, 3) == 1);
  CHECK(F->mul(w, F->inv(w)) == 1);
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 1},
                      {2, 2},
                      {2, 3},
                      {3, 1},
                      {3, 2},
                      {5, 1},
                      {7, 2},
                      {7, 4}}) {
    auto F = Fq::make(p, e);
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
      uint32_t a = rng() % F->q(), b = rng() % F->q(), c = rng() % F->q();
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->add(a, 0) == a);
    }
  }
}

TEST_CASE("prime subfield embedding is index-stable") {
  auto F3 = Fq::make(3);
  auto F9 = Fq::make(3, 2);
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 0; b < 3; ++b) {
      CHECK(F9->add(a, b) == F3->add(a, b));
      CHECK(F9->mul(a, b) == F3->mul(a, b));
    }
}

TEST_CASE("prime power factoring") {
  auto f = field_spec_from_q(9);
  CHECK(f.p == 3);
  CHECK(f.e == 2);
  f = field_spec_from_q(8);
  CHECK(f.p == 2);
  CHECK(f.e == 3);
  CHECK_THROWS_AS(field_spec_from_q(12), parse_error);
  CHECK_THROWS_AS(field_spec_from_q(1), parse_error);
}

TEST_CASE("element display") {
  auto F = Fq::make(2, 2);
  CHECK(F->elem_str(0) == "0");
  CHECK(F->elem_str(1) == "1");
  CHECK(F->elem_str(2) == "w");
  CHECK(F->elem_str(3) == "w+1");
  CHECK(F->name() == "F_4");
}
