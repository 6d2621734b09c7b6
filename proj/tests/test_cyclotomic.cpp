#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinrep/cyclotomic.hpp"

using namespace skeinrep;

TEST_CASE("zeta powers obey the cyclotomic relations") {
  auto F3 = CycField::make(3);
  CHECK(F3->zeta(0).is_one());
  CHECK((F3->zeta(1) + F3->zeta(2) + F3->one()).is_zero());  // 1+z+z^2 = 0
  auto F5 = CycField::make(5);
  CHECK(F5->zeta(7) == F5->zeta(2));
  for (long k = 1; k < 5; ++k) CHECK(!(F5->zeta(k) - F5->one()).is_zero());
  CHECK((F5->zeta(3) * F5->zeta(2)).is_one());
}

TEST_CASE("composite odd orders") {
  // N = 9 exercises the non-prime cyclotomic polynomial x^6 + x^3 + 1
  auto F = CycField::make(9);
  CHECK(F->degree() == 6);
  CHECK((F->zeta(6) + F->zeta(3) + F->one()).is_zero());
  CHECK(!(F->zeta(3) - F->one()).is_zero());  // zeta^3 is not 1
  CHECK(F->zeta(9).is_one());
  CHECK(F->qint(9).is_zero());
  for (long n = 1; n < 9; ++n) CHECK(!F->qint(n).is_zero());
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    Cyc a = rng.nonzero(*F);
    CHECK((a * a.inverse()).is_one());
  }
  Cyc u = rng.nonzero(*F);
  CHECK(eval_int_poly(chebyshev_T(9), u + u.inverse()) == u.pow(9) + u.pow(-9));
}

TEST_CASE("field construction rejects even or tiny orders") {
  CHECK_THROWS_AS(CycField::make(4), std::invalid_argument);
  CHECK_THROWS_AS(CycField::make(1), std::invalid_argument);
}

TEST_CASE("field laws on seeded random triples") {
  for (long N : {3, 5, 7}) {
    auto F = CycField::make(N);
    Rng rng(11 + N);
    for (int t = 0; t < 200; ++t) {
      Cyc a = rng.scalar(*F), b = rng.scalar(*F), c = rng.scalar(*F);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("quantum integers") {
  for (long N : {3, 5, 7}) {
    auto F = CycField::make(N);
    CHECK(F->qint(1).is_one());
    CHECK(F->qint(0).is_zero());
    CHECK(F->qint(N).is_zero());
    for (long n = 1; n < N; ++n) {
      CHECK(!F->qint(n).is_zero());
      CHECK(F->qint(N - n) == -F->qint(n));
    }
  }
}

TEST_CASE("Chebyshev recursion and the defining identity") {
  auto t0 = chebyshev_T(0);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0] == 2);
  auto t1 = chebyshev_T(1);
  CHECK(t1[0] == 0);
  CHECK(t1[1] == 1);
  auto t2 = chebyshev_T(2);  // X^2 - 2
  CHECK(t2[0] == -2);
  CHECK(t2[1] == 0);
  CHECK(t2[2] == 1);

  for (long N : {3, 5}) {
    auto F = CycField::make(N);
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
      Cyc u = rng.nonzero(*F);
      Cyc x = u + u.inverse();
      for (long n : {static_cast<long>(N), 2 * N, N + 2}) {
        CHECK(eval_int_poly(chebyshev_T(n), x) == u.pow(n) + u.pow(-n));
      }
    }
  }
}

TEST_CASE("fiber of T_N over +-2") {
  for (long N : {3, 5}) {
    auto F = CycField::make(N);
    for (int sign : {1, -1}) {
      auto fiber = chebyshev_fiber_pm2(*F, sign);
      long total = 0;
      for (const auto& pt : fiber) total += pt.multiplicity;
      CHECK(total == N);
      CHECK(fiber.size() == static_cast<size_t>(1 + (N - 1) / 2));
      CHECK(fiber[0].root == F->integer(2 * sign));
      CHECK(fiber[0].multiplicity == 1);
      // the double roots written with A instead of q give the same set
      std::vector<Cyc> via_A;
      for (long n = 1; n <= (N - 1) / 2; ++n)
        via_A.push_back(F->integer(sign) * (F->A(n) + F->A(-n)));
      for (size_t i = 1; i < fiber.size(); ++i) {
        bool found = false;
        for (const Cyc& v : via_A) found = found || (v == fiber[i].root);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("root multiplicities") {
  auto Fp = CycField::make(5);
  const CycField& F = *Fp;
  // (X-1)^2 = X^2 - 2X + 1
  CycPoly p = {F.one(), F.integer(-2), F.one()};
  CHECK(root_multiplicity(p, F.one()) == 2);
  CHECK(root_multiplicity(p, F.integer(3)) == 0);
  CycPoly c = {F.integer(4)};
  CHECK(root_multiplicity(c, F.integer(1)) == 0);
  // away from +-2 the fiber of T_N is simple: the roots of
  // T_N - (z^N + z^-N) are A^j z + A^-j z^-1, each of multiplicity one
  Rng rng(23);
  long N = F.order();
  for (int t = 0; t < 5; ++t) {
    Cyc z = rng.nonzero(F);
    Cyc c = z.pow(N) + z.pow(-N);
    if (c == F.integer(2) || c == F.integer(-2)) continue;
    CycPoly tn = int_poly_to_cyc(chebyshev_T(N), F);
    tn[0] = tn[0] - c;
    for (long j = 0; j < N; ++j) {
      Cyc root = F.A(j) * z + F.A(-j) * z.inverse();
      CHECK(root_multiplicity(tn, root) == 1);
    }
  }
}

TEST_CASE("chebyshev identity survives both root-of-unity spellings") {
  // the double-root sets written with A-powers and q-powers coincide
  for (long N : {3, 5, 7}) {
    auto F = CycField::make(N);
    std::vector<Cyc> qs, as;
    for (long n = 1; n <= (N - 1) / 2; ++n) {
      qs.push_back(F->q(n) + F->q(-n));
      as.push_back(F->A(n) + F->A(-n));
    }
    for (const Cyc& a : as) {
      bool found = false;
      for (const Cyc& q : qs) found = found || (a == q);
      CHECK(found);
    }
  }
}
