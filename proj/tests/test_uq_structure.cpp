#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinrep/uq_structure.hpp"

using namespace skeinrep;

TEST_CASE("monomial basis of size N^3") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    CHECK(uq_pbw_confirm(*Fp));
  }
}

TEST_CASE("left regular representation satisfies the relations") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  auto gens = uq_left_regular(F);  // order F, E, k2, k2i
  REQUIRE(gens.size() == 4);
  long d = 27;
  CHECK(gens[0].rows() == d);
  // E k^{1/2} = q^{-1} k^{1/2} E
  CHECK(gens[1] * gens[2] == (gens[2] * gens[1]).scaled(F.q(-1)));
  // F^N = E^N = 0, k^{N/2} = 1
  CHECK(gens[0].pow(3).is_zero());
  CHECK(gens[1].pow(3).is_zero());
  CHECK(gens[2].pow(3) == Mat::identity(&F, d));
  // the commutator relation
  Cyc c1 = F.q_minus_qinv().inverse();
  Mat lhs = gens[1] * gens[0] - gens[0] * gens[1];
  Mat rhs = (gens[2] * gens[2] - gens[3] * gens[3]).scaled(c1);
  CHECK(lhs == rhs);
}

TEST_CASE("regular module decomposition into projective left ideals") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  RegularDecompReport rep = uq_regular_decomposition_check(F);
  CHECK(rep.ok);
  CHECK(rep.pairwise_trivial);
  CHECK(rep.total_dimension_ok);
  long total = 0;
  for (const auto& s : rep.summands) {
    CHECK(s.dim_ok);
    CHECK(s.iso_ok);
    CHECK(s.dim == (s.n == 2 ? 3 : 6));
    total += s.dim;
  }
  CHECK(total == 27);
  CHECK(rep.summands.size() == 6);  // one ideal per 0 <= h <= n
}
