#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinrep/sl2.hpp"

using namespace skeinrep;

namespace {
Mat make2(const CycField& F, long a, long b, long c, long d) {
  Mat m(&F, 2, 2);
  m.at(0, 0) = F.integer(a);
  m.at(0, 1) = F.integer(b);
  m.at(1, 0) = F.integer(c);
  m.at(1, 1) = F.integer(d);
  return m;
}
Mat random_sl2(const CycField& F, Rng& rng) {
  Mat e1 = Mat::identity(&F, 2), e2 = Mat::identity(&F, 2), e3 = Mat::identity(&F, 2);
  e1.at(0, 1) = rng.scalar(F);
  e2.at(1, 0) = rng.nonzero(F);  // keeps the instance generic for the solver
  e3.at(0, 1) = rng.scalar(F);
  return e1 * e2 * e3;
}
Mat random_upper(const CycField& F, Rng& rng) {
  Mat m(&F, 2, 2);
  Cyc t = rng.nonzero(F);
  m.at(0, 0) = t;
  m.at(0, 1) = rng.scalar(F);
  m.at(1, 1) = t.inverse();
  return m;
}
}  // namespace

TEST_CASE("Bruhat factorization") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  auto f = bruhat_factor(Mat::identity(&F, 2));
  CHECK(f.m_minus == Mat::identity(&F, 2));
  CHECK(f.m_plus == Mat::identity(&F, 2));
  // the worked example [[2,1],[1,1]]
  Mat M = make2(F, 2, 1, 1, 1);
  f = bruhat_factor(M);
  CHECK(f.m_minus * f.m_plus == M);
  CHECK(f.m_minus.at(0, 0).is_one());
  CHECK(f.m_minus.at(1, 1).is_one());
  CHECK(f.m_minus.at(0, 1).is_zero());
  CHECK(f.m_plus.at(1, 0).is_zero());
  CHECK(f.m_plus.at(0, 0) == F.integer(2));
  CHECK(f.m_plus.det().is_one());
  // the small cell is rejected
  CHECK_THROWS_AS(bruhat_factor(sl2_w(F)), std::domain_error);
  // roundtrip on random draws
  Rng rng(127);
  for (int t = 0; t < 100; ++t) {
    Mat A = random_sl2(F, rng);
    if (A.at(0, 0).is_zero()) continue;
    auto g = bruhat_factor(A);
    CHECK(g.m_minus * g.m_plus == A);
  }
}

TEST_CASE("gluing lift through the small cell") {
  auto Fp = CycField::make(5);
  const CycField& F = *Fp;
  // identity lifts to (w, -w)
  auto lift = gluing_lift(Mat::identity(&F, 2));
  CHECK(lift.A == sl2_w(F));
  CHECK(lift.B == sl2_w(F).scaled(F.integer(-1)));
  CHECK(lift.A * lift.B == Mat::identity(&F, 2));
  Rng rng(131);
  for (int t = 0; t < 50; ++t) {
    Mat M = random_sl2(F, rng);
    while (M.at(0, 0).is_zero()) M = random_sl2(F, rng);
    auto l = gluing_lift(M);
    CHECK(l.A.at(0, 0).is_zero());
    CHECK(l.B.at(0, 0).is_zero());
    CHECK(l.A.det().is_one());
    CHECK(l.B.det().is_one());
    CHECK(l.A * l.B == M);
  }
  CHECK_THROWS_AS(gluing_lift(sl2_w(F)), std::domain_error);
}

TEST_CASE("four-matrix triangularization") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Mat I = Mat::identity(&F, 2);
  // all-identity instance accepts g = I
  auto res = prout_solve(I, I, I, I);
  REQUIRE(res.status == ProutResult::Status::Success);
  CHECK(res.g == I);
  // randomized construct-and-check
  Rng rng(137);
  for (int t = 0; t < 200; ++t) {
    Mat A = random_sl2(F, rng);
    Mat B = A.inverse() * random_upper(F, rng);
    Mat C = random_sl2(F, rng);
    Mat D = random_upper(F, rng) * C.inverse();
    auto r = prout_solve(A, B, C, D);
    REQUIRE(r.status == ProutResult::Status::Success);
    Mat g = r.g;
    CHECK(g.det().is_one());
    CHECK(is_upper_triangular(A * g));
    CHECK(is_upper_triangular(g.inverse() * B));
    CHECK(is_upper_triangular(D * g.inverse()));
    CHECK(is_upper_triangular(g * C));
  }
  // the documented degenerate instance
  Mat w = sl2_w(F);
  auto deg = prout_solve(w, w.inverse(), I, I);
  REQUIRE(deg.status == ProutResult::Status::Degenerate);
  CHECK(deg.certificate.find("det g = 0") != std::string::npos);
  // precondition violations are rejected
  Mat U = random_upper(F, rng);
  CHECK_THROWS_AS(prout_solve(w, I, I, I), std::invalid_argument);
}

TEST_CASE("shadow class of the quotient matrix") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Mat I = Mat::identity(&F, 2);
  auto d = phi_of_shadow(I, I);
  CHECK(d.cls == PhiClass::Central);
  CHECK(d.trace == F.integer(2));
  Mat diag(&F, 2, 2);
  diag.at(0, 0) = F.integer(3);
  diag.at(1, 1) = F.rational(mpq_class(1, 3));
  CHECK(phi_of_shadow(diag, I).cls == PhiClass::Diagonal);
  Mat upper = Mat::identity(&F, 2);
  upper.at(0, 1) = F.one();
  CHECK(phi_of_shadow(upper, I).cls == PhiClass::Semicyclic);
  Mat lower = Mat::identity(&F, 2);
  lower.at(1, 0) = F.one();
  CHECK(phi_of_shadow(upper, lower).cls == PhiClass::Cyclic);
  CHECK_THROWS_AS(phi_of_shadow(lower, I), std::invalid_argument);
}

TEST_CASE("shadow consistency on module families") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(139 + N);
    for (Family fam : {Family::V, Family::Vtilde, Family::S, Family::P,
                       Family::Pproj, Family::OmegaMinus, Family::Mfam}) {
      FamilySpec s = draw_admissible(F, fam, rng);
      ShadowResult sr = shadow(build_module(F, s));
      REQUIRE(sr.ok);
      auto sc = shadow_consistency(sr.sh);
      INFO(family_name(fam));
      CHECK(sc.trace_ok);
      CHECK(sc.boundary_pos);  // families satisfy the h^N orientation
    }
    // closed form on the simple family: T_N(h_p) = -tr(phi), phi = +-identity
    Cyc mu = rng.nonzero(F);
    FamilySpec s;
    s.family = Family::S;
    s.mu = mu;
    s.eps = -1;
    s.n = 1;
    ShadowResult sr = shadow(build_module(F, s));
    REQUIRE(sr.ok);
    auto phi = phi_of_shadow(sr.sh.g_plus, sr.sh.g_minus);
    CHECK(phi.cls == PhiClass::Central);
    CHECK(eval_int_poly(chebyshev_T(N), sr.sh.h_p) == -phi.trace);
  }
}

TEST_CASE("boundary invariants multiply") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Cyc h = F.zeta(1) + F.integer(2);
  CHECK(glue_boundary_invariants(F.one(), h) == h);
  CHECK(glue_boundary_invariants(h, h.inverse()).is_one());
  Rng rng(149);
  Cyc mu = rng.nonzero(F), nu = rng.nonzero(F);
  CHECK(glue_boundary_invariants(mu.pow(-2), -nu.pow(-2)) == -(mu * nu).pow(-2));
  CHECK_THROWS_AS(glue_boundary_invariants(F.zero(), h), std::domain_error);
}
