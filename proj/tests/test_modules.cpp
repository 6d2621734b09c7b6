#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinrep/modules.hpp"

using namespace skeinrep;

namespace {
const std::vector<Family> kAll = {Family::V,      Family::Vtilde,    Family::S,
                                  Family::P,      Family::Ptilde,    Family::Pproj,
                                  Family::OmegaPlus, Family::OmegaMinus, Family::Mfam};
}

TEST_CASE("dimensions match the basis index ranges") {
  auto Fp = CycField::make(5);
  const CycField& F = *Fp;
  long N = 5;
  FamilySpec s;
  s.mu = F.integer(2);
  s.lambda = F.integer(3);
  s.b = F.one();
  s.c = F.one();
  s.family = Family::V;
  CHECK(build_module(F, s).dim == N);
  s.family = Family::Vtilde;
  CHECK(build_module(F, s).dim == N);
  s.family = Family::S;
  s.n = 2;
  CHECK(build_module(F, s).dim == 3);
  s.family = Family::P;
  CHECK(build_module(F, s).dim == 2 * N);
  s.family = Family::Ptilde;
  CHECK(build_module(F, s).dim == 2 * N);
  s.family = Family::Pproj;
  s.n = 1;
  CHECK(build_module(F, s).dim == 2 * N);
  s.family = Family::OmegaMinus;
  s.n = 1;
  s.k = 2;
  long nbar = N - 2 - s.n;
  CHECK(build_module(F, s).dim == s.k * (s.n + 1) + (s.k + 1) * (nbar + 1));
  s.family = Family::OmegaPlus;
  CHECK(build_module(F, s).dim == (s.k + 1) * (s.n + 1) + s.k * (nbar + 1));
  s.family = Family::Mfam;
  s.point = ProjPoint::finite(F.one());
  CHECK(build_module(F, s).dim == s.k * (s.n + 1) + s.k * (nbar + 1));
}

TEST_CASE("the one-dimensional simple module") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  FamilySpec s;
  s.family = Family::S;
  s.mu = F.integer(2);
  s.eps = -1;
  s.n = 0;
  MatRep rep = build_module(F, s);
  CHECK(rep.dim == 1);
  CHECK(rep.gen(Gen::E).is_zero());
  CHECK(rep.gen(Gen::F).is_zero());
  CHECK(rep.gen(Gen::K2).at(0, 0) == F.integer(-2));
  CHECK(rep.gen(Gen::L2).at(0, 0) == F.integer(2));
}

TEST_CASE("raising coefficient of the simple family") {
  auto Fp = CycField::make(5);
  const CycField& F = *Fp;
  FamilySpec s;
  s.family = Family::S;
  s.mu = F.zeta(1) + F.one();
  s.eps = 1;
  s.n = 3;
  MatRep rep = build_module(F, s);
  // E e_1 = mu^2 [1][n] e_0
  CHECK(rep.gen(Gen::E).at(0, 1) == s.mu.pow(2) * F.qint(1) * F.qint(3));
}

TEST_CASE("relations hold for all families at small orders") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(61 + N);
    for (Family fam : kAll) {
      for (int t = 0; t < 5; ++t) {
        FamilySpec s = draw_admissible(F, fam, rng);
        MatRep rep = build_module(F, s);
        RelationReport rr = verify_relations(rep);
        INFO(family_name(fam));
        CHECK(rr.all_pass);
      }
    }
  }
}

TEST_CASE("mutation: a zeroed raising operator breaks the commutator relation") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(67);
  FamilySpec s = draw_admissible(F, Family::V, rng);
  while (s.a.is_zero() || s.b.is_zero()) s = draw_admissible(F, Family::V, rng);
  MatRep rep = build_module(F, s);
  rep.gens.at(Gen::E) = Mat(&F, rep.dim, rep.dim);
  RelationReport rr = verify_relations(rep);
  CHECK(!rr.all_pass);
  bool commutator_failed = false;
  for (const auto& c : rr.checks)
    if (!c.pass && c.name.find("EF - FE") != std::string::npos) {
      commutator_failed = true;
      CHECK(!c.witness.empty());
    }
  CHECK(commutator_failed);
}

TEST_CASE("the literal connecting-term range fails exactly at the chain end") {
  // as printed, the x-term chain of the projective semi-weight family stops
  // at i = n, and the commutator relation then fails at the basis vector y_n
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    for (long n = 0; n <= N - 2; ++n) {
      FamilySpec s;
      s.family = Family::Pproj;
      s.mu = F.integer(2);
      s.n = n;
      MatRep printed = build_module(F, s, TranscriptionMode::AsPrinted);
      RelationReport rr = verify_relations(printed);
      CHECK(!rr.all_pass);
      for (const auto& c : rr.checks) {
        if (c.pass) continue;
        CHECK(c.name == "EF - FE = (K-L)/(q-q^-1)");
        // witness entry sits in the x-block row, y-block column at index n
        std::ostringstream expect;
        expect << "entry (" << (N - 1) << "," << (N + n) << ")";
        CHECK(c.witness.substr(0, expect.str().size()) == expect.str());
      }
      CHECK(verify_relations(build_module(F, s)).all_pass);
    }
  }
}

TEST_CASE("the literal dual-family junctions break the Cartan grading") {
  // the literal lowering action of the dual weight family lands on w_i
  // instead of w_{i-1}, and the dual projective family connects y to x_i
  // instead of x_{i-1}; both violate the K-commutation relations, while
  // the graded recipes verify
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(167);
  FamilySpec vt = draw_admissible(F, Family::Vtilde, rng);
  CHECK(!verify_relations(build_module(F, vt, TranscriptionMode::AsPrinted)).all_pass);
  CHECK(verify_relations(build_module(F, vt)).all_pass);
  FamilySpec pt = draw_admissible(F, Family::Ptilde, rng);
  CHECK(!verify_relations(build_module(F, pt, TranscriptionMode::AsPrinted)).all_pass);
  CHECK(verify_relations(build_module(F, pt)).all_pass);
}

TEST_CASE("families stay sound at larger desk-scale orders") {
  for (long N : {7, 9}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(179 + N);
    for (Family fam : {Family::V, Family::S, Family::Pproj, Family::Mfam}) {
      FamilySpec s = draw_admissible(F, fam, rng);
      MatRep rep = build_module(F, s);
      INFO(family_name(fam));
      CHECK(verify_relations(rep).all_pass);
      ShadowResult sr = shadow(rep);
      CHECK(sr.ok);
    }
  }
}

TEST_CASE("evaluate is a ring morphism to matrices") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(71);
  FamilySpec s = draw_admissible(F, Family::S, rng);
  s.n = 2;
  MatRep rep = build_module(F, s);
  CHECK(evaluate(rep, nf_one(F, AlgebraId::DqB)) == Mat::identity(&F, rep.dim));
  NFElement ef = nf_monomial(F, AlgebraId::DqB, F.one(), {Gen::E, Gen::F});
  NFElement fe = nf_monomial(F, AlgebraId::DqB, F.one(), {Gen::F, Gen::E});
  Cyc c1 = F.q_minus_qinv().inverse();
  NFElement kml = normal_form(F, AlgebraId::DqB,
                              {{c1, {Gen::K2, Gen::K2}}, {-c1, {Gen::L2, Gen::L2}}});
  CHECK(evaluate(rep, nf_sub(ef, fe)) == evaluate(rep, kml));
  // Casimir acts on the simple family by the expected scalar
  Mat C = evaluate(rep, casimir_element(F));
  Cyc expected = s.mu.pow(2) * (F.q(s.n + 1) + F.q(-(s.n + 1))) /
                 F.q_minus_qinv().pow(2);
  CHECK(C == Mat::identity(&F, rep.dim).scaled(expected));
}

TEST_CASE("shadows of the simple family") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(73 + N);
    Cyc mu = rng.nonzero(F);
    for (int eps : {1, -1})
      for (long n = 0; n <= N - 1; ++n) {
        FamilySpec s;
        s.family = Family::S;
        s.mu = mu;
        s.eps = eps;
        s.n = n;
        ShadowResult sr = shadow(build_module(F, s));
        REQUIRE(sr.ok);
        CHECK(sr.sh.h_p == -F.integer(eps) * (F.q(n + 1) + F.q(-(n + 1))));
        CHECK(sr.sh.h_bdry == F.integer(eps) * mu.pow(-2));
      }
  }
}

TEST_CASE("Chebyshev transform of the peripheral action is the Frobenius scalar") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(157);
  for (Family fam : {Family::V, Family::S, Family::Pproj}) {
    MatRep rep = build_module(F, draw_admissible(F, fam, rng));
    ShadowResult sr = shadow(rep);
    REQUIRE(sr.ok);
    // T_N applied to the matrix of gamma_p is the scalar T_N(h_p)
    Mat g = evaluate(rep, gamma_p_element(F));
    auto TN = chebyshev_T(F.order());
    Mat acc(&F, rep.dim, rep.dim);
    Mat pw = Mat::identity(&F, rep.dim);
    for (size_t i = 0; i < TN.size(); ++i) {
      acc = acc + pw.scaled(F.rational(mpq_class(TN[i])));
      pw = pw * g;
    }
    CHECK(acc == Mat::identity(&F, rep.dim).scaled(eval_int_poly(TN, sr.sh.h_p)));
  }
}

TEST_CASE("dual-family admissibility is the double-root condition") {
  // the admissible ratios are exactly those whose peripheral invariant is a
  // double root of the Chebyshev fiber: lambda/mu in {+-q^j : j != 1};
  // the half-range +-q^m, 1 <= m <= (N-1)/2, parametrizes the same
  // peripheral values through m = j - 1 up to the n <-> N-n folding
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    for (long j = 0; j < N; ++j)
      for (int sign : {1, -1}) {
        Cyc ratio = F.integer(sign) * F.q(j);
        bool admissible = is_admissible_h_p(F, h_p_of_dual(F, ratio, F.one()));
        CHECK(admissible == (j != 1));
        // cross-check against the module: F^N is scalar iff admissible
        FamilySpec s;
        s.family = Family::Ptilde;
        s.mu = F.integer(2);
        s.lambda = ratio * s.mu;
        s.c = F.integer(3);
        MatRep rep = build_module(F, s);
        CHECK(rep.not_semiweight == !admissible);
        CHECK(rep.gen(Gen::F).pow(N).is_scalar() == admissible);
      }
  }
}

TEST_CASE("semi-weight criterion and the peripheral inverse") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(79 + N);
    // roundtrip h -> ab -> h
    for (int t = 0; t < 20; ++t) {
      Cyc lambda = rng.nonzero(F), mu = rng.nonzero(F), h = rng.scalar(F);
      CHECK(h_p_of_cyclic(F, lambda, mu, semiweight_ab(F, lambda, mu, h)) == h);
    }
    // the bracket vanishes at lambda = mu = 1, h = -(q + q^-1)
    CHECK(semiweight_ab(F, F.one(), F.one(), -(F.q(1) + F.q(-1))).is_zero());
    // admissible construction: the shadow exists and the deviation of the
    // peripheral action is nilpotent but nonzero
    FamilySpec s = draw_admissible(F, Family::P, rng);
    MatRep P = build_module(F, s);
    CHECK(!P.not_semiweight);
    ShadowResult sr = shadow(P);
    REQUIRE(sr.ok);
    Mat g = evaluate(P, gamma_p_element(F));
    Mat dev = g - Mat::identity(&F, P.dim).scaled(sr.sh.h_p);
    CHECK(!dev.is_zero());
    CHECK(is_nilpotent(dev));
    CHECK((dev * dev).is_zero());
    // minimal polynomial of the peripheral action is (X - h_p)^2
    CycPoly mp = minimal_polynomial(g);
    CHECK(poly_degree(mp) == 2);
    CHECK(root_multiplicity(mp, sr.sh.h_p) == 2);
    // inadmissible: flagged and rejected by the shadow
    Cyc h = rng.scalar(F);
    while (is_admissible_h_p(F, h)) h = rng.scalar(F);
    FamilySpec bad;
    bad.family = Family::P;
    bad.lambda = rng.nonzero(F);
    bad.mu = rng.nonzero(F);
    bad.b = rng.nonzero(F);
    bad.a = semiweight_ab(F, bad.lambda, bad.mu, h) / bad.b;
    MatRep Pbad = build_module(F, bad);
    CHECK(Pbad.not_semiweight);
    ShadowResult srb = shadow(Pbad);
    CHECK(!srb.ok);
    CHECK(srb.error.find("not_semiweight") != std::string::npos);
  }
}

TEST_CASE("weight and semi-weight predicates") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(83);
  for (Family fam : {Family::V, Family::Vtilde, Family::S}) {
    MatRep rep = build_module(F, draw_admissible(F, fam, rng));
    CHECK(is_weight(rep));
    CHECK(is_semiweight(rep));
  }
  for (Family fam : {Family::P, Family::Ptilde, Family::Pproj}) {
    MatRep rep = build_module(F, draw_admissible(F, fam, rng));
    CHECK(is_semiweight(rep));
    CHECK(!is_weight(rep));  // the peripheral element acts with a nilpotent part
  }
  // Observed pattern on the chain families: the peripheral element (and
  // with it every element of the center) acts as a scalar on every
  // exceptional module, for every projective parameter, so the pointwise
  // weight predicate does not separate them; the classification separates
  // them at the label level instead.
  for (Family fam : {Family::OmegaPlus, Family::OmegaMinus}) {
    MatRep rep = build_module(F, draw_admissible(F, fam, rng));
    CHECK(is_semiweight(rep));
    CHECK(is_weight(rep));
  }
  for (int lam : {0, 1, -1}) {
    FamilySpec s;
    s.family = Family::Mfam;
    s.mu = F.integer(2);
    s.n = 0;
    s.k = 1;
    s.point = ProjPoint::finite(F.integer(lam));
    MatRep rep = build_module(F, s);
    CHECK(is_semiweight(rep));
    CHECK(is_weight(rep));
  }
}

TEST_CASE("shadow agrees with the closed-form peripheral invariant") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(163 + N);
    for (int t = 0; t < 5; ++t) {
      FamilySpec v = draw_admissible(F, Family::V, rng);
      ShadowResult sr = shadow(build_module(F, v));
      REQUIRE(sr.ok);
      CHECK(sr.sh.h_p == h_p_of_cyclic(F, v.lambda, v.mu, v.a * v.b));
      CHECK(sr.sh.h_bdry == (v.lambda * v.mu).inverse());
      FamilySpec p = draw_admissible(F, Family::P, rng);
      ShadowResult sp = shadow(build_module(F, p));
      REQUIRE(sp.ok);
      CHECK(sp.sh.h_p == h_p_of_cyclic(F, p.lambda, p.mu, p.a * p.b));
      FamilySpec vt = draw_admissible(F, Family::Vtilde, rng);
      ShadowResult st = shadow(build_module(F, vt));
      REQUIRE(st.ok);
      CHECK(st.sh.h_p == h_p_of_dual(F, vt.lambda, vt.mu));
    }
  }
}

TEST_CASE("pullback along the twist") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(89 + N);
    Cyc mu = rng.nonzero(F);
    for (int eps : {1, -1}) {
      FamilySpec s;
      s.family = Family::S;
      s.mu = F.one();
      s.eps = 1;
      s.n = 1;
      MatRep uq = build_uq_module(F, s);
      CHECK(verify_relations(uq).all_pass);
      MatRep pulled = uq_to_dqb(uq, mu, eps);
      CHECK(verify_relations(pulled).all_pass);
      // boundary element acts by eps mu^-2
      Mat h = pulled.gen(Gen::K2i) * pulled.gen(Gen::L2i);
      Cyc c;
      REQUIRE(h.is_scalar(&c));
      CHECK(c == F.integer(eps) * mu.pow(-2));
    }
  }
}
