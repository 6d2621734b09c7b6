#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinrep/hom.hpp"

#include <sstream>

using namespace skeinrep;

TEST_CASE("endomorphism dimensions of the standard families") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    Rng rng(97 + N);
    FamilySpec s = draw_admissible(F, Family::S, rng);
    MatRep S = build_module(F, s);
    CHECK(hom_space(S, S).size() == 1);
    FamilySpec p = draw_admissible(F, Family::Pproj, rng);
    MatRep P = build_module(F, p);
    auto endP = hom_space(P, P);
    CHECK(endP.size() == 2);
    CHECK(end_scalar_plus_nilpotent(endP));
    // different boundary parameter: no intertwiners
    FamilySpec s2 = s;
    s2.mu = s.mu + F.one();
    if (!s2.mu.is_zero()) {
      MatRep S2 = build_module(F, s2);
      CHECK(hom_space(S, S2).empty());
    }
  }
}

TEST_CASE("intertwiners between opposite projectives in the small quantum group") {
  for (long N : {3, 5}) {
    auto Fp = CycField::make(N);
    const CycField& F = *Fp;
    for (long n = 0; n <= N - 2; ++n) {
      FamilySpec a, b;
      a.family = b.family = Family::Pproj;
      a.mu = b.mu = F.one();
      a.n = n;
      b.n = N - 2 - n;
      CHECK(hom_space(build_uq_module(F, a), build_uq_module(F, b)).size() == 2);
    }
  }
}

TEST_CASE("indecomposability") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(101);
  for (Family fam : {Family::V, Family::Vtilde, Family::S, Family::P, Family::Ptilde,
                     Family::Pproj, Family::OmegaPlus, Family::OmegaMinus, Family::Mfam}) {
    FamilySpec s = draw_admissible(F, fam, rng);
    INFO(family_name(fam));
    CHECK(is_indecomposable(build_module(F, s)));
  }
  // explicit direct sum is decomposable
  FamilySpec s = draw_admissible(F, Family::S, rng);
  MatRep S = build_module(F, s);
  CHECK(!is_indecomposable(direct_sum(S, S)));
  FamilySpec s2 = draw_admissible(F, Family::S, rng);
  CHECK(!is_indecomposable(direct_sum(S, build_module(F, s2))));
  // the rank-one exceptional module with k = 1 is indecomposable
  FamilySpec om;
  om.family = Family::OmegaPlus;
  om.mu = F.integer(2);
  om.n = 0;
  om.k = 1;
  CHECK(is_indecomposable(build_module(F, om)));
}

TEST_CASE("simplicity") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  long N = 3;
  Rng rng(103);
  FamilySpec s = draw_admissible(F, Family::S, rng);
  CHECK(is_simple(build_module(F, s)));
  // the dual-weight module with c = 0 and a resonant ratio is not simple
  FamilySpec vt;
  vt.family = Family::Vtilde;
  vt.mu = F.integer(2);
  vt.lambda = vt.mu;  // lambda/mu = 1 = q^{n-1} at n = 1: the lowering chain breaks
  vt.c = F.zero();
  MatRep Vt = build_module(F, vt);
  CHECK(!is_simple(Vt));
  CHECK(is_indecomposable(Vt));
  // generic cyclic module is simple
  FamilySpec v;
  v.family = Family::V;
  while (true) {
    v.lambda = rng.nonzero(F);
    v.mu = rng.nonzero(F);
    v.a = rng.scalar(F);
    v.b = rng.nonzero(F);
    Cyc prod = F.one();
    for (long i = 0; i < N; ++i)
      prod = prod * (v.a * v.b + (F.q(1 - i) * v.lambda.pow(2) -
                                  F.q(i - 1) * v.mu.pow(2)) /
                                     F.q_minus_qinv() * F.qint(i));
    if (!prod.is_zero()) break;
  }
  MatRep V = build_module(F, v);
  CHECK(is_simple(V));
  CHECK(hom_space(V, V).size() == 1);  // Schur consistency
  // families with a proper submodule are not simple
  FamilySpec p = draw_admissible(F, Family::Pproj, rng);
  CHECK(!is_simple(build_module(F, p)));
}

TEST_CASE("isomorphism testing") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(107);
  FamilySpec s = draw_admissible(F, Family::S, rng);
  MatRep S = build_module(F, s);
  CHECK(are_isomorphic(S, S));
  FamilySpec s2 = s;
  s2.n = (s.n + 1) % 3;
  CHECK(!are_isomorphic(S, build_module(F, s2)));  // dimension mismatch
  // the extension parameter is projective: (z1 : z2) with z2/z1 = lambda
  // reproduces the normalized member, per the printed module actions
  FamilySpec m1;
  m1.family = Family::Mfam;
  m1.mu = F.integer(2);
  m1.n = 0;
  m1.k = 1;
  m1.point = ProjPoint::finite(F.integer(-1));
  MatRep M = build_module(F, m1);
  // a conjugate copy is isomorphic
  Mat T(&F, M.dim, M.dim);
  for (long i = 0; i < M.dim; ++i) {
    T.at(i, i) = F.integer(2);
    if (i + 1 < M.dim) T.at(i, i + 1) = F.zeta(1);
  }
  Mat Tinv = T.inverse();
  MatRep M2 = M;
  for (auto& [g, mat] : M2.gens) mat = T * mat * Tinv;
  CHECK(are_isomorphic(M, M2));
  // different projective parameters are non-isomorphic
  FamilySpec m3 = m1;
  m3.point = ProjPoint::finite(F.one());
  CHECK(!are_isomorphic(M, build_module(F, m3)));
}

TEST_CASE("exact sequences") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  long N = 3;
  Rng rng(109);
  Cyc mu = rng.nonzero(F);
  int eps = -1;
  for (long n = 0; n <= N - 2; ++n) {
    long nbar = N - 2 - n;
    FamilySpec ss;
    ss.family = Family::S;
    ss.mu = mu;
    ss.eps = eps;
    ss.n = nbar;
    MatRep Sbar = build_module(F, ss);
    ss.n = n;
    MatRep Sn = build_module(F, ss);
    FamilySpec vs;
    vs.family = Family::V;
    vs.lambda = F.integer(eps) * mu * F.A(n);
    vs.mu = mu * F.A(-n);
    vs.a = F.zero();
    vs.b = F.zero();
    MatRep V = build_module(F, vs);
    Mat i(&F, N, nbar + 1), p(&F, n + 1, N);
    for (long j = 0; j <= nbar; ++j) i.at(j + n + 1, j) = F.one();
    for (long j = 0; j <= n; ++j) p.at(j, j) = F.one();
    auto rep = check_exact_sequence(i, p, Sbar, V, Sn);
    CHECK(rep.intertwiners_ok);
    CHECK(rep.exact);
    CHECK(!rep.split);
  }
  // a block direct sum with the canonical maps is exact and split
  FamilySpec s = draw_admissible(F, Family::S, rng);
  MatRep S = build_module(F, s);
  MatRep D = direct_sum(S, S);
  Mat inc(&F, D.dim, S.dim), proj(&F, S.dim, D.dim);
  for (long j = 0; j < S.dim; ++j) {
    inc.at(j, j) = F.one();
    proj.at(j, S.dim + j) = F.one();
  }
  auto rep = check_exact_sequence(inc, proj, S, D, S);
  CHECK(rep.intertwiners_ok);
  CHECK(rep.exact);
  CHECK(rep.split);
  // a non-equivariant map is rejected
  Mat bad = inc;
  bad.at(0, 0) = bad.at(0, 0) + F.one();
  if (S.dim > 1) {
    auto rep2 = check_exact_sequence(bad, proj, S, D, S);
    CHECK(!rep2.intertwiners_ok);
  }
}

TEST_CASE("isomorphism never identifies modules with different shadows") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(113);
  std::vector<MatRep> mods;
  for (Family fam : {Family::S, Family::Pproj, Family::V})
    for (int t = 0; t < 2; ++t)
      mods.push_back(build_module(F, draw_admissible(F, fam, rng)));
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = i + 1; j < mods.size(); ++j) {
      if (mods[i].dim != mods[j].dim) continue;
      ShadowResult a = shadow(mods[i]), b = shadow(mods[j]);
      if (!a.ok || !b.ok) continue;
      bool same_shadow = a.sh.g_plus == b.sh.g_plus && a.sh.g_minus == b.sh.g_minus &&
                         a.sh.h_p == b.sh.h_p && a.sh.h_bdry == b.sh.h_bdry;
      if (!same_shadow) CHECK(!are_isomorphic(mods[i], mods[j]));
    }
}
