#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinrep/classify.hpp"

using namespace skeinrep;

namespace {
std::vector<ProjPoint> probes3(const CycField& F) {
  return {ProjPoint::finite(F.zero()), ProjPoint::finite(F.one()), ProjPoint::inf()};
}
}  // namespace

TEST_CASE("coloring enumeration") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  ShadowSpec empty;
  CHECK(enumerate_colorings(empty, 1, probes3(F)).size() == 1);
  ShadowSpec one_p1;
  PunctureSpec p;
  p.cls = PunctureClass::P1;
  p.mu = F.one();
  p.h_p = -(F.q(1) + F.q(-1));
  one_p1.punctures.push_back(p);
  auto cols = enumerate_colorings(one_p1, 1, probes3(F));
  REQUIRE(cols.size() == 2);
  CHECK(cols[0][0].kind == DeltaLabel::Kind::S);
  CHECK(cols[1][0].kind == DeltaLabel::Kind::P);
  // one P2 puncture, k <= 1, three projective probes: 2 (2 + 2 + 3) = 14
  ShadowSpec one_p2;
  p.cls = PunctureClass::P2;
  p.n = 0;
  one_p2.punctures.push_back(p);
  CHECK(enumerate_colorings(one_p2, 1, probes3(F)).size() == 14);
}

TEST_CASE("instantiation of labels") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  DeltaLabel s;
  s.kind = DeltaLabel::Kind::S;
  MatRep S = instantiate(F, s, F.one(), 1, 0);
  CHECK(S.dim == 1);
  DeltaLabel sbar = s;
  sbar.bar = true;
  MatRep Sbar = instantiate(F, sbar, F.one(), 1, 0);
  CHECK(Sbar.dim == 2);  // nbar = N - 2 - n = 1
  DeltaLabel imag;
  imag.kind = DeltaLabel::Kind::Imag;
  imag.k = 1;
  imag.lambda = ProjPoint::finite(F.one());
  MatRep M = instantiate(F, imag, F.integer(2), 1, 0);
  CHECK(is_weight(M));
  CHECK_THROWS_AS(instantiate(F, s, F.one(), 1, 2), std::invalid_argument);
}

TEST_CASE("Azumaya predicate") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  ShadowDqB sh;
  Mat diag(&F, 2, 2);
  diag.at(0, 0) = F.integer(2);
  diag.at(1, 1) = F.rational(mpq_class(1, 2));
  sh.g_plus = diag;
  sh.g_minus = Mat::identity(&F, 2);
  sh.h_p = F.zero();
  sh.h_bdry = F.one();
  CHECK(azumaya_predicate(sh));  // phi not central
  sh.g_plus = Mat::identity(&F, 2);
  sh.h_p = F.integer(-2);
  CHECK(azumaya_predicate(sh));  // central with matching peripheral value
  sh.h_p = -(F.q(1) + F.q(-1));
  CHECK(!azumaya_predicate(sh));
}

TEST_CASE("count formulas") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  for (long m = 0; m <= 2; ++m) {
    ShadowSpec spec;
    for (long i = 0; i < m; ++i) {
      PunctureSpec p;
      p.cls = PunctureClass::P2;
      p.mu = F.one();
      p.h_p = -(F.q(1) + F.q(-1));
      spec.punctures.push_back(p);
    }
    CountSummary cs = count_summary(spec, 2, probes3(F));
    CHECK(cs.m == m);
    CHECK(cs.formulas_match);
    mpz_class four = 1, two = 1;
    for (long i = 0; i < m; ++i) {
      four *= 4;
      two *= 2;
    }
    CHECK(cs.weight_count == four);
    CHECK(cs.irreducible_count == two);
    CHECK(cs.projective_count == two);
  }
}

TEST_CASE("PI degrees") {
  CHECK(pi_degree(3, 0, 2, 2) == 3);   // punctured bigon
  CHECK(pi_degree(5, 0, 2, 2) == 5);
  CHECK(pi_degree(3, 1, 1, 1) == 9);   // one-holed torus with one edge
  CHECK(pi_degree(3, 0, 1, 2) == 1);
}

TEST_CASE("quiver construction at the printed roots") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  // (1,0): empty maps into the zero space
  QuiverRep q10 = kronecker_build(F, 1, 0);
  CHECK(q10.X.rows() == 0);
  CHECK(q10.X.cols() == 1);
  // (2,1): X = [1 0], Y = [0 1]
  QuiverRep q21 = kronecker_build(F, 2, 1);
  CHECK(q21.X.rows() == 1);
  CHECK(q21.X.cols() == 2);
  CHECK(q21.X.at(0, 0).is_one());
  CHECK(q21.X.at(0, 1).is_zero());
  CHECK(q21.Y.at(0, 0).is_zero());
  CHECK(q21.Y.at(0, 1).is_one());
  // (1,1) finite: X = [1], Y = [lambda]
  Cyc lam = F.zeta(1);
  QuiverRep q11 = kronecker_build(F, 1, 1, ProjPoint::finite(lam));
  CHECK(q11.X.at(0, 0).is_one());
  CHECK(q11.Y.at(0, 0) == lam);
  CHECK_THROWS_AS(kronecker_build(F, 2, 0), std::invalid_argument);
  CHECK(is_positive_root(2, 1));
  CHECK(!is_positive_root(2, 0));
}

TEST_CASE("gluing quiver data into small-quantum-group modules") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  for (long n = 0; n <= 1; ++n) {
    for (long k = 1; k <= 2; ++k) {
      QuiverRep plus = kronecker_build(F, k + 1, k);
      MatRep g1 = glue_quiver_rep(F, n, plus.X, plus.Y);
      CHECK(verify_relations(g1).all_pass);
      FamilySpec s;
      s.mu = F.one();
      s.n = n;
      s.k = k;
      s.family = Family::OmegaPlus;
      CHECK(are_isomorphic(g1, build_uq_module(F, s)));
      QuiverRep minus = kronecker_build(F, k, k + 1);
      MatRep g2 = glue_quiver_rep(F, n, minus.X, minus.Y);
      s.family = Family::OmegaMinus;
      CHECK(are_isomorphic(g2, build_uq_module(F, s)));
    }
    QuiverRep imag = kronecker_build(F, 1, 1, ProjPoint::finite(F.integer(-1)));
    MatRep g3 = glue_quiver_rep(F, n, imag.X, imag.Y);
    FamilySpec s;
    s.mu = F.one();
    s.n = n;
    s.k = 1;
    s.family = Family::Mfam;
    s.point = ProjPoint::finite(F.integer(-1));
    CHECK(are_isomorphic(g3, build_uq_module(F, s)));
  }
}

TEST_CASE("twist pullback identifies the small-quantum-group families") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(173);
  Cyc mu = rng.nonzero(F);
  for (int eps : {1, -1})
    for (long n = 0; n <= 1; ++n) {
      FamilySpec base;
      base.mu = F.one();
      base.n = n;
      base.family = Family::S;
      MatRep Sn = build_uq_module(F, base);
      FamilySpec tw = base;
      tw.mu = mu;
      tw.eps = eps;
      CHECK(are_isomorphic(uq_to_dqb(Sn, mu, eps), build_module(F, tw)));
      base.family = tw.family = Family::Pproj;
      MatRep Pn = build_uq_module(F, base);
      CHECK(are_isomorphic(uq_to_dqb(Pn, mu, eps), build_module(F, tw)));
      CHECK(is_indecomposable(uq_to_dqb(Pn, mu, eps)));
    }
}

TEST_CASE("trivial roots glue to the simple modules") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  for (long n = 0; n <= 1; ++n) {
    QuiverRep r10 = kronecker_build(F, 1, 0);
    MatRep g = glue_quiver_rep(F, n, r10.X, r10.Y);
    FamilySpec s;
    s.mu = F.one();
    s.family = Family::S;
    s.n = n;
    CHECK(g.dim == n + 1);
    CHECK(are_isomorphic(g, build_uq_module(F, s)));
    QuiverRep r01 = kronecker_build(F, 0, 1);
    MatRep gbar = glue_quiver_rep(F, n, r01.X, r01.Y);
    s.n = 3 - 2 - n;
    CHECK(gbar.dim == s.n + 1);
    CHECK(are_isomorphic(gbar, build_uq_module(F, s)));
  }
}

TEST_CASE("brute-forced quiver classes stay on the root lattice") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  auto classes = kronecker_bruteforce(F, 2);
  // total dimension <= 2: exactly the roots (1,0), (0,1), (1,1)
  std::set<std::pair<long, long>> dims;
  for (const auto& c : classes) dims.insert({c.da, c.db});
  CHECK(dims.count({1, 0}) == 1);
  CHECK(dims.count({0, 1}) == 1);
  CHECK(dims.count({1, 1}) == 1);
  CHECK(dims.count({2, 0}) == 0);
  CHECK(dims.count({0, 2}) == 0);
  for (const auto& c : classes) CHECK((c.da - c.db) * (c.da - c.db) <= 1);
  // distinct imaginary parameters give non-isomorphic (2,2) modules
  std::vector<QuiverRep> reps;
  for (const ProjPoint& p : probes3(F)) reps.push_back(kronecker_build(F, 2, 2, p));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK(!quiver_are_isomorphic(F, reps[i], reps[j]));
}

TEST_CASE("dual numbers") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  DualNumberCatalog cat = dual_number_catalog(F);
  CHECK(cat.one_module.is_zero());
  CHECK(cat.reg_module.at(0, 1).is_one());
  CHECK(cat.reg_module.at(1, 1).is_zero());
  CHECK(cat.sequence_exact);
  CHECK(!cat.sequence_split);
  CHECK(cat.brute_force_ok);
  CHECK(hom_space({cat.one_module}, {cat.reg_module}, 1, 2).size() == 1);
}

TEST_CASE("tensor assembly across punctures") {
  auto Fp = CycField::make(3);
  const CycField& F = *Fp;
  Rng rng(151);
  FamilySpec a = draw_admissible(F, Family::S, rng);
  FamilySpec b = draw_admissible(F, Family::Pproj, rng);
  MatRep A = build_module(F, a), B = build_module(F, b);
  std::vector<MatRep> factors = {A, B};
  auto gens = tensor_generator_list(factors);
  long dim = tensor_dimension(factors);
  CHECK(dim == A.dim * B.dim);
  auto endo = hom_space(gens, gens, dim, dim);
  CHECK(static_cast<long>(endo.size()) ==
        static_cast<long>(hom_space(A, A).size() * hom_space(B, B).size()));
  // the assembled system stays indecomposable
  CHECK(is_indecomposable(gens, dim));
  // and decomposes when a factor does
  std::vector<MatRep> bad = {direct_sum(A, A), B};
  CHECK(!is_indecomposable(tensor_generator_list(bad), tensor_dimension(bad)));
}
