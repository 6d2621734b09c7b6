#pragma once

// Explicit matrix models for every finite-dimensional module family of the
// double of the quantum Borel at an odd root of unity, plus the
// corresponding small-quantum-group modules.  Construction transcribes the
// defining actions in the canonical bases; verify_relations is the arbiter
// for every transcription.

#include "skeinrep/algebra.hpp"
#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/exact_linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skeinrep {

enum class Family { V, Vtilde, S, P, Ptilde, Pproj, OmegaPlus, OmegaMinus, Mfam };

std::string family_name(Family f);

// A point of the projective line with exact coordinates.
struct ProjPoint {
  bool infinite = false;
  Cyc value;  // meaningful when finite
  static ProjPoint inf() { return {true, Cyc()}; }
  static ProjPoint finite(Cyc v) { return {false, std::move(v)}; }
};

struct FamilySpec {
  Family family = Family::S;
  Cyc lambda, mu, a, b, c;
  int eps = 1;
  long n = 0;
  long k = 1;
  ProjPoint point;  // Mfam only
};

struct MatRep {
  AlgebraId alg = AlgebraId::DqB;
  long dim = 0;
  std::map<Gen, Mat> gens;
  std::optional<FamilySpec> origin;
  bool not_semiweight = false;  // construction-time admissibility warning

  const Mat& gen(Gen g) const { return gens.at(g); }
  const CycField* field() const { return gens.begin()->second.field(); }
  std::vector<Mat> gen_list() const;  // deterministic order
};

// One module-family transcription detail is inconsistent as printed (the
// connecting term of the projective semi-weight family stops one basis
// vector early); AsPrinted keeps the literal text, Verified adds the forced
// final connecting term.  The discrepancy is surfaced by tests.
enum class TranscriptionMode { Verified, AsPrinted };

MatRep build_module(const CycField& F, const FamilySpec& spec,
                    TranscriptionMode mode = TranscriptionMode::Verified);

// The same family as a small-quantum-group module (mu = 1, eps = +1
// specialization with K^{1/2} read as k^{1/2} and L^{1/2} as k^{-1/2}).
MatRep build_uq_module(const CycField& F, const FamilySpec& spec);

struct RelationCheck {
  std::string name;
  bool pass;
  std::string witness;  // offending entry when failing
};
struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass = true;
};
RelationReport verify_relations(const MatRep& rep);

// Substitute generator matrices into a normal-form element.
Mat evaluate(const MatRep& rep, const NFElement& x);
Mat eval_word(const MatRep& rep, const Word& w);

// Central character data of a semi-weight module over the double.
struct ShadowDqB {
  Mat g_plus;   // upper triangular, det 1
  Mat g_minus;  // lower triangular, det 1
  Cyc h_p;      // peripheral invariant
  Cyc h_bdry;   // boundary invariant, nonzero
};
struct ShadowResult {
  bool ok = false;
  ShadowDqB sh;
  std::string error;  // set when !ok, e.g. "not_semiweight: E^N"
};
ShadowResult shadow(const MatRep& rep);

// Invert the peripheral invariant for the cyclic family: the product ab
// that realizes a prescribed h_p at (lambda, mu).
Cyc semiweight_ab(const CycField& F, const Cyc& lambda, const Cyc& mu,
                  const Cyc& h_target);
// h_p as a function of (lambda, mu, ab).
Cyc h_p_of_cyclic(const CycField& F, const Cyc& lambda, const Cyc& mu,
                  const Cyc& ab);
// peripheral invariant of the dual-weight family at (lambda, mu).
Cyc h_p_of_dual(const CycField& F, const Cyc& lambda, const Cyc& mu);
// Membership in {±(q^m + q^{-m}) : 1 <= m <= (N-1)/2}.
bool is_admissible_h_p(const CycField& F, const Cyc& h);
// Membership of a ratio in {±q^m : 1 <= m <= (N-1)/2}.
bool is_pm_q_power(const CycField& F, const Cyc& ratio);

bool is_semiweight(const MatRep& rep);
bool is_weight(const MatRep& rep);

// Pull a small-quantum-group module back to the double along the
// (mu, eps) twist.
MatRep uq_to_dqb(const MatRep& rep, const Cyc& mu, int eps);

// Direct sum, used by decomposability tests.
MatRep direct_sum(const MatRep& r1, const MatRep& r2);

// Seeded admissible parameter draws for a family.
FamilySpec draw_admissible(const CycField& F, Family f, Rng& rng);

}  // namespace skeinrep
