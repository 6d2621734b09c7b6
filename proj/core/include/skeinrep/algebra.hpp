#pragma once

// Presented algebras over Q(zeta_N) with a confluent PBW rewriting engine.
//
// Normal-form capable algebras:
//   DqB          generators K^{±1/2}, L^{±1/2}, E, F; ordered monomials
//                F^a L^{l/2} K^{k/2} E^b with a,b >= 0 and l,k in Z.
//   UqSl2Small   generators k^{±1/2}, E, F with E^N = F^N = k^{N/2}-1 = 0;
//                ordered monomials F^a k^{i/2} E^b, 0 <= a,b <= N-1, i mod N.
//   OqSL2        generators a,b,c,d; monomials a^m b^n c^s d^r with m*r = 0.
//
// BqSL2 and HeisenbergData carry relation data only; they are checked
// through generator images (verify_morphism) or matrices (yang_baxter).

#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/exact_linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace skeinrep {

enum class AlgebraId { DqB, OqSL2, BqSL2, UqSl2Small, HeisenbergData };

std::string algebra_name(AlgebraId a);

// Generator letters across all presented algebras.
enum class Gen : uint8_t {
  F, L2, L2i, K2, K2i, E,   // DqB (L2 = L^{1/2}, K2i = K^{-1/2}, ...)
  k2, k2i,                  // UqSl2Small (with E, F shared)
  Oa, Ob, Oc, Od,           // OqSL2 / BqSL2
};

std::string gen_name(Gen g);
std::vector<Gen> algebra_generators(AlgebraId a);

using Word = std::vector<Gen>;
using WordSum = std::vector<std::pair<Cyc, Word>>;
using Monomial = std::vector<int>;

enum class ReduceStrategy { LeftmostInnermost, RightmostInnermost };

// A normal-form element: finitely many ordered monomials with coefficients.
struct NFElement {
  AlgebraId alg;
  const CycField* field = nullptr;
  std::map<Monomial, Cyc> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const NFElement& o) const;
  bool operator!=(const NFElement& o) const { return !(*this == o); }
  std::string str() const;
};

NFElement nf_zero(const CycField& F, AlgebraId alg);
NFElement nf_one(const CycField& F, AlgebraId alg);
NFElement nf_gen(const CycField& F, AlgebraId alg, Gen g);
NFElement nf_monomial(const CycField& F, AlgebraId alg, const Cyc& coeff,
                      const Word& word);

// Rewrite a formal sum of words to normal form.  Throws
// std::invalid_argument for algebras without normal forms.
NFElement normal_form(const CycField& F, AlgebraId alg, const WordSum& sum,
                      ReduceStrategy strategy = ReduceStrategy::LeftmostInnermost);

NFElement nf_add(const NFElement& x, const NFElement& y);
NFElement nf_sub(const NFElement& x, const NFElement& y);
NFElement nf_scale(const NFElement& x, const Cyc& c);
NFElement multiply(const NFElement& x, const NFElement& y);
Word monomial_to_word(AlgebraId alg, const Monomial& m);

// x central iff x*g - g*x normalizes to zero for every generator g.
bool is_central_symbolic(const NFElement& x);

// Defining relations, as formal sums that must vanish.
struct Relation {
  std::string name;
  WordSum sum;
};
std::vector<Relation> algebra_relations(const CycField& F, AlgebraId alg);

// Casimir C = EF + (qL + q^{-1}K)/(q-q^{-1})^2 and the boundary central
// element H = K^{-1/2}L^{-1/2} of DqB; the peripheral element is
// gamma_p = -(q-q^{-1})^2 * C * H.
NFElement casimir_element(const CycField& F);
NFElement h_boundary_element(const CycField& F);
NFElement gamma_p_element(const CycField& F);
bool casimir_identity_check(const CycField& F);

// ---- algebra morphisms checked through generator images ----

struct GeneratorImageMap {
  AlgebraId source;
  AlgebraId target;
  std::map<Gen, NFElement> images;
};

struct MorphismCheck {
  std::string relation;
  bool pass;
  std::string witness;  // offending normal form when failing
};
struct MorphismReport {
  std::vector<MorphismCheck> checks;
  bool all_pass = true;
};
MorphismReport verify_morphism(const GeneratorImageMap& m);

// The braided quantum group embedded into the double, with the generator
// images assembled mechanically from the corner-arc dictionary.
GeneratorImageMap majid_map(const CycField& F);
// Image of omega = -q^{-1} a - q d must equal gamma_p in DqB.
bool omega_image_check(const CycField& F);

// ---- Heisenberg R-matrix ----

Mat heisenberg_r_matrix(const CycField& F);
// Braid relation on C^2 x C^2 x C^2 plus the degree-2 (Hecke) minimal
// polynomial of the R-matrix.
bool yang_baxter_check(const CycField& F);
bool yang_baxter_braid_holds(const Mat& R);

// ---- small quantum group structure elements ----

// phi_n = sum_i q^{-ni} k^{i/2}; a complete family of orthogonal-idempotent
// style weight projectors (up to the factor N).
NFElement build_phi_n(const CycField& F, long n);
// The member of the phi family on which k^{1/2} acts by A^n.
NFElement uq_weight_projector(const CycField& F, long n);

// The element gamma_n in span{F^a phi_m E^b : a <= N-2} uniquely determined
// by F*gamma_n = E^{nbar} F^{N-1} phi_n, for 0 <= n <= N-2; gamma_{N-1} is
// F^{N-1} phi_{N-1}.  Throws std::runtime_error if the linear system is
// inconsistent and reports non-uniqueness through the kernel check.
NFElement solve_gamma_n(const CycField& F, long n);
NFElement gamma_generator(const CycField& F, long n);

// Coordinates of a UqSl2Small element in the monomial basis
// F^a k^{i/2} E^b, index (a*N + i)*N + b.
Vec uq_coordinates(const NFElement& x);
long uq_monomial_index(long N, long a, long i, long b);

}  // namespace skeinrep
