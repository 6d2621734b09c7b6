#pragma once

// The classification layer: puncture data and colorings, label
// instantiation, Azumaya predicates, count formulas, Kronecker-quiver
// machinery and the dual-number toy model.

#include "skeinrep/hom.hpp"
#include "skeinrep/modules.hpp"
#include "skeinrep/sl2.hpp"

#include <string>
#include <vector>

namespace skeinrep {

// A label from {S, P} | real roots (k+1,k)/(k,k+1) | imaginary roots
// (k,k) x P^1, in a plain and a barred copy.
struct DeltaLabel {
  enum class Kind { S, P, Real, Imag };
  Kind kind = Kind::S;
  long k = 0;     // Real/Imag index, >= 1
  int dir = +1;   // Real: +1 for (k+1,k), -1 for (k,k+1)
  ProjPoint lambda;  // Imag only
  bool bar = false;

  bool operator==(const DeltaLabel& o) const;
  std::string str() const;
};

enum class PunctureClass { P0, P1, P2 };

struct PunctureSpec {
  PunctureClass cls = PunctureClass::P2;
  int sign = 1;   // the +/- of the centrality / trace condition
  Cyc h_p;        // peripheral invariant at the puncture
  // instantiation data for P2 punctures
  Cyc mu;
  int eps = 1;
  long n = 0;
};

struct ShadowSpec {
  std::vector<PunctureSpec> punctures;
  long count_p2() const;
};

using Coloring = std::vector<DeltaLabel>;

// All truncated labels (unbarred), in a stable order.
std::vector<DeltaLabel> delta_labels_truncated(long k_max,
                                               const std::vector<ProjPoint>& probes);

// Compatible colorings: P0 punctures take S, P1 punctures take S or P
// (unbarred), P2 punctures take any truncated label, barred or not.
std::vector<Coloring> enumerate_colorings(const ShadowSpec& spec, long k_max,
                                          const std::vector<ProjPoint>& probes);

// sigma: instantiate a label at (mu, eps, n); barred labels use
// nbar = N-2-n.  Requires 0 <= n <= (N-3)/2.
MatRep instantiate(const CycField& F, const DeltaLabel& label, const Cyc& mu,
                   int eps, long n);

// Azumaya membership of a shadow: phi(g) not central, or phi(g) = +/-1 with
// h_p = -/+2.
bool azumaya_predicate(const ShadowDqB& sh);

struct CountSummary {
  long m = 0;
  mpz_class weight_count;
  mpz_class irreducible_count;
  mpz_class projective_count;
  bool formulas_match = false;  // against 4^m, 2^m, 2^m
};
CountSummary count_summary(const ShadowSpec& spec, long k_max,
                           const std::vector<ProjPoint>& probes);

// PI degree N^{3g-3+n+|A|} of a marked surface invariant.
mpz_class pi_degree(long N, long genus, long boundary_components, long edges);

// ---- Kronecker quiver ----

struct QuiverRep {
  long da = 0, db = 0;
  Mat X, Y;  // shape db x da
};

bool is_positive_root(long da, long db);

// The standard indecomposable at a positive root; lambda is used for the
// imaginary roots (k,k).
QuiverRep kronecker_build(const CycField& F, long da, long db,
                          const ProjPoint& lambda = ProjPoint::finite(Cyc()));

// Generator matrices of the corresponding path-algebra module on
// C^{da} + C^{db}: the two vertex idempotents and the two arrows.
std::vector<Mat> quiver_module_gens(const CycField& F, const QuiverRep& q);

bool quiver_is_indecomposable(const CycField& F, const QuiverRep& q);
bool quiver_are_isomorphic(const CycField& F, const QuiverRep& a, const QuiverRep& b,
                           uint64_t seed = 2024);

// Chain the quiver data into a small-quantum-group module: the X arrow
// feeds the E junction and the Y arrow the F junction.
MatRep glue_quiver_rep(const CycField& F, long n, const Mat& X, const Mat& Y);

struct QuiverClass {
  long da = 0, db = 0;
  QuiverRep representative;
  long count = 0;  // members found in the enumeration
};
// Enumerate all quiver representations with total dimension <= max_total_dim
// and entries in {0, 1, -1}; return the isomorphism classes of the
// indecomposable ones.
std::vector<QuiverClass> kronecker_bruteforce(const CycField& F, long max_total_dim);

// ---- dual numbers C[X]/(X^2) ----

struct DualNumberCatalog {
  Mat one_module;   // 1x1 action of X
  Mat reg_module;   // 2x2 action of X
  bool sequence_exact = false;
  bool sequence_split = true;   // expected false
  bool brute_force_ok = false;  // sizes <= 3 decompose into the two blocks
};
DualNumberCatalog dual_number_catalog(const CycField& F);

// Tensor assembly across punctures: generator actions of each factor
// extended by identities to the tensor product, concatenated in puncture
// order.  End of the assembled system is the tensor product of the Ends.
std::vector<Mat> tensor_generator_list(const std::vector<MatRep>& factors);
long tensor_dimension(const std::vector<MatRep>& factors);

}  // namespace skeinrep
