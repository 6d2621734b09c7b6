#pragma once

// Intertwiner spaces, endomorphism analysis, indecomposability, simplicity,
// isomorphism and exact-sequence verification.  The generic entry points
// work on arbitrary generator-matrix lists, so quiver representations and
// dual-number modules share the same machinery as the quantum-group
// modules.

#include "skeinrep/exact_linalg.hpp"
#include "skeinrep/modules.hpp"

#include <string>
#include <vector>

namespace skeinrep {

// Basis of {T : T g1 = g2 T for all generator pairs}.  T maps the first
// module into the second, shape dim2 x dim1.
std::vector<Mat> hom_space(const std::vector<Mat>& gens1,
                           const std::vector<Mat>& gens2, long dim1, long dim2);
std::vector<Mat> hom_space(const MatRep& r1, const MatRep& r2);

// Absolute indecomposability: the endomorphism algebra modulo its radical
// is one-dimensional.  The radical is computed exactly as the radical of
// the trace form (characteristic zero), so no idempotent can hide from the
// test: idempotents lift along the radical and a semisimple algebra
// without nontrivial idempotents of residue dimension one is the base
// field.
bool is_indecomposable(const std::vector<Mat>& gens, long dim);
bool is_indecomposable(const MatRep& r);

// dim(End / rad End); 1 for (absolutely) indecomposable modules.
long end_semisimple_dimension(const std::vector<Mat>& endo_basis, long dim);

// Every endomorphism is a scalar plus a nilpotent (checked basiswise).
bool end_scalar_plus_nilpotent(const std::vector<Mat>& endo_basis);

// Simplicity by submodule spinning from every canonical basis vector plus
// seeded random probes; sound for "false" and complete on the module
// families here, where the weight-space structure pins proper submodules
// to basis-vector orbits.
bool is_simple(const MatRep& r, uint64_t seed = 2024);
long spin_dimension(const std::vector<Mat>& gens, long dim, const Vec& start);

// Equal dimensions plus an invertible intertwiner; randomized search with a
// deterministic fallback over small coefficient patterns.
bool are_isomorphic(const MatRep& r1, const MatRep& r2, uint64_t seed = 2024);
bool are_isomorphic_gens(const std::vector<Mat>& g1, const std::vector<Mat>& g2,
                         long dim1, long dim2, uint64_t seed = 2024);

struct ExactnessReport {
  bool intertwiners_ok = false;
  bool exact = false;
  bool split = false;
  std::string detail;
};
// 0 -> A -i-> B -p-> C -> 0
ExactnessReport check_exact_sequence(const Mat& i, const Mat& p, const MatRep& A,
                                     const MatRep& B, const MatRep& C);
ExactnessReport check_exact_sequence_gens(const Mat& i, const Mat& p,
                                          const std::vector<Mat>& gA,
                                          const std::vector<Mat>& gB,
                                          const std::vector<Mat>& gC);

}  // namespace skeinrep
