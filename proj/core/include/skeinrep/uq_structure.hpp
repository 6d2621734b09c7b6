#pragma once

// Structure of the small quantum group as a module over itself: the PBW
// monomial basis, the left regular representation, and the decomposition of
// the regular module into the projective indecomposable left ideals
// generated by the gamma elements.

#include "skeinrep/algebra.hpp"
#include "skeinrep/hom.hpp"
#include "skeinrep/modules.hpp"

#include <string>
#include <vector>

namespace skeinrep {

// Left multiplication by k^{1/2}, k^{-1/2}, E, F on the N^3 monomial basis.
std::vector<Mat> uq_left_regular(const CycField& F);

// The defining relations hold termwise on every basis monomial, i.e. the
// monomial set is closed and consistent under the rewriting, confirming the
// basis of size N^3.
bool uq_pbw_confirm(const CycField& F);

struct IdealSummand {
  long n = 0;
  long h = 0;
  long dim = 0;
  bool dim_ok = false;
  bool iso_ok = false;  // isomorphic to the projective module P_n (or S_{N-1})
};

struct RegularDecompReport {
  bool ok = false;
  std::vector<IdealSummand> summands;
  bool pairwise_trivial = false;
  bool total_dimension_ok = false;
  std::string detail;
};

// Verify the direct-sum decomposition of the regular module into the left
// ideals generated by gamma_n E^h.  Exact N^3 x N^3 linear algebra; meant
// for small N.
RegularDecompReport uq_regular_decomposition_check(const CycField& F);

}  // namespace skeinrep
