#pragma once

// Exact 2x2 toolkit for shadows: Bruhat cells, triangular factorization,
// the small-cell gluing lift, the four-matrix triangularization solver, and
// shadow consistency checks.
//
// Conventions: row/column "+" is index 0, "-" is index 1, so the upper-left
// entry of g is g_{++}.  The cell SL2^0 consists of matrices with g_{++}
// nonzero, SL2^1 of those with g_{++} = 0.

#include "skeinrep/exact_linalg.hpp"
#include "skeinrep/modules.hpp"

#include <string>

namespace skeinrep {

bool is_sl2(const Mat& M);
bool is_upper_triangular(const Mat& M);
bool is_lower_triangular(const Mat& M);

Mat sl2_w(const CycField& F);  // [[0,1],[-1,0]]

// M = M_minus * M_plus with M_minus unit lower triangular and M_plus upper
// triangular of determinant one.  Throws std::domain_error off SL2^0.
struct BruhatFactors {
  Mat m_minus;
  Mat m_plus;
};
BruhatFactors bruhat_factor(const Mat& M);

// A = M_minus w, B = -w M_plus: both in SL2^1 with A B = M.
struct GluingLift {
  Mat A;
  Mat B;
};
GluingLift gluing_lift(const Mat& M);

// Given A B and C D upper triangular, find g with Ag, g^{-1}B, Dg^{-1}, gC
// upper triangular; some instances admit no determinant-one solution, which
// is certified instead of repaired.
struct ProutResult {
  enum class Status { Success, Degenerate };
  Status status = Status::Degenerate;
  Mat g;
  std::string certificate;  // set on Degenerate
};
ProutResult prout_solve(const Mat& A, const Mat& B, const Mat& C, const Mat& D);

enum class PhiClass { Cyclic, Semicyclic, Diagonal, Central };
std::string phi_class_name(PhiClass c);

struct PhiData {
  Mat phi;
  PhiClass cls;
  Cyc trace;
};
PhiData phi_of_shadow(const Mat& g_plus, const Mat& g_minus);

struct ShadowConsistency {
  bool trace_ok = false;      // T_N(h_p) = -tr(phi)
  bool boundary_pos = false;  // (g_- g_+)_{++} = h^N
  bool boundary_neg = false;  // (g_- g_+)_{++} = h^{-N}
  std::string orientation;    // which boundary orientation held
};
ShadowConsistency shadow_consistency(const ShadowDqB& sh);

// Boundary invariants multiply under gluing.  Throws std::domain_error on
// zero input.
Cyc glue_boundary_invariants(const Cyc& h1, const Cyc& h2);

}  // namespace skeinrep
