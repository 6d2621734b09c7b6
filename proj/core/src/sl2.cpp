#include "skeinrep/sl2.hpp"

#include <stdexcept>

namespace skeinrep {

bool is_sl2(const Mat& M) {
  if (M.rows() != 2 || M.cols() != 2) return false;
  return M.det().is_one();
}

bool is_upper_triangular(const Mat& M) { return M.at(1, 0).is_zero(); }
bool is_lower_triangular(const Mat& M) { return M.at(0, 1).is_zero(); }

Mat sl2_w(const CycField& F) {
  Mat w(&F, 2, 2);
  w.at(0, 1) = F.one();
  w.at(1, 0) = F.integer(-1);
  return w;
}

BruhatFactors bruhat_factor(const Mat& M) {
  if (!is_sl2(M)) throw std::invalid_argument("bruhat_factor: not in SL2");
  const CycField* F = M.field();
  if (M.at(0, 0).is_zero())
    throw std::domain_error("bruhat_factor: matrix lies in the small Bruhat cell");
  Mat lo = Mat::identity(F, 2), up(F, 2, 2);
  lo.at(1, 0) = M.at(1, 0) / M.at(0, 0);
  up.at(0, 0) = M.at(0, 0);
  up.at(0, 1) = M.at(0, 1);
  up.at(1, 1) = M.at(0, 0).inverse();
  return {lo, up};
}

GluingLift gluing_lift(const Mat& M) {
  BruhatFactors f = bruhat_factor(M);
  const CycField& F = *M.field();
  Mat w = sl2_w(F);
  GluingLift out;
  out.A = f.m_minus * w;
  out.B = (w * f.m_plus).scaled(F.integer(-1));
  return out;
}

ProutResult prout_solve(const Mat& A, const Mat& B, const Mat& C, const Mat& D) {
  for (const Mat* m : {&A, &B, &C, &D})
    if (!is_sl2(*m)) throw std::invalid_argument("prout_solve: inputs must be in SL2");
  // the four memberships compose pairwise to (Ag)(g^-1 B) = AB and
  // (D g^-1)(g C) = DC, and the two homogeneous systems are degenerate
  // exactly when those products are upper triangular
  if (!is_upper_triangular(A * B) || !is_upper_triangular(D * C))
    throw std::invalid_argument("prout_solve: AB and DC must be upper triangular");
  const CycField* F = A.field();
  // Ag, g^{-1}B upper  <=>  S1 (g_{++}, g_{-+})^t = 0
  Mat S1(F, 2, 2);
  S1.at(0, 0) = A.at(1, 0);
  S1.at(0, 1) = A.at(1, 1);
  S1.at(1, 0) = B.at(1, 0);
  S1.at(1, 1) = -B.at(0, 0);
  // gC, Dg^{-1} upper  <=>  S2 (g_{-+}, g_{--})^t = 0
  Mat S2(F, 2, 2);
  S2.at(0, 0) = C.at(0, 0);
  S2.at(0, 1) = C.at(1, 0);
  S2.at(1, 0) = -D.at(1, 1);
  S2.at(1, 1) = D.at(1, 0);
  auto K1 = kernel_basis(S1);
  auto K2 = kernel_basis(S2);

  auto pick_with_nonzero = [&](const std::vector<Vec>& K, int coord) -> std::optional<Vec> {
    for (const Vec& v : K)
      if (!v[coord].is_zero()) return v;
    // a combination could still have the coordinate nonzero only if some
    // basis vector does, so scanning the basis is enough
    return std::nullopt;
  };
  auto contains = [&](const Mat& S, int coord) {
    // e_coord in ker S  <=>  column `coord` of S vanishes
    return S.at(0, coord).is_zero() && S.at(1, coord).is_zero();
  };

  ProutResult res;
  auto verify = [&](const Mat& g) {
    Mat ginv = g.inverse();
    return is_upper_triangular(A * g) && is_upper_triangular(ginv * B) &&
           is_upper_triangular(D * ginv) && is_upper_triangular(g * C) &&
           g.det().is_one();
  };

  if (auto u = pick_with_nonzero(K1, 1)) {
    if (auto v = pick_with_nonzero(K2, 0)) {
      // scale so the shared coordinate g_{-+} is 1, then fix det with g_{+-}
      Cyc su = (*u)[1].inverse();
      Cyc sv = (*v)[0].inverse();
      Cyc gpp = (*u)[0] * su;
      Cyc gmm = (*v)[1] * sv;
      Mat g(F, 2, 2);
      g.at(0, 0) = gpp;
      g.at(0, 1) = gpp * gmm - F->one();
      g.at(1, 0) = F->one();
      g.at(1, 1) = gmm;
      if (!verify(g)) throw std::logic_error("prout_solve: postcondition failed");
      res.status = ProutResult::Status::Success;
      res.g = g;
      return res;
    }
  }
  if (contains(S1, 0) && contains(S2, 1)) {
    Mat g = Mat::identity(F, 2);
    if (!verify(g)) throw std::logic_error("prout_solve: postcondition failed");
    res.status = ProutResult::Status::Success;
    res.g = g;
    return res;
  }
  // no determinant-one solution: explain which coordinates are forced to
  // vanish by the two homogeneous systems
  std::string why;
  bool k1_mid = pick_with_nonzero(K1, 1).has_value();
  bool k2_mid = pick_with_nonzero(K2, 0).has_value();
  if (!k2_mid) {
    why = "the second system forces g_{-+} = 0";
    if (!contains(S1, 0))
      why += "; the first system then forces g_{++} = 0, so the first column of g "
             "vanishes and det g = 0";
    else
      why += "; the second system also forces g_{--} = 0, so the second row of g "
             "vanishes and det g = 0";
  } else if (!k1_mid) {
    why = "the first system forces g_{-+} = 0";
    if (!contains(S2, 1))
      why += "; the second system then forces g_{--} = 0, so the second row of g "
             "vanishes and det g = 0";
    else
      why += "; the first system also forces g_{++} = 0, so the first column of g "
             "vanishes and det g = 0";
  } else {
    why = "no shared solution of the two systems has determinant one";
  }
  res.status = ProutResult::Status::Degenerate;
  res.certificate = why;
  return res;
}

std::string phi_class_name(PhiClass c) {
  switch (c) {
    case PhiClass::Cyclic: return "cyclic";
    case PhiClass::Semicyclic: return "semicyclic";
    case PhiClass::Diagonal: return "diagonal";
    case PhiClass::Central: return "central";
  }
  return "?";
}

PhiData phi_of_shadow(const Mat& g_plus, const Mat& g_minus) {
  if (!is_sl2(g_plus) || !is_upper_triangular(g_plus))
    throw std::invalid_argument("phi_of_shadow: g_plus must be upper triangular in SL2");
  if (!is_sl2(g_minus) || !is_lower_triangular(g_minus))
    throw std::invalid_argument("phi_of_shadow: g_minus must be lower triangular in SL2");
  const CycField* F = g_plus.field();
  Mat phi = g_minus.inverse() * g_plus;
  PhiData out{phi, PhiClass::Cyclic, phi.trace()};
  bool up = is_upper_triangular(phi), lo = is_lower_triangular(phi);
  if (!up && !lo) {
    out.cls = PhiClass::Cyclic;
    return out;
  }
  if (!(up && lo)) {
    out.cls = PhiClass::Semicyclic;
    return out;
  }
  Mat I = Mat::identity(F, 2);
  if (phi == I || phi == I.scaled(F->integer(-1)))
    out.cls = PhiClass::Central;
  else
    out.cls = PhiClass::Diagonal;
  return out;
}

ShadowConsistency shadow_consistency(const ShadowDqB& sh) {
  const CycField& F = *sh.g_plus.field();
  long N = F.order();
  ShadowConsistency out;
  PhiData phi = phi_of_shadow(sh.g_plus, sh.g_minus);
  Cyc tn = eval_int_poly(chebyshev_T(N), sh.h_p);
  out.trace_ok = (tn == -phi.trace);
  Cyc corner = (sh.g_minus * sh.g_plus).at(0, 0);
  out.boundary_pos = (corner == sh.h_bdry.pow(N));
  out.boundary_neg = (corner == sh.h_bdry.pow(-N));
  if (out.boundary_pos && out.boundary_neg)
    out.orientation = "both";
  else if (out.boundary_pos)
    out.orientation = "h^N";
  else if (out.boundary_neg)
    out.orientation = "h^-N";
  else
    out.orientation = "neither";
  return out;
}

Cyc glue_boundary_invariants(const Cyc& h1, const Cyc& h2) {
  if (h1.is_zero() || h2.is_zero())
    throw std::domain_error("boundary invariants must be nonzero");
  return h1 * h2;
}

}  // namespace skeinrep
