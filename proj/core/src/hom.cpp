#include "skeinrep/hom.hpp"

#include <stdexcept>

namespace skeinrep {

std::vector<Mat> hom_space(const std::vector<Mat>& gens1,
                           const std::vector<Mat>& gens2, long dim1, long dim2) {
  if (gens1.size() != gens2.size())
    throw std::invalid_argument("hom_space: generator count mismatch");
  const CycField* F = nullptr;
  for (const auto& g : gens1)
    if (g.field()) F = g.field();
  for (const auto& g : gens2)
    if (g.field()) F = g.field();
  if (!F) return {};
  long unknowns = dim1 * dim2;  // T is dim2 x dim1, vec index i*dim1 + j
  if (unknowns == 0) return {};
  Mat sys(F, static_cast<long>(gens1.size()) * unknowns, unknowns);
  long row = 0;
  for (size_t g = 0; g < gens1.size(); ++g) {
    const Mat& A = gens1[g];  // dim1 x dim1
    const Mat& B = gens2[g];  // dim2 x dim2
    // (T A - B T)_{i,j} = sum_k T_{i,k} A_{k,j} - sum_k B_{i,k} T_{k,j}
    for (long i = 0; i < dim2; ++i)
      for (long j = 0; j < dim1; ++j) {
        for (long k = 0; k < dim1; ++k)
          if (!A.at(k, j).is_zero()) sys.at(row, i * dim1 + k) += A.at(k, j);
        for (long k = 0; k < dim2; ++k)
          if (!B.at(i, k).is_zero()) sys.at(row, k * dim1 + j) -= B.at(i, k);
        ++row;
      }
  }
  std::vector<Mat> out;
  for (const Vec& v : kernel_basis(sys)) {
    Mat T(F, dim2, dim1);
    for (long i = 0; i < dim2; ++i)
      for (long j = 0; j < dim1; ++j) T.at(i, j) = v[static_cast<size_t>(i * dim1 + j)];
    out.push_back(std::move(T));
  }
  return out;
}

std::vector<Mat> hom_space(const MatRep& r1, const MatRep& r2) {
  if (r1.alg != r2.alg) throw std::invalid_argument("hom_space: algebra mismatch");
  return hom_space(r1.gen_list(), r2.gen_list(), r1.dim, r2.dim);
}

long end_semisimple_dimension(const std::vector<Mat>& endo_basis, long dim) {
  (void)dim;
  if (endo_basis.empty()) return 0;
  const CycField* F = endo_basis[0].field();
  long n = static_cast<long>(endo_basis.size());
  Mat gram(F, n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) gram.at(i, j) = (endo_basis[i] * endo_basis[j]).trace();
  return rank(gram);
}

bool end_scalar_plus_nilpotent(const std::vector<Mat>& endo_basis) {
  for (const Mat& T : endo_basis) {
    const CycField* F = T.field();
    Cyc c = T.trace() / F->integer(T.rows());
    if (!is_nilpotent(T - Mat::identity(F, T.rows()).scaled(c))) return false;
  }
  return true;
}

bool is_indecomposable(const std::vector<Mat>& gens, long dim) {
  if (dim == 0) return false;
  auto endo = hom_space(gens, gens, dim, dim);
  return end_semisimple_dimension(endo, dim) == 1;
}

bool is_indecomposable(const MatRep& r) { return is_indecomposable(r.gen_list(), r.dim); }

long spin_dimension(const std::vector<Mat>& gens, long dim, const Vec& start) {
  const CycField* F = nullptr;
  for (const auto& g : gens)
    if (g.field()) F = g.field();
  // echelonized span with worklist closure under the generator actions
  std::vector<Vec> reduced;
  std::vector<long> pivots;
  std::vector<Vec> queue;
  auto insert = [&](Vec v) {
    for (size_t t = 0; t < reduced.size(); ++t) {
      if (v[pivots[t]].is_zero()) continue;
      Cyc c = v[pivots[t]] / reduced[t][pivots[t]];
      for (long i = 0; i < dim; ++i) v[i] -= c * reduced[t][i];
    }
    long pv = -1;
    for (long i = 0; i < dim; ++i)
      if (!v[i].is_zero()) {
        pv = i;
        break;
      }
    if (pv < 0) return false;
    reduced.push_back(v);
    pivots.push_back(pv);
    queue.push_back(std::move(v));
    return true;
  };
  (void)F;
  insert(start);
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (const Mat& g : gens) insert(mat_apply(g, v));
    if (static_cast<long>(reduced.size()) == dim) break;
  }
  return static_cast<long>(reduced.size());
}

bool is_simple(const MatRep& r, uint64_t seed) {
  const CycField* F = r.field();
  auto gens = r.gen_list();
  std::vector<Vec> probes;
  for (long i = 0; i < r.dim; ++i) {
    Vec e(r.dim, F->zero());
    e[i] = F->one();
    probes.push_back(std::move(e));
  }
  Rng rng(seed);
  for (int t = 0; t < 20; ++t) {
    Vec v(r.dim, F->zero());
    bool nz = false;
    for (long i = 0; i < r.dim; ++i) {
      v[i] = rng.scalar(*F);
      nz = nz || !v[i].is_zero();
    }
    if (!nz) v[0] = F->one();
    probes.push_back(std::move(v));
  }
  for (const Vec& v : probes)
    if (spin_dimension(gens, r.dim, v) < r.dim) return false;
  return true;
}

bool are_isomorphic_gens(const std::vector<Mat>& g1, const std::vector<Mat>& g2,
                         long dim1, long dim2, uint64_t seed) {
  if (dim1 != dim2) return false;
  if (dim1 == 0) return true;
  auto H = hom_space(g1, g2, dim1, dim2);
  if (H.empty()) return false;
  const CycField* F = H[0].field();
  for (const Mat& T : H)
    if (rank(T) == dim1) return true;
  Rng rng(seed);
  for (int t = 0; t < 50; ++t) {
    Mat T(F, dim1, dim1);
    for (const Mat& B : H) T = T + B.scaled(rng.scalar(*F));
    if (rank(T) == dim1) return true;
  }
  if (H.size() <= 3) {
    // deterministic fallback over a small coefficient grid
    std::vector<Cyc> coeffs = {F->zero(), F->one(), F->integer(-1), F->zeta(1),
                               -F->zeta(1)};
    size_t total = 1;
    for (size_t i = 0; i < H.size(); ++i) total *= coeffs.size();
    for (size_t code = 1; code < total; ++code) {
      size_t c = code;
      Mat T(F, dim1, dim1);
      for (const Mat& B : H) {
        T = T + B.scaled(coeffs[c % coeffs.size()]);
        c /= coeffs.size();
      }
      if (rank(T) == dim1) return true;
    }
  }
  return false;
}

bool are_isomorphic(const MatRep& r1, const MatRep& r2, uint64_t seed) {
  if (r1.alg != r2.alg) throw std::invalid_argument("are_isomorphic: algebra mismatch");
  return are_isomorphic_gens(r1.gen_list(), r2.gen_list(), r1.dim, r2.dim, seed);
}

ExactnessReport check_exact_sequence_gens(const Mat& i, const Mat& p,
                                          const std::vector<Mat>& gA,
                                          const std::vector<Mat>& gB,
                                          const std::vector<Mat>& gC) {
  ExactnessReport rep;
  long dimA = i.cols(), dimB = i.rows(), dimC = p.rows();
  if (p.cols() != dimB) throw std::invalid_argument("shape mismatch in exact sequence");
  // equivariance of both maps
  for (size_t g = 0; g < gA.size(); ++g) {
    if (!(i * gA[g] == gB[g] * i)) {
      rep.detail = "injection is not equivariant";
      return rep;
    }
    if (!(p * gB[g] == gC[g] * p)) {
      rep.detail = "projection is not equivariant";
      return rep;
    }
  }
  rep.intertwiners_ok = true;
  bool inj = rank(i) == dimA;
  bool surj = rank(p) == dimC;
  bool comp_zero = (p * i).is_zero();
  bool middle = rank(i) == dimB - rank(p);
  rep.exact = inj && surj && comp_zero && middle;
  if (!rep.exact) {
    rep.detail = "sequence not exact";
    return rep;
  }
  // split iff some s : C -> B with p s = id
  auto H = hom_space(gC, gB, dimC, dimB);
  if (!H.empty()) {
    const CycField* F = i.field();
    // solve sum x_j (p * S_j) = I_C
    long unknowns = static_cast<long>(H.size());
    Mat sys(F, dimC * dimC, unknowns);
    Vec rhs;
    for (long r = 0; r < dimC; ++r)
      for (long c = 0; c < dimC; ++c)
        rhs.push_back(r == c ? F->one() : F->zero());
    for (long j = 0; j < unknowns; ++j) {
      Mat ps = p * H[static_cast<size_t>(j)];
      long row = 0;
      for (long r = 0; r < dimC; ++r)
        for (long c = 0; c < dimC; ++c) sys.at(row++, j) = ps.at(r, c);
    }
    rep.split = solve_linear(sys, rhs).has_value();
  }
  return rep;
}

ExactnessReport check_exact_sequence(const Mat& i, const Mat& p, const MatRep& A,
                                     const MatRep& B, const MatRep& C) {
  return check_exact_sequence_gens(i, p, A.gen_list(), B.gen_list(), C.gen_list());
}

}  // namespace skeinrep
