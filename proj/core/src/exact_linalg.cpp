#include "skeinrep/exact_linalg.hpp"

#include <stdexcept>

namespace skeinrep {

Mat Mat::identity(const CycField* field, long n) {
  Mat I(field, n, n);
  for (long i = 0; i < n; ++i) I.at(i, i) = field->one();
  return I;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  Mat out(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  Mat out(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Mat out(field_, rows_, o.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long k = 0; k < cols_; ++k) {
      const Cyc& a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Cyc& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Mat Mat::scaled(const Cyc& c) const {
  Mat out(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Mat Mat::pow(long e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow on non-square matrix");
  if (e < 0) throw std::invalid_argument("negative matrix power");
  Mat acc = identity(field_, rows_);
  Mat base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Cyc Mat::trace() const {
  Cyc t = field_->zero();
  for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool Mat::is_scalar(Cyc* c) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  Cyc d = at(0, 0);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      if (i == j) {
        if (at(i, j) != d) return false;
      } else if (!at(i, j).is_zero()) {
        return false;
      }
    }
  if (c) *c = d;
  return true;
}

Mat Mat::kron(const Mat& o) const {
  Mat out(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (long k = 0; k < o.rows_; ++k)
        for (long l = 0; l < o.cols_; ++l)
          out.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return out;
}

std::vector<Cyc> Mat::col(long j) const {
  std::vector<Cyc> out;
  out.reserve(rows_);
  for (long i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

Mat Mat::from_cols(const CycField* field, long rows,
                   const std::vector<std::vector<Cyc>>& cols) {
  Mat out(field, rows, static_cast<long>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (long i = 0; i < rows; ++i) out.at(i, static_cast<long>(j)) = cols[j][i];
  return out;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Mat I = identity(field_, rows_);
  std::vector<std::vector<Cyc>> cols;
  for (long j = 0; j < rows_; ++j) {
    auto x = solve_linear(*this, I.col(j));
    if (!x) throw std::domain_error("matrix is singular");
    cols.push_back(*x);
  }
  return from_cols(field_, rows_, cols);
}

Cyc Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  if (rows_ == 0) return field_->one();
  // track row swaps next to a Bareiss elimination; determinant is the last
  // pivot of the fraction-free scheme
  Mat U = *this;
  Cyc prev = field_->one();
  int sign = 1;
  long n = rows_;
  for (long k = 0; k < n; ++k) {
    long p = -1;
    for (long i = k; i < n; ++i)
      if (!U.at(i, k).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return field_->zero();
    if (p != k) {
      for (long j = 0; j < n; ++j) std::swap(U.at(p, j), U.at(k, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j)
        U.at(i, j) = (U.at(k, k) * U.at(i, j) - U.at(i, k) * U.at(k, j)) / prev;
      U.at(i, k) = field_->zero();
    }
    prev = U.at(k, k);
  }
  Cyc d = U.at(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

Vec mat_apply(const Mat& M, const Vec& v) {
  if (static_cast<long>(v.size()) != M.cols())
    throw std::invalid_argument("shape mismatch in mat_apply");
  Vec out(M.rows(), M.field()->zero());
  for (long i = 0; i < M.rows(); ++i)
    for (long j = 0; j < M.cols(); ++j)
      if (!M.at(i, j).is_zero() && !v[j].is_zero()) out[i] += M.at(i, j) * v[j];
  return out;
}

Echelon bareiss_echelon(Mat M) {
  Echelon e{std::move(M), {}};
  Mat& U = e.U;
  const CycField* F = U.field();
  Cyc prev = F->one();
  long r = 0;
  for (long c = 0; c < U.cols() && r < U.rows(); ++c) {
    long p = -1;
    for (long i = r; i < U.rows(); ++i)
      if (!U.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (long j = 0; j < U.cols(); ++j) std::swap(U.at(p, j), U.at(r, j));
    for (long i = r + 1; i < U.rows(); ++i) {
      // over a field the exact-division property needs no row rescaling, so
      // rows already zero in this column can be left untouched
      if (U.at(i, c).is_zero()) continue;
      for (long j = c + 1; j < U.cols(); ++j)
        U.at(i, j) = (U.at(r, c) * U.at(i, j) - U.at(i, c) * U.at(r, j)) / prev;
      U.at(i, c) = F->zero();
    }
    prev = U.at(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

long rank(const Mat& M) { return static_cast<long>(bareiss_echelon(M).pivot_cols.size()); }

namespace {

// Back substitution on an echelon form: value of x on the pivot coordinates
// given fixed values on the free coordinates (x must be pre-filled on free
// coordinates, zero elsewhere; rhs may be empty meaning 0).
void back_substitute(const Echelon& e, Vec& x, const Vec* rhs) {
  const Mat& U = e.U;
  long ncols = static_cast<long>(x.size());  // may be < U.cols() (augmented)
  for (long r = static_cast<long>(e.pivot_cols.size()) - 1; r >= 0; --r) {
    long pc = e.pivot_cols[r];
    if (pc >= ncols) continue;
    Cyc acc = rhs ? (*rhs)[r] : U.field()->zero();
    for (long j = pc + 1; j < ncols; ++j)
      if (!U.at(r, j).is_zero() && !x[j].is_zero()) acc -= U.at(r, j) * x[j];
    x[pc] = acc / U.at(r, pc);
  }
}

}  // namespace

std::optional<Vec> solve_linear(const Mat& A, const Vec& b) {
  if (static_cast<long>(b.size()) != A.rows())
    throw std::invalid_argument("dimension mismatch in solve_linear");
  const CycField* F = A.field();
  Mat aug(F, A.rows(), A.cols() + 1);
  for (long i = 0; i < A.rows(); ++i) {
    for (long j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  Echelon e = bareiss_echelon(std::move(aug));
  for (long c : e.pivot_cols)
    if (c == A.cols()) return std::nullopt;  // pivot in the rhs column
  // carve the echelon into U-part and rhs-part
  Vec rhs;
  for (size_t r = 0; r < e.pivot_cols.size(); ++r)
    rhs.push_back(e.U.at(static_cast<long>(r), A.cols()));
  Vec x(A.cols(), F->zero());
  back_substitute(e, x, &rhs);
  // substitution check is left to callers/tests; the echelon logic
  // guarantees consistency here
  return x;
}

std::vector<Vec> kernel_basis(const Mat& M) {
  const CycField* F = M.field();
  Echelon e = bareiss_echelon(M);
  std::vector<bool> is_pivot(M.cols(), false);
  for (long c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> out;
  for (long f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(M.cols(), F->zero());
    x[f] = F->one();
    back_substitute(e, x, nullptr);
    out.push_back(std::move(x));
  }
  return out;
}

CycPoly minimal_polynomial(const Mat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("minimal_polynomial: non-square");
  const CycField* F = M.field();
  long n = M.rows();
  if (n == 0) return {F->one()};
  CycPoly result = {F->one()};  // constant 1 = min poly of the empty lcm
  for (long s = 0; s < n; ++s) {
    // Krylov sequence from e_s with incremental elimination
    std::vector<Vec> reduced;       // echelonized Krylov vectors
    std::vector<long> pivots;       // pivot index of each reduced vector
    std::vector<std::vector<Cyc>> combos;  // coordinates in terms of v, Mv, ...
    Vec v(n, F->zero());
    v[s] = F->one();
    Vec cur = v;
    long step = 0;
    while (true) {
      // reduce cur against current echelon, tracking the combination
      Vec w = cur;
      std::vector<Cyc> combo(step + 1, F->zero());
      combo[step] = F->one();
      for (size_t t = 0; t < reduced.size(); ++t) {
        long p = pivots[t];
        if (w[p].is_zero()) continue;
        Cyc c = w[p] / reduced[t][p];
        for (long i = 0; i < n; ++i) w[i] -= c * reduced[t][i];
        for (size_t i = 0; i < combos[t].size(); ++i) combo[i] -= c * combos[t][i];
      }
      long pv = -1;
      for (long i = 0; i < n; ++i)
        if (!w[i].is_zero()) {
          pv = i;
          break;
        }
      if (pv < 0) {
        // dependency found: combo gives the annihilator of e_s
        CycPoly p(combo.begin(), combo.end());
        result = poly_lcm(result, poly_monic(p));
        break;
      }
      reduced.push_back(w);
      pivots.push_back(pv);
      combos.push_back(combo);
      cur = mat_apply(M, cur);
      ++step;
    }
    if (poly_degree(result) == n) break;  // cannot grow further
  }
  return result;
}

bool is_nilpotent(const Mat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("is_nilpotent: non-square");
  if (M.rows() == 0) return true;
  Mat P = M;
  long e = 1;
  while (e < M.rows()) {
    P = P * P;
    e *= 2;
  }
  return P.is_zero();
}

}  // namespace skeinrep
