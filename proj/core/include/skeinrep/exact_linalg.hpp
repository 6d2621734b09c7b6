#pragma once

// Dense exact linear algebra over Q(zeta_N): fraction-free elimination,
// solving, kernels, rank, minimal polynomials, nilpotency.  All results are
// exact; tests verify solve/kernel output by substitution.

#include "skeinrep/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace skeinrep {

class Mat {
 public:
  Mat() : rows_(0), cols_(0), field_(nullptr) {}
  Mat(const CycField* field, long rows, long cols)
      : rows_(rows), cols_(cols), field_(field),
        data_(static_cast<size_t>(rows * cols), field->zero()) {}

  static Mat identity(const CycField* field, long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const CycField* field() const { return field_; }

  Cyc& at(long i, long j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const Cyc& at(long i, long j) const {
    return data_[static_cast<size_t>(i * cols_ + j)];
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Cyc& c) const;
  Mat transpose() const;
  Mat pow(long e) const;  // square matrices, e >= 0
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const;
  Cyc trace() const;
  // True iff M = c*I; writes c when requested.
  bool is_scalar(Cyc* c = nullptr) const;

  Mat kron(const Mat& o) const;  // Kronecker product
  std::vector<Cyc> col(long j) const;
  static Mat from_cols(const CycField* field, long rows,
                       const std::vector<std::vector<Cyc>>& cols);

  Mat inverse() const;  // throws std::domain_error if singular
  Cyc det() const;

 private:
  long rows_;
  long cols_;
  const CycField* field_;
  std::vector<Cyc> data_;
};

using Vec = std::vector<Cyc>;

Vec mat_apply(const Mat& M, const Vec& v);

// Fraction-free (Bareiss) echelon form; pivots lists the pivot column of
// each nonzero row in order.
struct Echelon {
  Mat U;
  std::vector<long> pivot_cols;
};
Echelon bareiss_echelon(Mat M);

long rank(const Mat& M);

// Solve A x = b exactly; std::nullopt when inconsistent.  Dimension
// mismatch throws std::invalid_argument.
std::optional<Vec> solve_linear(const Mat& A, const Vec& b);

// Basis of the right null space.
std::vector<Vec> kernel_basis(const Mat& M);

// Monic generator of the annihilator ideal of M (Krylov iteration per basis
// vector, lcm of the per-vector minimal polynomials).
CycPoly minimal_polynomial(const Mat& M);

bool is_nilpotent(const Mat& M);

}  // namespace skeinrep
