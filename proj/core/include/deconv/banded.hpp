#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deconv/errors.hpp"

namespace deconv {

/// Symmetric matrix with an l-block-banded sparsity pattern whose sub-blocks
/// are l-banded ("Chebyshev" pattern on the (block, within-block) index pair).
///
/// The dimension n is partitioned into n/block consecutive blocks of size
/// `block` (block = 1 for 1-D problems, where `band_blocks` is the plain
/// scalar half-bandwidth).  Entry (i, j) is structurally zero unless
///   |i/block - j/block| <= l  and  |i%block - j%block| <= l.
///
/// Storage is row-major band segments over the lower triangle: row i holds
/// columns [max(0, i-w), i] contiguously, where the scalar half-bandwidth is
/// w = l*block + min(l, block-1).  Positions inside the scalar band but
/// outside the Chebyshev pattern are stored as explicit zeros.
///
/// Positive definiteness is not an invariant of the type; it is a
/// precondition of cholesky_factor.
class BandedSpdMatrix {
 public:
  BandedSpdMatrix() = default;

  /// Zero matrix of dimension n with the given block size and block bandwidth.
  BandedSpdMatrix(std::size_t n, std::size_t block, std::size_t band_blocks);

  static BandedSpdMatrix identity(std::size_t n);
  /// Pattern with no structural zeros (band covers the whole matrix).
  static BandedSpdMatrix full(std::size_t n, std::size_t block = 1);
  /// Copy a dense symmetric matrix; throws StructureError if any entry
  /// outside the declared pattern is nonzero, or DimensionError if the
  /// matrix is not symmetric.
  static BandedSpdMatrix from_dense(const Eigen::MatrixXd& dense,
                                    std::size_t block, std::size_t band_blocks);

  std::size_t size() const { return n_; }
  std::size_t block() const { return block_; }
  std::size_t band_blocks() const { return band_blocks_; }
  /// Scalar half-bandwidth of the stored band.
  std::size_t bandwidth() const { return w_; }
  bool is_full_band() const { return w_ + 1 >= n_; }

  /// True if (i, j) lies inside the structural (Chebyshev) pattern.
  bool in_pattern(std::size_t i, std::size_t j) const;

  /// Symmetric read access; returns 0 outside the stored band.
  double at(std::size_t i, std::size_t j) const;
  /// Symmetric write access; throws StructureError outside the pattern
  /// unless the value is exactly zero and the position is inside the band.
  void set(std::size_t i, std::size_t j, double v);
  void add(std::size_t i, std::size_t j, double v);

  Eigen::MatrixXd to_dense() const;
  Eigen::VectorXd diagonal() const;

  /// y = M x.
  Eigen::VectorXd matvec(const Eigen::VectorXd& x) const;

  /// s1 * A + s2 * B; block sizes must agree, pattern is the wider of the two.
  static BandedSpdMatrix weighted_sum(double s1, const BandedSpdMatrix& a,
                                      double s2, const BandedSpdMatrix& b);

  /// Debug dump as dense CSV triplets with header "i,j,v" (all stored
  /// in-band positions of both triangles).
  void write_triplets_csv(const std::string& path) const;

  // Band-internal raw access used by the factorization routines.
  double band_at(std::size_t i, std::size_t j) const;  // requires j <= i, in band
  void band_set(std::size_t i, std::size_t j, double v);
  std::size_t row_start(std::size_t i) const { return i > w_ ? i - w_ : 0; }

 private:
  void init_layout();
  std::size_t index(std::size_t i, std::size_t j) const {
    return row_offset_[i] + (j - row_start(i));
  }

  std::size_t n_ = 0;
  std::size_t block_ = 1;
  std::size_t band_blocks_ = 0;
  std::size_t w_ = 0;
  std::vector<std::size_t> row_offset_;
  std::vector<double> entries_;
};

/// Lower-triangular banded Cholesky factor F with F F^T = M.
class BandedCholesky {
 public:
  std::size_t size() const { return n_; }
  std::size_t bandwidth() const { return w_; }

  double at(std::size_t i, std::size_t j) const;  // lower triangle, 0 outside

  /// Solve M x = b through the factor.
  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
  /// Solve M X = B column by column.
  Eigen::MatrixXd solve(const Eigen::MatrixXd& b) const;

  Eigen::MatrixXd to_dense() const;

  friend BandedCholesky cholesky_factor(const BandedSpdMatrix& m);
  friend struct SelectedInverseWorkspace;

 private:
  std::size_t n_ = 0;
  std::size_t w_ = 0;
  std::vector<std::size_t> row_offset_;
  std::vector<double> entries_;

  std::size_t row_start(std::size_t i) const { return i > w_ ? i - w_ : 0; }
  std::size_t index(std::size_t i, std::size_t j) const {
    return row_offset_[i] + (j - row_start(i));
  }
};

/// Which pieces of the inverse the caller wants.
struct SelectedInversePattern {
  bool want_diagonal = true;
  /// Positive offsets c: return entries (i+c, i) of the inverse.
  std::vector<std::size_t> off_diagonal_offsets;
  /// Optional Gram matrix G for the trace term tr(G M^{-1}).
  const BandedSpdMatrix* gram = nullptr;
};

struct SelectedInverseResult {
  Eigen::VectorXd diagonal;
  std::map<std::size_t, Eigen::VectorXd> off_diagonals;
  std::optional<double> gram_trace;
};

/// A^T A for an l-block-banded A with l-banded sub-blocks.  The result is
/// declared 2l-block-banded with 2l-banded sub-blocks; it equals the dense
/// Gram on that pattern and the dense Gram vanishes outside it.
/// Requires l == 0 (diagonal-blocks-only, returns an l = 0 pattern) or
/// 0 < l < (n-1)/2.
BandedSpdMatrix gram_product(const BandedSpdMatrix& a);

/// Banded Cholesky factorization.  Throws NotPositiveDefiniteError when a
/// pivot falls below 1e-12 times the largest diagonal entry.
BandedCholesky cholesky_factor(const BandedSpdMatrix& m);

/// Selected entries of M^{-1} from its factor, via the band-closed
/// Takahashi recurrence (exact for every entry inside the factor band;
/// entries beyond the band are recovered with targeted solves).
SelectedInverseResult selected_inverse(const BandedCholesky& factor,
                                       const SelectedInversePattern& pattern);

/// Dense-inversion reference path for moderate sizes (n <= 512 contract);
/// used to cross-check the factor-based path.
SelectedInverseResult selected_inverse_dense(const BandedSpdMatrix& m,
                                             const SelectedInversePattern& pattern);

}  // namespace deconv
