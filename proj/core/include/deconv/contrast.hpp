#pragma once

#include <Eigen/Dense>

#include "deconv/banded.hpp"
#include "deconv/grid.hpp"

namespace deconv {

/// First-nearest-neighbor differences x_delta = L x, stored with the
/// horizontal block (length dH) stacked on top of the vertical block
/// (length dV).  The ordering inside each block is part of the contract:
/// horizontal edges iterate grid rows outer, column gaps inner; vertical
/// edges iterate grid columns outer, row gaps inner.
struct InteractionVector {
  Eigen::VectorXd values;
  std::size_t dh = 0;
  std::size_t dv = 0;

  std::size_t size() const { return dh + dv; }
  Eigen::VectorXd horizontal() const { return values.head(dh); }
  Eigen::VectorXd vertical() const { return values.tail(dv); }
};

/// Selected symmetric-matrix entries that the streamlined updates consume:
/// the diagonal, the first off-diagonal, and the off-diagonal at the block
/// offset m1.
struct SymmetricSelectedEntries {
  Eigen::VectorXd diagonal;      // length n
  Eigen::VectorXd off1;          // length n-1, entries (i+1, i)
  Eigen::VectorXd off_block;     // length n-m1, entries (i+m1, i)
};

/// Symmetric matrix with main diagonal v and first off-diagonals w.
Eigen::MatrixXd tridiag(const Eigen::VectorXd& v, const Eigen::VectorXd& w);

/// Symmetric matrix with main diagonal v and off-diagonal w at offset c >= 1.
/// sparsetridiag(v, w, 1) == tridiag(v, w).
Eigen::MatrixXd sparsetridiag(const Eigen::VectorXd& v, const Eigen::VectorXd& w,
                              std::size_t c);

/// x_delta = L x without forming L.
InteractionVector apply_contrast(const GridShape& shape, const Eigen::VectorXd& v);

/// diagonal(L M L^T) without forming L, from a dense symmetric M.
Eigen::VectorXd contrast_sandwich_diag(const GridShape& shape,
                                       const Eigen::MatrixXd& m);

/// Same, consuming only the diagonal and the offset-1 / offset-m1 entries.
Eigen::VectorXd contrast_sandwich_diag(const GridShape& shape,
                                       const SymmetricSelectedEntries& m);

/// L^T diag(w) L without forming L; the result lives on offsets {1, m1}
/// and is assembled as the off-diagonal matrix R minus diag(rowsums(R)).
BandedSpdMatrix contrast_weighted_gram(const GridShape& shape,
                                       const Eigen::VectorXd& w);

}  // namespace deconv
