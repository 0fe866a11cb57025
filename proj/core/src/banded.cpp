#include "deconv/banded.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace deconv {

namespace {

std::size_t chebyshev_bandwidth(std::size_t n, std::size_t block,
                                std::size_t band_blocks) {
  if (block == 0) throw DimensionError("BandedSpdMatrix: block must be >= 1");
  const std::size_t inner = std::min(band_blocks, block - 1);
  const std::size_t w = band_blocks * block + inner;
  return std::min(w, n > 0 ? n - 1 : 0);
}

}  // namespace

BandedSpdMatrix::BandedSpdMatrix(std::size_t n, std::size_t block,
                                 std::size_t band_blocks)
    : n_(n), block_(block), band_blocks_(band_blocks) {
  if (n_ == 0) throw DimensionError("BandedSpdMatrix: n must be >= 1");
  if (block_ == 0 || block_ > n_) {
    throw DimensionError("BandedSpdMatrix: block must be in [1, n]");
  }
  w_ = chebyshev_bandwidth(n_, block_, band_blocks_);
  init_layout();
}

void BandedSpdMatrix::init_layout() {
  row_offset_.assign(n_, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    row_offset_[i] = total;
    total += i - row_start(i) + 1;
  }
  entries_.assign(total, 0.0);
}

BandedSpdMatrix BandedSpdMatrix::identity(std::size_t n) {
  BandedSpdMatrix m(n, 1, 0);
  for (std::size_t i = 0; i < n; ++i) m.band_set(i, i, 1.0);
  return m;
}

BandedSpdMatrix BandedSpdMatrix::full(std::size_t n, std::size_t block) {
  const std::size_t blocks = (n + block - 1) / block;
  const std::size_t l = std::max(blocks > 0 ? blocks - 1 : 0,
                                 block > 0 ? block - 1 : 0);
  return BandedSpdMatrix(n, block, l);
}

BandedSpdMatrix BandedSpdMatrix::from_dense(const Eigen::MatrixXd& dense,
                                            std::size_t block,
                                            std::size_t band_blocks) {
  if (dense.rows() != dense.cols()) {
    throw DimensionError("from_dense: matrix must be square");
  }
  const std::size_t n = static_cast<std::size_t>(dense.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (dense(i, j) != dense(j, i)) {
        throw DimensionError("from_dense: matrix must be symmetric");
      }
    }
  }
  BandedSpdMatrix m(n, block, band_blocks);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = dense(i, j);
      if (v == 0.0) continue;
      if (!m.in_pattern(i, j)) {
        throw StructureError("from_dense: nonzero entry outside declared band");
      }
      m.band_set(i, j, v);
    }
  }
  return m;
}

bool BandedSpdMatrix::in_pattern(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return false;
  const std::size_t bi = i / block_, bj = j / block_;
  const std::size_t ri = i % block_, rj = j % block_;
  const std::size_t bd = bi > bj ? bi - bj : bj - bi;
  const std::size_t rd = ri > rj ? ri - rj : rj - ri;
  return bd <= band_blocks_ && rd <= std::min(band_blocks_, block_ - 1);
}

double BandedSpdMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("BandedSpdMatrix::at: out of range");
  if (j > i) std::swap(i, j);
  if (i - j > w_) return 0.0;
  return entries_[index(i, j)];
}

void BandedSpdMatrix::set(std::size_t i, std::size_t j, double v) {
  if (i >= n_ || j >= n_) throw DimensionError("BandedSpdMatrix::set: out of range");
  if (j > i) std::swap(i, j);
  if (!in_pattern(i, j)) {
    if (v == 0.0 && i - j <= w_) {
      entries_[index(i, j)] = 0.0;
      return;
    }
    throw StructureError("BandedSpdMatrix::set: position outside band pattern");
  }
  entries_[index(i, j)] = v;
}

void BandedSpdMatrix::add(std::size_t i, std::size_t j, double v) {
  if (j > i) std::swap(i, j);
  set(i, j, at(i, j) + v);
}

double BandedSpdMatrix::band_at(std::size_t i, std::size_t j) const {
  return entries_[index(i, j)];
}

void BandedSpdMatrix::band_set(std::size_t i, std::size_t j, double v) {
  entries_[index(i, j)] = v;
}

Eigen::MatrixXd BandedSpdMatrix::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = row_start(i); j <= i; ++j) {
      const double v = band_at(i, j);
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return d;
}

Eigen::VectorXd BandedSpdMatrix::diagonal() const {
  Eigen::VectorXd d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = band_at(i, i);
  return d;
}

Eigen::VectorXd BandedSpdMatrix::matvec(const Eigen::VectorXd& x) const {
  if (static_cast<std::size_t>(x.size()) != n_) {
    throw DimensionError("BandedSpdMatrix::matvec: length mismatch");
  }
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = row_start(i);
    double acc = 0.0;
    for (std::size_t j = j0; j <= i; ++j) {
      const double v = band_at(i, j);
      acc += v * x[j];
      if (j != i) y[j] += v * x[i];
    }
    y[i] += acc;
  }
  return y;
}

BandedSpdMatrix BandedSpdMatrix::weighted_sum(double s1, const BandedSpdMatrix& a,
                                              double s2, const BandedSpdMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("weighted_sum: size mismatch");
  if (a.block() != b.block()) {
    throw DimensionError("weighted_sum: block size mismatch");
  }
  const BandedSpdMatrix& wide = a.band_blocks() >= b.band_blocks() ? a : b;
  const BandedSpdMatrix& narrow = a.band_blocks() >= b.band_blocks() ? b : a;
  const double sw = (&wide == &a) ? s1 : s2;
  const double sn = (&wide == &a) ? s2 : s1;
  BandedSpdMatrix out(a.size(), a.block(), wide.band_blocks());
  for (std::size_t i = 0; i < out.n_; ++i) {
    for (std::size_t j = out.row_start(i); j <= i; ++j) {
      const double v = sw * wide.at(i, j) + sn * narrow.at(i, j);
      if (v != 0.0 || out.in_pattern(i, j)) out.band_set(i, j, v);
    }
  }
  return out;
}

void BandedSpdMatrix::write_triplets_csv(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "i,j,v\n";
  char buf[64];
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = row_start(i); j <= i; ++j) {
      const double v = band_at(i, j);
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << i << ',' << j << ',' << buf << '\n';
      if (i != j) out << j << ',' << i << ',' << buf << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

BandedSpdMatrix gram_product(const BandedSpdMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t l = a.band_blocks();
  if (l > 0 && !(2 * l < n - 1)) {
    throw StructureError("gram_product: requires 0 < l < (n-1)/2");
  }
  const std::size_t lout = l == 0 ? 0 : 2 * l;
  BandedSpdMatrix c(n, a.block(), lout);
  const std::size_t wa = a.bandwidth();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = c.row_start(i); j <= i; ++j) {
      if (!c.in_pattern(i, j)) continue;
      // (A^T A)_{ij} = sum_k A_{ki} A_{kj}; k limited to both columns' bands.
      const std::size_t klo = std::max(i > wa ? i - wa : 0,
                                       j > wa ? j - wa : 0);
      const std::size_t khi = std::min(n - 1, std::min(i + wa, j + wa));
      double acc = 0.0;
      for (std::size_t k = klo; k <= khi; ++k) {
        acc += a.at(k, i) * a.at(k, j);
      }
      c.band_set(i, j, acc);
    }
  }
  return c;
}

BandedCholesky cholesky_factor(const BandedSpdMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t w = m.bandwidth();
  BandedCholesky f;
  f.n_ = n;
  f.w_ = w;
  f.row_offset_.assign(n, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    f.row_offset_[i] = total;
    total += i - f.row_start(i) + 1;
  }
  f.entries_.assign(total, 0.0);

  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    max_diag = std::max(max_diag, std::fabs(m.at(i, i)));
  }
  const double tol = 1e-12 * max_diag;

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = f.row_start(i);
    for (std::size_t j = j0; j <= i; ++j) {
      double sum = m.at(i, j);
      const std::size_t k0 = std::max(j0, f.row_start(j));
      for (std::size_t k = k0; k < j; ++k) {
        sum -= f.entries_[f.index(i, k)] * f.entries_[f.index(j, k)];
      }
      if (j < i) {
        f.entries_[f.index(i, j)] = sum / f.entries_[f.index(j, j)];
      } else {
        if (!(sum > tol)) throw NotPositiveDefiniteError(i, sum);
        f.entries_[f.index(i, i)] = std::sqrt(sum);
      }
    }
  }
  return f;
}

double BandedCholesky::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("BandedCholesky::at: out of range");
  if (j > i || i - j > w_) return 0.0;
  return entries_[index(i, j)];
}

Eigen::VectorXd BandedCholesky::solve(const Eigen::VectorXd& b) const {
  if (static_cast<std::size_t>(b.size()) != n_) {
    throw DimensionError("BandedCholesky::solve: length mismatch");
  }
  Eigen::VectorXd y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = b[i];
    for (std::size_t j = row_start(i); j < i; ++j) {
      acc -= entries_[index(i, j)] * y[j];
    }
    y[i] = acc / entries_[index(i, i)];
  }
  Eigen::VectorXd x(n_);
  for (std::size_t ii = n_; ii-- > 0;) {
    double acc = y[ii];
    const std::size_t jmax = std::min(n_ - 1, ii + w_);
    for (std::size_t j = ii + 1; j <= jmax; ++j) {
      acc -= entries_[index(j, ii)] * x[j];
    }
    x[ii] = acc / entries_[index(ii, ii)];
  }
  return x;
}

Eigen::MatrixXd BandedCholesky::solve(const Eigen::MatrixXd& b) const {
  if (static_cast<std::size_t>(b.rows()) != n_) {
    throw DimensionError("BandedCholesky::solve: row count mismatch");
  }
  Eigen::MatrixXd x(b.rows(), b.cols());
  for (Eigen::Index c = 0; c < b.cols(); ++c) x.col(c) = solve(Eigen::VectorXd(b.col(c)));
  return x;
}

Eigen::MatrixXd BandedCholesky::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = row_start(i); j <= i; ++j) {
      d(i, j) = entries_[index(i, j)];
    }
  }
  return d;
}

// Band storage of the inverse's in-band entries, plus the Takahashi sweep.
struct SelectedInverseWorkspace {
  std::size_t n, w;
  std::vector<std::size_t> row_offset;
  std::vector<double> z;

  explicit SelectedInverseWorkspace(const BandedCholesky& f)
      : n(f.n_), w(f.w_), row_offset(f.row_offset_), z(f.entries_.size(), 0.0) {
    // Row sweep from the bottom: for each row i, off-diagonals (i, j), j > i,
    // then the diagonal, using only already-computed entries with both
    // indices > i.  Exact for every entry inside the contiguous band.
    const auto& L = f.entries_;
    auto idx = [&](std::size_t r, std::size_t c) {
      return row_offset[r] + (c - (r > w ? r - w : 0));
    };
    auto zat = [&](std::size_t r, std::size_t c) -> double& {
      if (c > r) std::swap(r, c);
      return z[idx(r, c)];
    };
    for (std::size_t ii = n; ii-- > 0;) {
      const std::size_t i = ii;
      const double inv_lii = 1.0 / L[idx(i, i)];
      const std::size_t kmax = std::min(n - 1, i + w);
      for (std::size_t j = kmax; j > i; --j) {
        double acc = 0.0;
        for (std::size_t k = i + 1; k <= kmax; ++k) {
          acc += L[idx(k, i)] * zat(k, j);
        }
        zat(j, i) = -inv_lii * acc;
      }
      double acc = 0.0;
      for (std::size_t k = i + 1; k <= kmax; ++k) {
        acc += L[idx(k, i)] * zat(k, i);
      }
      zat(i, i) = inv_lii * (inv_lii - acc);
    }
  }

  double at(std::size_t r, std::size_t c) const {
    if (c > r) std::swap(r, c);
    if (r - c > w) throw StructureError("selected inverse: entry outside band");
    return z[row_offset[r] + (c - (r > w ? r - w : 0))];
  }
};

SelectedInverseResult selected_inverse(const BandedCholesky& factor,
                                       const SelectedInversePattern& pattern) {
  const std::size_t n = factor.size();
  const std::size_t w = factor.bandwidth();
  for (std::size_t c : pattern.off_diagonal_offsets) {
    if (c == 0 || c >= n) {
      throw DimensionError("selected_inverse: offset must satisfy 0 < c < n");
    }
  }
  SelectedInverseWorkspace ws(factor);
  SelectedInverseResult result;
  if (pattern.want_diagonal) {
    result.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.diagonal[i] = ws.at(i, i);
  }
  for (std::size_t c : pattern.off_diagonal_offsets) {
    Eigen::VectorXd v(n - c);
    if (c <= w) {
      for (std::size_t i = 0; i + c < n; ++i) v[i] = ws.at(i + c, i);
    } else {
      // Offsets beyond the factor band: recover columns with direct solves.
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      for (std::size_t i = 0; i + c < n; ++i) {
        e[i] = 1.0;
        const Eigen::VectorXd col = factor.solve(e);
        v[i] = col[i + c];
        e[i] = 0.0;
      }
    }
    result.off_diagonals[c] = std::move(v);
  }
  if (pattern.gram != nullptr) {
    const BandedSpdMatrix& g = *pattern.gram;
    if (g.size() != n) throw DimensionError("selected_inverse: gram size mismatch");
    if (g.bandwidth() > w) {
      throw StructureError("selected_inverse: gram band exceeds factor band");
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j0 = g.bandwidth() < i ? i - g.bandwidth() : 0;
      for (std::size_t j = j0; j <= i; ++j) {
        const double gv = g.at(i, j);
        if (gv == 0.0) continue;
        const double zv = ws.at(i, j);
        trace += (i == j) ? gv * zv : 2.0 * gv * zv;
      }
    }
    result.gram_trace = trace;
  }
  return result;
}

SelectedInverseResult selected_inverse_dense(const BandedSpdMatrix& m,
                                             const SelectedInversePattern& pattern) {
  const std::size_t n = m.size();
  for (std::size_t c : pattern.off_diagonal_offsets) {
    if (c == 0 || c >= n) {
      throw DimensionError("selected_inverse_dense: offset must satisfy 0 < c < n");
    }
  }
  const Eigen::MatrixXd dense = m.to_dense();
  const Eigen::MatrixXd inv = dense.llt().solve(Eigen::MatrixXd::Identity(n, n));
  SelectedInverseResult result;
  if (pattern.want_diagonal) result.diagonal = inv.diagonal();
  for (std::size_t c : pattern.off_diagonal_offsets) {
    Eigen::VectorXd v(n - c);
    for (std::size_t i = 0; i + c < n; ++i) v[i] = inv(i + c, i);
    result.off_diagonals[c] = std::move(v);
  }
  if (pattern.gram != nullptr) {
    result.gram_trace = (pattern.gram->to_dense() * inv).trace();
  }
  return result;
}

}  // namespace deconv
