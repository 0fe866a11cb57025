#include "deconv/contrast.hpp"

#include <cstddef>

#include "deconv/errors.hpp"

namespace deconv {

Eigen::MatrixXd tridiag(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  const std::size_t n = static_cast<std::size_t>(v.size());
  if (static_cast<std::size_t>(w.size()) + 1 != n) {
    throw DimensionError("tridiag: off-diagonal must have length n-1");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = v[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = w[i];
    m(i + 1, i) = w[i];
  }
  return m;
}

Eigen::MatrixXd sparsetridiag(const Eigen::VectorXd& v, const Eigen::VectorXd& w,
                              std::size_t c) {
  const std::size_t n = static_cast<std::size_t>(v.size());
  if (c < 1 || c >= n) throw DimensionError("sparsetridiag: requires 1 <= c < n");
  if (static_cast<std::size_t>(w.size()) + c != n) {
    throw DimensionError("sparsetridiag: off-diagonal must have length n-c");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = v[i];
  for (std::size_t i = 0; i + c < n; ++i) {
    m(i, i + c) = w[i];
    m(i + c, i) = w[i];
  }
  return m;
}

InteractionVector apply_contrast(const GridShape& shape, const Eigen::VectorXd& v) {
  const std::size_t m1 = shape.m1, m2 = shape.m2;
  if (static_cast<std::size_t>(v.size()) != shape.pixels()) {
    throw DimensionError("apply_contrast: vector length must equal m1*m2");
  }
  InteractionVector out;
  out.dh = shape.horizontal_interactions();
  out.dv = shape.vertical_interactions();
  out.values.resize(out.dh + out.dv);

  if (m1 == 1) {
    // 1-D fast path: plain consecutive differences.
    for (std::size_t g = 0; g + 1 < m2; ++g) out.values[g] = v[g + 1] - v[g];
    return out;
  }

  // Horizontal block: iterate v in transposed-vec order (rows outer).
  std::size_t idx = 0;
  for (std::size_t r = 0; r < m1; ++r) {
    for (std::size_t g = 0; g + 1 < m2; ++g) {
      out.values[idx++] = v[(g + 1) * m1 + r] - v[g * m1 + r];
    }
  }
  // Vertical block: columns outer, consecutive within each column.
  for (std::size_t c = 0; c < m2; ++c) {
    for (std::size_t g = 0; g + 1 < m1; ++g) {
      out.values[idx++] = v[c * m1 + g + 1] - v[c * m1 + g];
    }
  }
  return out;
}

namespace {

// s = M(q,q) - 2 M(q,p) + M(p,p) for each edge (p, q), in contract order.
template <typename EntryAt>
Eigen::VectorXd sandwich_diag_impl(const GridShape& shape, EntryAt&& pair_term) {
  const std::size_t m1 = shape.m1, m2 = shape.m2;
  Eigen::VectorXd out(shape.interactions());
  std::size_t idx = 0;
  if (m1 == 1) {
    for (std::size_t g = 0; g + 1 < m2; ++g) out[idx++] = pair_term(g, g + 1);
    return out;
  }
  for (std::size_t r = 0; r < m1; ++r) {
    for (std::size_t g = 0; g + 1 < m2; ++g) {
      const std::size_t p = g * m1 + r;
      out[idx++] = pair_term(p, p + m1);
    }
  }
  for (std::size_t c = 0; c < m2; ++c) {
    for (std::size_t g = 0; g + 1 < m1; ++g) {
      const std::size_t p = c * m1 + g;
      out[idx++] = pair_term(p, p + 1);
    }
  }
  return out;
}

}  // namespace

Eigen::VectorXd contrast_sandwich_diag(const GridShape& shape,
                                       const Eigen::MatrixXd& m) {
  if (static_cast<std::size_t>(m.rows()) != shape.pixels() ||
      static_cast<std::size_t>(m.cols()) != shape.pixels()) {
    throw DimensionError("contrast_sandwich_diag: matrix must be m x m");
  }
  return sandwich_diag_impl(shape, [&](std::size_t p, std::size_t q) {
    return m(q, q) - 2.0 * m(q, p) + m(p, p);
  });
}

Eigen::VectorXd contrast_sandwich_diag(const GridShape& shape,
                                       const SymmetricSelectedEntries& m) {
  const std::size_t n = shape.pixels();
  if (static_cast<std::size_t>(m.diagonal.size()) != n ||
      static_cast<std::size_t>(m.off1.size()) + 1 != n ||
      static_cast<std::size_t>(m.off_block.size()) + shape.m1 != n) {
    throw DimensionError("contrast_sandwich_diag: selected entries size mismatch");
  }
  const std::size_t m1 = shape.m1;
  return sandwich_diag_impl(shape, [&](std::size_t p, std::size_t q) {
    const double cross = (q == p + 1) ? m.off1[p] : m.off_block[p];
    (void)m1;
    return m.diagonal[q] - 2.0 * cross + m.diagonal[p];
  });
}

BandedSpdMatrix contrast_weighted_gram(const GridShape& shape,
                                       const Eigen::VectorXd& w) {
  const std::size_t m1 = shape.m1, m2 = shape.m2;
  const std::size_t n = shape.pixels();
  const std::size_t dh = shape.horizontal_interactions();
  const std::size_t dv = shape.vertical_interactions();
  if (static_cast<std::size_t>(w.size()) != dh + dv) {
    throw DimensionError("contrast_weighted_gram: weight length must equal d");
  }

  BandedSpdMatrix out(n, m1, 1);
  if (n == 1) return out;  // no interactions, zero matrix

  if (m1 == 1) {
    // 1-D fast path: tridiag([w1, w_{1:d-1}+w_{2:d}, w_d], -w).
    for (std::size_t k = 0; k + 1 < n; ++k) out.set(k + 1, k, -w[k]);
    out.set(0, 0, w[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) out.set(i, i, w[i - 1] + w[i]);
    out.set(n - 1, n - 1, w[n - 2]);
    return out;
  }

  // Off-diagonal vectors of R, laid out by the transposed-vec reindexing.
  // rH[k] pairs (k, k+m1); rV[k] pairs (k, k+1) with zeros at column ends.
  Eigen::VectorXd rh = Eigen::VectorXd::Zero(n > m1 ? n - m1 : 0);
  for (std::size_t r = 0; r < m1; ++r) {
    for (std::size_t g = 0; g + 1 < m2; ++g) {
      rh[g * m1 + r] = -w[r * (m2 - 1) + g];
    }
  }
  Eigen::VectorXd rv = Eigen::VectorXd::Zero(n - 1);
  for (std::size_t c = 0; c < m2; ++c) {
    for (std::size_t g = 0; g + 1 < m1; ++g) {
      rv[c * m1 + g] = -w[dh + c * (m1 - 1) + g];
    }
  }

  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n);
  for (std::size_t k = 0; k + m1 < n + 0; ++k) {
    if (rh[k] != 0.0) out.set(k + m1, k, rh[k]);
    row_sums[k] += rh[k];
    row_sums[k + m1] += rh[k];
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (rv[k] != 0.0) out.set(k + 1, k, rv[k]);
    row_sums[k] += rv[k];
    row_sums[k + 1] += rv[k];
  }
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, -row_sums[i]);
  return out;
}

}  // namespace deconv
