#pragma once

#include <cstddef>

#include "deconv/errors.hpp"

namespace deconv {

/// Pixel grid geometry for the latent image X (m1 x m2, column-major vec).
///
/// One-dimensional problems are encoded as a single row, m1 = 1, so that
/// every code path below is the same for both cases.  Interaction counts:
/// horizontal differences dH = m1*(m2-1), vertical dV = (m1-1)*m2.
struct GridShape {
  std::size_t m1 = 1;
  std::size_t m2 = 1;

  GridShape() = default;
  GridShape(std::size_t rows, std::size_t cols) : m1(rows), m2(cols) {
    if (m1 < 1 || m2 < 1) throw DimensionError("GridShape: m1, m2 must be >= 1");
  }

  /// 1-D shape with m sites on a line.
  static GridShape line(std::size_t m) { return GridShape(1, m); }

  std::size_t pixels() const { return m1 * m2; }
  std::size_t horizontal_interactions() const { return m1 * (m2 - 1); }
  std::size_t vertical_interactions() const { return (m1 - 1) * m2; }
  std::size_t interactions() const {
    return horizontal_interactions() + vertical_interactions();
  }

  bool operator==(const GridShape&) const = default;
};

}  // namespace deconv
