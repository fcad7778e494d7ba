#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace graphembed {

/// Dense row-major matrix of doubles. Rows are the unit of access
/// (embedding vectors, inner-node vectors).
struct RowMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<double> data;

  RowMatrix() = default;
  RowMatrix(std::uint32_t r, std::uint32_t c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  std::span<double> row(std::uint32_t r) {
    check(r);
    return {data.data() + static_cast<std::size_t>(r) * cols, cols};
  }
  std::span<const double> row(std::uint32_t r) const {
    check(r);
    return {data.data() + static_cast<std::size_t>(r) * cols, cols};
  }

private:
  void check(std::uint32_t r) const {
    if (r >= rows) throw std::out_of_range("RowMatrix: row index out of range");
  }
};

} // namespace graphembed
