#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "lehmer/errors.hpp"

namespace lehmer {

using BigInt = boost::multiprecision::cpp_int;

/// Triangle of Eulerian numbers A(n, 0..n-1), exact integers.
/// A(n, m) counts permutations of n elements with m descents and satisfies
/// A(n, m) = (m+1) A(n-1, m) + (n-m) A(n-1, m-1). Values overflow 64-bit
/// integers near n = 21, hence the arbitrary-precision storage; conversion
/// to floating point happens only at evaluation sites.
class EulerianTriangle {
 public:
  static constexpr int kDefaultMaxRows = 64;

  explicit EulerianTriangle(int max_rows = kDefaultMaxRows) {
    if (max_rows < 1) throw invalid_argument("EulerianTriangle: max_rows must be >= 1");
    rows_.reserve(static_cast<std::size_t>(max_rows));
    rows_.push_back({BigInt(1)});  // A(1, 0) = 1
    for (int n = 2; n <= max_rows; ++n) {
      const auto& prev = rows_.back();
      std::vector<BigInt> row(static_cast<std::size_t>(n));
      for (int m = 0; m < n; ++m) {
        BigInt value = 0;
        if (m < n - 1) value += BigInt(m + 1) * prev[static_cast<std::size_t>(m)];
        if (m >= 1) value += BigInt(n - m) * prev[static_cast<std::size_t>(m) - 1];
        row[static_cast<std::size_t>(m)] = value;
      }
      rows_.push_back(std::move(row));
    }
  }

  int max_rows() const { return static_cast<int>(rows_.size()); }

  /// Row n (n >= 1): the n values A(n, 0..n-1).
  const std::vector<BigInt>& row(int n) const {
    if (n < 1) throw invalid_argument("EulerianTriangle::row: n must be >= 1");
    if (n > max_rows())
      throw capacity_error("EulerianTriangle::row: n = " + std::to_string(n) +
                           " exceeds configured capacity " + std::to_string(max_rows()));
    return rows_[static_cast<std::size_t>(n) - 1];
  }

  /// Process-wide read-only instance; built once on first use.
  static const EulerianTriangle& shared() {
    static const EulerianTriangle triangle;  // one-time, race-free construction
    return triangle;
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// A(n, 0..n-1) from the shared triangle.
inline const std::vector<BigInt>& eulerian_row(int n) { return EulerianTriangle::shared().row(n); }

}  // namespace lehmer
