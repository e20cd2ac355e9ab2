#include <utility>

#include "ripskit/presentation.hpp"

namespace ripskit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw InvalidArgument("matrix entry count does not match shape");
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the smallest nonzero |entry| of the trailing block to (t, t).
bool place_pivot(IntMatrix& m, std::size_t t) {
  std::size_t br = 0, bc = 0;
  bool found = false;
  BigInt best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      BigInt a = abs(m(r, c));
      if (!found || a < best) {
        best = a;
        br = r;
        bc = c;
        found = true;
        if (best == 1) goto done;
      }
    }
done:
  if (!found) return false;
  swap_rows(m, t, br);
  swap_cols(m, t, bc);
  return true;
}

}  // namespace

// Smallest-pivot elimination with quotient reduction. A pivot is accepted
// only once its row and column are clear and it divides the whole trailing
// block.
std::vector<BigInt> smith_normal_form(IntMatrix m) {
  std::vector<BigInt> divisors;
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < k; ++t) {
    if (!place_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      const BigInt piv = m(t, t);
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        BigInt q = m(r, t) / piv;
        for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        BigInt q = m(t, c) / piv;
        for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(m, t);
        continue;
      }
      // Row and column are clear; enforce divisibility of the block.
      std::size_t bad_row = 0;
      bool indivisible = false;
      for (std::size_t r = t + 1; r < m.rows() && !indivisible; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (m(r, c) % piv != 0) {
            bad_row = r;
            indivisible = true;
            break;
          }
      if (!indivisible) break;
      for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(bad_row, c);
    }
    divisors.push_back(abs(m(t, t)));
  }
  return divisors;
}

}  // namespace ripskit
