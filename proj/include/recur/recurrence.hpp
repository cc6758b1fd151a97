#pragma once

#include "recur/polynomial.hpp"
#include "recur/rational.hpp"

#include <cstddef>
#include <vector>

namespace recur {

// Linear recurrence a_{n+1} = c_1 a_n + c_2 a_{n-1} + ... + c_L a_{n-L+1}
// with non-negative integer coefficients and c_L > 0. "Depth" counts the
// leading zero coefficients: depth 0 is the classical positive case (PLRR),
// depth s >= 1 means c_1 = ... = c_s = 0 (an s-deep ZLRR). Vectors whose
// support indices share a common factor d > 1 are rejected as degenerate:
// such a recurrence splits into d independent interleaved sequences and its
// dominant root is not unique.
class Recurrence {
  public:
    // Validates and canonicalizes; raises EmptyCoefficients, NegativeCoefficient,
    // TrailingZero, or Degenerate.
    static Recurrence build(const std::vector<Int>& coefficients);

    std::size_t order() const { return coeffs_.size(); } // L
    std::size_t depth() const { return depth_; }         // s
    bool is_plrr() const { return depth_ == 0; }
    const std::vector<Int>& coefficients() const { return coeffs_; }

    // x^L - c_1 x^{L-1} - ... - c_L
    Polynomial characteristic_polynomial() const;

    // First n terms a_1, a_2, ..., a_n given init = (a_1, ..., a_L).
    // Raises WrongInitLength. n <= L returns a prefix of init.
    std::vector<Rat> iterate_terms(const std::vector<Rat>& init, std::size_t n) const;

  private:
    explicit Recurrence(std::vector<Int> coeffs, std::size_t depth)
        : coeffs_(std::move(coeffs)), depth_(depth) {}

    std::vector<Int> coeffs_;
    std::size_t depth_;
};

} // namespace recur
