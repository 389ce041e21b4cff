#pragma once

#include <cstddef>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

/// Dense square matrix of arbitrary-precision integers.
class IntMat {
  public:
    IntMat() = default;
    explicit IntMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static IntMat identity(int n);

    int size() const { return n_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Int trace() const;

    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat& operator+=(const IntMat& rhs);
    IntMat scaled(const Int& factor) const;
    bool operator==(const IntMat& rhs) const = default;

    /// Matrix power by repeated squaring; exponent >= 0.
    IntMat pow(long long exponent) const;

    /// Kronecker product; block (i,j) of the result is at(i,j) * rhs.
    IntMat kronecker(const IntMat& rhs) const;

    /// Entries are 0/1 with exactly one 1 per row and per column.
    bool is_permutation() const;

  private:
    int n_ = 0;
    std::vector<Int> a_;
};

}  // namespace voa
