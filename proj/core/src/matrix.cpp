#include "voa/matrix.hpp"

namespace voa {

IntMat IntMat::identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Int IntMat::trace() const {
    Int t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    IntMat out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) {
                const Int& bkj = rhs.at(k, j);
                if (bkj == 0) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
    IntMat out = *this;
    out += rhs;
    return out;
}

IntMat& IntMat::operator+=(const IntMat& rhs) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

IntMat IntMat::scaled(const Int& factor) const {
    IntMat out = *this;
    for (auto& v : out.a_) v *= factor;
    return out;
}

IntMat IntMat::pow(long long exponent) const {
    IntMat result = identity(n_);
    IntMat base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

IntMat IntMat::kronecker(const IntMat& rhs) const {
    const int m = rhs.size();
    IntMat out(n_ * m);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Int& f = at(i, j);
            if (f == 0) continue;
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) out.at(i * m + p, j * m + q) = f * rhs.at(p, q);
        }
    return out;
}

bool IntMat::is_permutation() const {
    std::vector<int> col_hits(n_, 0);
    for (int i = 0; i < n_; ++i) {
        int row_hits = 0;
        for (int j = 0; j < n_; ++j) {
            const Int& v = at(i, j);
            if (v == 0) continue;
            if (v != 1) return false;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (int c : col_hits)
        if (c != 1) return false;
    return true;
}

}  // namespace voa
