#include "voa/genfunc.hpp"

namespace voa {

namespace {

using PolyMat = std::vector<Poly>;  // row-major square

Poly det_rec(const PolyMat& m, int n, std::vector<int>& rows, std::vector<int>& cols) {
    if (rows.size() == 1) return m[rows[0] * n + cols[0]];
    Poly acc;
    const int top = rows.front();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly& pivot = m[top * n + cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) sub_cols.push_back(cols[t]);
        Poly minor = det_rec(m, n, sub_rows, sub_cols);
        if (k % 2 == 1) minor = -minor;
        acc = acc + pivot * minor;
    }
    return acc;
}

Poly determinant(const PolyMat& m, int n) {
    if (n == 0) return Poly{1};
    std::vector<int> rows(n), cols(n);
    for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
    return det_rec(m, n, rows, cols);
}

PolyMat resolvent_base(const IntMat& step) {
    const int n = step.size();
    PolyMat b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Int> coeffs{Int(i == j ? 1 : 0), -step.at(i, j)};
            b[i * n + j] = Poly(std::move(coeffs));
        }
    return b;
}

// adj(B)_{(k,j)} = (-1)^{k+j} det of B with row j and column k removed.
Poly adjugate_entry(const PolyMat& b, int n, int k, int j) {
    if (n == 1) return Poly{1};
    std::vector<int> rows, cols;
    for (int r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
    for (int c = 0; c < n; ++c)
        if (c != k) cols.push_back(c);
    Poly minor = det_rec(b, n, rows, cols);
    if ((k + j) % 2 == 1) minor = -minor;
    return minor;
}

}  // namespace

Poly char_denominator(const IntMat& m) { return determinant(resolvent_base(m), m.size()); }

RationalFunction resolvent_entry(const IntMat& prefix, const IntMat& step, int i, int j) {
    const int n = step.size();
    if (prefix.size() != n) throw SpecError("resolvent prefix/step dimension mismatch");
    if (i < 0 || i >= n || j < 0 || j >= n) throw SpecError("resolvent entry out of range");

    const IntMat front = prefix * step.pow(3);
    const PolyMat b = resolvent_base(step);
    Poly numerator;
    for (int k = 0; k < n; ++k) {
        const Int& f = front.at(i, k);
        if (f == 0) continue;
        numerator = numerator + adjugate_entry(b, n, k, j).scaled(f);
    }
    return RationalFunction(std::move(numerator), determinant(b, n));
}

RationalFunction indexing_function(const FaEngine& engine, const Insertion& deviation,
                                   const Insertion& step, int i, int j, long long genus) {
    if (step.total() == 0) throw SpecError("indexing function requires a nonempty step insertion");
    const IntMat prefix = engine.fa_matrix(deviation, genus).entries;
    const IntMat step_matrix = engine.fa_matrix(step, 0).entries;
    return resolvent_entry(prefix, step_matrix, i, j);
}

RationalFunction virasoro_boundary_cf(int layers) {
    if (layers < 1) throw SpecError("continued fraction needs at least one layer");
    const Poly minus_z{0, -1};
    // Innermost layer: -z+1 when the layer count is odd, -z-1 when even.
    RationalFunction level(minus_z + Poly{layers % 2 == 1 ? 1 : -1}, Poly{1});
    for (int k = 1; k < layers; ++k)
        level = RationalFunction(minus_z, Poly{1}) - level.reciprocal();
    return level.reciprocal();
}

}  // namespace voa
