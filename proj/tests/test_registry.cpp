#include <array>
#include <vector>

#include "doctest.h"
#include "voa/engine.hpp"
#include "voa/registry.hpp"
#include "voa/verify.hpp"

using namespace voa;

namespace {

// Least coset norm of the j-th discriminant class of the A_r root lattice,
// minimized over a box of lattice translates of the fundamental-weight
// representative. Independent of the closed weight formula.
Rat ar_coset_weight_bruteforce(int r, int j) {
    const int m = r + 1;
    // Gram matrix of A_r in the simple-root basis.
    std::vector<std::vector<int>> gram(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) {
        gram[i][i] = 2;
        if (i + 1 < r) gram[i][i + 1] = gram[i + 1][i] = -1;
    }
    // Representative of class j: the fundamental weight w_j in root
    // coordinates, (w_j)_i = min(i,j) - i*j/m   (1-based i).
    std::vector<Rat> rep(r);
    for (int i = 1; i <= r; ++i) rep[i - 1] = Rat(std::min(i, j)) - Rat(i * j, m);

    const int box = 2;
    std::vector<int> shift(r, -box);
    Rat best;
    bool have = false;
    while (true) {
        std::vector<Rat> v(r);
        for (int i = 0; i < r; ++i) v[i] = rep[i] + shift[i];
        Rat norm = 0;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) norm += v[a] * gram[a][b] * v[b];
        if (!have || norm < best) {
            best = norm;
            have = true;
        }
        int k = 0;
        for (; k < r; ++k) {
            if (++shift[k] <= box) break;
            shift[k] = -box;
        }
        if (k == r) break;
    }
    return best / 2;
}

IntMat matrix_of(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("virasoro(2,5): two modules, weights and charge") {
    const VoaSpec spec = virasoro(2, 5);
    REQUIRE(spec.size() == 2);
    CHECK(spec.central_charge == Rat(-22, 5));
    CHECK(spec.weights[0] == Rat(-1, 5));
    CHECK(spec.weights[1] == Rat(0));
    CHECK(spec.vacuum == 1);
    CHECK(spec.labels[1] == "V");

    const FaEngine engine(spec);
    CHECK(engine.fusion_entries(0) == matrix_of({{1, 1}, {1, 0}}));
    CHECK(engine.fusion_entries(1) == IntMat::identity(2));
}

TEST_CASE("virasoro(2,3) is holomorphic") {
    const VoaSpec spec = virasoro(2, 3);
    CHECK(spec.size() == 1);
    const FaEngine engine(spec);
    CHECK(engine.pointed_group().has_value());
    CHECK(engine.pointed_group()->order() == 1);
}

TEST_CASE("virasoro rejects bad parameters") {
    CHECK_THROWS_AS(virasoro(2, 4), SpecError);
    CHECK_THROWS_AS(virasoro(1, 5), SpecError);
    CHECK_THROWS_AS(virasoro(3, 3), SpecError);
}

TEST_CASE("boundary-series minimal module has the anti-triangular fusion matrix") {
    for (int t = 1; t <= 6; ++t) {
        const FaEngine engine(virasoro(2, 2 * t + 1));
        REQUIRE(engine.size() == t);
        const IntMat& r = engine.fusion_entries(0);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) CHECK(r.at(i, j) == (i + j <= t - 1 ? 1 : 0));
    }
}

TEST_CASE("boundary-series fusion matrices match the parity-split closed form") {
    // Row k of the family, entry (i,j), all 1-based: a band condition with a
    // parity that flips with t. Checked against the admissible-triple rule.
    const auto closed_form = [](int t, int k, int i, int j) -> long long {
        if (i + j <= t - k + 2) return 1;
        const int parity = (t % 2 == 1) ? (k + 1) % 2 : k % 2;
        if ((i + j) % 2 == parity && std::abs(i - j) <= t - k + 1 && i + j <= t + k + 1) return 1;
        return 0;
    };
    for (int t = 1; t <= 8; ++t) {
        const FaEngine engine(virasoro(2, 2 * t + 1));
        for (int k = 1; k <= t; ++k)
            for (int i = 1; i <= t; ++i)
                for (int j = 1; j <= t; ++j)
                    CHECK(engine.fusion_entries(k - 1).at(i - 1, j - 1) ==
                          closed_form(t, k, i, j));
    }
}

TEST_CASE("virasoro module counts across the series") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {4, 5}, {5, 6}, {7, 8}}) {
        const VoaSpec spec = virasoro(p, q);
        CHECK(spec.size() == (p - 1) * (q - 1) / 2);
        // Weights are pairwise distinct within the series.
        for (int a = 0; a < spec.size(); ++a)
            for (int b = a + 1; b < spec.size(); ++b) CHECK(spec.weights[a] != spec.weights[b]);
    }
}

TEST_CASE("virasoro(p,q) and virasoro(q,p) are the same spec up to labels") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
        const VoaSpec a = virasoro(p, q);
        const VoaSpec b = virasoro(q, p);
        REQUIRE(a.size() == b.size());
        CHECK(a.vacuum == b.vacuum);
        CHECK(a.weights == b.weights);
        CHECK(a.central_charge == b.central_charge);
        CHECK(a.three_point == b.three_point);
    }
}

TEST_CASE("affine sl2 fixtures at level 1") {
    const VoaSpec spec = affine_sl2(1);
    REQUIRE(spec.size() == 2);
    CHECK(spec.weights[0] == Rat(0));
    CHECK(spec.weights[1] == Rat(1, 4));
    CHECK(spec.central_charge == Rat(1));
    const FaEngine engine(spec);
    CHECK(engine.fusion_entries(1) == matrix_of({{0, 1}, {1, 0}}));
}

TEST_CASE("affine sl2: the two closed forms of the fusion rule agree") {
    for (int level = 1; level <= 12; ++level)
        for (int p = 0; p <= level; ++p)
            for (int i = 0; i <= level; ++i)
                for (int j = 0; j <= level; ++j)
                    CHECK(sl2_fusion_parity_form(level, p, i, j) ==
                          sl2_fusion_level_form(level, p, i, j));
}

TEST_CASE("affine sl2: maximal-weight module has order two") {
    for (int level = 1; level <= 5; ++level) {
        const FaEngine engine(affine_sl2(level));
        CHECK(engine.is_order_two(level));
    }
}

TEST_CASE("pointed constructor and recovery of the group") {
    PointedData z2 = cyclic_group(2);
    z2.weights = {Rat(0), Rat(1, 2)};
    z2.central_charge = 1;
    const FaEngine engine(pointed(z2));
    const auto group = engine.pointed_group();
    REQUIRE(group.has_value());
    CHECK(group->order() == 2);
    CHECK(group->mul[1][1] == 0);

    // Trivial group: holomorphic.
    const FaEngine hol(pointed(cyclic_group(1)));
    CHECK(hol.size() == 1);
    CHECK(hol.pointed_group().has_value());
}

TEST_CASE("pointed rejects non-group and non-abelian tables") {
    PointedData bad = cyclic_group(3);
    bad.table[1][1] = 1;  // breaks associativity/cancellation
    CHECK_THROWS_AS(pointed(bad), SpecError);

    // S3 is a group but not abelian; fusion rings are commutative.
    PointedData s3;
    s3.identity = 0;
    s3.table = {{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
                {3, 5, 4, 0, 2, 1}, {4, 3, 5, 1, 0, 2}, {5, 4, 3, 2, 1, 0}};
    s3.weights.assign(6, Rat(0));
    s3.central_charge = 0;
    CHECK_THROWS_AS(pointed(s3), SpecError);

    PointedData dual_weights = cyclic_group(3);
    dual_weights.weights = {Rat(0), Rat(1, 3), Rat(2, 3)};  // w(x) != w(x^-1)
    dual_weights.central_charge = 2;
    CHECK_THROWS_AS(pointed(dual_weights), SpecError);
}

TEST_CASE("A_r discriminant weights match the Gram-matrix brute force") {
    for (int r = 1; r <= 4; ++r) {
        const PointedData data = root_lattice_ar(r);
        REQUIRE(data.order() == r + 1);
        CHECK(data.central_charge == Rat(r));
        for (int j = 0; j <= r; ++j) CHECK(data.weights[j] == ar_coset_weight_bruteforce(r, j));
        validate(pointed(data));
    }
}

TEST_CASE("D4 discriminant data forms a pointed spec") {
    const PointedData data = root_lattice_d4();
    REQUIRE(data.order() == 4);
    CHECK(data.weights == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    const FaEngine engine(pointed(data));
    // Klein four-group: every non-identity element has order two.
    for (int w = 1; w < 4; ++w) CHECK(engine.is_order_two(w));
}

TEST_CASE("tensor product: counts, additivity, Kronecker fusion matrices") {
    const VoaSpec a = virasoro(2, 5);
    const VoaSpec b = affine_sl2(1);
    const VoaSpec t = tensor_product(a, b);
    REQUIRE(t.size() == a.size() * b.size());
    CHECK(t.central_charge == a.central_charge + b.central_charge);

    const FaEngine ea(a), eb(b), et(t);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            CHECK(t.weights[i * b.size() + j] == a.weights[i] + b.weights[j]);
            CHECK(et.fusion_entries(i * b.size() + j) ==
                  ea.fusion_entries(i).kronecker(eb.fusion_entries(j)));
        }
}

TEST_CASE("tensor of two pointed specs is pointed with the product group") {
    PointedData z2 = cyclic_group(2);
    z2.weights = {Rat(0), Rat(1, 4)};
    z2.central_charge = 1;
    PointedData z3 = cyclic_group(3);
    z3.weights = {Rat(0), Rat(1, 3), Rat(1, 3)};
    z3.central_charge = 2;
    const FaEngine engine(tensor_product(pointed(z2), pointed(z3)));
    const auto group = engine.pointed_group();
    REQUIRE(group.has_value());
    CHECK(group->order() == 6);
}

TEST_CASE("weight order matches the published table order") {
    for (const VoaSpec& spec : {virasoro(3, 4), affine_sl2(3), virasoro(2, 9)}) {
        const auto perm = weight_order(spec);
        for (std::size_t k = 1; k < perm.size(); ++k)
            CHECK(spec.weights[perm[k - 1]] <= spec.weights[perm[k]]);
        // Registry constructors already store modules in that order.
        for (std::size_t k = 0; k < perm.size(); ++k) CHECK(perm[k] == static_cast<int>(k));
    }
}

TEST_CASE("every builtin family passes the property suite at small bounds") {
    PointedData z3 = cyclic_group(3);
    z3.weights = {Rat(0), Rat(1, 3), Rat(1, 3)};
    z3.central_charge = 2;
    const std::vector<VoaSpec> specs = {virasoro(2, 5), affine_sl2(1), pointed(z3),
                                        holomorphic(Rat(8)),
                                        tensor_product(virasoro(2, 5), affine_sl2(1))};
    for (const VoaSpec& spec : specs) {
        const FaEngine engine(spec);
        const VerifyReport report = verify_fa_properties(engine, 3, 1);
        for (const auto& check : report.checks) {
            INFO(check.law, " witness: ", check.witness);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("selector parsing") {
    CHECK(from_selector("virasoro:2,5").size() == 2);
    CHECK(from_selector("sl2:3").size() == 4);
    CHECK(from_selector("holomorphic:8").central_charge == Rat(8));
    CHECK(from_selector("holomorphic:-22/5").central_charge == Rat(-22, 5));
    CHECK(from_selector("tensor:(virasoro:2,5,sl2:1)").size() == 4);
    CHECK(from_selector("tensor:(tensor:(sl2:1,sl2:1),virasoro:2,5)").size() == 8);
    CHECK_THROWS_AS(from_selector("minimal:2,5"), SpecError);
    CHECK_THROWS_AS(from_selector("virasoro:2"), SpecError);
    CHECK_THROWS_AS(from_selector("pointed:/no/such/file.json"), SpecError);
    const auto factors = tensor_factors("tensor:(virasoro:2,5,sl2:1)");
    REQUIRE(factors.has_value());
    CHECK(factors->first == "virasoro:2,5");
    CHECK(factors->second == "sl2:1");
}
