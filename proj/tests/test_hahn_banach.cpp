#include <catch2/catch_amalgamated.hpp>

#include "ccx/hahn_banach.hpp"
#include "ccx/oracle.hpp"

using namespace ccx;

namespace {

QVector qv(std::vector<long> xs) {
    QVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

SublinearFunc l1_norm_2d() {
    return SublinearFunc{{qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})}};
}

} // namespace

TEST_CASE("midpoint rule on the l1 example") {
    // Y = span{e1}, g(e1) = 1, p the l1 norm: the admissible interval for
    // f(e2) is [-1, 1], so the midpoint extension is (1, 0).
    QMatrix B = QMatrix::from_columns({qv({1, 0})});
    Functional f = hahn_banach_extend(l1_norm_2d(), B, qv({1}));
    CHECK(f.coeffs == qv({1, 0}));
    CHECK(extends_on_basis(f, B, qv({1})));
    CHECK(dominated_by(f, l1_norm_2d()));
}

TEST_CASE("full-space domain leaves nothing to extend") {
    QMatrix B = QMatrix::from_columns({qv({1, 0}), qv({0, 1})});
    QVector g = {make_rational(1, 2), make_rational(-1, 2)};
    Functional f = hahn_banach_extend(l1_norm_2d(), B, g);
    CHECK(f.coeffs == g);
    Functional fs = hahn_banach_via_separation(l1_norm_2d(), B, g);
    CHECK(fs.coeffs == g);
}

TEST_CASE("zero restriction extends under a nonnegative p") {
    QMatrix B = QMatrix::from_columns({qv({1, 0})});
    Functional f = hahn_banach_extend(l1_norm_2d(), B, qv({0}));
    CHECK(extends_on_basis(f, B, qv({0})));
    CHECK(dominated_by(f, l1_norm_2d()));
}

TEST_CASE("domination failures are rejected with a witness") {
    QMatrix B = QMatrix::from_columns({qv({1, 0})});
    try {
        hahn_banach_extend(l1_norm_2d(), B, qv({2}));
        FAIL("expected DominationError");
    } catch (const DominationError& e) {
        SublinearFunc p = l1_norm_2d();
        // the witness really violates g <= p: g(y) = 2 y_1 here
        CHECK(2 * e.violating_point[0] > p(e.violating_point));
    }
}

TEST_CASE("separation route agrees with the certificates on the l1 example") {
    QMatrix B = QMatrix::from_columns({qv({1, 0})});
    Functional f = hahn_banach_via_separation(l1_norm_2d(), B, qv({1}));
    CHECK(extends_on_basis(f, B, qv({1})));
    CHECK(dominated_by(f, l1_norm_2d()));
    CHECK(f.coeffs[0] == 1);
    CHECK(f.coeffs[1] >= -1);
    CHECK(f.coeffs[1] <= 1);
}

TEST_CASE("separation route rejects the zero restriction") {
    QMatrix B = QMatrix::from_columns({qv({1, 0})});
    CHECK_THROWS_AS(hahn_banach_via_separation(l1_norm_2d(), B, qv({0})), std::invalid_argument);
}

TEST_CASE("both constructions certify on seeded problems") {
    SplitMix64 rng(Seed{53});
    int done = 0;
    for (int t = 0; done < 25 && t < 200; ++t) {
        std::size_t n = 2 + rng.below(2);
        std::size_t npieces = 2 + rng.below(3);
        SublinearFunc p;
        // zero piece keeps p >= 0: the separation route certifies f <= max(p, 0)
        p.pieces.push_back(zero_vector(n));
        for (std::size_t i = 0; i < npieces; ++i) p.pieces.push_back(rng.vector(n, 3));

        // g := (convex combination of pieces) restricted to Y, so g <= p on Y
        QVector lambda(npieces);
        Rational total = 0;
        for (auto& l : lambda) {
            l = Rational(rng.int_in(0, 4));
            total += l;
        }
        if (total == 0) continue;
        for (auto& l : lambda) l /= total;
        QVector f0 = zero_vector(n);
        for (std::size_t i = 0; i < npieces; ++i) f0 = add(f0, scale(lambda[i], p.pieces[i]));

        std::size_t k = 1 + rng.below(n - 1);
        std::vector<QVector> cols;
        for (std::size_t j = 0; j < k; ++j) cols.push_back(rng.integer_vector(n, 2));
        QMatrix B = QMatrix::from_columns(cols);
        if (rank(B) != k) continue;
        QVector g(k);
        for (std::size_t j = 0; j < k; ++j) g[j] = dot(f0, cols[j]);

        Functional f1 = hahn_banach_extend(p, B, g);
        CHECK(extends_on_basis(f1, B, g));
        CHECK(dominated_by(f1, p));
        if (!is_zero(g)) {
            Functional f2 = hahn_banach_via_separation(p, B, g);
            CHECK(extends_on_basis(f2, B, g));
            CHECK(dominated_by(f2, p));
        }
        ++done;
    }
    CHECK(done == 25);
}
