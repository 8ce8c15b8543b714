#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "codedesign/matrix.hpp"
#include "codedesign/rng.hpp"

using namespace codedesign;

namespace {

FieldMatrix rand_matrix(const FieldContext& F, DetRng& rng, std::size_t r,
                        std::size_t c) {
    FieldMatrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = F.element(rng.next_below(F.q()));
    return m;
}

// Leibniz expansion over all permutations; the independent check for det.
FieldElement det_by_expansion(const FieldMatrix& m) {
    const auto& F = m.field();
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    FieldElement total = F.zero();
    // Iterate permutations in lexicographic order, tracking parity by
    // counting inversions from scratch (n is tiny here).
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        FieldElement term = F.one();
        for (std::size_t i = 0; i < n; ++i)
            term = F.mul(term, m.at(i, perm[i]));
        total = inversions % 2 ? F.sub(total, term) : F.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("hand-checked determinants") {
    auto F = FieldContext::prime_field(7);
    FieldMatrix m(F, 2, 2);
    m.at(0, 0) = F.element(1);
    m.at(0, 1) = F.element(2);
    m.at(1, 0) = F.element(3);
    m.at(1, 1) = F.element(4);
    CHECK(m.det() == F.element(5));  // 1*4 - 2*3 = -2
}

TEST_CASE("determinant matches permanent-style expansion") {
    auto F = FieldContext::prime_field(11);
    DetRng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.next_below(4);
        auto m = rand_matrix(F, rng, n, n);
        CHECK(m.det() == det_by_expansion(m));
    }
}

TEST_CASE("determinant is multiplicative and alternating") {
    auto F = FieldContext::prime_field(101);
    DetRng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.next_below(5);
        auto a = rand_matrix(F, rng, n, n);
        auto b = rand_matrix(F, rng, n, n);
        CHECK(a.mul(b).det() == F.mul(a.det(), b.det()));
        CHECK(FieldMatrix::identity(F, n).det() == F.one());
        if (n >= 2) {
            // Duplicate a row: determinant vanishes.
            auto c = a;
            for (std::size_t j = 0; j < n; ++j) c.at(1, j) = c.at(0, j);
            CHECK(F.is_zero(c.det()));
        }
    }
}

TEST_CASE("vandermonde matrices have the known determinant") {
    auto F = FieldContext::prime_field(13);
    DetRng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng.next_below(5);
        auto xs = rng.sample_distinct(F.q(), n);
        std::vector<FieldElement> pts;
        for (auto x : xs) pts.push_back(F.element(x));
        auto V = FieldMatrix::vandermonde(F, n, pts);
        FieldElement expect = F.one();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                expect = F.mul(expect, F.sub(pts[j], pts[i]));
        CHECK(V.transpose().det() == expect);
        CHECK_FALSE(F.is_zero(V.det()));  // distinct points, full rank
    }
}

TEST_CASE("inverse round trips and refuses singular input") {
    auto F = FieldContext::prime_field(101);
    DetRng rng(19);
    int invertible = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.next_below(5);
        auto a = rand_matrix(F, rng, n, n);
        auto inv = a.inverse();
        if (F.is_zero(a.det())) {
            CHECK_FALSE(inv.has_value());
        } else {
            ++invertible;
            REQUIRE(inv.has_value());
            CHECK(a.mul(*inv) == FieldMatrix::identity(F, n));
            CHECK(inv->mul(a) == FieldMatrix::identity(F, n));
        }
    }
    CHECK(invertible > 50);
}

TEST_CASE("rank agrees with determinant on square matrices") {
    auto F = FieldContext::prime_field(5);
    DetRng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng.next_below(4);
        auto a = rand_matrix(F, rng, n, n);
        if (F.is_zero(a.det()))
            CHECK(a.rank() < n);
        else
            CHECK(a.rank() == n);
        CHECK(a.rank() == a.transpose().rank());
    }
    FieldMatrix z(F, 3, 4);
    CHECK(z.rank() == 0);
    CHECK(z.is_zero());
}

TEST_CASE("rank of a product of rectangular factors is bounded") {
    auto F = FieldContext::prime_field(7);
    DetRng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng.next_below(4);
        std::size_t m = 1 + rng.next_below(4);
        std::size_t c = 1 + rng.next_below(4);
        auto a = rand_matrix(F, rng, r, m);
        auto b = rand_matrix(F, rng, m, c);
        CHECK(a.mul(b).rank() <= std::min(a.rank(), b.rank()));
    }
}

TEST_CASE("left nullspace vector certifies row dependence") {
    auto F = FieldContext::prime_field(11);
    DetRng rng(31);
    int dependent = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = 1 + rng.next_below(5);
        std::size_t c = 1 + rng.next_below(5);
        auto a = rand_matrix(F, rng, r, c);
        auto y = a.left_nullspace_vector();
        if (a.rank() == r) {
            CHECK_FALSE(y.has_value());
            continue;
        }
        ++dependent;
        REQUIRE(y.has_value());
        bool nonzero = false;
        for (auto x : *y) nonzero = nonzero || x.v != 0;
        CHECK(nonzero);
        auto prod = a.left_mul(*y);
        for (auto x : prod) CHECK(F.is_zero(x));
    }
    CHECK(dependent > 20);
}

TEST_CASE("left nullspace is deterministic") {
    auto F = FieldContext::prime_field(7);
    FieldMatrix a(F, 3, 2);
    // Rows: (1,2), (2,4), (3,6): all multiples of the first.
    for (std::size_t i = 0; i < 3; ++i) {
        a.at(i, 0) = F.element(i + 1);
        a.at(i, 1) = F.element((2 * (i + 1)) % 7);
    }
    auto y1 = a.left_nullspace_vector();
    auto y2 = a.left_nullspace_vector();
    REQUIRE(y1.has_value());
    CHECK(*y1 == *y2);
}

TEST_CASE("left_mul matches explicit row combination") {
    auto F = FieldContext::prime_field(13);
    DetRng rng(37);
    auto a = rand_matrix(F, rng, 3, 5);
    std::vector<FieldElement> v = {F.element(2), F.element(0), F.element(5)};
    auto got = a.left_mul(v);
    for (std::size_t j = 0; j < 5; ++j) {
        FieldElement want = F.add(F.mul(v[0], a.at(0, j)),
                                  F.mul(v[2], a.at(2, j)));
        CHECK(got[j] == want);
    }
}
