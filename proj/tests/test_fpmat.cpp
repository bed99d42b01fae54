#include "doctest.h"
#include "semidual/fpmat.hpp"

using namespace semidual;

TEST_CASE("field inverse") {
    for (int p : {2, 3, 5})
        for (int a = 1; a < p; ++a)
            CHECK(a * fp_inv(a, p) % p == 1);
}

TEST_CASE("rref rank on a known matrix") {
    FpMat m(3, 3, 3);
    m.set(0, 0, 1); m.set(0, 1, 2); m.set(0, 2, 0);
    m.set(1, 0, 0); m.set(1, 1, 1); m.set(1, 2, 1);
    m.set(2, 0, 0); m.set(2, 1, 0); m.set(2, 2, 2);
    CHECK(m.rank() == 3);
    FpMat s = m;
    s.set(2, 0, 0); s.set(2, 1, 0); s.set(2, 2, 0);
    CHECK(s.rank() == 2);
}

TEST_CASE("kernel basis annihilates and has identity structure") {
    std::mt19937_64 rng(5);
    for (int p : {2, 3, 5})
        for (int trial = 0; trial < 20; ++trial) {
            FpMat m = random_matrix(4, 7, p, rng);
            std::vector<int> free_cols;
            FpMat k = m.kernel_basis(&free_cols);
            CHECK(k.rows() == 7 - m.rank());
            CHECK(int(free_cols.size()) == k.rows());
            for (int r = 0; r < k.rows(); ++r) {
                FpVec v(7);
                for (int c = 0; c < 7; ++c)
                    v[c] = k(r, c);
                for (uint8_t x : m.apply(v))
                    CHECK(x == 0);
                for (int r2 = 0; r2 < k.rows(); ++r2)
                    CHECK(int(k(r2, free_cols[r])) == (r == r2 ? 1 : 0));
            }
        }
}

TEST_CASE("inverse round trip") {
    std::mt19937_64 rng(11);
    for (int p : {2, 3, 5}) {
        int found = 0;
        for (int trial = 0; trial < 50 && found < 5; ++trial) {
            FpMat m = random_matrix(4, 4, p, rng);
            auto inv = m.inverse();
            if (!inv)
                continue;
            ++found;
            CHECK((*inv * m).is_identity());
            CHECK((m * *inv).is_identity());
        }
        CHECK(found == 5);
    }
}

TEST_CASE("row space insert and reduce") {
    RowSpace rs(3, 2);
    CHECK(rs.insert({1, 1, 0}));
    CHECK(rs.insert({0, 1, 1}));
    CHECK_FALSE(rs.insert({1, 0, 1})); // sum of the first two
    CHECK(rs.dim() == 2);
    CHECK(rs.contains({1, 0, 1}));
    CHECK_FALSE(rs.contains({1, 0, 0}));
    FpVec rem = rs.reduce({1, 1, 0});
    for (uint8_t x : rem)
        CHECK(x == 0);
}

TEST_CASE("matrix product against direct sum") {
    std::mt19937_64 rng(3);
    for (int p : {2, 3, 5}) {
        FpMat a = random_matrix(3, 4, p, rng);
        FpMat b = random_matrix(4, 2, p, rng);
        FpMat c = a * b;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) {
                int s = 0;
                for (int k = 0; k < 4; ++k)
                    s += a(i, k) * b(k, j);
                CHECK(int(c(i, j)) == s % p);
            }
    }
}
