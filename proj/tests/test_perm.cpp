#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "permlab/matcore.hpp"
#include "permlab/perm.hpp"

using namespace permlab;

TEST_CASE("per_naive on anchors") {
    for (int n = 2; n <= 6; ++n) CHECK(per_naive(MatQ::identity(n)) == Rat(1));
    MatQ ones(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones(i, j) = Rat(1);
    CHECK(per_naive(ones) == Rat(6));
    CHECK(per_naive(MatQ::uniform(4)) == Rat(3, 32));
}

TEST_CASE("per_ryser anchors and exact agreement") {
    CHECK(per_ryser(MatQ::uniform(6)) == Rat(5, 324));
    CHECK(per_ryser(MatQ::identity(5)) == Rat(1));
    for (int c = 0; c < 30; ++c) {
        const auto A = random_rational_matrix(5, 40 + c);
        CHECK(per_ryser(A) == per_naive(A));
    }
}

TEST_CASE("per_minor") {
    CHECK(per_minor(MatQ::uniform(4), 0, 0) == Rat(3, 32)); // 3x3 all-(1/4): 6/64
    CHECK(per_minor(MatQ::identity(4), 0, 0) == Rat(1));
    CHECK(per_minor(MatQ::identity(4), 0, 1) == Rat(0));
}

TEST_CASE("sigma_k") {
    SUBCASE("sigma_1 is the entry sum, sigma_n the permanent") {
        const auto A = random_birkhoff_exact(5, 4, 9);
        CHECK(sigma_k(A, 1) == Rat(5));
        CHECK(sigma_k(A, 5) == per_naive(A));
    }
    SUBCASE("sigma_2(J_4) = 9/2") {
        CHECK(sigma_k(MatQ::uniform(4), 2) == Rat(9, 2));
    }
    SUBCASE("closed form sigma_k(J_n) = C(n,k)^2 k!/n^k against enumeration") {
        for (int n = 2; n <= 6; ++n) {
            const auto J = MatQ::uniform(n);
            std::uint64_t npow = 1;
            for (int k = 1; k <= n; ++k) {
                npow *= static_cast<std::uint64_t>(n);
                const Rat expected = Rat(binomial(n, k) * binomial(n, k) * factorial(k), npow);
                CHECK(sigma_k(J, k) == expected);
                if (n <= 5) CHECK(oracles::sigma_enum(J, k) == expected);
            }
        }
    }
    SUBCASE("matches the naive enumeration oracle on random input") {
        for (int c = 0; c < 10; ++c) {
            const auto A = random_rational_matrix(5, 70 + c);
            for (int k = 1; k <= 5; ++k) CHECK(sigma_k(A, k) == oracles::sigma_enum(A, k));
        }
    }
}

TEST_CASE("laplace_expand") {
    CHECK(laplace_expand(MatQ::uniform(4), {0, 1}) == Rat(3, 32));
    CHECK(laplace_expand(MatQ::identity(4), {0}) == Rat(1));
    for (int c = 0; c < 20; ++c) {
        const auto A = random_rational_matrix(5, 110 + c);
        CHECK(laplace_expand(A, {1, 3}) == per_naive(A));
    }
}

TEST_CASE("three-way agreement per order") {
    for (int n : {3, 4, 5, 6}) {
        for (int c = 0; c < 20; ++c) {
            const auto A = random_rational_matrix(n, 1000 * n + c);
            const Rat p = per_naive(A);
            CHECK(per_ryser(A) == p);
            std::vector<int> alpha(n / 2);
            for (int i = 0; i < n / 2; ++i) alpha[i] = i;
            CHECK(laplace_expand(A, alpha) == p);
        }
    }
}

TEST_CASE("permanent invariances") {
    SUBCASE("row and column permutations") {
        Rng rng(31);
        const auto A = random_rational_matrix(5, 313);
        const Rat p = per_ryser(A);
        for (int c = 0; c < 100; ++c) {
            const auto pr = rng.permutation(5);
            const auto pc = rng.permutation(5);
            MatQ B(5);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) B(i, j) = A(pr[i], pc[j]);
            CHECK(per_ryser(B) == p);
        }
    }
    SUBCASE("multilinearity in a row") {
        for (int c = 0; c < 20; ++c) {
            auto A = random_rational_matrix(4, 400 + c);
            const auto U = random_rational_matrix(4, 500 + c);
            auto Au = A, Av = A;
            for (int j = 0; j < 4; ++j) {
                Au(2, j) = U(0, j);
                Av(2, j) = A(2, j) + U(0, j);
            }
            CHECK(per_naive(Av) == per_naive(A) + per_naive(Au));
        }
    }
}

TEST_CASE("s_k_mixed") {
    const auto A = random_rational_matrix(4, 81);
    const auto B = random_rational_matrix(4, 82);
    CHECK(s_k_mixed(A, B, 0) == per_ryser(B));
    CHECK(s_k_mixed(A, B, 4) == per_ryser(A));
    SUBCASE("sums to per(A+B)") {
        for (int n : {3, 4, 5}) {
            for (int c = 0; c < (n == 5 ? 5 : 20); ++c) {
                const auto X = random_rational_matrix(n, 600 + 10 * n + c);
                const auto Y = random_rational_matrix(n, 700 + 10 * n + c);
                Rat total(0);
                for (int k = 0; k <= n; ++k) total += s_k_mixed(X, Y, k);
                CHECK(total == per_naive(X + Y));
            }
        }
    }
}

TEST_CASE("per_convex_j") {
    SUBCASE("endpoints") {
        const auto A = random_birkhoff_exact(5, 6, 77);
        CHECK(per_convex_j(A, Rat(0)) == per_ryser(A));
        CHECK(per_convex_j(A, Rat(1)) == Rat(factorial(5), 5 * 5 * 5 * 5 * 5));
    }
    SUBCASE("matches Ryser on the blended matrix") {
        const auto I6 = MatD::identity(6);
        const double direct = per_ryser(convex_with_uniform(I6, 0.5));
        CHECK(std::abs(per_convex_j(I6, 0.5) - direct) <= 1e-12);
    }
    SUBCASE("rejects non doubly stochastic input") {
        CHECK_THROWS_AS(per_convex_j(random_kn(4, 3), 0.5), DomainError);
    }
}
