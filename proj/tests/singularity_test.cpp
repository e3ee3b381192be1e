#include <catch2/catch_amalgamated.hpp>

#include "qhpp/singularity.hpp"

using namespace qhpp;

TEST_CASE("singularity literals") {
    auto s = parse_singularity("1/7(1,5)");
    REQUIRE(s.n == 7);
    REQUIRE(s.q == 5);
    REQUIRE(s.to_string() == "1/7(1,5)");
    REQUIRE(parse_singularity("1/3(1,2)") == CyclicQuotientSingularity(3, 2));
    REQUIRE_THROWS_AS(parse_singularity("1/4(2,2)"), ParseError);
    REQUIRE_THROWS_AS(parse_singularity("3(1,2)"), ParseError);
    REQUIRE_THROWS_AS(parse_singularity("1/6(1,2)"), std::invalid_argument); // gcd(2,6) != 1
}

TEST_CASE("normalization and duality") {
    REQUIRE(CyclicQuotientSingularity(7, 12) == CyclicQuotientSingularity(7, 5));
    REQUIRE(CyclicQuotientSingularity(7, -2) == CyclicQuotientSingularity(7, 5));
    auto s = CyclicQuotientSingularity(7, 5);
    REQUIRE(s.dual() == CyclicQuotientSingularity(7, 3)); // 5*3 = 15 = 1 mod 7
    REQUIRE(isomorphic_germ(s, s.dual()));
    REQUIRE_FALSE(isomorphic_germ(s, CyclicQuotientSingularity(7, 2)));
    REQUIRE(isomorphic_germ(CyclicQuotientSingularity(3, 2), CyclicQuotientSingularity(3, 2)));
}

TEST_CASE("hirzebruch-jung resolution chains") {
    REQUIRE(hj_resolve({3, 2}) == ExceptionalChain({-2, -2}));
    REQUIRE(hj_resolve({7, 5}) == ExceptionalChain({-2, -2, -3}));
    REQUIRE(hj_resolve({3, 1}) == ExceptionalChain({-3}));
    REQUIRE(hj_resolve({2, 1}) == ExceptionalChain({-2}));
    REQUIRE(hj_resolve({7, 5}).to_string() == "(-2,-2,-3)");
}

TEST_CASE("chain determinants and intersection matrices") {
    auto chain = hj_resolve({7, 5});
    REQUIRE(chain.determinant() == -7);
    REQUIRE(chain.determinant() == chain.intersection_matrix().determinant());
    REQUIRE(chain.euler() == 4);
    REQUIRE(a_chain(2).intersection_matrix() ==
            IntMatrix(2, 2, {Integer(-2), Integer(1), Integer(1), Integer(-2)}));
    REQUIRE_THROWS_AS(ExceptionalChain({-2, -1}), std::invalid_argument);
}

TEST_CASE("roundtrip for all coprime pairs up to 200") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        for (std::int64_t q = 1; q < n; ++q) {
            if (gcd64(q, n) != 1) continue;
            CyclicQuotientSingularity s(n, q);
            auto chain = hj_resolve(s);
            REQUIRE(continued_fraction_value(chain) == Rational(n, q));
            REQUIRE(abs(chain.determinant()) == n);
            if (n <= 24) // spot-check the recurrence against general elimination
                REQUIRE(chain.intersection_matrix().determinant() == chain.determinant());
        }
    }
}

TEST_CASE("discrepancy divisors") {
    SECTION("rational double point has zero discrepancy") {
        auto d = discrepancy(a_chain(2));
        REQUIRE(d.coefficients == std::vector<Rational>{Rational(0), Rational(0)});
        REQUIRE(d.self_square == 0);
        REQUIRE(d.is_zero());
    }
    SECTION("the (-2,-2,-3) chain") {
        auto d = discrepancy(hj_resolve({7, 5}));
        REQUIRE(d.coefficients == std::vector<Rational>{Rational(1, 7), Rational(2, 7), Rational(3, 7)});
        REQUIRE(d.self_square == Rational(-3, 7));
    }
    SECTION("a single -3 curve") {
        auto d = discrepancy(hj_resolve({3, 1}));
        REQUIRE(d.coefficients == std::vector<Rational>{Rational(1, 3)});
        REQUIRE(d.self_square == Rational(-1, 3));
    }
    SECTION("agrees with the dense linear solver and the quadratic form") {
        for (std::int64_t n = 2; n <= 40; ++n) {
            for (std::int64_t q = 1; q < n; ++q) {
                if (gcd64(q, n) != 1) continue;
                auto chain = hj_resolve({n, q});
                std::vector<Rational> rhs;
                for (std::int64_t b : chain.self_intersections()) rhs.emplace_back(2 + b);
                auto dense = solve_linear_rational(chain.intersection_matrix(), rhs);
                auto d = discrepancy(chain);
                REQUIRE(d.coefficients == dense);
                // self square recomputed as a^T M a with the full matrix
                IntMatrix m = chain.intersection_matrix();
                Rational quad = 0;
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j)
                        quad += d.coefficients[static_cast<std::size_t>(i)] * Rational(m.at(i, j)) *
                                d.coefficients[static_cast<std::size_t>(j)];
                REQUIRE(d.self_square == quad);
            }
        }
    }
}

TEST_CASE("rational double point detection") {
    REQUIRE(is_rational_double_point({3, 2}));
    REQUIRE_FALSE(is_rational_double_point({7, 5}));
    REQUIRE(is_rational_double_point({2, 1}));
}

TEST_CASE("log-terminality and vanishing across all small germs") {
    for (std::int64_t n = 2; n <= 200; ++n) {
        for (std::int64_t q = 1; q < n; ++q) {
            if (gcd64(q, n) != 1) continue;
            auto chain = hj_resolve({n, q});
            auto d = discrepancy(chain);
            for (const auto& a : d.coefficients) {
                REQUIRE(a >= 0);
                REQUIRE(a < 1);
            }
            REQUIRE(d.self_square <= 0);
            REQUIRE(d.is_zero() == chain.is_minus_two_chain());
            REQUIRE(d.is_zero() == (d.self_square == 0));
            REQUIRE(d.is_zero() == is_rational_double_point({n, q}));
        }
    }
}
