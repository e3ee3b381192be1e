#include <catch2/catch_amalgamated.hpp>

#include "qhpp/covers.hpp"

using namespace qhpp;

namespace {

const CyclicQuotientSingularity kCusp{3, 2};
const CyclicQuotientSingularity kSeven{7, 5};

} // namespace

TEST_CASE("cover invariants") {
    SECTION("three cusps, triple cover branched everywhere") {
        SurfaceLedger z("Z", Rational(3), 9, 0, 0, {kCusp, kCusp, kCusp});
        auto x = cover_invariants({z, 3, {0, 1, 2}, {std::nullopt, std::nullopt, std::nullopt}, 0, 0, "X"});
        REQUIRE(x.resolution_k2 == 9);
        REQUIRE(x.resolution_e == 3);
        REQUIRE(x.singularities.empty());
    }
    SECTION("four cusps, triple cover branched at three") {
        SurfaceLedger z("Z", Rational(1), 11, 0, 0, {kCusp, kCusp, kCusp, kCusp});
        auto y = cover_invariants({z, 3, {0, 1, 2}, {std::nullopt, std::nullopt, std::nullopt}, 0, 0, "Y"});
        REQUIRE(y.resolution_k2 == 3);
        REQUIRE(y.resolution_e == 9);
        REQUIRE(y.singularities == std::vector<CyclicQuotientSingularity>{kCusp, kCusp, kCusp});
        // second stage lands on the projective-plane numbers
        auto x = cover_invariants({y, 3, {0, 1, 2}, {}, 0, 0, "X"});
        REQUIRE(x.resolution_k2 == 9);
        REQUIRE(x.resolution_e == 3);
        REQUIRE(x.singularities.empty());
    }
    SECTION("degree 1 is the identity") {
        SurfaceLedger z("Z", Rational(3), 9, 0, 0, {kCusp, kCusp, kCusp});
        auto same = cover_invariants({z, 1, {}, {}, 0, 0, ""});
        REQUIRE(same.resolution_k2 == z.resolution_k2);
        REQUIRE(same.resolution_e == z.resolution_e);
        REQUIRE(same.singularities == z.singularities);
    }
    SECTION("elliptic stage: cusps branched, a 1/7(1,5) point triples") {
        SurfaceLedger z("Z", Rational(0), 12, 0, 0, {kCusp, kCusp, kCusp, kSeven});
        auto y = cover_invariants({z, 3, {0, 1, 2}, {}, 0, 0, "Y"});
        REQUIRE(y.resolution_k2 == 0);
        REQUIRE(y.resolution_e == 12);
        REQUIRE(y.singularities == std::vector<CyclicQuotientSingularity>{kSeven, kSeven, kSeven});
        // then the degree-7 cover closes the chain
        auto x = cover_invariants({y, 7, {0, 1, 2}, {}, 0, 0, "X"});
        REQUIRE(x.resolution_k2 == 9);
        REQUIRE(x.resolution_e == 3);
        REQUIRE(x.singularities.empty());
    }
    SECTION("degree-7 cover of three 1/7(1,5) points") {
        SurfaceLedger z("Z", Rational(0), 12, 0, 0, {kSeven, kSeven, kSeven});
        REQUIRE(derived_invariants(z).k2_singular == Rational(9, 7));
        auto x = cover_invariants({z, 7, {0, 1, 2}, {}, 0, 0, "X"});
        REQUIRE(x.resolution_k2 == 9);
        REQUIRE(x.resolution_e == 3);
        REQUIRE(x.singularities.empty());
    }
    SECTION("branch mismatch: wrong preimage type") {
        SurfaceLedger z("Z", Rational(3), 9, 0, 0, {kCusp, kCusp, kCusp});
        CoverSpec bad{z, 3, {0, 1, 2}, {kCusp, kCusp, kCusp}, 0, 0, "X"};
        REQUIRE_THROWS_AS(cover_invariants(bad), BranchMismatch);
    }
    SECTION("branch mismatch: degree does not divide the local order") {
        SurfaceLedger z("Z", Rational(0), 12, 0, 0, {kSeven, kSeven, kSeven});
        REQUIRE_THROWS_AS(cover_invariants({z, 3, {0, 1, 2}, {}, 0, 0, ""}), BranchMismatch);
    }
    SECTION("argument validation") {
        SurfaceLedger z("Z", Rational(3), 9, 0, 0, {kCusp, kCusp, kCusp});
        REQUIRE_THROWS_AS(cover_invariants({z, 4, {0}, {}, 0, 0, ""}), std::invalid_argument);
        REQUIRE_THROWS_AS(cover_invariants({z, 3, {0, 0, 1}, {}, 0, 0, ""}), std::invalid_argument);
        REQUIRE_THROWS_AS(cover_invariants({z, 3, {5}, {}, 0, 0, ""}), std::invalid_argument);
    }
    SECTION("euler transport identity against stratified bookkeeping") {
        SurfaceLedger z("Z", Rational(1), 11, 0, 0, {kCusp, kCusp, kCusp, kCusp});
        auto base = derived_invariants(z);
        auto y = cover_invariants({z, 3, {0, 1, 2}, {}, 0, 0, "Y"});
        auto up = derived_invariants(y);
        std::int64_t branch = 3;
        // route 1: e(total) = n (e(base) - branch) + branch
        REQUIRE(up.e_singular == 3 * (base.e_singular - branch) + branch);
        // route 2: stratified, through the smooth locus
        std::int64_t unbranched = 1;
        REQUIRE(up.e_singular == 3 * base.e_smooth_part + branch + 3 * unbranched);
    }
    SECTION("chi consistency on both ends whenever pg = q = 0") {
        SurfaceLedger z("Z", Rational(1), 11, 0, 0, {kCusp, kCusp, kCusp, kCusp});
        auto y = cover_invariants({z, 3, {0, 1, 2}, {}, 0, 0, "Y"});
        REQUIRE(z.resolution_k2 + z.resolution_e == 12);
        REQUIRE(y.resolution_k2 + y.resolution_e == 12);
    }
}

TEST_CASE("quotient invariants") {
    SECTION("composite quotient: second stage adds a fourth cusp") {
        SurfaceLedger z1("Z1", Rational(3), 9, 0, 0, {kCusp, kCusp, kCusp});
        auto z2 = quotient_invariants({z1, 3, {kCusp, kCusp, kCusp}, 0, 0, "Z2"});
        REQUIRE(z2.resolution_k2 == 1);
        REQUIRE(z2.resolution_e == 11);
        REQUIRE(z2.singularities.size() == 4);
        for (const auto& s : z2.singularities) REQUIRE(s == kCusp);
    }
    SECTION("orbits must be free") {
        SurfaceLedger z1("Z1", Rational(3), 9, 0, 0, {kCusp, kCusp});
        REQUIRE_THROWS_AS(quotient_invariants({z1, 3, {}, 0, 0, ""}), BranchMismatch);
        SurfaceLedger z2("Z2", Rational(1), 11, 0, 0, {kCusp, kCusp, kCusp, kCusp});
        REQUIRE_THROWS_AS(quotient_invariants({z2, 3, {kCusp}, 0, 0, ""}), BranchMismatch);
    }
}

TEST_CASE("discriminant certificates") {
    SECTION("three A2 chains in rank 7") {
        auto cert = discriminant_certificate(3, {a_chain(2), a_chain(2), a_chain(2)}, 7);
        REQUIRE(cert.elementary_divisors == std::vector<Integer>{3, 3, 3});
        REQUIRE(cert.is_p_elementary);
        REQUIRE(cert.length == 3);
        REQUIRE(cert.complement_rank == 1);
        REQUIRE(cert.glue_required);
        REQUIRE(divisors_to_string(cert.elementary_divisors) == "(3,3,3)");
    }
    SECTION("four A2 chains in rank 9") {
        auto cert = discriminant_certificate(3, {a_chain(2), a_chain(2), a_chain(2), a_chain(2)}, 9);
        REQUIRE(cert.length == 4);
        REQUIRE(cert.is_p_elementary);
        REQUIRE(cert.complement_rank == 1);
        REQUIRE(cert.glue_required);
    }
    SECTION("three 1/7(1,5) chains in rank 10") {
        auto chain = hj_resolve(kSeven);
        auto cert = discriminant_certificate(7, {chain, chain, chain}, 10);
        REQUIRE(cert.elementary_divisors == std::vector<Integer>{7, 7, 7});
        REQUIRE(cert.is_p_elementary);
        REQUIRE(cert.length == 3);
        REQUIRE(cert.complement_rank == 1);
        REQUIRE(cert.glue_required);
        REQUIRE(cert.notes.size() == 2);
    }
    SECTION("mixed determinants are not p-elementary") {
        // A2 + A3 has discriminant group Z/3 + Z/4 = Z/12, one invariant factor
        auto cert = discriminant_certificate(3, {a_chain(2), a_chain(3)}, 7);
        REQUIRE(cert.elementary_divisors == std::vector<Integer>{12});
        REQUIRE_FALSE(cert.is_p_elementary);
        REQUIRE(cert.length == 1);
    }
    SECTION("glue requirement is monotone in the chain count") {
        std::vector<ExceptionalChain> chains;
        bool seen_glue = false;
        for (int k = 1; k <= 5; ++k) {
            chains.push_back(a_chain(2));
            auto cert = discriminant_certificate(3, {chains}, 20);
            if (seen_glue) REQUIRE(cert.glue_required);
            seen_glue = cert.glue_required;
        }
    }
    SECTION("ambient rank must leave room for the complement") {
        REQUIRE_THROWS_AS(discriminant_certificate(3, {a_chain(2)}, 2), std::invalid_argument);
    }
}

TEST_CASE("projective plane quotients") {
    SECTION("diagonal action with distinct weights") {
        auto z = p2_quotient_analysis(MonomialAction::diagonal(0, 1, 2));
        REQUIRE(z.singularities.size() == 3);
        for (const auto& s : z.singularities) REQUIRE(s == kCusp);
        REQUIRE(z.resolution_k2 == 3);
        REQUIRE(z.resolution_e == 9);
        auto d = derived_invariants(z);
        REQUIRE(d.k2_singular == 3);
        REQUIRE(d.e_singular == 3);
        REQUIRE(qhpp_check(z).is_qhpp_candidate);
    }
    SECTION("identity action returns the plane itself") {
        auto p2 = p2_quotient_analysis(MonomialAction::identity());
        REQUIRE(p2.resolution_k2 == 9);
        REQUIRE(p2.resolution_e == 3);
        REQUIRE(p2.singularities.empty());
    }
    SECTION("coordinate 3-cycle") {
        auto z = p2_quotient_analysis(MonomialAction::cyclic_permutation());
        REQUIRE(z.singularities.size() == 3);
        for (const auto& s : z.singularities) REQUIRE(s == kCusp);
        REQUIRE(z.resolution_k2 == 3);
        REQUIRE(z.resolution_e == 9);
    }
    SECTION("two-stage quotient gives the four-cusp surface") {
        auto z1 = p2_quotient_analysis(MonomialAction::diagonal(0, 1, 2));
        auto z2 = quotient_invariants({z1, 3, {kCusp, kCusp, kCusp}, 0, 0, "P2/(C3xC3)"});
        REQUIRE(z2.resolution_k2 == 1);
        REQUIRE(z2.resolution_e == 11);
        REQUIRE(z2.singularities.size() == 4);
        REQUIRE(qhpp_check(z2).is_qhpp_candidate);
    }
    SECTION("unsupported actions") {
        REQUIRE_THROWS_AS(p2_quotient_analysis(MonomialAction::diagonal(0, 0, 1)), UnsupportedAction);
        MonomialAction order5 = MonomialAction::diagonal(0, 1, 2);
        order5.order = 5;
        REQUIRE_THROWS_AS(p2_quotient_analysis(order5), UnsupportedAction);
    }
}
