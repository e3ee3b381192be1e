#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhpp/singularity.hpp"

namespace qhpp {

// Numerical record of a normal projective surface with cyclic quotient
// singularities, carried through its minimal resolution: K^2 and the
// topological Euler number of the resolution, the holomorphic invariants
// p_g and q, and the list of singular points. The ledger records
// hypotheses and derives consequences; it does not compute p_g or q from
// geometry.
struct SurfaceLedger {
    std::string label;
    Rational resolution_k2;
    std::int64_t resolution_e = 0;
    std::int64_t pg = 0;
    std::int64_t q = 0;
    std::vector<CyclicQuotientSingularity> singularities;

    SurfaceLedger(std::string label_, Rational k2, std::int64_t e, std::int64_t pg_, std::int64_t q_,
                  std::vector<CyclicQuotientSingularity> sing = {})
        : label(std::move(label_)),
          resolution_k2(std::move(k2)),
          resolution_e(e),
          pg(pg_),
          q(q_),
          singularities(std::move(sing)) {
        if (pg < 0 || q < 0) throw std::invalid_argument("ledger: pg and q must be nonnegative");
        // Noether identity on the smooth resolution.
        if (resolution_k2 + resolution_e != Rational(12) * (1 - q + pg))
            throw std::invalid_argument("ledger '" + label + "': K^2 + e != 12(1 - q + pg)");
    }

    std::int64_t total_exceptional_curves() const {
        std::int64_t total = 0;
        for (const auto& s : singularities) total += hj_resolve(s).length();
        return total;
    }

    // Second Betti number of the resolution; only meaningful with pg = q = 0,
    // where b_1 = b_3 = 0 and b_2 = e - 2.
    std::int64_t resolution_b2() const {
        if (pg != 0 || q != 0)
            throw std::invalid_argument("b2 bookkeeping requires pg = q = 0");
        return resolution_e - 2;
    }
};

struct DerivedInvariants {
    Rational k2_singular;        // K^2 of the singular surface
    std::int64_t e_singular;     // Euler number of the singular surface
    std::int64_t e_smooth_part;  // Euler number of the smooth locus
};

// K^2 gains back the discrepancy self-squares; each chain of m curves has
// Euler number m + 1 and collapses to a point.
inline DerivedInvariants derived_invariants(const SurfaceLedger& ledger) {
    Rational k2 = ledger.resolution_k2;
    std::int64_t e_smooth = ledger.resolution_e;
    for (const auto& s : ledger.singularities) {
        auto chain = hj_resolve(s);
        k2 -= discrepancy(chain).self_square;
        e_smooth -= chain.length() + 1;
    }
    std::int64_t e_sing = e_smooth + static_cast<std::int64_t>(ledger.singularities.size());
    return DerivedInvariants{std::move(k2), e_sing, e_smooth};
}

// Checks the numerical signature of a Q-homology projective plane: b_2 of
// the singular surface equal to 1, positive K^2, and the square criterion
// (product of local group orders times K^2 a perfect square).
struct QhppReport {
    bool is_qhpp_candidate = false;
    std::int64_t b2_singular = 0;
    Integer square_criterion_value = 0;
    bool square_criterion_holds = false;
    bool square_criterion_applicable = false;
    bool rank_bookkeeping_applicable = false;
};

inline QhppReport qhpp_check(const SurfaceLedger& ledger) {
    QhppReport report;
    if (ledger.pg != 0 || ledger.q != 0) return report; // not a candidate, no b2 bookkeeping
    report.rank_bookkeeping_applicable = true;
    report.b2_singular = ledger.resolution_b2() - ledger.total_exceptional_curves();

    DerivedInvariants derived = derived_invariants(ledger);
    Integer order_product = 1;
    for (const auto& s : ledger.singularities) order_product *= s.order();
    Rational scaled = Rational(order_product) * derived.k2_singular;
    if (is_integer(scaled)) {
        report.square_criterion_applicable = true;
        report.square_criterion_value = num(scaled);
        report.square_criterion_holds = is_perfect_square(report.square_criterion_value);
    }
    report.is_qhpp_candidate = report.b2_singular == 1 && report.square_criterion_applicable &&
                               report.square_criterion_holds && derived.k2_singular > 0;
    return report;
}

// One row of the cusp-count scan: a surface with k cusps and K^2 = 9 - 2k
// contributes the product 3^k (9 - 2k).
struct CuspScanRow {
    int k;
    Integer value;
    bool is_square;
};

inline std::vector<CuspScanRow> cusp_count_scan(int kmax) {
    if (kmax < 1) throw std::invalid_argument("cusp_count_scan: kmax must be at least 1");
    std::vector<CuspScanRow> rows;
    Integer power = 3;
    for (int k = 1; k <= kmax; ++k) {
        Integer value = power * (9 - 2 * k);
        rows.push_back({k, value, is_perfect_square(value)});
        power *= 3;
    }
    return rows;
}

} // namespace qhpp
