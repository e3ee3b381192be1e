#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "qhpp/cyclotomic.hpp"
#include "qhpp/rational.hpp"

namespace qhpp {

// Coefficient of r_i in the averaged holomorphic fixed-point formula for a
// prime-order automorphism:
//
//   a_i = (1/(p-1)) sum_{j=1}^{p-1} 1/((1 - z^j)(1 - z^{ij})),  z = zeta_p.
//
// The sum is Galois-invariant, so it lands in Q; closed forms for the first
// two are a_1 = (5-p)/12 and a_2 = (11-p)/24.
inline std::vector<Rational> lefschetz_coefficients(int p) {
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("order must be an odd prime");
    // The j-th summand is the j-th Galois conjugate of the first, since
    // conj_j maps (1-z)^{-1}(1-z^i)^{-1} to (1-z^j)^{-1}(1-z^{ij})^{-1}.
    // Summing the conjugates of one product evaluates the whole sum; the
    // result must reduce to its constant coefficient.
    Cyclotomic inv1 = cyclotomic_inverse(Cyclotomic(p, Rational(1)) - Cyclotomic::zeta(p));
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(p - 1));
    for (int i = 1; i < p; ++i) {
        Cyclotomic base = inv1 * inv1.conjugate(i);
        Cyclotomic sum = base;
        for (int j = 2; j < p; ++j) sum += base.conjugate(j);
        out.push_back(sum.rational_part() / (p - 1));
    }
    return out;
}

inline Rational lefschetz_coefficient(int p, int i) {
    if (i < 1 || i >= p) throw std::invalid_argument("coefficient index must lie in 1..p-1");
    return lefschetz_coefficients(p)[static_cast<std::size_t>(i - 1)];
}

// Euler number of the fixed locus from the alternating sum of cohomology
// traces. Input: one (degree, trace) pair per degree 0..m.
inline std::int64_t euler_of_fixed_locus(std::vector<std::pair<int, std::int64_t>> traces) {
    std::sort(traces.begin(), traces.end());
    for (std::size_t d = 0; d < traces.size(); ++d)
        if (traces[d].first != static_cast<int>(d))
            throw std::invalid_argument("traces must cover degrees 0..m exactly once");
    std::int64_t e = 0;
    for (const auto& [degree, trace] : traces) e += (degree % 2 == 0) ? trace : -trace;
    return e;
}

// Trace of the i-th power of the automorphism on a Hodge piece whose
// eigenvalues are the listed powers of zeta_p.
inline Cyclotomic trace_of_eigenvalues(int p, const std::vector<int>& exponents, int power) {
    Cyclotomic t(p);
    for (int e : exponents) t += Cyclotomic::zeta(p, static_cast<std::int64_t>(e) * power);
    return t;
}

// Left-hand side of the averaged holomorphic formula:
// (1/(p-1)) sum_i (1 - tr sigma^i|H^{0,1} + tr sigma^i|H^{0,2}).
// Galois-consistent inputs always average to a rational number.
inline Rational averaged_holomorphic_trace(int p, const std::vector<Cyclotomic>& tr_h01_powers,
                                           const std::vector<Cyclotomic>& tr_h02_powers) {
    if (tr_h01_powers.size() != static_cast<std::size_t>(p - 1) ||
        tr_h02_powers.size() != static_cast<std::size_t>(p - 1))
        throw std::invalid_argument("trace lists must have length p-1");
    Cyclotomic sum(p);
    for (int i = 0; i < p - 1; ++i) {
        sum += Cyclotomic(p, Rational(1));
        sum -= tr_h01_powers[static_cast<std::size_t>(i)];
        sum += tr_h02_powers[static_cast<std::size_t>(i)];
    }
    return sum.rational_part() / (p - 1);
}

inline Rational averaged_holomorphic_trace_from_exponents(int p, const std::vector<int>& h01,
                                                          const std::vector<int>& h02) {
    std::vector<Cyclotomic> t01, t02;
    for (int i = 1; i < p; ++i) {
        t01.push_back(trace_of_eigenvalues(p, h01, i));
        t02.push_back(trace_of_eigenvalues(p, h02, i));
    }
    return averaged_holomorphic_trace(p, t01, t02);
}

// A 1-dimensional component of the fixed locus enters the averaged formula
// through the closed term (1 - g)/2 + (p + 1) R^2 / 12.
struct FixedCurve {
    std::int64_t genus = 0;
    std::int64_t self_square = 0;
};

struct LefschetzProblem {
    int p = 3;
    Rational lhs;                  // averaged holomorphic side
    std::int64_t total_isolated = 0; // e(fixed locus) minus the curve contribution
    std::vector<FixedCurve> curves;
};

// r_i = number of isolated fixed points of local type 1/p(1,i).
struct LefschetzSolution {
    std::vector<std::int64_t> counts; // r_1 .. r_{p-1}

    bool operator==(const LefschetzSolution& o) const { return counts == o.counts; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            s += std::to_string(counts[i]);
            if (i + 1 < counts.size()) s += ",";
        }
        return s + ")";
    }
};

namespace detail {

inline void solve_fixed_points_rec(const std::vector<Rational>& coeff, std::size_t index,
                                   std::int64_t remaining, const Rational& needed,
                                   const Rational& suffix_min, const Rational& suffix_max,
                                   std::vector<std::int64_t>& current,
                                   std::vector<LefschetzSolution>& out) {
    if (index == coeff.size()) {
        if (remaining == 0 && needed == 0) out.push_back(LefschetzSolution{current});
        return;
    }
    // Bound pruning: whatever is still needed must be achievable with the
    // remaining point budget and the extreme coefficients of the suffix.
    if (needed > suffix_max * remaining || needed < suffix_min * remaining) return;

    Rational next_min = suffix_min, next_max = suffix_max;
    if (index + 1 < coeff.size()) {
        next_min = coeff[index + 1];
        next_max = coeff[index + 1];
        for (std::size_t k = index + 2; k < coeff.size(); ++k) {
            next_min = std::min(next_min, coeff[k]);
            next_max = std::max(next_max, coeff[k]);
        }
    }
    for (std::int64_t r = 0; r <= remaining; ++r) {
        current[index] = r;
        solve_fixed_points_rec(coeff, index + 1, remaining - r, needed - coeff[index] * r,
                               next_min, next_max, current, out);
    }
    current[index] = 0;
}

} // namespace detail

// All nonnegative integer vectors r with sum r_i = total_isolated and
// sum a_i r_i + curve terms = lhs, in ascending lexicographic order.
inline std::vector<LefschetzSolution> solve_fixed_points(const LefschetzProblem& prob) {
    if (prob.total_isolated < 0) throw std::invalid_argument("total_isolated must be nonnegative");
    std::vector<Rational> coeff = lefschetz_coefficients(prob.p);
    Rational needed = prob.lhs;
    for (const auto& curve : prob.curves)
        needed -= Rational(1 - curve.genus, 2) + Rational((prob.p + 1) * curve.self_square, 12);

    Rational lo = coeff[0], hi = coeff[0];
    for (const auto& c : coeff) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    std::vector<std::int64_t> current(coeff.size(), 0);
    std::vector<LefschetzSolution> out;
    detail::solve_fixed_points_rec(coeff, 0, prob.total_isolated, needed, lo, hi, current, out);
    return out; // recursion emits in ascending lexicographic order already
}

// One consistent assignment of eigenvalues and integer traces for a
// prime-order automorphism acting on the Hodge pieces of a surface.
// Eigenvalue multisets are recorded by their zeta-exponents; cases that are
// indistinguishable on traces and quotient invariants are merged.
struct HodgeTraceCase {
    std::vector<int> h01_exponents;
    std::vector<int> h02_exponents;
    std::int64_t tr_h1 = 0;     // trace on H^1 = H^{0,1} + conjugate
    std::int64_t tr_h2 = 0;     // trace on H^2 = H^{2,0} + H^{1,1} + H^{0,2}
    std::int64_t tr_h11 = 0;
    std::int64_t euler_fixed = 0;
    std::int64_t quotient_pg = 0;
    std::int64_t quotient_q = 0;
    std::int64_t invariant_h2_rank = 0; // b_2 of the quotient when its pg vanishes
};

namespace detail {

inline void exponent_multisets(int p, int size, int start, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int e = start; e < p; ++e) {
        cur.push_back(e);
        exponent_multisets(p, size, e, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// Enumerates the Galois-consistent trace cases: eigenvalue multisets on
// H^{0,1} (size q) and H^{0,2} (size pg) whose H^1 and H^{2,0}+H^{0,2}
// traces are integers, combined with every decomposition of the non-forced
// part of H^{1,1} into invariant classes and full primitive orbits. With
// forbid_free_action, cases with vanishing fixed-locus Euler number drop.
inline std::vector<HodgeTraceCase> enumerate_hodge_trace_cases(int p, std::int64_t pg, std::int64_t q,
                                                               std::int64_t h11_rank,
                                                               std::int64_t forced_invariant_h11,
                                                               bool forbid_free_action) {
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("order must be an odd prime");
    if (h11_rank < forced_invariant_h11 || forced_invariant_h11 < 0)
        throw std::invalid_argument("h11_rank must dominate the forced invariant count");

    std::vector<std::vector<int>> h01_sets, h02_sets;
    std::vector<int> cur;
    detail::exponent_multisets(p, static_cast<int>(q), 0, cur, h01_sets);
    detail::exponent_multisets(p, static_cast<int>(pg), 0, cur, h02_sets);

    auto real_trace = [&](const std::vector<int>& exps) -> std::pair<bool, std::int64_t> {
        // trace on the real piece: sum over eigenvalues of (zeta^e + zeta^-e)
        Cyclotomic t(p);
        for (int e : exps) {
            t += Cyclotomic::zeta(p, e);
            t += Cyclotomic::zeta(p, -e);
        }
        if (!t.is_rational()) return {false, 0};
        Rational r = t.rational_part();
        return {true, static_cast<std::int64_t>(num(r))}; // sums of roots of unity: an integer
    };

    std::vector<HodgeTraceCase> cases;
    for (const auto& h01 : h01_sets) {
        auto [ok1, t1] = real_trace(h01);
        if (!ok1) continue;
        for (const auto& h02 : h02_sets) {
            auto [ok2, t2_hodge] = real_trace(h02);
            if (!ok2) continue;
            std::int64_t m = h11_rank - forced_invariant_h11;
            for (std::int64_t orbits = 0; orbits * (p - 1) <= m; ++orbits) {
                std::int64_t extra_inv = m - orbits * (p - 1);
                std::int64_t tr11 = forced_invariant_h11 + extra_inv - orbits;
                HodgeTraceCase c;
                c.h01_exponents = h01;
                c.h02_exponents = h02;
                c.tr_h1 = t1;
                c.tr_h11 = tr11;
                c.tr_h2 = t2_hodge + tr11;
                c.euler_fixed = 2 - 2 * c.tr_h1 + c.tr_h2; // tr on H^3 equals tr on H^1
                c.quotient_pg = static_cast<std::int64_t>(std::count(h02.begin(), h02.end(), 0));
                c.quotient_q = static_cast<std::int64_t>(std::count(h01.begin(), h01.end(), 0));
                c.invariant_h2_rank = 2 * c.quotient_pg + forced_invariant_h11 + extra_inv;
                if (forbid_free_action && c.euler_fixed == 0) continue;
                cases.push_back(std::move(c));
            }
        }
    }

    auto key = [](const HodgeTraceCase& c) {
        return std::make_tuple(c.quotient_pg, c.quotient_q, c.tr_h1, c.tr_h2, c.tr_h11,
                               c.euler_fixed, c.invariant_h2_rank);
    };
    std::sort(cases.begin(), cases.end(), [&](const HodgeTraceCase& a, const HodgeTraceCase& b) {
        if (key(a) != key(b)) return key(a) < key(b);
        return std::make_pair(a.h01_exponents, a.h02_exponents) <
               std::make_pair(b.h01_exponents, b.h02_exponents);
    });
    cases.erase(std::unique(cases.begin(), cases.end(),
                            [&](const HodgeTraceCase& a, const HodgeTraceCase& b) {
                                return key(a) == key(b);
                            }),
                cases.end());
    return cases;
}

} // namespace qhpp
