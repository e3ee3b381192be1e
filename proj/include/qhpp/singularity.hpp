#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhpp/matrix.hpp"
#include "qhpp/rational.hpp"

namespace qhpp {

// Cyclic quotient singularity germ of type 1/n(1,q), normalized so that
// 2 <= n, 1 <= q < n and gcd(q, n) = 1. The order of the local abelianized
// fundamental group is n.
struct CyclicQuotientSingularity {
    std::int64_t n = 2;
    std::int64_t q = 1;

    CyclicQuotientSingularity(std::int64_t n_, std::int64_t q_) : n(n_), q(q_) {
        if (n < 2) throw std::invalid_argument("singularity order must be at least 2");
        q %= n;
        if (q < 0) q += n;
        if (q == 0 || gcd64(q, n) != 1)
            throw std::invalid_argument("singularity weight must be a unit mod n");
    }

    std::int64_t order() const { return n; }

    // The dual germ 1/n(1,q') with q*q' = 1 mod n: same singularity up to
    // swapping the coordinate axes, kept as a distinct label.
    CyclicQuotientSingularity dual() const { return {n, mod_inverse(q, n)}; }

    bool operator==(const CyclicQuotientSingularity& o) const { return n == o.n && q == o.q; }
    bool operator<(const CyclicQuotientSingularity& o) const {
        return n != o.n ? n < o.n : q < o.q;
    }

    std::string to_string() const {
        return "1/" + std::to_string(n) + "(1," + std::to_string(q) + ")";
    }
};

inline bool isomorphic_germ(const CyclicQuotientSingularity& a, const CyclicQuotientSingularity& b) {
    return a == b || a.dual() == b;
}

// Parses the literal syntax "1/7(1,5)". Malformed text raises ParseError;
// a well-formed literal with invalid (n, q) raises std::invalid_argument.
inline CyclicQuotientSingularity parse_singularity(const std::string& text) {
    const std::string bad = "not a singularity literal: '" + text + "'";
    auto open = text.find('(');
    auto comma = text.find(',');
    auto close = text.find(')');
    if (text.size() < 8 || text.compare(0, 2, "1/") != 0 || open == std::string::npos ||
        comma == std::string::npos || close == std::string::npos || close + 1 != text.size() ||
        !(2 < open && open < comma && comma < close))
        throw ParseError(bad);
    if (text.substr(open + 1, comma - open - 1) != "1") throw ParseError(bad);
    std::int64_t n = 0, q = 0;
    try {
        n = std::stoll(text.substr(2, open - 2));
        q = std::stoll(text.substr(comma + 1, close - comma - 1));
    } catch (const std::exception&) {
        throw ParseError(bad);
    }
    return CyclicQuotientSingularity(n, q);
}

// Chain of exceptional rational curves with self-intersections b_i <= -2,
// intersecting transversally along a path. Intersection matrix is
// tridiagonal with diagonal b_i and off-diagonal 1; it is negative definite.
class ExceptionalChain {
public:
    explicit ExceptionalChain(std::vector<std::int64_t> self_intersections)
        : b_(std::move(self_intersections)) {
        if (b_.empty()) throw std::invalid_argument("exceptional chain must be nonempty");
        for (std::int64_t b : b_)
            if (b > -2) throw std::invalid_argument("chain self-intersections must be <= -2");
    }

    const std::vector<std::int64_t>& self_intersections() const { return b_; }
    int length() const { return static_cast<int>(b_.size()); }

    // The chain as a curve configuration: m rational curves glued along
    // m - 1 points has Euler number m + 1.
    std::int64_t euler() const { return length() + 1; }

    bool is_minus_two_chain() const {
        for (std::int64_t b : b_)
            if (b != -2) return false;
        return true;
    }

    IntMatrix intersection_matrix() const {
        int m = length();
        std::vector<Integer> e(static_cast<std::size_t>(m) * m, Integer(0));
        for (int i = 0; i < m; ++i) {
            e[static_cast<std::size_t>(i) * m + i] = b_[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                e[static_cast<std::size_t>(i) * m + i + 1] = 1;
                e[static_cast<std::size_t>(i + 1) * m + i] = 1;
            }
        }
        return IntMatrix(m, m, std::move(e));
    }

    // Determinant by the tridiagonal recurrence d_k = b_k d_{k-1} - d_{k-2}.
    Integer determinant() const {
        Integer prev(1), cur(b_[0]);
        for (std::size_t k = 1; k < b_.size(); ++k) {
            Integer next = Integer(b_[k]) * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }

    bool operator==(const ExceptionalChain& o) const { return b_ == o.b_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < b_.size(); ++k) {
            s += std::to_string(b_[k]);
            if (k + 1 < b_.size()) s += ",";
        }
        return s + ")";
    }

private:
    std::vector<std::int64_t> b_;
};

// A_m chain: m curves of self-intersection -2.
inline ExceptionalChain a_chain(int m) {
    if (m < 1) throw std::invalid_argument("a_chain: length must be positive");
    return ExceptionalChain(std::vector<std::int64_t>(static_cast<std::size_t>(m), -2));
}

// Minimal resolution of 1/n(1,q): the exceptional set is the chain of
// rational curves with self-intersections -b_i, where
// n/q = b_1 - 1/(b_2 - 1/(...)) is the negative-regular continued fraction.
inline ExceptionalChain hj_resolve(const CyclicQuotientSingularity& s) {
    std::vector<std::int64_t> b;
    std::int64_t a = s.n, c = s.q;
    while (c > 0) {
        std::int64_t step = (a + c - 1) / c; // ceil(a/c)
        b.push_back(-step);
        std::int64_t next = step * c - a;
        a = c;
        c = next;
    }
    return ExceptionalChain(std::move(b));
}

// Evaluates the negative-regular continued fraction of a chain; for the
// resolution of 1/n(1,q) this returns n/q.
inline Rational continued_fraction_value(const ExceptionalChain& chain) {
    const auto& b = chain.self_intersections();
    Rational x = -b.back();
    for (std::size_t k = b.size() - 1; k-- > 0;) x = Rational(-b[k]) - Rational(1) / x;
    return x;
}

// Effective fractional divisor D = sum a_j A_j on the exceptional chain
// measuring the failure of the canonical class to pull back; zero exactly
// for rational double points.
struct DiscrepancyDivisor {
    std::vector<Rational> coefficients;
    Rational self_square;

    bool is_zero() const {
        for (const auto& a : coefficients)
            if (a != 0) return false;
        return true;
    }
};

// Coefficients solve M a = (2 + b_j)_j, the intersection numbers forced by
// adjunction against each exceptional curve; self_square = a^T M a. The
// system is tridiagonal and negative definite, so plain forward/backward
// substitution is exact and never divides by zero.
inline DiscrepancyDivisor discrepancy(const ExceptionalChain& chain) {
    const auto& b = chain.self_intersections();
    std::size_t m = b.size();
    std::vector<Rational> rhs(m), upper(m), x(m);
    for (std::size_t j = 0; j < m; ++j) rhs[j] = Rational(2 + b[j]);

    Rational pivot(b[0]);
    upper[0] = Rational(1) / pivot;
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < m; ++i) {
        pivot = Rational(b[i]) - upper[i - 1];
        upper[i] = Rational(1) / pivot;
        x[i] = (rhs[i] - x[i - 1]) / pivot;
    }
    for (std::size_t i = m - 1; i-- > 0;) x[i] -= upper[i] * x[i + 1];

    Rational d2 = 0;
    for (std::size_t j = 0; j < m; ++j) d2 += x[j] * rhs[j]; // a^T (M a) = a^T rhs
    return DiscrepancyDivisor{std::move(x), d2};
}

inline DiscrepancyDivisor discrepancy(const CyclicQuotientSingularity& s) {
    return discrepancy(hj_resolve(s));
}

// Type A_{n-1}, i.e. q = n - 1: the discrepancy divisor vanishes.
inline bool is_rational_double_point(const CyclicQuotientSingularity& s) {
    return s.q == s.n - 1;
}

} // namespace qhpp
