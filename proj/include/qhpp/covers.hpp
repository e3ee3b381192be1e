#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhpp/ledger.hpp"
#include "qhpp/matrix.hpp"

namespace qhpp {

// Cyclic cover of prime degree branched exactly at a subset of the base
// singular points. Preimage types over branch points are declared inputs,
// validated by the Noether identity on the result; when the cover degree
// equals the local group order the preimage is smooth and may be omitted.
struct CoverSpec {
    SurfaceLedger base;
    int degree = 1;
    std::vector<int> branch_indices;
    // one entry per branch index; nullopt = smooth point upstairs
    std::vector<std::optional<CyclicQuotientSingularity>> preimage_types;
    std::int64_t result_pg = 0;
    std::int64_t result_q = 0;
    std::string label;
};

inline SurfaceLedger cover_invariants(const CoverSpec& spec) {
    const SurfaceLedger& base = spec.base;
    if (spec.degree == 1) {
        SurfaceLedger copy = base;
        if (!spec.label.empty()) copy.label = spec.label;
        return copy;
    }
    if (!is_prime(spec.degree)) throw std::invalid_argument("cover degree must be prime");
    if (!spec.preimage_types.empty() && spec.preimage_types.size() != spec.branch_indices.size())
        throw std::invalid_argument("one preimage type per branch point");

    std::vector<bool> branched(base.singularities.size(), false);
    for (int idx : spec.branch_indices) {
        if (idx < 0 || idx >= static_cast<int>(base.singularities.size()))
            throw std::invalid_argument("branch index out of range");
        if (branched[static_cast<std::size_t>(idx)])
            throw std::invalid_argument("duplicate branch index");
        branched[static_cast<std::size_t>(idx)] = true;
        const auto& s = base.singularities[static_cast<std::size_t>(idx)];
        if (s.order() % spec.degree != 0)
            throw BranchMismatch("cover of degree " + std::to_string(spec.degree) +
                                 " cannot be totally branched at " + s.to_string());
    }

    DerivedInvariants base_inv = derived_invariants(base);
    std::int64_t branch_count = static_cast<std::int64_t>(spec.branch_indices.size());

    // K^2 multiplies by the degree; the cover is etale away from the branch
    // points, each of which has a single preimage.
    Rational k2_total = Rational(spec.degree) * base_inv.k2_singular;
    std::int64_t e_total = spec.degree * (base_inv.e_singular - branch_count) + branch_count;

    std::vector<CyclicQuotientSingularity> upstairs;
    for (std::size_t k = 0; k < spec.branch_indices.size(); ++k) {
        std::optional<CyclicQuotientSingularity> declared;
        if (!spec.preimage_types.empty()) declared = spec.preimage_types[k];
        if (declared) upstairs.push_back(*declared);
    }
    for (std::size_t i = 0; i < base.singularities.size(); ++i)
        if (!branched[i])
            for (int copy = 0; copy < spec.degree; ++copy) upstairs.push_back(base.singularities[i]);
    std::sort(upstairs.begin(), upstairs.end());

    Rational resolution_k2 = k2_total;
    std::int64_t resolution_e = e_total;
    for (const auto& s : upstairs) {
        auto chain = hj_resolve(s);
        resolution_k2 += discrepancy(chain).self_square;
        resolution_e += chain.length();
    }
    if (!is_integer(resolution_k2) ||
        resolution_k2 + resolution_e != Rational(12) * (1 - spec.result_q + spec.result_pg))
        throw BranchMismatch("declared preimage types break the Noether identity: K^2 = " +
                             to_string(resolution_k2) + ", e = " + std::to_string(resolution_e));

    std::string label = spec.label.empty() ? base.label + "-cover" + std::to_string(spec.degree)
                                           : spec.label;
    return SurfaceLedger(label, resolution_k2, resolution_e, spec.result_pg, spec.result_q,
                         std::move(upstairs));
}

// The reverse transport: quotient of a surface by a prime-order action with
// declared isolated fixed points in the smooth locus; the existing singular
// points must fall into free orbits, each contributing one point downstairs.
struct QuotientSpec {
    SurfaceLedger total;
    int degree = 1;
    std::vector<CyclicQuotientSingularity> fixed_point_types;
    std::int64_t result_pg = 0;
    std::int64_t result_q = 0;
    std::string label;
};

inline SurfaceLedger quotient_invariants(const QuotientSpec& spec) {
    const SurfaceLedger& total = spec.total;
    if (spec.degree == 1) {
        SurfaceLedger copy = total;
        if (!spec.label.empty()) copy.label = spec.label;
        return copy;
    }
    if (!is_prime(spec.degree)) throw std::invalid_argument("quotient degree must be prime");

    DerivedInvariants total_inv = derived_invariants(total);
    std::int64_t fixed = static_cast<std::int64_t>(spec.fixed_point_types.size());

    std::map<CyclicQuotientSingularity, std::int64_t> counts;
    for (const auto& s : total.singularities) ++counts[s];
    std::vector<CyclicQuotientSingularity> downstairs = spec.fixed_point_types;
    for (const auto& [type, count] : counts) {
        if (count % spec.degree != 0)
            throw BranchMismatch("singular points of type " + type.to_string() +
                                 " do not fall into free orbits of size " +
                                 std::to_string(spec.degree));
        for (std::int64_t k = 0; k < count / spec.degree; ++k) downstairs.push_back(type);
    }
    std::sort(downstairs.begin(), downstairs.end());

    if ((total_inv.e_singular - fixed) % spec.degree != 0)
        throw BranchMismatch("Euler number of the free locus is not divisible by the degree");
    Rational k2_quot = total_inv.k2_singular / spec.degree;
    std::int64_t e_quot = (total_inv.e_singular - fixed) / spec.degree + fixed;

    Rational resolution_k2 = k2_quot;
    std::int64_t resolution_e = e_quot;
    for (const auto& s : downstairs) {
        auto chain = hj_resolve(s);
        resolution_k2 += discrepancy(chain).self_square;
        resolution_e += chain.length();
    }
    if (!is_integer(resolution_k2) ||
        resolution_k2 + resolution_e != Rational(12) * (1 - spec.result_q + spec.result_pg))
        throw BranchMismatch("declared fixed-point data breaks the Noether identity: K^2 = " +
                             to_string(resolution_k2) + ", e = " + std::to_string(resolution_e));

    std::string label = spec.label.empty() ? total.label + "/C" + std::to_string(spec.degree)
                                           : spec.label;
    return SurfaceLedger(label, resolution_k2, resolution_e, spec.result_pg, spec.result_q,
                         std::move(downstairs));
}

// Lattice-theoretic necessary conditions for the existence of the cover:
// elementary divisors of the exceptional intersection lattice, whether the
// discriminant group is p-elementary, and whether its length exceeds the
// rank of the orthogonal complement (which forces glue classes in the
// unimodular overlattice).
struct DiscriminantCertificate {
    IntMatrix exceptional_matrix;
    std::vector<Integer> elementary_divisors; // invariant factors != 1
    bool is_p_elementary = false;
    int length = 0;
    int complement_rank = 0;
    bool glue_required = false;
    std::vector<std::string> notes;
};

inline DiscriminantCertificate discriminant_certificate(int p, const std::vector<ExceptionalChain>& chains,
                                                        int ambient_rank) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (chains.empty()) throw std::invalid_argument("at least one chain required");
    int total = 0;
    for (const auto& c : chains) total += c.length();
    if (ambient_rank < total + 1)
        throw std::invalid_argument("ambient rank must exceed the total chain rank");

    std::vector<Integer> entries(static_cast<std::size_t>(total) * total, Integer(0));
    int offset = 0;
    for (const auto& c : chains) {
        IntMatrix m = c.intersection_matrix();
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                entries[static_cast<std::size_t>(offset + i) * total + (offset + j)] = m.at(i, j);
        offset += c.length();
    }
    IntMatrix block(total, total, std::move(entries));

    DiscriminantCertificate cert{block, {}, true, 0, ambient_rank - total, false, {}};
    for (const Integer& d : smith_normal_form(block).elementary_divisors()) {
        if (d == 1) continue;
        cert.elementary_divisors.push_back(d);
        if (d != p) cert.is_p_elementary = false;
    }
    cert.length = static_cast<int>(cert.elementary_divisors.size());
    cert.glue_required = cert.length > cert.complement_rank;
    cert.notes.push_back(
        "certifies lattice conditions only; the divisor class with p*L = B + torsion and "
        "coefficients of B strictly between 0 and p is assumed, not constructed");
    if (p == 7)
        cert.notes.push_back(
            "for a (2,4)-elliptic resolution a nonzero torsion twist satisfies 2*tau = 0; "
            "recorded, not verified");
    return cert;
}

inline std::string divisors_to_string(const std::vector<Integer>& divisors) {
    std::string s = "(";
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        s += divisors[i].str();
        if (i + 1 < divisors.size()) s += ",";
    }
    return s + ")";
}

// Order-3 action on the projective plane: either diagonal with weights
// (w0, w1, w2) as exponents of a primitive cube root on the coordinates, or
// a monomial 3-cycle of the coordinates with arbitrary nonzero scalars.
struct MonomialAction {
    enum class Kind { Identity, Diagonal, CyclicPermutation };
    Kind kind = Kind::Identity;
    int order = 1;
    std::array<int, 3> weights{0, 0, 0};

    static MonomialAction identity() { return {}; }
    static MonomialAction diagonal(int w0, int w1, int w2) {
        MonomialAction a;
        a.kind = Kind::Diagonal;
        a.order = 3;
        a.weights = {((w0 % 3) + 3) % 3, ((w1 % 3) + 3) % 3, ((w2 % 3) + 3) % 3};
        return a;
    }
    static MonomialAction cyclic_permutation() {
        MonomialAction a;
        a.kind = Kind::CyclicPermutation;
        a.order = 3;
        return a;
    }
};

// Ledger of P^2 / action. Diagonal actions with pairwise distinct weights
// and coordinate 3-cycles have three isolated fixed points; local types are
// read off the tangent eigenvalue ratios and normalized to 1/3(1,q).
inline SurfaceLedger p2_quotient_analysis(const MonomialAction& action) {
    SurfaceLedger plane("P2", Rational(9), 3, 0, 0);
    switch (action.kind) {
        case MonomialAction::Kind::Identity:
            return plane;
        case MonomialAction::Kind::Diagonal: {
            if (action.order != 3)
                throw UnsupportedAction("only order-3 diagonal actions are supported");
            const auto& w = action.weights;
            if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2])
                throw UnsupportedAction(
                    "repeated weights fix a curve pointwise; only isolated fixed points are "
                    "supported");
            std::vector<CyclicQuotientSingularity> fixed;
            for (int i = 0; i < 3; ++i) {
                int j = (i + 1) % 3, k = (i + 2) % 3;
                // tangent weights at the i-th coordinate point
                int a = ((w[j] - w[i]) % 3 + 3) % 3;
                int b = ((w[k] - w[i]) % 3 + 3) % 3;
                // normalize 1/3(a,b) to 1/3(1, b a^{-1})
                std::int64_t q = (static_cast<std::int64_t>(b) * mod_inverse(a, 3)) % 3;
                fixed.emplace_back(3, q);
            }
            return quotient_invariants({plane, 3, std::move(fixed), 0, 0, "P2/C3"});
        }
        case MonomialAction::Kind::CyclicPermutation: {
            // a monomial 3-cycle has three fixed points, the eigenvectors; at
            // each one the tangent eigenvalue ratios are the two primitive
            // cube roots, local type 1/3(1,2)
            std::vector<CyclicQuotientSingularity> fixed(3, CyclicQuotientSingularity(3, 2));
            return quotient_invariants({plane, 3, std::move(fixed), 0, 0, "P2/C3"});
        }
    }
    throw UnsupportedAction("unsupported action kind");
}

} // namespace qhpp
