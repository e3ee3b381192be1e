#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhpp/rational.hpp"

namespace qhpp {

// Element of Q(zeta_p) for an odd prime p, written on the power basis
// 1, zeta, ..., zeta^{p-2} modulo the p-th cyclotomic polynomial. The
// representation is canonical, so equality is coefficient-wise.
class Cyclotomic {
public:
    explicit Cyclotomic(int conductor) : p_(conductor), c_(check(conductor) - 1, Rational(0)) {}

    Cyclotomic(int conductor, const Rational& constant) : Cyclotomic(conductor) { c_[0] = constant; }

    static Cyclotomic zeta(int conductor, std::int64_t power = 1) {
        Cyclotomic z(conductor);
        std::int64_t e = power % conductor;
        if (e < 0) e += conductor;
        if (e == conductor - 1) {
            // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
            for (auto& c : z.c_) c = -1;
        } else {
            z.c_[static_cast<std::size_t>(e)] = 1;
        }
        return z;
    }

    int conductor() const { return p_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    Rational rational_part() const {
        if (!is_rational())
            throw NonRationalResult("cyclotomic element has nonzero higher coefficients: " + to_string());
        return c_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        same_field(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        same_field(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        same_field(o);
        // Convolve into exponent buckets mod p, then fold the zeta^{p-1}
        // bucket with zeta^{p-1} = -(1 + ... + zeta^{p-2}).
        std::vector<Rational> bucket(static_cast<std::size_t>(p_), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j] == 0) continue;
                bucket[(i + j) % static_cast<std::size_t>(p_)] += c_[i] * o.c_[j];
            }
        }
        const Rational& top = bucket[static_cast<std::size_t>(p_ - 1)];
        for (std::size_t k = 0; k + 1 < bucket.size(); ++k) c_[k] = bucket[k] - top;
        return *this;
    }

    Cyclotomic& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

    bool operator==(const Cyclotomic& o) const { return p_ == o.p_ && c_ == o.c_; }

    // Galois action zeta -> zeta^t for t in 1..p-1.
    Cyclotomic conjugate(int t) const {
        if (t <= 0 || t >= p_) throw std::invalid_argument("conjugate exponent out of range");
        std::vector<Rational> bucket(static_cast<std::size_t>(p_), Rational(0));
        for (std::size_t k = 0; k < c_.size(); ++k)
            bucket[(k * static_cast<std::size_t>(t)) % static_cast<std::size_t>(p_)] += c_[k];
        Cyclotomic r(p_);
        const Rational& top = bucket[static_cast<std::size_t>(p_ - 1)];
        for (std::size_t k = 0; k + 1 < bucket.size(); ++k) r.c_[k] = bucket[k] - top;
        return r;
    }

    // Multiplicative inverse via the product of all nontrivial conjugates:
    // a * prod = Norm(a), a nonzero rational.
    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
        Cyclotomic prod(p_, Rational(1));
        for (int t = 2; t < p_; ++t) prod *= conjugate(t);
        Rational norm = (*this * prod).rational_part();
        if (norm == 0) throw DivisionByZero("vanishing norm for nonzero element"); // unreachable in a field
        return prod * (Rational(1) / norm);
    }

    std::string to_string() const {
        std::string s;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (!first) s += " + ";
            s += qhpp::to_string(c_[k]);
            if (k >= 1) s += "*z^" + std::to_string(k);
            first = false;
        }
        return first ? "0" : s;
    }

private:
    static int check(int p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw std::invalid_argument("cyclotomic conductor must be an odd prime");
        return p;
    }
    void same_field(const Cyclotomic& o) const {
        if (p_ != o.p_) throw std::invalid_argument("cyclotomic conductor mismatch");
    }

    int p_;
    std::vector<Rational> c_;
};

inline Cyclotomic cyclotomic_inverse(const Cyclotomic& a) { return a.inverse(); }

} // namespace qhpp
