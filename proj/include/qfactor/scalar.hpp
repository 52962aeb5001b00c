#ifndef QFACTOR_SCALAR_HPP
#define QFACTOR_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qfactor/errors.hpp"

namespace qfactor {

namespace detail {

// Deterministic Miller-Rabin, valid for n < 3'215'031'751 (covers all 32-bit inputs
// we accept; moduli are capped below 2^31).
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto pow_mod = [n](std::uint64_t base, std::uint64_t exp) {
        std::uint64_t acc = 1 % n;
        base %= n;
        while (exp) {
            if (exp & 1) acc = acc * base % n;
            base = base * base % n;
            exp >>= 1;
        }
        return acc;
    };
    for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = pow_mod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

// Coefficient field descriptor: the rationals, or a prime field F_p.
// modulus() == 0 encodes Q.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }

    static Field prime(std::uint32_t p) {
        if (p >= (1u << 31))
            throw Error("prime field modulus must be below 2^31, got " + std::to_string(p));
        if (!detail::is_prime_u32(p))
            throw Error("prime field modulus must be prime, got " + std::to_string(p));
        Field f;
        f.modulus_ = p;
        return f;
    }

    // Largest prime below 2^16; keeps elimination single-word while making
    // accidental rank drop negligible at desk scale.
    static Field default_prime() { return prime(65521); }

    bool is_rational() const { return modulus_ == 0; }
    bool is_prime_field() const { return modulus_ != 0; }
    std::uint32_t modulus() const { return modulus_; }

    bool operator==(const Field& o) const = default;

    std::string describe() const {
        return is_rational() ? "rational" : "fp:" + std::to_string(modulus_);
    }

private:
    std::uint32_t modulus_ = 0;
};

// An exact field element: an arbitrary-precision rational (always reduced,
// positive denominator), or a residue in [0, p) of a prime field F_p.
// Arithmetic between different fields throws; nothing is ever coerced.
class Scalar {
public:
    // Rational zero.
    Scalar() : q_(0) {}

    Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor): literals read naturally
    Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)

    explicit Scalar(const mpz_class& v) : q_(v) {}

    explicit Scalar(const mpq_class& v) : q_(v) { q_.canonicalize(); }

    Scalar(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }

    static Scalar fp(std::uint32_t p, long long v) {
        Scalar s;
        s.p_ = p;
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        s.r_ = static_cast<std::uint64_t>(r);
        s.q_ = 0;
        return s;
    }

    static Scalar fp(std::uint32_t p, const mpz_class& v) {
        Scalar s;
        s.p_ = p;
        mpz_class r = v % p;
        if (r < 0) r += p;
        s.r_ = r.get_ui();
        s.q_ = 0;
        return s;
    }

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    bool is_rational() const { return p_ == 0; }

    const mpq_class& rational() const {
        require_rational();
        return q_;
    }
    std::uint64_t residue() const {
        if (p_ == 0) throw FieldMismatchError("residue() on a rational scalar");
        return r_;
    }

    bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    Scalar operator-() const {
        if (p_ == 0) return Scalar(mpq_class(-q_));
        return fp(p_, static_cast<long long>(p_ - r_ % p_));
    }

    Scalar& operator+=(const Scalar& o) {
        match(o);
        if (p_ == 0) {
            q_ += o.q_;
        } else {
            r_ += o.r_;
            if (r_ >= p_) r_ -= p_;
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) {
        match(o);
        if (p_ == 0) {
            q_ -= o.q_;
        } else {
            r_ += p_ - o.r_;
            if (r_ >= p_) r_ -= p_;
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& o) {
        match(o);
        if (p_ == 0)
            q_ *= o.q_;
        else
            r_ = r_ * o.r_ % p_;  // p < 2^31, so the product fits in 64 bits
        return *this;
    }

    Scalar& operator/=(const Scalar& o) {
        match(o);
        if (o.is_zero()) throw Error("division by zero");
        if (p_ == 0)
            q_ /= o.q_;
        else
            r_ = r_ * o.inverse_residue() % p_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.match(b);
        return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        if (is_zero()) throw Error("inverse of zero");
        if (p_ == 0) return Scalar(mpq_class(1) / q_);
        return fp(p_, static_cast<long long>(inverse_residue()));
    }

    Scalar pow(unsigned e) const {
        Scalar acc = field_one();
        Scalar base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Reduce a rational scalar into F_p. Throws when p divides the denominator.
    Scalar reduce_mod(std::uint32_t p) const {
        require_rational();
        mpz_class den = q_.get_den() % p;
        if (den == 0)
            throw FieldMismatchError("denominator divisible by " + std::to_string(p));
        Scalar d = fp(p, den);
        Scalar n = fp(p, mpz_class(q_.get_num() % p));
        return n / d;
    }

    // "num" or "num/den" for rationals, the residue digits for F_p.
    std::string str() const {
        if (p_ != 0) return std::to_string(r_);
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    void require_rational() const {
        if (p_ != 0) throw FieldMismatchError("expected a rational scalar");
    }

    void match(const Scalar& o) const {
        if (p_ != o.p_)
            throw FieldMismatchError("mixed-field arithmetic: " + field().describe() +
                                     " vs " + o.field().describe());
    }

    std::uint64_t inverse_residue() const {
        // Extended Euclid on (r_, p_).
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(r_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(t);
    }

    Scalar field_one() const { return p_ == 0 ? Scalar(1) : fp(p_, 1); }

    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint32_t p_ = 0;
};

inline Scalar field_zero(const Field& f) {
    return f.is_rational() ? Scalar(0) : Scalar::fp(f.modulus(), 0);
}

inline Scalar field_one(const Field& f) {
    return f.is_rational() ? Scalar(1) : Scalar::fp(f.modulus(), 1);
}

inline Scalar field_from_int(const Field& f, long v) {
    return f.is_rational() ? Scalar(v) : Scalar::fp(f.modulus(), v);
}

inline Scalar field_from_mpz(const Field& f, const mpz_class& v) {
    return f.is_rational() ? Scalar(v) : Scalar::fp(f.modulus(), v);
}

// Exact rational helper used for bound arithmetic in reports.
using Rational = mpq_class;

inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace qfactor

#endif
