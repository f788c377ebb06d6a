#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpa {

/// Exact rational scalar. All arithmetic is arbitrary precision and results
/// are always in lowest terms, so equality is decidable and exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }

    static Rational from_fraction(const std::string& num, const std::string& den) {
        mpz_class n(num), d(den);
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        Rational r;
        r.v_ = mpq_class(n, d);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(v_ / o.v_);
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Element of the prime field F_p. The modulus is per-thread state set once
/// (CLI flag or test setup) before any arithmetic happens on that thread;
/// values themselves store only the residue. Division errors out on
/// non-invertible elements, which also makes a composite modulus fail loudly
/// instead of silently.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long n) {
        const auto p = static_cast<long long>(require_modulus());
        long long r = n % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }

    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p >= (std::uint64_t{1} << 32))
            throw std::invalid_argument("Fp: modulus must be in [2, 2^32)");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return require_modulus(); }

    static Fp from_fraction(const std::string& num, const std::string& den) {
        return parse_integer(num) / parse_integer(den);
    }

    bool is_zero() const { return v_ == 0; }
    std::string str() const { return std::to_string(v_); }
    std::uint64_t value() const { return v_; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : require_modulus() - v_); }
    Fp operator+(const Fp& o) const {
        const auto p = require_modulus();
        auto s = v_ + o.v_;
        if (s >= p) s -= p;
        return raw(s);
    }
    Fp operator-(const Fp& o) const { return *this + (-o); }
    Fp operator*(const Fp& o) const { return raw((v_ * o.v_) % require_modulus()); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp inverse() const {
        const auto p = static_cast<long long>(require_modulus());
        // extended Euclid; fails for non-units
        long long r0 = p, r1 = static_cast<long long>(v_), t0 = 0, t1 = 1;
        while (r1 != 0) {
            const long long q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            t0 -= q * t1;
            std::swap(t0, t1);
        }
        if (r0 != 1) throw std::invalid_argument("Fp: element not invertible");
        if (t0 < 0) t0 += p;
        return raw(static_cast<std::uint64_t>(t0));
    }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

private:
    static Fp raw(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    static std::uint64_t require_modulus() {
        if (modulus_ == 0) throw std::logic_error("Fp: modulus not set");
        return modulus_;
    }
    static Fp parse_integer(const std::string& digits) {
        if (digits.empty()) throw std::invalid_argument("Fp: empty integer");
        const auto p = require_modulus();
        std::uint64_t v = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw std::invalid_argument("Fp: bad digit");
            v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        }
        return raw(v);
    }

    static inline thread_local std::uint64_t modulus_ = 0;
    std::uint64_t v_;
};

/// The coefficient field the algebra templates are instantiated over.
template <class K>
concept ScalarField =
    std::regular<K> && std::constructible_from<K, long long> &&
    requires(const K a, const K b, const std::string& s) {
        { a + b } -> std::convertible_to<K>;
        { a - b } -> std::convertible_to<K>;
        { a* b } -> std::convertible_to<K>;
        { a / b } -> std::convertible_to<K>;
        { -a } -> std::convertible_to<K>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.str() } -> std::convertible_to<std::string>;
        { K::from_fraction(s, s) } -> std::convertible_to<K>;
    };

} // namespace lpa
