/**
 * @file bigrational.hpp
 * @brief Arbitrary-precision exact rationals.
 *
 * Thin value wrapper over GMP's mpq_class. Every instance is kept in
 * canonical form (lowest terms, positive denominator), so equality is
 * structural.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace hallwc {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& n) : q_(n) {}
    BigRational(const BigInt& n, const BigInt& d);
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p", "-p", "p/q".
    static BigRational parse(const std::string& text);

    const mpq_class& raw() const noexcept { return q_; }
    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    BigRational inverse() const;
    BigRational pow(long e) const;

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    std::size_t hash() const noexcept;

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

}  // namespace hallwc
