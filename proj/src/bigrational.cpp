#include "hallwc/bigrational.hpp"

#include <functional>
#include <ostream>

#include "hallwc/errors.hpp"

namespace hallwc {

BigRational::BigRational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(text, 10));
        return BigRational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'", 0);
    }
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return BigRational(mpq_class(1 / q_));
}

BigRational BigRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(r);
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string BigRational::str() const { return q_.get_str(10); }

std::size_t BigRational::hash() const noexcept {
    // Low limbs are enough to spread keys.
    auto limb = [](const mpz_class& z) -> std::size_t {
        return mpz_size(z.get_mpz_t()) ? static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) : 0;
    };
    std::size_t h = limb(q_.get_num()) * 0x9e3779b97f4a7c15ULL ^ limb(q_.get_den());
    return h ^ static_cast<std::size_t>(sgn(q_) + 1);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace hallwc
