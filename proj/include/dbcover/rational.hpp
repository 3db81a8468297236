// Exact rational scalar over 64-bit integers, suitable as an Eigen scalar
// type. All intermediates run through 128-bit integers; results that do not
// fit back into 64 bits throw std::overflow_error instead of wrapping.

#ifndef DBCOVER_RATIONAL_HPP
#define DBCOVER_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace dbcover {

using Int = std::int64_t;
using Int128 = __int128;

inline Int checked_narrow(Int128 v) {
    if (v > Int128(INT64_MAX) || v < Int128(INT64_MIN))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return static_cast<Int>(v);
}

inline Int checked_add(Int a, Int b) { return checked_narrow(Int128(a) + Int128(b)); }
inline Int checked_sub(Int a, Int b) { return checked_narrow(Int128(a) - Int128(b)); }
inline Int checked_mul(Int a, Int b) { return checked_narrow(Int128(a) * Int128(b)); }

inline Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(int n) : num_(n), den_(1) {}  // NOLINT
    Rational(Int n, Int d) { assign(Int128(n), Int128(d)); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(Int128(a.num_) * b.den_ + Int128(b.num_) * a.den_,
                    Int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(Int128(a.num_) * b.den_ - Int128(b.num_) * a.den_,
                    Int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(Int128(a.num_) * b.num_, Int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make(Int128(a.num_) * b.den_, Int128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return Int128(a.num_) * b.den_ < Int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Largest integer <= value.
    Int floor() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    Int ceil() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    // Nearest integer, ties rounded up.
    Int round_half_up() const { return (*this + Rational(1, 2)).floor(); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Lowest-terms "p/q" rendering; integers keep an explicit "/1".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

private:
    static Rational make(Int128 n, Int128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }
    void assign(Int128 n, Int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = checked_narrow(n);
        den_ = checked_narrow(d);
    }

    Int num_;
    Int den_;  // > 0, gcd(num_, den_) == 1
};

inline Rational abs(const Rational& r) { return r.abs(); }

// Smallest integer m >= 0 with m*m >= r; r must be nonnegative.
inline Int ceil_sqrt(const Rational& r) {
    if (r.sign() < 0) throw std::domain_error("ceil_sqrt of negative rational");
    if (r.is_zero()) return 0;
    Int m = static_cast<Int>(std::sqrt(static_cast<double>(r.num()) /
                                       static_cast<double>(r.den())));
    while (m > 0 && Rational(m) * Rational(m) >= r) --m;
    while (Rational(m) * Rational(m) < r) ++m;
    return m;
}

}  // namespace dbcover

namespace Eigen {

template <>
struct NumTraits<dbcover::Rational> {
    using Real = dbcover::Rational;
    using NonInteger = dbcover::Rational;
    using Literal = dbcover::Int;
    using Nested = dbcover::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 20,
    };
    static inline Real epsilon() { return dbcover::Rational(0); }
    static inline Real dummy_precision() { return dbcover::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // DBCOVER_RATIONAL_HPP
