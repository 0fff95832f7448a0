#ifndef QTOP_RATIONAL_HPP
#define QTOP_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qtop {

// Exact rational on 64-bit integers with 128-bit intermediates.
// Always normalized: den > 0, gcd(num, den) = 1. Arithmetic throws
// qtop::Rat::overflow_error if a reduced result leaves 64-bit range;
// the lattice computations in this library stay far below that.
class Rat {
public:
    struct overflow_error : std::overflow_error {
        overflow_error() : std::overflow_error("rational overflow") {}
    };

    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) { nn = -nn; dd = -dd; }
        reduce_assign(nn, dd);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    std::int64_t to_integer() const {
        if (den_ != 1) throw std::domain_error("rational is not an integer");
        return num_;
    }
    double to_double() const { return double(num_) / double(den_); }

    // floor(num/den) as an integer
    std::int64_t floor() const {
        std::int64_t q = num_ / den_, r = num_ % den_;
        return (r < 0) ? q - 1 : q;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    Rat abs() const { return num_ < 0 ? -*this : *this; }

    // remainder of this modulo integer m, normalized into [0, m)
    Rat mod(std::int64_t m) const {
        Rat q(this->floor_div(m));
        return *this - Rat(m) * q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    std::int64_t floor_div(std::int64_t m) const {
        // floor(this / m) for m > 0
        Rat q = *this / Rat(m);
        return q.floor();
    }

    static Rat from128(__int128 n, __int128 d) {
        Rat r;
        if (d < 0) { n = -n; d = -d; }
        r.reduce_assign(n, d);
        return r;
    }

    void reduce_assign(__int128 n, __int128 d) {
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw overflow_error();
        num_ = (std::int64_t)n;
        den_ = (std::int64_t)d;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace qtop

template <>
struct std::hash<qtop::Rat> {
    std::size_t operator()(const qtop::Rat& r) const {
        std::size_t h = std::hash<std::int64_t>{}(r.num());
        return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6));
    }
};

#endif
