#ifndef QTOP_WEIGHT_HPP
#define QTOP_WEIGHT_HPP

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <vector>

#include "qtop/rational.hpp"

namespace qtop {

// A point of t* (equivalently t, identified through the invariant form)
// in exact rational ambient coordinates. All arithmetic is exact; the
// inner product lives on RootSystem because it carries the form scale.
struct Weight {
    std::vector<Rat> coords;

    Weight() = default;
    explicit Weight(std::size_t dim) : coords(dim) {}
    Weight(std::initializer_list<Rat> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    const Rat& operator[](std::size_t i) const { return coords[i]; }
    Rat& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = a.coords[i] - b.coords[i];
        return r;
    }
    friend Weight operator*(const Rat& s, const Weight& a) {
        Weight r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords[i] = s * a.coords[i];
        return r;
    }
    Weight operator-() const { return Rat(-1) * *this; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    // lexicographic; a deterministic total order for map keys
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        }
        return false;
    }

    // raw euclidean dot product, before any form rescaling
    friend Rat dot(const Weight& a, const Weight& b) {
        Rat s;
        for (std::size_t i = 0; i < a.dim(); ++i) s += a.coords[i] * b.coords[i];
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) os << ',';
            os << coords[i];
        }
        os << ')';
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
        return os << w.str();
    }
};

}  // namespace qtop

template <>
struct std::hash<qtop::Weight> {
    std::size_t operator()(const qtop::Weight& w) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        std::hash<qtop::Rat> hr;
        for (const auto& c : w.coords) h = h * 1099511628211ULL ^ hr(c);
        return h;
    }
};

#endif
