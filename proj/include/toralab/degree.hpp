#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toralab/rational.hpp"

namespace toralab {

inline constexpr int kMaxArity = 8;

struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Point of Z^N. Arity is carried with the value; coordinates stay small
/// (window sweeps and bracket degree sums), int16 is checked on construction.
struct Deg {
    int8_t n = 0;
    std::array<int16_t, kMaxArity> c{};

    Deg() = default;
    explicit Deg(int arity) : n(static_cast<int8_t>(arity)) {
        if (arity < 0 || arity > kMaxArity) throw ArityError("Deg: arity out of range");
    }
    Deg(std::initializer_list<int> xs) : Deg(std::vector<long long>(xs.begin(), xs.end())) {}
    explicit Deg(const std::vector<long long>& xs) : n(static_cast<int8_t>(xs.size())) {
        if (xs.size() > kMaxArity) throw ArityError("Deg: arity out of range");
        for (size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] < -30000 || xs[i] > 30000) throw std::overflow_error("Deg: coordinate overflow");
            c[i] = static_cast<int16_t>(xs[i]);
        }
    }

    int arity() const { return n; }
    long long operator[](int i) const { return c[i]; }
    void set(int i, long long v) {
        if (v < -30000 || v > 30000) throw std::overflow_error("Deg: coordinate overflow");
        c[i] = static_cast<int16_t>(v);
    }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (c[i] != 0) return false;
        return true;
    }

    friend Deg operator+(const Deg& a, const Deg& b) {
        Deg r(a.arity());
        for (int i = 0; i < a.n; ++i) r.c[i] = static_cast<int16_t>(a.c[i] + b.c[i]);
        return r;
    }
    friend Deg operator-(const Deg& a, const Deg& b) {
        Deg r(a.arity());
        for (int i = 0; i < a.n; ++i) r.c[i] = static_cast<int16_t>(a.c[i] - b.c[i]);
        return r;
    }
    Deg operator-() const {
        Deg r(arity());
        for (int i = 0; i < n; ++i) r.c[i] = static_cast<int16_t>(-c[i]);
        return r;
    }
    friend Deg operator*(long long k, const Deg& a) {
        Deg r(a.arity());
        for (int i = 0; i < a.n; ++i) r.set(i, k * a.c[i]);
        return r;
    }

    friend bool operator==(const Deg& a, const Deg& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }
    // Lexicographic.
    friend bool operator<(const Deg& a, const Deg& b) {
        if (a.n != b.n) return a.n < b.n;
        for (int i = 0; i < a.n; ++i)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    }

    std::string str() const;  // "(1,-2,0,3)"
    static Deg parse(const std::string& s, int expected_arity = -1);
};

/// Integer dot product.
inline long long ipair(const Deg& a, const Deg& b) {
    if (a.n != b.n) throw ArityError("ipair: arity mismatch");
    long long s = 0;
    for (int i = 0; i < a.n; ++i) s += static_cast<long long>(a.c[i]) * b.c[i];
    return s;
}

/// r = (r_1..r_m, r_{m+1}..r_{2m})  ->  (r_{m+1}..r_{2m}, -r_1..-r_m).
inline Deg bar(const Deg& r) {
    if (r.n % 2 != 0 || r.n == 0) throw ArityError("bar: arity must be even and positive");
    const int m = r.n / 2;
    Deg out(r.n);
    for (int i = 0; i < m; ++i) {
        out.c[i] = r.c[m + i];
        out.c[m + i] = static_cast<int16_t>(-r.c[i]);
    }
    return out;
}

/// Odd arity M = 2m+1: bar on the first 2m coordinates, shifted by r_M along
/// e_1..e_{2m} and balanced by -(r_1+..+r_{2m}) on the last coordinate.
inline Deg underline(const Deg& r) {
    if (r.n % 2 != 1 || r.n < 3) throw ArityError("underline: arity must be odd and >= 3");
    const int m = (r.n - 1) / 2;
    const int M = r.n - 1;  // index of the last coordinate
    Deg out(r.n);
    long long head_sum = 0;
    for (int i = 0; i < 2 * m; ++i) head_sum += r.c[i];
    for (int i = 0; i < m; ++i) {
        out.set(i, static_cast<long long>(r.c[m + i]) + r.c[M]);
        out.set(m + i, -static_cast<long long>(r.c[i]) + r.c[M]);
    }
    out.set(M, -head_sum);
    return out;
}

/// Subgroup G of Z^M (odd M): exactly the kernel of the underline map.
inline bool in_G(const Deg& r) {
    if (r.n % 2 != 1 || r.n < 3) throw ArityError("in_G: arity must be odd and >= 3");
    const int m = (r.n - 1) / 2;
    const int M = r.n - 1;
    for (int i = 0; i < m; ++i)
        if (r.c[i] != r.c[M]) return false;
    for (int i = m; i < 2 * m; ++i)
        if (r.c[i] != -r.c[M]) return false;
    return true;
}

/// Vector over Q with fixed small arity.
struct RatVec {
    int8_t n = 0;
    std::array<Rational, kMaxArity> c{};

    RatVec() = default;
    explicit RatVec(int arity) : n(static_cast<int8_t>(arity)) {
        if (arity < 0 || arity > kMaxArity) throw ArityError("RatVec: arity out of range");
    }
    explicit RatVec(const Deg& d) : n(d.n) {
        for (int i = 0; i < n; ++i) c[i] = Rational(d[i]);
    }
    RatVec(std::initializer_list<Rational> xs) : n(static_cast<int8_t>(xs.size())) {
        if (xs.size() > kMaxArity) throw ArityError("RatVec: arity out of range");
        int i = 0;
        for (const auto& x : xs) c[i++] = x;
    }

    int arity() const { return n; }
    const Rational& operator[](int i) const { return c[i]; }
    Rational& operator[](int i) { return c[i]; }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (!c[i].is_zero()) return false;
        return true;
    }

    static RatVec unit(int arity, int i) {
        RatVec v(arity);
        v.c[i] = Rational(1);
        return v;
    }

    void axpy(const Rational& a, const RatVec& x) {
        for (int i = 0; i < n; ++i) {
            if (!x.c[i].is_zero()) c[i] += a * x.c[i];
        }
    }
    void scale(const Rational& a) {
        for (int i = 0; i < n; ++i) c[i] *= a;
    }

    friend RatVec operator+(RatVec a, const RatVec& b) {
        a.axpy(Rational(1), b);
        return a;
    }
    friend RatVec operator-(RatVec a, const RatVec& b) {
        a.axpy(Rational(-1), b);
        return a;
    }
    friend RatVec operator*(const Rational& k, RatVec a) {
        a.scale(k);
        return a;
    }
    friend bool operator==(const RatVec& a, const RatVec& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }

    std::string str() const;  // "(p/q,...)"
};

inline Rational pair(const RatVec& a, const RatVec& b) {
    if (a.n != b.n) throw ArityError("pair: arity mismatch");
    Rational s;
    for (int i = 0; i < a.n; ++i) {
        if (!a.c[i].is_zero() && !b.c[i].is_zero()) s += a.c[i] * b.c[i];
    }
    return s;
}

inline Rational pair(const RatVec& a, const Deg& b) {
    if (a.n != b.n) throw ArityError("pair: arity mismatch");
    Rational s;
    for (int i = 0; i < a.n; ++i) {
        if (!a.c[i].is_zero() && b.c[i] != 0) s += a.c[i] * Rational(b.c[i]);
    }
    return s;
}

inline Rational pair(const Deg& a, const RatVec& b) { return pair(b, a); }

inline RatVec bar(const RatVec& u) {
    if (u.n % 2 != 0 || u.n == 0) throw ArityError("bar: arity must be even and positive");
    const int m = u.n / 2;
    RatVec out(u.n);
    for (int i = 0; i < m; ++i) {
        out.c[i] = u.c[m + i];
        out.c[m + i] = -u.c[i];
    }
    return out;
}

/// Finite sweep domain { r in Z^N : max_i |r_i| <= R }, enumerated
/// lexicographically from (-R,..,-R) to (R,..,R).
struct Window {
    int radius = 0;
    int arity = 0;

    Window() = default;
    Window(int R, int N) : radius(R), arity(N) {
        if (R < 0) throw std::invalid_argument("Window: negative radius");
        if (N < 1 || N > kMaxArity) throw ArityError("Window: arity out of range");
    }

    size_t size() const {
        size_t s = 1;
        for (int i = 0; i < arity; ++i) s *= static_cast<size_t>(2 * radius + 1);
        return s;
    }

    Deg at(size_t idx) const {
        Deg d(arity);
        const long long base = 2 * radius + 1;
        for (int i = arity - 1; i >= 0; --i) {
            d.c[i] = static_cast<int16_t>(static_cast<long long>(idx % base) - radius);
            idx /= base;
        }
        return d;
    }

    bool contains(const Deg& d) const {
        if (d.n != arity) return false;
        for (int i = 0; i < d.n; ++i)
            if (d.c[i] < -radius || d.c[i] > radius) return false;
        return true;
    }

    std::vector<Deg> all() const {
        std::vector<Deg> v;
        v.reserve(size());
        for (size_t i = 0; i < size(); ++i) v.push_back(at(i));
        return v;
    }
};

}  // namespace toralab
