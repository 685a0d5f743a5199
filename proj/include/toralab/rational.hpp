#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace toralab {

/// Exact rational scalar.
///
/// Values are kept as a reduced int64 fraction while they fit; arithmetic
/// promotes to a GMP-backed representation on overflow and demotes back when
/// the result shrinks. Equality is decidable and all operations are exact.
class Rational {
public:
    Rational() : num_(0), den_(1), big_(nullptr) {}
    Rational(long long n) : num_(n), den_(1), big_(nullptr) {}
    Rational(int n) : num_(n), den_(1), big_(nullptr) {}
    Rational(long long n, long long d);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept;
    ~Rational();

    static Rational from_string(const std::string& s);  // "p", "p/q"

    bool is_zero() const { return big_ ? big_sign() == 0 : num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    /// True while the value is held as an int64 fraction.
    bool is_small() const { return big_ == nullptr; }
    long long num_small() const { return num_; }  // valid only when is_small()
    long long den_small() const { return den_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }
    int cmp(const Rational& o) const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const { return Rational(1) / *this; }

    std::string str() const;  // "p" or "p/q"
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void promote() const;           // move value into big_
    void demote_if_possible();      // shrink back to int64 fraction
    int big_sign() const;
    void* big_ptr() const { return big_; }

    // Small path: num_/den_ reduced, den_ >= 1. Ignored when big_ != nullptr.
    long long num_;
    long long den_;
    mutable void* big_;  // mpq_class*, owned

    friend struct RationalBigAccess;
};

}  // namespace toralab
