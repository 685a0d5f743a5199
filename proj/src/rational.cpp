#include "toralab/rational.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

namespace toralab {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 uabs128(int128 v) { return v < 0 ? uint128(-(v + 1)) + 1 : uint128(v); }

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr int128 kMin64 = std::numeric_limits<long long>::min();
constexpr int128 kMax64 = std::numeric_limits<long long>::max();

bool fits64(int128 v) { return v >= kMin64 && v <= kMax64; }

mpz_class mpz_from_int128(int128 v) {
    bool neg = v < 0;
    uint128 u = uabs128(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpq_class mpq_from_int128_frac(int128 n, int128 d) {
    mpq_class q(mpz_from_int128(n), mpz_from_int128(d));
    q.canonicalize();
    return q;
}

mpq_class& as_big(void* p) { return *static_cast<mpq_class*>(p); }
const mpq_class& as_big_c(const void* p) { return *static_cast<const mpq_class*>(p); }

}  // namespace

struct RationalBigAccess {
    static mpq_class to_mpq(const Rational& r) {
        if (r.big_) return as_big_c(r.big_);
        return mpq_class(mpz_class(static_cast<long>(r.num_)), mpz_class(static_cast<long>(r.den_)));
    }
};

Rational::Rational(long long n, long long d) : num_(n), den_(d), big_(nullptr) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(nullptr) {
    if (o.big_) big_ = new mpq_class(as_big_c(o.big_));
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    if (big_) { delete &as_big(big_); big_ = nullptr; }
    num_ = o.num_;
    den_ = o.den_;
    if (o.big_) big_ = new mpq_class(as_big_c(o.big_));
    return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
    if (this == &o) return *this;
    if (big_) { delete &as_big(big_); big_ = nullptr; }
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_;
    o.big_ = nullptr;
    return *this;
}

Rational::~Rational() {
    if (big_) delete &as_big(big_);
}

Rational Rational::from_string(const std::string& s) {
    auto pos = s.find('/');
    mpq_class q;
    if (pos == std::string::npos) {
        q = mpq_class(mpz_class(s), 1);
    } else {
        q = mpq_class(mpz_class(s.substr(0, pos)), mpz_class(s.substr(pos + 1)));
    }
    q.canonicalize();
    Rational r;
    r.big_ = new mpq_class(q);
    r.demote_if_possible();
    return r;
}

bool Rational::is_integer() const {
    if (!big_) return den_ == 1;
    return as_big_c(big_).get_den() == 1;
}

int Rational::sign() const {
    if (!big_) return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
    return big_sign();
}

int Rational::big_sign() const { return sgn(as_big_c(big_)); }

void Rational::promote() const {
    if (big_) return;
    big_ = new mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

void Rational::demote_if_possible() {
    if (!big_) return;
    const mpq_class& q = as_big_c(big_);
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        long long n = q.get_num().get_si();
        long long d = q.get_den().get_si();
        delete &as_big(big_);
        big_ = nullptr;
        num_ = n;
        den_ = d;
    }
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) {
        as_big(r.big_) = -as_big_c(r.big_);
    } else {
        r.num_ = -r.num_;  // num_ > INT64_MIN always holds for reduced values we build
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int128 n = int128(num_) + int128(o.num_);
            if (fits64(n)) { num_ = (long long)n; return *this; }
            big_ = new mpq_class(mpq_from_int128_frac(n, 1));
            return *this;
        }
        int128 n = int128(num_) * o.den_ + int128(o.num_) * den_;
        int128 d = int128(den_) * o.den_;
        uint128 g = gcd128(uabs128(n), uabs128(d));
        if (g > 1) { n /= int128(g); d /= int128(g); }
        if (fits64(n) && fits64(d)) {
            num_ = (long long)n;
            den_ = (long long)d;
            return *this;
        }
        big_ = new mpq_class(mpq_from_int128_frac(n, d));
        return *this;
    }
    promote();
    as_big(big_) = as_big_c(big_) + RationalBigAccess::to_mpq(o);
    demote_if_possible();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int128 n = int128(num_) - int128(o.num_);
            if (fits64(n)) { num_ = (long long)n; return *this; }
            big_ = new mpq_class(mpq_from_int128_frac(n, 1));
            return *this;
        }
        int128 n = int128(num_) * o.den_ - int128(o.num_) * den_;
        int128 d = int128(den_) * o.den_;
        uint128 g = gcd128(uabs128(n), uabs128(d));
        if (g > 1) { n /= int128(g); d /= int128(g); }
        if (fits64(n) && fits64(d)) {
            num_ = (long long)n;
            den_ = (long long)d;
            return *this;
        }
        big_ = new mpq_class(mpq_from_int128_frac(n, d));
        return *this;
    }
    promote();
    as_big(big_) = as_big_c(big_) - RationalBigAccess::to_mpq(o);
    demote_if_possible();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) { num_ = 0; den_ = 1; return *this; }
        if (den_ == 1 && o.den_ == 1) {
            int128 n = int128(num_) * o.num_;
            if (fits64(n)) { num_ = (long long)n; return *this; }
            big_ = new mpq_class(mpq_from_int128_frac(n, 1));
            return *this;
        }
        int128 n = int128(num_) * o.num_;
        int128 d = int128(den_) * o.den_;
        uint128 g = gcd128(uabs128(n), uabs128(d));
        if (g > 1) { n /= int128(g); d /= int128(g); }
        if (fits64(n) && fits64(d)) {
            num_ = (long long)n;
            den_ = (long long)d;
            return *this;
        }
        big_ = new mpq_class(mpq_from_int128_frac(n, d));
        return *this;
    }
    promote();
    as_big(big_) = as_big_c(big_) * RationalBigAccess::to_mpq(o);
    demote_if_possible();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        int128 n = int128(num_) * o.den_;
        int128 d = int128(den_) * o.num_;
        if (d < 0) { n = -n; d = -d; }
        uint128 g = gcd128(uabs128(n), uabs128(d));
        if (g > 1) { n /= int128(g); d /= int128(g); }
        if (fits64(n) && fits64(d)) {
            num_ = (long long)n;
            den_ = (long long)d;
            return *this;
        }
        big_ = new mpq_class(mpq_from_int128_frac(n, d));
        return *this;
    }
    promote();
    as_big(big_) = as_big_c(big_) / RationalBigAccess::to_mpq(o);
    demote_if_possible();
    return *this;
}

bool Rational::operator==(const Rational& o) const {
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    return RationalBigAccess::to_mpq(*this) == RationalBigAccess::to_mpq(o);
}

int Rational::cmp(const Rational& o) const {
    if (!big_ && !o.big_) {
        int128 l = int128(num_) * o.den_;
        int128 r = int128(o.num_) * den_;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    return ::cmp(RationalBigAccess::to_mpq(*this), RationalBigAccess::to_mpq(o));
}

std::string Rational::str() const {
    if (big_) return as_big_c(big_).get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace toralab
