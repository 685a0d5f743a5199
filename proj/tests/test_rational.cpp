#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "toralab/rational.hpp"

using toralab::Rational;

TEST_CASE("rational basic arithmetic") {
    Rational a(1, 3), b(2, 5);
    CHECK((a + b).str() == "11/15");
    CHECK((a - b).str() == "-1/15");
    CHECK((a * b).str() == "2/15");
    CHECK((a / b).str() == "5/6");
    CHECK((-a).str() == "-1/3");
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(a.is_integer());
}

TEST_CASE("rational comparisons and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 9).sign() == 1);
}

TEST_CASE("rational parse and print round") {
    CHECK(Rational::from_string("-3/9").str() == "-1/3");
    CHECK(Rational::from_string("42").str() == "42");
    CHECK(Rational::from_string("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational promotes past int64 and stays exact") {
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(1000000007LL);
    CHECK_FALSE(big.is_small());
    mpq_class q(1);
    for (int i = 0; i < 5; ++i) q *= mpz_class(1000000007L);
    CHECK(big.str() == q.get_str());

    Rational back = big;
    for (int i = 0; i < 5; ++i) back /= Rational(1000000007LL);
    CHECK(back.is_small());
    CHECK(back == Rational(1));
}

TEST_CASE("rational randomized cross-check against gmp") {
    std::mt19937_64 rng(12345);
    auto rnd = [&](long long lim) { return static_cast<long long>(rng() % (2 * lim + 1)) - lim; };
    for (int iter = 0; iter < 2000; ++iter) {
        long long an = rnd(1'000'000'000LL), ad = 0, bn = rnd(1'000'000'000LL), bd = 0;
        while (ad == 0) ad = rnd(1'000'000LL);
        while (bd == 0) bd = rnd(1'000'000LL);
        Rational a(an, ad), b(bn, bd);
        mpq_class qa(static_cast<long>(an), static_cast<long>(ad)), qb(static_cast<long>(bn), static_cast<long>(bd));
        qa.canonicalize();
        qb.canonicalize();
        mpq_class sum = qa + qb, dif = qa - qb, prd = qa * qb;
        CHECK((a + b).str() == sum.get_str());
        CHECK((a - b).str() == dif.get_str());
        CHECK((a * b).str() == prd.get_str());
        if (bn != 0) {
            mpq_class quo = qa / qb;
            CHECK((a / b).str() == quo.get_str());
        }
        CHECK((a < b) == (qa < qb));
    }
}

TEST_CASE("rational overflow boundary additions") {
    long long m = std::numeric_limits<long long>::max();
    Rational a(m), b(m);
    Rational s = a + b;
    mpq_class q = mpq_class(mpz_class(std::to_string(m)) * 2);
    CHECK(s.str() == q.get_str());
    Rational p = a * b;
    mpq_class qp(mpz_class(std::to_string(m)) * mpz_class(std::to_string(m)));
    CHECK(p.str() == qp.get_str());
    // shrink back down
    Rational r = p / a;
    CHECK(r == a);
    CHECK(r.is_small());
}
