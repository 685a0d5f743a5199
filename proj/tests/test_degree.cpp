#include <doctest.h>

#include "toralab/degree.hpp"

using namespace toralab;

TEST_CASE("bar map") {
    CHECK(bar(Deg{1, 2}) == Deg{2, -1});
    CHECK(bar(Deg{0, 0, 0, 0}) == Deg{0, 0, 0, 0});
    CHECK(bar(Deg{1, 2, 3, 4}) == Deg{3, 4, -1, -2});
    CHECK_THROWS_AS(bar(Deg{1, 2, 3}), ArityError);
}

TEST_CASE("underline map") {
    CHECK(underline(Deg{1, 0, 0}) == Deg{0, -1, -1});
    CHECK(underline(Deg{1, -1, 1}) == Deg{0, 0, 0});
    CHECK(underline(Deg{0, 0, 0}) == Deg{0, 0, 0});
    CHECK_THROWS_AS(underline(Deg{1, 2}), ArityError);
}

TEST_CASE("pairings") {
    CHECK(ipair(Deg{1, 0}, Deg{0, 1}) == 0);
    Deg r{1, 2, 3, 4};
    CHECK(ipair(bar(r), r) == 0);
    Deg s{1, 0, 0};
    CHECK(ipair(underline(s), s) == 0);
    CHECK_THROWS_AS(ipair(Deg{1, 0}, Deg{1, 0, 0}), ArityError);
}

TEST_CASE("G membership") {
    CHECK(in_G(Deg{1, -1, 1}));
    CHECK_FALSE(in_G(Deg{1, 0, 0}));
    CHECK(in_G(Deg{0, 0, 0}));
    CHECK(in_G(Deg{2, 2, -2, -2, 2}));
    CHECK_THROWS_AS(in_G(Deg{1, 0, 0, 0}), ArityError);
}

TEST_CASE("bar window properties") {
    for (int N : {2, 4}) {
        Window w(2, N);
        for (size_t i = 0; i < w.size(); ++i) {
            Deg r = w.at(i);
            CHECK(ipair(bar(r), r) == 0);
            CHECK(bar(bar(r)) == -r);
        }
        // (r, bar s) = -(bar r, s), on a sample of pairs
        for (size_t i = 0; i < w.size(); i += 3) {
            for (size_t j = 0; j < w.size(); j += 5) {
                Deg r = w.at(i), s = w.at(j);
                CHECK(ipair(r, bar(s)) == -ipair(bar(r), s));
            }
        }
    }
}

TEST_CASE("underline window properties") {
    Window w(2, 3);
    for (size_t i = 0; i < w.size(); ++i) {
        Deg r = w.at(i);
        CHECK(ipair(underline(r), r) == 0);
        CHECK(in_G(r) == underline(r).is_zero());
        for (size_t j = 0; j < w.size(); j += 7) {
            Deg s = w.at(j);
            CHECK(ipair(underline(r), s) == -ipair(r, underline(s)));
            CHECK(underline(r + s) == underline(r) + underline(s));
        }
    }
}

TEST_CASE("window iteration is lexicographic and complete") {
    Window w(1, 2);
    CHECK(w.size() == 9);
    CHECK(w.at(0) == Deg{-1, -1});
    CHECK(w.at(1) == Deg{-1, 0});
    CHECK(w.at(8) == Deg{1, 1});
    for (size_t i = 0; i + 1 < w.size(); ++i) CHECK(w.at(i) < w.at(i + 1));
    CHECK(w.contains(Deg{1, 0}));
    CHECK_FALSE(w.contains(Deg{2, 0}));
}

TEST_CASE("degree vector serialization") {
    Deg d{1, -2, 0, 3};
    CHECK(d.str() == "(1,-2,0,3)");
    CHECK(Deg::parse("(1,-2,0,3)") == d);
    CHECK(Deg::parse(d.str(), 4) == d);
    CHECK_THROWS(Deg::parse("(1,-2,0,3)", 3));
    CHECK_THROWS(Deg::parse("1,2"));
}

TEST_CASE("rational vector pairing") {
    RatVec u{Rational(1), Rational(0)};
    RatVec v{Rational(0), Rational(1)};
    CHECK(pair(u, v) == Rational(0));
    RatVec w{Rational(1, 2), Rational(3)};
    CHECK(pair(w, w) == Rational(37, 4));
    CHECK(pair(w, Deg{2, 1}) == Rational(4));
    CHECK(w.str() == "(1/2,3)");
}
