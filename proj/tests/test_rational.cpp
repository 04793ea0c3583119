#include "bridge_order/errors.hpp"
#include "bridge_order/rational.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace bridge_order;

namespace {

Fraction F(long p, long q) { return Fraction(p, q); }

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("fraction normalizes sign and reduces") {
    CHECK(Fraction(6, -4).num() == -3);
    CHECK(Fraction(6, -4).den() == 2);
    CHECK(Fraction(0, 7) == Fraction(0, 1));
    CHECK_THROWS_AS(Fraction(1, 0), DivisionByZero);
}

TEST_CASE("fraction parsing") {
    CHECK(Fraction::parse("4/7") == F(4, 7));
    CHECK(Fraction::parse(" -3 / 5 ") == F(-3, 5));
    CHECK(Fraction::parse("5") == F(5, 1));
    CHECK(Fraction::parse("2/6") == F(1, 3));
    CHECK_THROWS_AS(Fraction::parse("2/6", true), InvalidInput);
    CHECK_THROWS_AS(Fraction::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(Fraction::parse("x/3"), InvalidInput);
    CHECK(Fraction::parse("322892/551327").to_string() == "322892/551327");
}

TEST_CASE("eval_cf on known words") {
    const std::vector<int> a{2, -2, 0, -2};
    CHECK(eval_cf(0, std::span<const int>(a)) == F(4, 7));
    CHECK(eval_cf(0, std::span<const int>()) == F(0, 1));
    CHECK(eval_cf(3, std::span<const int>()) == F(3, 1));
    const std::vector<int> link{2, 2, -2, 2, 2};
    CHECK(eval_cf(0, std::span<const int>(link)) == F(11, 30));
    const std::vector<int> eight{2, 2};
    CHECK(eval_cf(0, std::span<const int>(eight)) == F(2, 5));
}

TEST_CASE("eval_cf raises on an inverted zero tail") {
    const std::vector<int> w{2, 0};
    CHECK_THROWS_AS(eval_cf(0, std::span<const int>(w)), DivisionByZero);
}

TEST_CASE("eval_cf agrees with the matrix product") {
    // All words over {-4,-2,2,4} up to length 6, plus zeros inside.
    std::vector<int> w;
    std::function<void()> go = [&] {
        if (!w.empty()) {
            auto [p, q] = ref::cf_by_matrices(1, w);
            if (q != 0) {
                CHECK(eval_cf(1, std::span<const int>(w)) == Fraction(p, q));
            }
        }
        if (w.size() == 6) return;
        for (int x : {-4, -2, 2, 4}) {
            w.push_back(x);
            go();
            w.pop_back();
        }
    };
    go();
}

TEST_CASE("even_expansion examples") {
    auto e47 = even_expansion(F(4, 7));
    REQUIRE(e47.size() == 1);
    CHECK(e47[0].integer_part == 0);
    CHECK(e47[0].word == EvenWord(big({2, -4})));

    auto e12 = even_expansion(F(1, 2));
    REQUIRE(e12.size() == 2);
    CHECK(e12[0] == CFExpansion{0, EvenWord(big({2}))});
    CHECK(e12[1] == CFExpansion{1, EvenWord(big({-2}))});

    auto e2441 = even_expansion(F(24, 41));
    REQUIRE(e2441.size() == 1);
    CHECK(e2441[0].word == EvenWord(big({2, -4, 2, -4})));
}

TEST_CASE("even_expansion parity and round trip for q <= 500") {
    for (long q = 1; q <= 500; ++q) {
        for (long p = -q; p <= 2 * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const auto f = F(p, q);
            const auto ex = even_expansion(f);
            if (q % 2 == 1) {
                REQUIRE(ex.size() == 1);
                CHECK(ex[0].word.size() % 2 == 0);
                CHECK(BigInt(ex[0].integer_part - p) % 2 == 0);
            } else {
                REQUIRE(ex.size() == 2);
                CHECK(ex[0].word.size() % 2 == 1);
                CHECK(ex[1].word.size() % 2 == 1);
                BigInt fl, ce;
                mpz_fdiv_q(fl.get_mpz_t(), BigInt(p).get_mpz_t(), BigInt(q).get_mpz_t());
                mpz_cdiv_q(ce.get_mpz_t(), BigInt(p).get_mpz_t(), BigInt(q).get_mpz_t());
                CHECK(ex[0].integer_part == fl);
                CHECK(ex[1].integer_part == ce);
            }
            for (const auto& e : ex) {
                CHECK(eval_cf(e) == f);
                for (const auto& x : e.word.entries()) {
                    CHECK(x % 2 == 0);
                    CHECK(abs(x) >= 2);
                }
            }
        }
    }
}

TEST_CASE("negating the word negates the value") {
    for (long q = 3; q <= 60; q += 2) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const auto e = even_expansion(F(p, q)).front();
            if (e.integer_part != 0) continue;
            std::vector<BigInt> neg;
            for (const auto& x : e.word.entries()) neg.push_back(-x);
            CHECK(eval_cf(0, std::span<const BigInt>(neg)) == F(-p, q));
        }
    }
}

TEST_CASE("arbitrary precision") {
    // 2^80 + 1 over 3 has an odd denominator and needs more than 64 bits.
    BigInt p = (BigInt(1) << 80) + 1;
    Fraction f(p, 3);
    for (const auto& e : even_expansion(f)) CHECK(eval_cf(e) == f);
}

TEST_CASE("integer list parsing") {
    CHECK(parse_integer_list("[2, -2,0,-2]") == big({2, -2, 0, -2}));
    CHECK(parse_integer_list("[]").empty());
    CHECK_THROWS_AS(parse_integer_list("[2,,2]"), InvalidInput);
    CHECK_THROWS_AS(parse_integer_list("2,2"), InvalidInput);
    const std::vector<int> w{2, -2};
    CHECK(format_integer_list(std::span<const int>(w)) == "[2,-2]");
}

TEST_CASE("even word rejects odd or zero entries") {
    CHECK_THROWS_AS(EvenWord(big({2, 3})), InvalidInput);
    CHECK_THROWS_AS(EvenWord(big({2, 0})), InvalidInput);
}
