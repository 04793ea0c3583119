#include "bridge_order/bridge.hpp"
#include "bridge_order/errors.hpp"
#include "bridge_order/oracle.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace bridge_order;

namespace {

TwoBridgeClass K(long p, long q) { return knot_class(Fraction(p, q)); }

// Equivalence checked straight from the definition: p' = +-p^(+-1) mod q.
bool equivalent_by_search(long p1, long p2, long q) {
    auto mod = [q](long x) { return ((x % q) + q) % q; };
    for (long s : {1, -1}) {
        if (mod(p1 - s * p2) == 0) return true;
        if (mod(p1 * p2 - s) == 0) return true;
    }
    return false;
}

} // namespace

TEST_CASE("knot classes") {
    CHECK(K(3, 5).q() == 5);
    CHECK(K(3, 5).p() == 2);
    CHECK(K(1, 3).p() == 1);
    CHECK(K(1, 1).is_unknot());
    CHECK(K(1, 1) == TwoBridgeClass::unknot());
    CHECK(K(-3, 5) == K(3, 5));
    CHECK(K(11, 30).kind() == BridgeKind::Link);
    CHECK(K(1, 3).to_string() == "K(1/3)");
}

TEST_CASE("equivalence") {
    CHECK(equivalent(Fraction(2, 5), Fraction(3, 5)));
    CHECK(equivalent(Fraction(4, 7), Fraction(2, 7)));
    CHECK_FALSE(equivalent(Fraction(1, 3), Fraction(1, 5)));
    for (long q = 2; q <= 60; ++q) {
        for (long p1 = 1; p1 < q; ++p1) {
            if (std::gcd(p1, q) != 1) continue;
            for (long p2 = 1; p2 < q; ++p2) {
                if (std::gcd(p2, q) != 1) continue;
                CHECK(equivalent(Fraction(p1, q), Fraction(p2, q)) == equivalent_by_search(p1, p2, q));
            }
        }
    }
}

TEST_CASE("phi on known words") {
    CHECK(phi(ExpandedWord{2, -2}) == K(1, 3));
    CHECK(phi(ExpandedWord{2, 2}) == K(3, 5));
    CHECK(phi(ExpandedWord{2, 2, -2, 2, 2}) == K(11, 30));
    CHECK_THROWS_AS(phi(ExpandedWord{}), InvalidInput);
}

TEST_CASE("phi inverse on knots") {
    CHECK(phi_inverse_knot(K(1, 3)) == class_of(ExpandedWord{2, -2}));
    CHECK(phi_inverse_knot(K(4, 7)) == class_of(ExpandedWord{2, -2, 0, -2}));
    CHECK(phi_inverse_knot(K(24, 41)) == class_of(ExpandedWord{2, -2, 0, -2, 2, -2, 0, -2}));
    CHECK_THROWS_AS(phi_inverse_knot(K(1, 2)), NotAKnot);
    CHECK_THROWS_AS(phi_inverse_knot(TwoBridgeClass::unknot()), NotAKnot);
}

TEST_CASE("phi inverse on links") {
    const auto pre = phi_inverse_link(K(11, 30));
    CHECK(pre.first == class_of(ExpandedWord{2, 2, -2, 2, 2}));
    CHECK(pre.second == class_of(ExpandedWord{2, -2, -2, -2, 2}));
    CHECK_FALSE(pre.coincident);

    const auto half = phi_inverse_link(K(1, 2));
    CHECK(half.coincident);
    CHECK(half.first == class_of(ExpandedWord{2}));
    CHECK_THROWS_AS(phi_inverse_link(K(1, 3)), NotALink);

    for (long q = 4; q <= 40; q += 2) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const auto k = K(p, q);
            const auto links = phi_inverse_link(k);
            CHECK(phi(links.first.canonical()) == k);
            CHECK(phi(links.second.canonical()) == k);
            CHECK(links.first.parity() == Parity::Link);
        }
    }
}

TEST_CASE("phi is constant on word classes") {
    for (const auto& a : enumerate_S(10, false)) {
        const auto k = phi(a);
        CHECK(phi(a.negated()) == k);
        CHECK(phi(a.reversed()) == k);
        CHECK(phi(a.reversed().negated()) == k);
    }
}

TEST_CASE("reversal multiplies numerators to +-1") {
    for (const auto& a : enumerate_S(10, false)) {
        const auto f = eval_cf(0, a.entries());
        const auto g = eval_cf(0, a.reversed().entries());
        REQUIRE(f.den() == g.den());
        const BigInt sign = a.size() % 2 == 1 ? 1 : -1;
        BigInt r = (f.num() * g.num() - sign) % f.den();
        CHECK(r == 0);
    }
}

TEST_CASE("phi is injective on even classes and inverted by phi_inverse_knot") {
    std::set<TwoBridgeClass> seen;
    for (const auto& cls : even_classes(10)) {
        const auto k = phi(cls.canonical());
        CHECK(k.is_knot());
        CHECK(seen.insert(k).second);
        CHECK(phi_inverse_knot(k) == cls);
    }
}
