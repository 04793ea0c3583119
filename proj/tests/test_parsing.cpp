#include "bridge_order/errors.hpp"
#include "bridge_order/oracle.hpp"
#include "bridge_order/parsing.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bridge_order;

namespace {

const ExpandedWord kC1{2, -2, 0, -2, 2, -2, 0, -2, 2, 2, 0, 2, -2, 2, 0, 2,
                       -2, -2, 0, -2, 2, -2, 0, -2, 2, -2, 0, -2};
const ExpandedWord kA{2, -2, 0, -2};
const ExpandedWord kB{2, -2, 0, -2, 2, -2, 0, -2};

std::vector<int> reassemble(const Parsing& p) {
    std::vector<int> out;
    const auto back = p.tile().reversed();
    for (std::size_t i = 0; i < p.tile_count(); ++i) {
        if (i > 0) {
            auto w = ConnectorWord(p.connectors()[i - 1]).word();
            out.insert(out.end(), w.begin(), w.end());
        }
        for (int x : (i % 2 == 0 ? p.tile() : back)) out.push_back(p.signs()[i] * x);
    }
    return out;
}

} // namespace

TEST_CASE("first parsing of the 28-entry word") {
    const auto p = parse(kC1, kA);
    REQUIRE(p);
    CHECK(p->tile_count() == 5);
    CHECK(p->signs() == std::vector<int>{1, 1, -1, 1, 1});
    CHECK(p->connectors() == std::vector<long>{1, 2, -1, -2});
}

TEST_CASE("second parsing of the 28-entry word") {
    const auto p = parse(kC1, kB);
    REQUIRE(p);
    CHECK(p->tile_count() == 3);
    CHECK(p->signs() == std::vector<int>{1, -1, 1});
    CHECK(p->connectors() == std::vector<long>{1, -2});
}

TEST_CASE("trivial and failing parses") {
    const auto self = parse(kA, kA);
    REQUIRE(self);
    CHECK(self->tile_count() == 1);
    CHECK(self->connectors().empty());
    CHECK_FALSE(parse(ExpandedWord{2, 2}, ExpandedWord{2, -2}));
    CHECK_FALSE(parse(kA, kB));
    CHECK_FALSE(parse(ExpandedWord{-2, 2}, ExpandedWord{2, -2}));
}

TEST_CASE("class parsing") {
    const auto twos = class_of(ExpandedWord(std::vector<int>(14, 2)));
    const auto p = parse_class(twos, class_of(ExpandedWord{2, 2}));
    REQUIRE(p);
    CHECK(p->tile_count() == 5);
    CHECK(p->connectors() == std::vector<long>(4, 1));
    CHECK(p->signs() == std::vector<int>(5, 1));
    CHECK(parse_class(class_of(kA), class_of(kA))->tile_count() == 1);
    CHECK_FALSE(parse_class(class_of(ExpandedWord{2, 2}), class_of(ExpandedWord{2, -2})));
}

TEST_CASE("seams of the two parsings") {
    const auto pa = parse(kC1, kA);
    const auto pb = parse(kC1, kB);
    const auto s = seams(kC1, *pa, *pb);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Seam{9, SeamKind::Mixed});
    CHECK(s[1] == Seam{17, SeamKind::Mixed});
    const auto self = parse(kA, kA);
    CHECK(seams(kA, *self, *self).empty());
}

TEST_CASE("records round trip") {
    const auto p = *parse(kC1, kA);
    CHECK(Parsing::from_record(p.tile(), p.signs(), p.connectors()) == p);
    CHECK_THROWS_AS(Parsing::from_record(kA, {1, -1}, {0}), InvalidInput);
    CHECK_THROWS_AS(Parsing::from_record(kA, {-1}, {}), InvalidInput);
    CHECK_THROWS_AS(Parsing::from_record(kA, {1, 1}, {}), InvalidInput);
}

TEST_CASE("parsing is unique and reassembles") {
    // Every pair with |c| <= 14 and |a| <= 6: the deterministic parse exists
    // exactly when the exhaustive decomposition count is one, never more.
    const auto cs = enumerate_S(14, false);
    const auto as = enumerate_S(6, false);
    std::size_t parsed = 0;
    std::size_t bad = 0;
    for (const auto& a : as) {
        for (const auto& c : cs) {
            if (c.size() < a.size()) continue;
            const auto count = ref::count_parsings(c.entries(), a.entries());
            const auto p = parse(c, a);
            if (count > 1 || p.has_value() != (count == 1)) {
                ++bad;
                INFO("c = " << c.to_string() << ", a = " << a.to_string() << ", decompositions = " << count);
                CHECK(false);
                continue;
            }
            if (!p) continue;
            ++parsed;
            bool ok = reassemble(*p) == c.vector() && p->signs().front() == 1;
            for (std::size_t i = 0; i < p->connectors().size(); ++i) {
                if (p->connectors()[i] == 0) ok = ok && p->signs()[i] == p->signs()[i + 1];
            }
            if (c.size() % 2 == 0 && a.size() % 2 == 0) ok = ok && p->tile_count() % 2 == 1;
            if (!ok) {
                ++bad;
                INFO("bad record for c = " << c.to_string() << ", a = " << a.to_string());
                CHECK(false);
            }
        }
    }
    CHECK(bad == 0);
    CHECK(parsed > 1000);
}

TEST_CASE("mixed seams never touch a zero connector") {
    for (const auto& c : enumerate_S(12, true)) {
        for (const auto& a : enumerate_S(4, true)) {
            const auto pa = parse(c, a);
            if (!pa) continue;
            for (const auto& b : enumerate_S(6, true)) {
                if (b.size() <= a.size()) continue;
                const auto pb = parse(c, b);
                if (!pb) continue;
                for (const auto& s : seams(c, *pa, *pb)) {
                    if (s.kind != SeamKind::Mixed) continue;
                    CHECK(c[s.position - 1] != 0);
                    CHECK(c[s.position] != 0);
                }
            }
        }
    }
}
