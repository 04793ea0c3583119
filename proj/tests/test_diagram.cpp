#include "bridge_order/diagram.hpp"
#include "bridge_order/errors.hpp"
#include "bridge_order/oracle.hpp"
#include "bridge_order/order.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace bridge_order;

namespace {

const ExpandedWord kC1{2, -2, 0, -2, 2, -2, 0, -2, 2, 2, 0, 2, -2, 2, 0, 2,
                       -2, -2, 0, -2, 2, -2, 0, -2, 2, -2, 0, -2};
const ExpandedWord kA{2, -2, 0, -2};
const ExpandedWord kB{2, -2, 0, -2, 2, -2, 0, -2};

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

void check_path(const ProductDiagram& d) {
    REQUIRE(d.path.size() == d.c.size());
    CHECK(d.path.front().from == Point{0, 0});
    CHECK(d.path.back().to == Point{d.width(), d.height()});
    for (std::size_t i = 1; i < d.path.size(); ++i) CHECK(d.path[i - 1].to == d.path[i].from);
    for (const auto& s : d.path) {
        if (s.kind != Segment::Kind::Diagonal) continue;
        const long row = std::min(s.from.y, s.to.y);
        const long col = std::min(s.from.x, s.to.x);
        CHECK(d.a[static_cast<std::size_t>(row)] == s.eps * s.eta * d.b[static_cast<std::size_t>(col)]);
    }
}

} // namespace

TEST_CASE("diagram of the 28-entry example") {
    const auto d = build_diagram(kA, kB, kC1);
    check_path(d);
    CHECK(d.vertical_traversals == 5);
    CHECK(d.horizontal_traversals == 3);
    CHECK(d.mixed_seam_count() == 2);
    REQUIRE(d.seams.size() == 2);
    CHECK(d.seams[0].seam.position == 9);
    CHECK(d.seams[1].seam.position == 17);
    // Both mixed seams sit on corners of the product.
    for (const auto& m : d.seams) {
        CHECK((m.corner.x == 0 || m.corner.x == d.width()));
        CHECK((m.corner.y == 0 || m.corner.y == d.height()));
    }
    CHECK(d.row_components.size() == 2);
    CHECK(d.col_components.size() == 4);
    for (const auto& s : d.path) {
        if (s.kind == Segment::Kind::Diagonal) CHECK(s.eps == s.eta);
    }
}

TEST_CASE("a single tile is one diagonal") {
    const auto d = build_diagram(kA, kA, kA);
    check_path(d);
    for (const auto& s : d.path) {
        CHECK(s.kind == Segment::Kind::Diagonal);
        CHECK(s.from.x == s.from.y);
    }
    CHECK(d.vertical_traversals == 1);
    CHECK(d.horizontal_traversals == 1);
    CHECK(d.seams.empty());
}

TEST_CASE("diagram errors") {
    CHECK_THROWS_AS(build_diagram(kB, kA, kA), NotADoubleParsing);
    // Both parsings of eight twos put their connectors on the same entries.
    const ExpandedWord twos(std::vector<int>(8, 2));
    CHECK_THROWS_AS(build_diagram(ExpandedWord{2, 2}, ExpandedWord{2, 2}, twos), NotRepresentable);
    CHECK(diagram_format("svg") == DiagramFormat::Svg);
    CHECK(diagram_format("ascii") == DiagramFormat::Ascii);
    CHECK_THROWS_AS(diagram_format("png"), UnsupportedFormat);
    CHECK_THROWS_AS(diagram_format(""), UnsupportedFormat);
}

TEST_CASE("rendering is deterministic and carries the counts") {
    const auto svg = render(build_diagram(kA, kB, kC1), DiagramFormat::Svg);
    CHECK(svg == render(build_diagram(kA, kB, kC1), DiagramFormat::Svg));
    CHECK(svg.find("<desc>vertical-traversals=5 horizontal-traversals=3 mixed-seams=2</desc>") != std::string::npos);
    CHECK(count(svg, "class=\"mixed-seam\"") == 2);
    CHECK(count(svg, "class=\"path ") == 28);

    std::ifstream fixture(BRIDGE_ORDER_FIXTURES "/example1.svg", std::ios::binary);
    REQUIRE(fixture);
    std::stringstream expected;
    expected << fixture.rdbuf();
    CHECK(svg == expected.str());

    const auto ascii = render(build_diagram(kA, kB, kC1), DiagramFormat::Ascii);
    CHECK(ascii == render_ascii(build_diagram(kA, kB, kC1)));
    CHECK(count(ascii, "*") == 2);
    CHECK(ascii.find("vertical-traversals=5 horizontal-traversals=3 mixed-seams=2") != std::string::npos);
}

TEST_CASE("shortest witnesses draw as paths matching their parsings") {
    const std::vector<StdForm> bases{{ExpandedWord{}, 2, 2, 1}, {ExpandedWord{}, 2, -4, 1}, {ExpandedWord{2, 2}, 2, 2, 1}};
    for (const auto& base : bases) {
        for (long p = 1; p <= 3; ++p) {
            for (long q = p + 1; q <= 3; ++q) {
                const auto a = base.assemble(p);
                const auto b = base.assemble(q);
                SearchBudget budget;
                budget.max_word_length = shortest_lubs(phi(a), phi(b)).front().size();
                const auto r = search_double_parsing(class_of(a), class_of(b), budget);
                REQUIRE(r.found());
                for (const auto& w : r.witnesses) {
                    const auto d = build_diagram(w.a, w.b, w.c);
                    check_path(d);
                    CHECK(d.vertical_traversals == parse(w.c, w.a)->tile_count());
                    CHECK(d.horizontal_traversals == parse(w.c, w.b)->tile_count());
                    const auto s = seams(w.c, *parse(w.c, w.a), *parse(w.c, w.b));
                    REQUIRE(s.size() == d.seams.size());
                    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == d.seams[i].seam);
                }
            }
        }
    }
}
