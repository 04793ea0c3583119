#pragma once

#include "bridge_order/parsing.hpp"
#include "bridge_order/words.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bridge_order {

// Lattice point of the a x b product: x runs along b (columns, left to
// right), y along a (rows, bottom to top). One unit per word entry.
struct Point {
    long x = 0;
    long y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
    enum class Kind { Diagonal, Vertical, Horizontal };
    Kind kind;
    Point from;
    Point to;
    std::size_t entry; // index into c
    // Tile signs for diagonals; 0 on edge runs.
    int eps = 0;
    int eta = 0;
};

struct SeamMarker {
    Seam seam;
    Point corner;
};

struct ProductDiagram {
    ExpandedWord a;
    ExpandedWord b;
    ExpandedWord c;
    std::vector<Component> row_components; // of a, bottom to top
    std::vector<Component> col_components; // of b, left to right
    std::vector<Segment> path;
    std::vector<SeamMarker> seams;
    std::size_t vertical_traversals = 0;
    std::size_t horizontal_traversals = 0;

    long width() const { return static_cast<long>(b.size()); }
    long height() const { return static_cast<long>(a.size()); }
    // Checkerboard over maximal components: white iff i + j is even.
    bool black(std::size_t row_component, std::size_t col_component) const {
        return (row_component + col_component) % 2 == 1;
    }
    std::size_t mixed_seam_count() const;
};

// Maps every entry of c to a unit segment of the product. Throws
// NotADoubleParsing if c does not parse with respect to a and b, and
// NotRepresentable if the segments do not form a corner-to-corner path that
// uses each segment once.
ProductDiagram build_diagram(const ExpandedWord& a, const ExpandedWord& b, const ExpandedWord& c);

enum class DiagramFormat { Svg, Ascii };

// "svg" or "ascii"; anything else throws UnsupportedFormat.
DiagramFormat diagram_format(std::string_view name);

std::string render(const ProductDiagram& d, DiagramFormat format);
std::string render_svg(const ProductDiagram& d);
std::string render_ascii(const ProductDiagram& d);

} // namespace bridge_order
