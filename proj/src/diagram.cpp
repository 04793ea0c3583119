#include "bridge_order/diagram.hpp"

#include "bridge_order/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace bridge_order {

namespace {

constexpr long kUnit = 20;
constexpr long kMargin = 40;

struct EntryRole {
    const Piece* piece;
    std::size_t offset; // within the piece
};

std::vector<EntryRole> roles(const std::vector<Piece>& pieces, std::size_t n) {
    std::vector<EntryRole> out(n);
    for (const auto& p : pieces) {
        for (std::size_t k = p.begin; k < p.end; ++k) out[k] = EntryRole{&p, k - p.begin};
    }
    return out;
}

std::vector<std::size_t> component_of(const std::vector<Component>& comps, std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t k = comps[i].begin; k < comps[i].end; ++k) out[k] = i;
    }
    return out;
}

std::string point_text(const Point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

char sign_char(int s) { return s > 0 ? '+' : '-'; }

// Counts crossings between two opposite edges: every time the path reaches
// one edge after last touching the other.
std::size_t traversals(const std::vector<Segment>& path, long extent, bool vertical) {
    int last = 0; // 0 low edge, 1 high edge
    std::size_t count = 0;
    for (const auto& s : path) {
        const long v = vertical ? s.to.y : s.to.x;
        if (v == 0 && last == 1) {
            last = 0;
            ++count;
        } else if (v == extent && last == 0) {
            last = 1;
            ++count;
        }
    }
    return count;
}

} // namespace

std::size_t ProductDiagram::mixed_seam_count() const {
    return static_cast<std::size_t>(std::count_if(seams.begin(), seams.end(), [](const SeamMarker& m) {
        return m.seam.kind == SeamKind::Mixed;
    }));
}

ProductDiagram build_diagram(const ExpandedWord& a, const ExpandedWord& b, const ExpandedWord& c) {
    const auto pa = parse(c, a);
    const auto pb = parse(c, b);
    if (!pa || !pb) {
        throw NotADoubleParsing(c.to_string() + " does not parse with respect to both " + a.to_string() +
                                " and " + b.to_string());
    }
    ProductDiagram d;
    d.a = a;
    d.b = b;
    d.c = c;
    d.row_components = component_spans(a.entries());
    d.col_components = component_spans(b.entries());

    const auto pieces_a = pa->pieces();
    const auto pieces_b = pb->pieces();
    const auto ra = roles(pieces_a, c.size());
    const auto rb = roles(pieces_b, c.size());
    const long W = d.width();
    const long H = d.height();

    for (std::size_t i = 0; i < c.size(); ++i) {
        const Piece& x = *ra[i].piece;
        const Piece& y = *rb[i].piece;
        const bool a_tile = x.kind == Piece::Kind::Tile;
        const bool b_tile = y.kind == Piece::Kind::Tile;
        const long alpha = x.forward ? 1 : -1;
        const long beta = y.forward ? 1 : -1;
        Segment s{Segment::Kind::Diagonal, {}, {}, i, 0, 0};
        if (a_tile && b_tile) {
            const long row = x.forward ? static_cast<long>(ra[i].offset) : H - 1 - static_cast<long>(ra[i].offset);
            const long col = y.forward ? static_cast<long>(rb[i].offset) : W - 1 - static_cast<long>(rb[i].offset);
            s.from = Point{beta > 0 ? col : col + 1, alpha > 0 ? row : row + 1};
            s.to = Point{s.from.x + beta, s.from.y + alpha};
            s.eps = x.sign;
            s.eta = y.sign;
        } else if (a_tile) {
            // b-connector: right edge after a forward b-tile, left edge after b^-1.
            const bool right = pieces_b[y.index * 2].forward;
            const long row = x.forward ? static_cast<long>(ra[i].offset) : H - 1 - static_cast<long>(ra[i].offset);
            s.kind = Segment::Kind::Vertical;
            s.from = Point{right ? W : 0, alpha > 0 ? row : row + 1};
            s.to = Point{s.from.x, s.from.y + alpha};
        } else if (b_tile) {
            const bool top = pieces_a[x.index * 2].forward;
            const long col = y.forward ? static_cast<long>(rb[i].offset) : W - 1 - static_cast<long>(rb[i].offset);
            s.kind = Segment::Kind::Horizontal;
            s.from = Point{beta > 0 ? col : col + 1, top ? H : 0};
            s.to = Point{s.from.x + beta, s.from.y};
        } else {
            throw NotRepresentable("entry " + std::to_string(i + 1) + " lies in an a-connector and a b-connector");
        }
        d.path.push_back(s);
    }

    if (d.path.front().from != Point{0, 0} || d.path.back().to != Point{W, H}) {
        throw NotRepresentable("path does not run from the lower left to the upper right corner");
    }
    std::set<std::tuple<long, long, long, long>> used;
    for (std::size_t i = 0; i < d.path.size(); ++i) {
        const auto& s = d.path[i];
        if (i > 0 && d.path[i - 1].to != s.from) {
            throw NotRepresentable("path breaks before entry " + std::to_string(i + 1) + " at " +
                                   point_text(d.path[i - 1].to) + " -> " + point_text(s.from));
        }
        auto key = std::min(std::tuple{s.from.x, s.from.y, s.to.x, s.to.y}, std::tuple{s.to.x, s.to.y, s.from.x, s.from.y});
        if (!used.insert(key).second) {
            throw NotRepresentable("path uses the segment at entry " + std::to_string(i + 1) + " twice");
        }
    }

    for (const auto& seam : seams(c, *pa, *pb)) {
        d.seams.push_back(SeamMarker{seam, d.path[seam.position - 1].to});
    }
    d.vertical_traversals = traversals(d.path, H, true);
    d.horizontal_traversals = traversals(d.path, W, false);
    return d;
}

DiagramFormat diagram_format(std::string_view name) {
    if (name == "svg") return DiagramFormat::Svg;
    if (name == "ascii") return DiagramFormat::Ascii;
    throw UnsupportedFormat("unknown diagram format '" + std::string(name) + "' (expected svg or ascii)");
}

std::string render(const ProductDiagram& d, DiagramFormat format) {
    return format == DiagramFormat::Svg ? render_svg(d) : render_ascii(d);
}

std::string render_svg(const ProductDiagram& d) {
    const long W = d.width();
    const long H = d.height();
    auto px = [](long x) { return kMargin + x * kUnit; };
    auto py = [H](long y) { return kMargin + (H - y) * kUnit; };
    // Half-unit positions for labels, kept in integers by doubling.
    auto hx = [](long x2) { return std::to_string(kMargin + x2 * kUnit / 2); };
    auto hy = [H](long y2) { return std::to_string(kMargin + (2 * H - y2) * kUnit / 2); };

    std::ostringstream out;
    const long width = 2 * kMargin + W * kUnit;
    const long height = 2 * kMargin + H * kUnit;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<title>a=" << d.a.to_string() << " b=" << d.b.to_string() << " c=" << d.c.to_string() << "</title>\n";
    out << "<desc>vertical-traversals=" << d.vertical_traversals << " horizontal-traversals="
        << d.horizontal_traversals << " mixed-seams=" << d.mixed_seam_count() << "</desc>\n";
    out << "<style>.cell-black{fill:#b0b0b0}.grid{stroke:#d0d0d0;stroke-width:1}"
           ".component{stroke:#000;stroke-width:2;fill:none}.path{stroke:#c00000;stroke-width:3}"
           ".label{font-family:monospace;font-size:10px}.sign{font-family:monospace;font-size:8px;fill:#0000a0}"
           ".mixed-seam{fill:none;stroke:#008000;stroke-width:2}</style>\n";

    out << "<g id=\"cells\">\n";
    for (std::size_t i = 0; i < d.row_components.size(); ++i) {
        for (std::size_t j = 0; j < d.col_components.size(); ++j) {
            if (!d.black(i, j)) continue;
            const auto& r = d.row_components[i];
            const auto& col = d.col_components[j];
            out << "<rect class=\"cell-black\" x=\"" << px(static_cast<long>(col.begin)) << "\" y=\""
                << py(static_cast<long>(r.end)) << "\" width=\"" << (col.end - col.begin) * kUnit
                << "\" height=\"" << (r.end - r.begin) * kUnit << "\"/>\n";
        }
    }
    out << "</g>\n<g id=\"grid\">\n";
    for (long x = 0; x <= W; ++x) {
        out << "<line class=\"grid\" x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\""
            << py(H) << "\"/>\n";
    }
    for (long y = 0; y <= H; ++y) {
        out << "<line class=\"grid\" x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(W) << "\" y2=\""
            << py(y) << "\"/>\n";
    }
    out << "</g>\n<g id=\"components\">\n";
    for (const auto& r : d.row_components) {
        for (const auto& col : d.col_components) {
            out << "<rect class=\"component\" x=\"" << px(static_cast<long>(col.begin)) << "\" y=\""
                << py(static_cast<long>(r.end)) << "\" width=\"" << (col.end - col.begin) * kUnit
                << "\" height=\"" << (r.end - r.begin) * kUnit << "\"/>\n";
        }
    }
    out << "</g>\n<g id=\"labels\">\n";
    for (long y = 0; y < H; ++y) {
        out << "<text class=\"label\" x=\"" << kMargin - 18 << "\" y=\"" << hy(2 * y + 1) << "\">"
            << d.a[static_cast<std::size_t>(y)] << "</text>\n";
    }
    for (long x = 0; x < W; ++x) {
        out << "<text class=\"label\" x=\"" << hx(2 * x + 1) << "\" y=\"" << py(0) + 16 << "\">"
            << d.b[static_cast<std::size_t>(x)] << "</text>\n";
    }
    out << "</g>\n<g id=\"path\">\n";
    for (const auto& s : d.path) {
        const char* kind = s.kind == Segment::Kind::Diagonal ? "diagonal"
                           : s.kind == Segment::Kind::Vertical ? "vertical" : "horizontal";
        out << "<line class=\"path " << kind << "\" data-entry=\"" << s.entry + 1 << "\" x1=\"" << px(s.from.x)
            << "\" y1=\"" << py(s.from.y) << "\" x2=\"" << px(s.to.x) << "\" y2=\"" << py(s.to.y) << "\"/>\n";
    }
    for (const auto& s : d.path) {
        if (s.kind != Segment::Kind::Diagonal) continue;
        out << "<text class=\"sign\" x=\"" << hx(s.from.x + s.to.x) << "\" y=\"" << hy(s.from.y + s.to.y) << "\">("
            << sign_char(s.eps) << "," << sign_char(s.eta) << ")</text>\n";
    }
    out << "</g>\n<g id=\"seams\">\n";
    for (const auto& m : d.seams) {
        if (m.seam.kind != SeamKind::Mixed) continue;
        out << "<circle class=\"mixed-seam\" data-position=\"" << m.seam.position << "\" cx=\"" << px(m.corner.x)
            << "\" cy=\"" << py(m.corner.y) << "\" r=\"6\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_ascii(const ProductDiagram& d) {
    const long W = d.width();
    const long H = d.height();
    const auto rows = static_cast<std::size_t>(2 * H + 1);
    const auto cols = static_cast<std::size_t>(2 * W + 1);
    std::vector<std::string> canvas(rows, std::string(cols, ' '));
    // Canvas row 0 is the top edge.
    auto at = [&](long x2, long y2) -> char& { return canvas[static_cast<std::size_t>(2 * H - y2)][static_cast<std::size_t>(x2)]; };

    const auto row_comp = component_of(d.row_components, d.a.size());
    const auto col_comp = component_of(d.col_components, d.b.size());
    for (long y = 0; y <= H; ++y) {
        for (long x = 0; x <= W; ++x) at(2 * x, 2 * y) = '+';
    }
    for (long y = 0; y < H; ++y) {
        for (long x = 0; x < W; ++x) {
            at(2 * x + 1, 2 * y + 1) = d.black(row_comp[static_cast<std::size_t>(y)], col_comp[static_cast<std::size_t>(x)]) ? '#' : '.';
        }
    }
    for (const auto& s : d.path) {
        const long x2 = s.from.x + s.to.x;
        const long y2 = s.from.y + s.to.y;
        char& g = at(x2, y2);
        switch (s.kind) {
        case Segment::Kind::Vertical: g = '|'; break;
        case Segment::Kind::Horizontal: g = '-'; break;
        case Segment::Kind::Diagonal: {
            const char glyph = (s.to.x - s.from.x) * (s.to.y - s.from.y) > 0 ? '/' : '\\';
            g = (g == '/' || g == '\\') && g != glyph ? 'X' : glyph;
            break;
        }
        }
    }
    for (const auto& m : d.seams) {
        if (m.seam.kind == SeamKind::Mixed) at(2 * m.corner.x, 2 * m.corner.y) = '*';
    }

    std::ostringstream out;
    out << "a=" << d.a.to_string() << " b=" << d.b.to_string() << "\n";
    out << "c=" << d.c.to_string() << "\n";
    for (const auto& line : canvas) out << line << "\n";
    out << "vertical-traversals=" << d.vertical_traversals << " horizontal-traversals=" << d.horizontal_traversals
        << " mixed-seams=" << d.mixed_seam_count() << "\n";
    return out.str();
}

} // namespace bridge_order
