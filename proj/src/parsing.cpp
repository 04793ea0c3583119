#include "bridge_order/parsing.hpp"

#include "bridge_order/errors.hpp"

#include <map>

namespace bridge_order {

Parsing Parsing::from_record(ExpandedWord tile, std::vector<int> signs, std::vector<long> connectors) {
    if (tile.empty() || signs.empty() || signs.front() != 1 || connectors.size() + 1 != signs.size()) {
        throw InvalidInput("parsing record needs a tile, signs starting with +1 and one connector "
                           "between consecutive tiles");
    }
    std::vector<int> entries;
    const auto backwards = tile.reversed();
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1) {
            throw InvalidInput("tile signs must be +1 or -1");
        }
        if (i > 0) {
            if (connectors[i - 1] == 0 && signs[i] != signs[i - 1]) {
                throw InvalidInput("a zero connector must join tiles of equal sign");
            }
            auto w = ConnectorWord(connectors[i - 1]).word();
            entries.insert(entries.end(), w.begin(), w.end());
        }
        const auto& t = i % 2 == 0 ? tile : backwards;
        for (int x : t) entries.push_back(signs[i] * x);
    }
    auto word = ExpandedWord(std::move(entries));
    auto check = parse(word, tile);
    if (!check || check->signs_ != signs || check->connectors_ != connectors) {
        throw InvalidInput("parsing record does not reassemble consistently");
    }
    return *check;
}

std::vector<Piece> Parsing::pieces() const {
    std::vector<Piece> out;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (i > 0) {
            std::size_t len = ConnectorWord(connectors_[i - 1]).length();
            out.push_back(Piece{Piece::Kind::Connector, pos, pos + len, i - 1, 1, true, connectors_[i - 1]});
            pos += len;
        }
        out.push_back(Piece{Piece::Kind::Tile, pos, pos + tile_.size(), i, signs_[i], i % 2 == 0, 0});
        pos += tile_.size();
    }
    return out;
}

std::optional<Parsing> parse(const ExpandedWord& c, const ExpandedWord& a) {
    if (a.empty() || c.size() < a.size()) {
        return std::nullopt;
    }
    const auto forward = a.entries();
    const auto backwards = a.reversed();
    const std::size_t n = c.size();
    std::vector<int> signs;
    std::vector<long> connectors;
    std::size_t pos = 0;
    for (std::size_t i = 0;; ++i) {
        std::span<const int> t = i % 2 == 0 ? forward : backwards.entries();
        if (pos + t.size() > n || c[pos] == 0) {
            return std::nullopt;
        }
        const int sign = c[pos] == t[0] ? 1 : -1;
        if ((i == 0 && sign != 1) || (i > 0 && connectors.back() == 0 && sign != signs.back())) {
            return std::nullopt;
        }
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (c[pos + k] != sign * t[k]) return std::nullopt;
        }
        signs.push_back(sign);
        pos += t.size();
        if (pos == n) break;

        if (c[pos] == 0) {
            connectors.push_back(0);
            pos += 1;
        } else {
            const int s = c[pos];
            std::size_t j = pos;
            while (j + 2 < n && c[j + 1] == 0 && c[j + 2] == s) j += 2;
            const long twos = static_cast<long>((j - pos) / 2 + 1);
            connectors.push_back(s > 0 ? twos : -twos);
            pos = j + 1;
        }
        if (pos >= n) {
            return std::nullopt;
        }
    }
    return Parsing(c, a, std::move(signs), std::move(connectors));
}

std::optional<Parsing> parse_class(const WordClass& c, const WordClass& a) {
    const auto tiles = a.members();
    for (const auto& word : c.members()) {
        for (const auto& tile : tiles) {
            if (auto p = parse(word, tile)) return p;
        }
    }
    return std::nullopt;
}

std::optional<Parsing> parse_class(const ExpandedWord& c, const ExpandedWord& a) {
    return parse_class(class_of(c), class_of(a));
}

std::vector<Seam> seams(const ExpandedWord& c, const Parsing& pa, const Parsing& pb) {
    if (pa.word() != c || pb.word() != c) {
        throw InvalidInput("seams need two parsings of the same word");
    }
    // boundary position -> true when a tile ends there (tile | connector).
    auto boundaries = [&](const Parsing& p) {
        std::map<std::size_t, bool> out;
        for (const auto& piece : p.pieces()) {
            if (piece.end < c.size()) out[piece.end] = piece.kind == Piece::Kind::Tile;
        }
        return out;
    };
    const auto ba = boundaries(pa);
    const auto bb = boundaries(pb);
    std::vector<Seam> out;
    for (const auto& [pos, tile_first] : ba) {
        auto it = bb.find(pos);
        if (it == bb.end()) continue;
        out.push_back(Seam{pos, it->second == tile_first ? SeamKind::Pure : SeamKind::Mixed});
    }
    return out;
}

} // namespace bridge_order
