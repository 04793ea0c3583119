#pragma once

#include "bridge_order/words.hpp"

#include <optional>
#include <vector>

namespace bridge_order {

// A contiguous piece of a parsed word: either a signed tile e*a^(+-1) or a
// connector.
struct Piece {
    enum class Kind { Tile, Connector };
    Kind kind;
    std::size_t begin;
    std::size_t end;
    std::size_t index;  // tile number or connector number, from 0
    int sign = 1;       // tiles only
    bool forward = true; // tiles only: a rather than a^-1
    long value = 0;      // connectors only
};

// c = (e_1 a, 2c_1, e_2 a^-1, 2c_2, ..., e_k a^(+-1)) with e_1 = +1 and
// c_i = 0 forcing e_i = e_(i+1).
class Parsing {
public:
    // Rebuilds the parsed word from its record. Throws InvalidInput when the
    // record is malformed or does not assemble into an expanded word.
    static Parsing from_record(ExpandedWord tile, std::vector<int> signs, std::vector<long> connectors);

    const ExpandedWord& word() const { return word_; }
    const ExpandedWord& tile() const { return tile_; }
    const std::vector<int>& signs() const { return signs_; }
    const std::vector<long>& connectors() const { return connectors_; }
    std::size_t tile_count() const { return signs_.size(); }

    std::vector<Piece> pieces() const;

    friend bool operator==(const Parsing&, const Parsing&) = default;

private:
    friend std::optional<Parsing> parse(const ExpandedWord&, const ExpandedWord&);
    Parsing(ExpandedWord word, ExpandedWord tile, std::vector<int> signs, std::vector<long> connectors)
        : word_(std::move(word)), tile_(std::move(tile)), signs_(std::move(signs)),
          connectors_(std::move(connectors)) {}

    ExpandedWord word_;
    ExpandedWord tile_;
    std::vector<int> signs_;
    std::vector<long> connectors_;
};

// The parsing of c with respect to the literal word a, if one exists. The
// match is forced left to right: a connector is always the maximal connector
// run starting after a tile, so there is nothing to backtrack over.
std::optional<Parsing> parse(const ExpandedWord& c, const ExpandedWord& a);

// Tries every representative pair; the returned parsing records which
// representatives matched.
std::optional<Parsing> parse_class(const WordClass& c, const WordClass& a);
std::optional<Parsing> parse_class(const ExpandedWord& c, const ExpandedWord& a);

enum class SeamKind { Pure, Mixed };

struct Seam {
    std::size_t position; // number of entries of c before the seam
    SeamKind kind;

    friend bool operator==(const Seam&, const Seam&) = default;
};

// Positions where both parsings of the same word have a piece boundary.
std::vector<Seam> seams(const ExpandedWord& c, const Parsing& pa, const Parsing& pb);

} // namespace bridge_order
