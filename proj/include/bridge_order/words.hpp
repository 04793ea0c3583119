#pragma once

#include "bridge_order/rational.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bridge_order {

// Membership in the set of expanded even vectors: entries in {-2, 0, 2},
// nonzero ends, every 0 flanked by two equal nonzero entries. The empty word
// is rejected.
bool is_expanded(std::span<const int> entries);

// A word over {-2, 0, 2} that is either empty (the unknot, or an empty tile
// prefix) or a member of the expanded even vectors.
class ExpandedWord {
public:
    ExpandedWord() = default;
    // Throws InvalidInput unless entries is empty or satisfies is_expanded.
    explicit ExpandedWord(std::vector<int> entries);
    ExpandedWord(std::initializer_list<int> entries) : ExpandedWord(std::vector<int>(entries)) {}

    static ExpandedWord parse(std::string_view text);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool even_length() const { return entries_.size() % 2 == 0; }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const int> entries() const { return entries_; }
    const std::vector<int>& vector() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    ExpandedWord reversed() const;
    ExpandedWord negated() const;

    std::string to_string() const { return format_integer_list(entries()); }

    friend bool operator==(const ExpandedWord&, const ExpandedWord&) = default;

private:
    std::vector<int> entries_;
};

// Word order used for canonical representatives and for every sorted result:
// shorter first, then lexicographic with 2 < 0 < -2.
bool word_less(std::span<const int> x, std::span<const int> y);

struct WordOrder {
    bool operator()(const ExpandedWord& x, const ExpandedWord& y) const {
        return word_less(x.entries(), y.entries());
    }
};

enum class Parity { Knot, Link };

// Orbit of a word under negation and reversal, stored as its least member.
class WordClass {
public:
    WordClass() = default;

    const ExpandedWord& canonical() const { return canonical_; }
    Parity parity() const { return canonical_.even_length() ? Parity::Knot : Parity::Link; }
    std::size_t length() const { return canonical_.size(); }

    // Distinct members among a, -a, a^-1, -a^-1, canonical first.
    std::vector<ExpandedWord> members() const;

    friend WordClass class_of(const ExpandedWord& a);
    friend bool operator==(const WordClass&, const WordClass&) = default;

private:
    explicit WordClass(ExpandedWord canonical) : canonical_(std::move(canonical)) {}
    ExpandedWord canonical_;
};

WordClass class_of(const ExpandedWord& a);

// One element of the connector set: (0) or +-(2,0,2,...,0,2), identified with
// the integer c whose double 2c is the sum of its entries.
class ConnectorWord {
public:
    explicit ConnectorWord(long value) : value_(value) {}

    // Throws InvalidInput if entries is not a connector.
    static ConnectorWord from_word(std::span<const int> entries);

    long value() const { return value_; }
    long sum() const { return 2 * value_; }
    std::size_t length() const;
    std::vector<int> word() const;

    friend bool operator==(const ConnectorWord&, const ConnectorWord&) = default;

private:
    long value_;
};

bool is_connector(std::span<const int> entries);

// Replaces each +-2k by k copies of +-2 separated by zeros.
ExpandedWord expand(const EvenWord& w);

// Inverse of expand: sums every maximal component.
EvenWord contract(const ExpandedWord& a);

struct Component {
    std::size_t begin;
    std::size_t end; // one past the last entry
    ConnectorWord connector;
};

// Unique decomposition into maximal connector runs.
std::vector<Component> component_spans(std::span<const int> entries);
std::vector<ConnectorWord> maximal_components(const ExpandedWord& a);

} // namespace bridge_order
