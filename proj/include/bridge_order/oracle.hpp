#pragma once

#include "bridge_order/parsing.hpp"
#include "bridge_order/words.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace bridge_order {

// Every member of the expanded set of length <= max_len, shorter first and
// lexicographic (2 < 0 < -2) within a length. Stops early when visit returns
// false.
void enumerate_S(std::size_t max_len, bool even_only, const std::function<bool(const ExpandedWord&)>& visit);
std::vector<ExpandedWord> enumerate_S(std::size_t max_len, bool even_only);

// Every even-length word class with length <= max_len, by canonical word.
std::vector<WordClass> even_classes(std::size_t max_len);

struct SearchBudget {
    std::size_t max_word_length = 40;
    std::size_t max_candidates = 50'000'000;
    std::chrono::milliseconds time_limit{60'000};
};

enum class SearchStatus {
    Found,
    // Nothing up to a length that covers every possible lcm construction.
    NoneDefinitive,
    // Ran out of length, candidates or time before the result was settled.
    BudgetExhausted,
};

const char* to_string(SearchStatus s);

// A literal double parsing: c parses with respect to a and to b.
struct Witness {
    ExpandedWord c;
    ExpandedWord a;
    ExpandedWord b;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    // All shortest witnesses, ordered by c, then a, then b.
    std::vector<Witness> witnesses;
    // Length a sweep has to reach before an empty result is definitive.
    std::size_t required_length = 0;
    // Length covered completely.
    std::size_t searched_length = 0;
    std::size_t candidates = 0;

    bool found() const { return status == SearchStatus::Found; }
    std::size_t length() const { return witnesses.empty() ? 0 : witnesses.front().c.size(); }
};

// Longest lcm construction (w^t, e) over all shapes compatible with words of
// these lengths, and never less than the longer word.
std::size_t completeness_bound(std::size_t len_a, std::size_t len_b);

// Builds words tile by tile and connector by connector from a parsing with
// respect to a, pruning every prefix the deterministic parsing with respect
// to b rejects. Both classes must have even length.
SearchResult search_double_parsing(const WordClass& a, const WordClass& b, const SearchBudget& budget);

struct LemmaCheck {
    std::string name;
    bool passed = true;
    std::string detail; // first failure, if any
};

struct LemmaReport {
    Witness witness;
    std::vector<LemmaCheck> checks;
    std::size_t mixed_seams = 0;
    std::size_t pure_seams = 0;

    bool passed() const;
};

// Structural checks on a shortest double parsing: no pure seams, disjoint
// connectors, connectors placed on maximal components of the other word,
// uniform edge connectors, sign pairs (+,+) or (-,-), and 0 or 2 mixed seams.
// Throws NotADoubleParsing if c fails either parse.
LemmaReport verify_parsing_lemmas(const ExpandedWord& c, const ExpandedWord& a, const ExpandedWord& b);

struct SweepRow {
    WordClass a;
    WordClass b;
    bool theorem = false;
    SearchResult search;
    // Theorem answer matches the search; for pairs with a bound, the search
    // length matches the construction length too.
    bool agrees = false;
    std::size_t construction_length = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::size_t disagreements = 0;
    std::size_t exhausted = 0;
};

// Compares upper_bound_exists with the search on every unordered pair of
// even-length classes up to max_len. threads == 0 uses the hardware count.
SweepReport agreement_sweep(std::size_t max_len, const SearchBudget& budget, unsigned threads = 1);

} // namespace bridge_order
