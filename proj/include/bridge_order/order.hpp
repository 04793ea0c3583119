#pragma once

#include "bridge_order/bridge.hpp"
#include "bridge_order/parsing.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bridge_order {

// a = ((e, m, e^-1, n)^exponent, e), with m and n the sums of the two
// connector words sitting between the copies of e.
struct StdForm {
    ExpandedWord e;
    long m = 0;
    long n = 0;
    long exponent = 1;

    // One period w = (e, m, e^-1, n).
    std::vector<int> period() const;
    std::size_t period_length() const;
    // (w^q, e) as a raw word; not validated.
    std::vector<int> assemble_raw(long q) const;
    // (w^q, e); throws InvalidInput if the result leaves the expanded set.
    ExpandedWord assemble(long q) const;

    friend bool operator==(const StdForm&, const StdForm&) = default;
};

// Every decomposition of a with exponent >= 1, found by exhaustive search over
// prefixes e and connector lengths. Sorted by |e|, so the first entry (if
// any) carries the shortest e.
std::vector<StdForm> std_forms(const ExpandedWord& a);

// All decompositions generated from the shortest one: e = ((e0,m,e0^-1,n)^l, e0)
// with exponent q such that (2l+1)q + l = q0.
std::vector<StdForm> std_form_family(const StdForm& minimal);

enum class Relation { Greater, Less, Equal, Incomparable };

const char* to_string(Relation r);

struct OrderRelation {
    TwoBridgeClass left;
    TwoBridgeClass right;
    Relation relation = Relation::Incomparable;
    // The parsing of the larger word class with respect to the smaller one.
    // Comparisons against the unknot carry none.
    std::optional<Parsing> witness;
};

// Throws LinkNotOrdered if either argument is a link.
OrderRelation compare(const TwoBridgeClass& k1, const TwoBridgeClass& k2);

// Every knot below k (k included), ordered by word class. The unknot comes
// first when include_unknot is set.
std::vector<TwoBridgeClass> lower_bounds(const TwoBridgeClass& k, bool include_unknot);

// Representatives a = (w^p, e) and b = (w^q, e) over one common period.
struct SharedBase {
    ExpandedWord a;
    ExpandedWord b;
    ExpandedWord e;
    long m = 0;
    long n = 0;
    long p = 0;
    long q = 0;
};

struct UpperBoundCertificate {
    bool exists = false;
    Relation relation = Relation::Incomparable;
    // Set when the two knots are comparable.
    std::optional<TwoBridgeClass> larger;
    // Set when they are incomparable and share a period.
    std::optional<SharedBase> base;
};

UpperBoundCertificate upper_bound_exists(const TwoBridgeClass& k1, const TwoBridgeClass& k2);

struct SetUpperBound {
    ExpandedWord word;
    // Inputs left after dropping duplicates, the unknot and anything below
    // another input.
    std::vector<TwoBridgeClass> maximal;
    // Shortest-period decomposition of the first maximal knot and the
    // exponent Q of the bound over that period (absent for a single knot).
    std::optional<StdForm> base;
    long exponent = 0;
};

// Upper bound (w^Q, e0) for a finite set of knots, 2Q+1 being the lcm of
// the odd numbers attached to each knot over the shortest common period.
// Throws NoUpperBound if some pair has none.
SetUpperBound construct_upper_bound(std::span<const TwoBridgeClass> knots);

// Shortest words parsing with respect to both knots: the lcm construction and
// its sign variants across the mixed seams, one word per word class.
std::vector<ExpandedWord> shortest_lubs(const TwoBridgeClass& k1, const TwoBridgeClass& k2);

struct Partner {
    TwoBridgeClass knot;
    ExpandedWord word;
    StdForm form; // decomposition of k's representative the partner came from
    long exponent = 0;
};

// Knots (w^q, e), 1 <= q <= q_max, incomparable to k = (w^p, e) and sharing an
// upper bound with it, over every decomposition of every representative of k.
std::vector<Partner> incomparable_partners(const TwoBridgeClass& k, long q_max);

} // namespace bridge_order
