#pragma once

#include "bridge_order/rational.hpp"
#include "bridge_order/words.hpp"

#include <string>
#include <utility>

namespace bridge_order {

enum class BridgeKind { Unknot, Knot, Link };

// Equivalence class of K(p/q) up to isotopy and mirror image. p is the least
// of p, -p, p^-1, -p^-1 reduced into (0, q). The unknot is q = 1, p = 0.
class TwoBridgeClass {
public:
    TwoBridgeClass() : p_(0), q_(1) {}

    static TwoBridgeClass unknot() { return {}; }

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    BridgeKind kind() const;
    bool is_knot() const { return kind() == BridgeKind::Knot; }
    bool is_unknot() const { return kind() == BridgeKind::Unknot; }

    Fraction fraction() const { return Fraction(p_, q_); }
    std::string to_string() const { return "K(" + p_.get_str() + "/" + q_.get_str() + ")"; }

    friend TwoBridgeClass knot_class(const Fraction& f);
    friend bool operator==(const TwoBridgeClass&, const TwoBridgeClass&) = default;
    friend bool operator<(const TwoBridgeClass& x, const TwoBridgeClass& y) {
        return x.q_ != y.q_ ? x.q_ < y.q_ : x.p_ < y.p_;
    }

private:
    TwoBridgeClass(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {}
    BigInt p_;
    BigInt q_;
};

TwoBridgeClass knot_class(const Fraction& f);
bool equivalent(const Fraction& f1, const Fraction& f2);

// Class of 0 + [a]. Requires a non-empty expanded word.
TwoBridgeClass phi(const ExpandedWord& a);

// The unique even-length word class mapping to k. Throws NotAKnot for links
// and for the unknot.
WordClass phi_inverse_knot(const TwoBridgeClass& k);

struct LinkPreimage {
    WordClass first;  // from r = floor(p/q)
    WordClass second; // from r = ceil(p/q)
    // The two expansions landed in one class (happens for q = 2).
    bool coincident = false;
};

// The two odd-length word classes mapping to a link. Throws NotALink if q is
// odd.
LinkPreimage phi_inverse_link(const TwoBridgeClass& k);

} // namespace bridge_order
