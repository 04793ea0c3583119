#include "bridge_order/bridge.hpp"

#include "bridge_order/errors.hpp"

#include <algorithm>
#include <array>

namespace bridge_order {

namespace {

BigInt mod(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

BridgeKind TwoBridgeClass::kind() const {
    if (q_ == 1) return BridgeKind::Unknot;
    return mpz_odd_p(q_.get_mpz_t()) ? BridgeKind::Knot : BridgeKind::Link;
}

TwoBridgeClass knot_class(const Fraction& f) {
    const BigInt& q = f.den();
    if (q == 1) {
        return TwoBridgeClass::unknot();
    }
    BigInt p = mod(f.num(), q);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    std::array<BigInt, 4> candidates{p, mod(-p, q), inv, mod(-inv, q)};
    return TwoBridgeClass(*std::min_element(candidates.begin(), candidates.end()), q);
}

bool equivalent(const Fraction& f1, const Fraction& f2) { return knot_class(f1) == knot_class(f2); }

TwoBridgeClass phi(const ExpandedWord& a) {
    if (a.empty()) {
        throw InvalidInput("phi is defined on non-empty expanded words");
    }
    return knot_class(eval_cf(0, a.entries()));
}

WordClass phi_inverse_knot(const TwoBridgeClass& k) {
    if (k.kind() != BridgeKind::Knot) {
        throw NotAKnot(k.to_string() + " is not a nontrivial 2-bridge knot");
    }
    auto expansions = even_expansion(Fraction(k.p(), k.q()));
    // 0 + [word] = p/q - r, which is congruent to p mod q.
    return class_of(expand(expansions.front().word));
}

LinkPreimage phi_inverse_link(const TwoBridgeClass& k) {
    if (k.kind() != BridgeKind::Link) {
        throw NotALink(k.to_string() + " is not a 2-bridge link");
    }
    auto expansions = even_expansion(Fraction(k.p(), k.q()));
    LinkPreimage out{class_of(expand(expansions[0].word)), class_of(expand(expansions[1].word))};
    out.coincident = out.first == out.second;
    return out;
}

} // namespace bridge_order
