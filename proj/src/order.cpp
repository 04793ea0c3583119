#include "bridge_order/order.hpp"

#include "bridge_order/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace bridge_order {

namespace {

constexpr long kMaxExponent = 1L << 22;

void require_orderable(const TwoBridgeClass& k) {
    if (k.kind() == BridgeKind::Link) {
        throw LinkNotOrdered(k.to_string() + " is a link; the order is defined on knots only");
    }
}

ExpandedWord knot_word(const TwoBridgeClass& k) { return phi_inverse_knot(k).canonical(); }

bool divides(long d, long x) { return x % d == 0; }

// Shortest decomposition of the period used by every std form of a.
std::optional<SharedBase> find_shared_base(const ExpandedWord& a, const WordClass& b) {
    const auto forms_a = std_forms(a);
    if (forms_a.empty()) return std::nullopt;
    for (const auto& rep : b.members()) {
        for (const auto& fb : std_forms(rep)) {
            for (const auto& fa : forms_a) {
                if (fa.e == fb.e && fa.m == fb.m && fa.n == fb.n) {
                    return SharedBase{a, rep, fa.e, fa.m, fa.n, fa.exponent, fb.exponent};
                }
            }
        }
    }
    return std::nullopt;
}

// Number of periods of the shortest decomposition contained in e.
long periods_in(const StdForm& minimal, const ExpandedWord& e) {
    const auto len = static_cast<long>(minimal.period_length());
    return (static_cast<long>(e.size()) - static_cast<long>(minimal.e.size())) / len;
}

long exponent_from_lcm(const BigInt& lcm) {
    BigInt q = (lcm - 1) / 2;
    if (!q.fits_slong_p() || q.get_si() > kMaxExponent) {
        throw InvalidInput("upper bound exponent " + q.get_str() + " is too large to materialize");
    }
    return q.get_si();
}

BigInt lcm(const BigInt& x, const BigInt& y) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return out;
}

} // namespace

std::vector<int> StdForm::period() const {
    std::vector<int> out(e.begin(), e.end());
    auto mw = ConnectorWord(m / 2).word();
    out.insert(out.end(), mw.begin(), mw.end());
    out.insert(out.end(), e.vector().rbegin(), e.vector().rend());
    auto nw = ConnectorWord(n / 2).word();
    out.insert(out.end(), nw.begin(), nw.end());
    return out;
}

std::size_t StdForm::period_length() const {
    return 2 * e.size() + ConnectorWord(m / 2).length() + ConnectorWord(n / 2).length();
}

std::vector<int> StdForm::assemble_raw(long q) const {
    const auto w = period();
    std::vector<int> out;
    out.reserve(w.size() * static_cast<std::size_t>(q) + e.size());
    for (long i = 0; i < q; ++i) out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), e.begin(), e.end());
    return out;
}

ExpandedWord StdForm::assemble(long q) const { return ExpandedWord(assemble_raw(q)); }

std::vector<StdForm> std_forms(const ExpandedWord& a) {
    std::vector<StdForm> out;
    const std::size_t n = a.size();
    if (n == 0 || n % 2 != 0) return out;
    const auto entries = a.entries();
    for (std::size_t le = 0; le < n; le += 2) {
        if (le > 0 && !is_expanded(entries.subspan(0, le))) continue;
        ExpandedWord e(std::vector<int>(entries.begin(), entries.begin() + static_cast<long>(le)));
        const std::size_t rest = n - le;
        for (std::size_t lm = 1; 2 * le + lm + 1 <= rest; lm += 2) {
            const auto mslice = entries.subspan(le, lm);
            if (!is_connector(mslice)) continue;
            for (std::size_t ln = 1; 2 * le + lm + ln <= rest; ln += 2) {
                const std::size_t period = 2 * le + lm + ln;
                if (rest % period != 0) continue;
                const auto nslice = entries.subspan(2 * le + lm, ln);
                if (!is_connector(nslice)) continue;
                StdForm form{e, ConnectorWord::from_word(mslice).sum(),
                             ConnectorWord::from_word(nslice).sum(), static_cast<long>(rest / period)};
                auto raw = form.assemble_raw(form.exponent);
                if (std::equal(raw.begin(), raw.end(), entries.begin(), entries.end())) {
                    out.push_back(std::move(form));
                }
            }
        }
    }
    return out;
}

std::vector<StdForm> std_form_family(const StdForm& minimal) {
    std::vector<StdForm> out;
    const long q0 = minimal.exponent;
    for (long l = 0; 3 * l + 1 <= q0; ++l) {
        if ((q0 - l) % (2 * l + 1) != 0) continue;
        StdForm form{l == 0 ? minimal.e : minimal.assemble(l), minimal.m, minimal.n, (q0 - l) / (2 * l + 1)};
        out.push_back(std::move(form));
    }
    return out;
}

const char* to_string(Relation r) {
    switch (r) {
    case Relation::Greater: return "greater";
    case Relation::Less: return "less";
    case Relation::Equal: return "equal";
    case Relation::Incomparable: return "incomparable";
    }
    return "unknown";
}

OrderRelation compare(const TwoBridgeClass& k1, const TwoBridgeClass& k2) {
    require_orderable(k1);
    require_orderable(k2);
    OrderRelation out{k1, k2, Relation::Incomparable, std::nullopt};
    if (k1 == k2) {
        out.relation = Relation::Equal;
        return out;
    }
    if (k1.is_unknot() || k2.is_unknot()) {
        out.relation = k1.is_unknot() ? Relation::Less : Relation::Greater;
        return out;
    }
    const auto a = phi_inverse_knot(k1);
    const auto b = phi_inverse_knot(k2);
    if (a.length() > b.length()) {
        if ((out.witness = parse_class(a, b))) out.relation = Relation::Greater;
    } else if (b.length() > a.length()) {
        if ((out.witness = parse_class(b, a))) out.relation = Relation::Less;
    }
    return out;
}

std::vector<TwoBridgeClass> lower_bounds(const TwoBridgeClass& k, bool include_unknot) {
    require_orderable(k);
    std::vector<TwoBridgeClass> out;
    if (include_unknot) out.push_back(TwoBridgeClass::unknot());
    if (k.is_unknot()) return out;

    std::map<ExpandedWord, TwoBridgeClass, WordOrder> found;
    for (const auto& c : phi_inverse_knot(k).members()) {
        for (std::size_t len = 2; len <= c.size(); len += 2) {
            const auto prefix = c.entries().subspan(0, len);
            if (!is_expanded(prefix)) continue;
            ExpandedWord tile(std::vector<int>(prefix.begin(), prefix.end()));
            if (parse(c, tile)) {
                found.emplace(class_of(tile).canonical(), phi(tile));
            }
        }
    }
    for (auto& [word, knot] : found) out.push_back(knot);
    return out;
}

UpperBoundCertificate upper_bound_exists(const TwoBridgeClass& k1, const TwoBridgeClass& k2) {
    const auto rel = compare(k1, k2);
    UpperBoundCertificate out;
    out.relation = rel.relation;
    switch (rel.relation) {
    case Relation::Greater:
    case Relation::Equal: out.exists = true; out.larger = k1; return out;
    case Relation::Less: out.exists = true; out.larger = k2; return out;
    case Relation::Incomparable: break;
    }
    out.base = find_shared_base(knot_word(k1), phi_inverse_knot(k2));
    out.exists = out.base.has_value();
    return out;
}

SetUpperBound construct_upper_bound(std::span<const TwoBridgeClass> knots) {
    if (knots.empty()) {
        throw InvalidInput("construct_upper_bound needs at least one knot");
    }
    std::vector<TwoBridgeClass> distinct;
    for (const auto& k : knots) {
        require_orderable(k);
        if (!k.is_unknot() && std::find(distinct.begin(), distinct.end(), k) == distinct.end()) {
            distinct.push_back(k);
        }
    }
    SetUpperBound out;
    if (distinct.empty()) {
        out.maximal.push_back(TwoBridgeClass::unknot());
        return out;
    }
    for (const auto& k : distinct) {
        bool dominated = std::any_of(distinct.begin(), distinct.end(), [&](const auto& other) {
            return other != k && compare(other, k).relation == Relation::Greater;
        });
        if (!dominated) out.maximal.push_back(k);
    }
    if (out.maximal.size() == 1) {
        out.word = knot_word(out.maximal.front());
        return out;
    }
    for (std::size_t i = 0; i < out.maximal.size(); ++i) {
        for (std::size_t j = i + 1; j < out.maximal.size(); ++j) {
            if (!upper_bound_exists(out.maximal[i], out.maximal[j]).exists) {
                throw NoUpperBound(out.maximal[i].to_string() + " and " + out.maximal[j].to_string() +
                                   " have no common upper bound");
            }
        }
    }

    const auto first = knot_word(out.maximal.front());
    const auto minimal = std_forms(first).front();
    BigInt modulus = 2 * minimal.exponent + 1;
    for (std::size_t i = 1; i < out.maximal.size(); ++i) {
        const auto shared = find_shared_base(first, phi_inverse_knot(out.maximal[i]));
        if (!shared) {
            throw std::logic_error("pairwise bound found but no shared period with the first knot");
        }
        const long r = periods_in(minimal, shared->e);
        if ((2 * r + 1) * shared->p + r != minimal.exponent) {
            throw std::logic_error("shared period is not generated by the shortest decomposition");
        }
        modulus = lcm(modulus, BigInt((2 * r + 1) * (2 * shared->q + 1)));
    }
    out.exponent = exponent_from_lcm(modulus);
    out.base = minimal;
    out.base->exponent = out.exponent;
    out.word = minimal.assemble(out.exponent);
    const auto bound = class_of(out.word);
    for (const auto& k : out.maximal) {
        if (!parse_class(bound, phi_inverse_knot(k))) {
            throw std::logic_error("constructed bound does not parse with respect to " + k.to_string());
        }
    }
    return out;
}

std::vector<ExpandedWord> shortest_lubs(const TwoBridgeClass& k1, const TwoBridgeClass& k2) {
    const auto cert = upper_bound_exists(k1, k2);
    if (!cert.exists) {
        throw NoUpperBound(k1.to_string() + " and " + k2.to_string() + " have no common upper bound");
    }
    if (cert.larger) {
        if (cert.larger->is_unknot()) return {ExpandedWord{}};
        return {knot_word(*cert.larger)};
    }
    const auto& base = *cert.base;
    const auto minimal = std_forms(base.a).front();
    const long r = periods_in(minimal, base.e);
    const long pa = (2 * r + 1) * base.p + r;
    const long pb = (2 * r + 1) * base.q + r;
    const long t = exponent_from_lcm(lcm(BigInt(2 * pa + 1), BigInt(2 * pb + 1)));
    const auto c = minimal.assemble(t);

    const auto parse_a = parse(c, base.a);
    const auto parse_b = parse(c, base.b);
    if (!parse_a || !parse_b) {
        throw std::logic_error("lcm construction does not double-parse");
    }
    std::vector<std::size_t> mixed;
    for (const auto& s : seams(c, *parse_a, *parse_b)) {
        if (s.kind == SeamKind::Mixed) mixed.push_back(s.position);
    }

    std::vector<std::vector<int>> candidates{c.vector()};
    if (mixed.size() == 2) {
        auto negate_range = [](std::vector<int> w, std::size_t from, std::size_t to) {
            for (std::size_t i = from; i < to; ++i) w[i] = -w[i];
            return w;
        };
        candidates.push_back(negate_range(c.vector(), mixed[0], mixed[1]));
        candidates.push_back(negate_range(c.vector(), mixed[1], c.size()));
        candidates.push_back(negate_range(c.vector(), mixed[0], c.size()));
    }

    const auto class_a = class_of(base.a);
    const auto class_b = class_of(base.b);
    std::map<ExpandedWord, ExpandedWord, WordOrder> by_class;
    for (auto& raw : candidates) {
        if (!is_expanded(raw)) continue;
        ExpandedWord word(std::move(raw));
        const auto cls = class_of(word);
        if (parse_class(cls, class_a) && parse_class(cls, class_b)) {
            by_class.emplace(cls.canonical(), std::move(word));
        }
    }
    std::vector<ExpandedWord> out;
    for (auto& [key, word] : by_class) out.push_back(std::move(word));
    std::sort(out.begin(), out.end(), WordOrder{});
    return out;
}

std::vector<Partner> incomparable_partners(const TwoBridgeClass& k, long q_max) {
    require_orderable(k);
    if (k.is_unknot()) {
        throw NotAKnot("the unknot has no standard form");
    }
    std::map<ExpandedWord, Partner, WordOrder> found;
    for (const auto& rep : phi_inverse_knot(k).members()) {
        for (const auto& form : std_forms(rep)) {
            const long p = form.exponent;
            for (long q = 1; q <= q_max; ++q) {
                if (divides(2 * p + 1, 2 * q + 1) || divides(2 * q + 1, 2 * p + 1)) continue;
                const auto word = form.assemble(q);
                const auto cls = class_of(word);
                found.emplace(cls.canonical(), Partner{phi(word), cls.canonical(), form, q});
            }
        }
    }
    std::vector<Partner> out;
    for (auto& [key, partner] : found) out.push_back(std::move(partner));
    return out;
}

} // namespace bridge_order
