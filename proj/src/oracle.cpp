#include "bridge_order/oracle.hpp"

#include "bridge_order/bridge.hpp"
#include "bridge_order/errors.hpp"
#include "bridge_order/order.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace bridge_order {

namespace {

using Clock = std::chrono::steady_clock;

bool enumerate_length(std::vector<int>& w, std::size_t len,
                      const std::function<bool(const ExpandedWord&)>& visit) {
    const std::size_t i = w.size();
    if (i == len) {
        return visit(ExpandedWord(w));
    }
    for (int x : {2, 0, -2}) {
        if (i >= 2 && w[i - 1] == 0 && x != w[i - 2]) continue;
        if (x == 0 && (i == 0 || i + 1 == len || w[i - 1] == 0)) continue;
        w.push_back(x);
        const bool go_on = enumerate_length(w, len, visit);
        w.pop_back();
        if (!go_on) return false;
    }
    return true;
}

enum class PrefixState { Reject, Partial, Complete };

// Runs the deterministic parsing with respect to b over a prefix of a word.
// Complete means the prefix parses exactly, ending on a tile.
PrefixState prefix_state(std::span<const int> c, std::span<const int> fwd, std::span<const int> bwd) {
    const std::size_t n = c.size();
    std::size_t pos = 0;
    for (std::size_t k = 0;; ++k) {
        const auto t = k % 2 == 0 ? fwd : bwd;
        if (pos >= n) return PrefixState::Partial;
        int sign = 1;
        if (k > 0) {
            if (c[pos] == t[0]) {
                sign = 1;
            } else if (c[pos] == -t[0]) {
                sign = -1;
            } else {
                return PrefixState::Reject;
            }
        }
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (pos + j >= n) return PrefixState::Partial;
            if (c[pos + j] != sign * t[j]) return PrefixState::Reject;
        }
        pos += t.size();
        if (pos == n) return PrefixState::Complete;
        if (c[pos] == 0) {
            pos += 1;
        } else {
            pos += 1;
            while (pos < n && c[pos] == 0) pos += 2;
            if (pos >= n) return PrefixState::Partial;
        }
    }
}

class DoubleParsingSearch {
public:
    DoubleParsingSearch(const ExpandedWord& a, const ExpandedWord& b, std::size_t limit,
                        std::size_t max_candidates, Clock::time_point deadline)
        : a_(a), a_rev_(a.reversed()), b_(b), b_rev_(b.reversed()), limit_(limit),
          max_candidates_(max_candidates), deadline_(deadline) {}

    // Returns false if the budget ran out.
    bool run(std::size_t& candidates) {
        candidates_ = &candidates;
        place_tile(0, 1);
        return !exhausted_;
    }

    std::size_t limit() const { return limit_; }
    const std::vector<ExpandedWord>& found() const { return found_; }

private:
    void place_tile(std::size_t index, int sign) {
        if (exhausted_) return;
        if (++*candidates_ > max_candidates_ || ((*candidates_ & 0x3ff) == 0 && Clock::now() > deadline_)) {
            exhausted_ = true;
            return;
        }
        const auto& t = index % 2 == 0 ? a_ : a_rev_;
        for (int x : t) c_.push_back(sign * x);
        const auto state = prefix_state(c_, b_.entries(), b_rev_.entries());
        if (state != PrefixState::Reject) {
            if (state == PrefixState::Complete && c_.size() % 2 == 0) record();
            place_connector(index, sign);
        }
        c_.resize(c_.size() - t.size());
    }

    void place_connector(std::size_t index, int sign) {
        const std::size_t base = c_.size();
        if (base + 1 + a_.size() > limit_) return;
        c_.push_back(0);
        if (prefix_state(c_, b_.entries(), b_rev_.entries()) != PrefixState::Reject) {
            place_tile(index + 1, sign);
        }
        c_.pop_back();
        for (long v = 1; base + static_cast<std::size_t>(2 * v - 1) + a_.size() <= limit_; ++v) {
            for (int s : {1, -1}) {
                const auto w = ConnectorWord(s * v).word();
                c_.insert(c_.end(), w.begin(), w.end());
                if (prefix_state(c_, b_.entries(), b_rev_.entries()) != PrefixState::Reject) {
                    place_tile(index + 1, 1);
                    place_tile(index + 1, -1);
                }
                c_.resize(base);
                if (exhausted_) return;
            }
        }
    }

    void record() {
        if (c_.size() < limit_) {
            limit_ = c_.size();
            found_.clear();
        }
        found_.emplace_back(c_);
    }

    const ExpandedWord& a_;
    ExpandedWord a_rev_;
    const ExpandedWord& b_;
    ExpandedWord b_rev_;
    std::size_t limit_;
    std::size_t max_candidates_;
    Clock::time_point deadline_;
    std::size_t* candidates_ = nullptr;
    bool exhausted_ = false;
    std::vector<int> c_;
    std::vector<ExpandedWord> found_;
};

bool witness_less(const Witness& x, const Witness& y) {
    WordOrder less;
    if (x.c != y.c) return less(x.c, y.c);
    if (x.a != y.a) return less(x.a, y.a);
    return less(x.b, y.b);
}

// Piece index covering each entry of the parsed word.
std::vector<std::size_t> piece_at(const std::vector<Piece>& pieces, std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t k = pieces[i].begin; k < pieces[i].end; ++k) out[k] = i;
    }
    return out;
}

class LemmaChecker {
public:
    LemmaChecker(const ExpandedWord& c, const Parsing& pa, const Parsing& pb)
        : c_(c), pieces_{pa.pieces(), pb.pieces()},
          owner_{piece_at(pieces_[0], c.size()), piece_at(pieces_[1], c.size())},
          component_count_{component_spans(pa.tile().entries()).size(),
                           component_spans(pb.tile().entries()).size()} {}

    const Piece& owner(int side, std::size_t pos) const { return pieces_[side][owner_[side][pos]]; }

    LemmaCheck connectors_disjoint() const {
        LemmaCheck out{"connectors_disjoint", true, ""};
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_connector_at(0, i) && is_connector_at(1, i)) {
                return fail(out, "entry " + std::to_string(i + 1) + " lies in both an a- and a b-connector");
            }
        }
        return out;
    }

    // side's connectors against the other side's tiles.
    LemmaCheck connector_placement(int side) const {
        LemmaCheck out{side == 0 ? "a_connectors_on_components" : "b_connectors_on_components", true, ""};
        for (const auto& piece : pieces_[side]) {
            if (piece.kind != Piece::Kind::Connector) continue;
            if (!placed_on_component(side, piece)) {
                return fail(out, describe(side, piece) + " is neither a maximal component nor its central zero");
            }
        }
        return out;
    }

    LemmaCheck distinct_components(int side) const {
        LemmaCheck out{side == 0 ? "a_connectors_distinct_components" : "b_connectors_distinct_components",
                       true, ""};
        std::set<std::size_t> used;
        for (const auto& piece : pieces_[side]) {
            if (piece.kind != Piece::Kind::Connector) continue;
            auto idx = component_index(side, piece);
            if (!idx) continue; // reported by connector_placement
            if (!used.insert(*idx).second) {
                return fail(out, describe(side, piece) + " shares component " + std::to_string(*idx + 1) +
                                     " of the other tile");
            }
        }
        return out;
    }

    // forward_edge: top and right (connectors after forward tiles); otherwise
    // bottom and left.
    LemmaCheck edge_uniform(bool forward_edge) const {
        LemmaCheck out{forward_edge ? "top_right_edge_uniform" : "bottom_left_edge_uniform", true, ""};
        int seen = -1; // 0 zero, 1 nonzero
        for (int side : {0, 1}) {
            for (std::size_t i = 0; i < pieces_[side].size(); ++i) {
                const auto& piece = pieces_[side][i];
                if (piece.kind != Piece::Kind::Connector) continue;
                if (pieces_[side][i - 1].forward != forward_edge) continue;
                const int kind = piece.value == 0 ? 0 : 1;
                if (seen >= 0 && seen != kind) {
                    return fail(out, "zero and nonzero connectors share an edge");
                }
                seen = kind;
            }
        }
        return out;
    }

    LemmaCheck sign_pairs() const {
        LemmaCheck out{"sign_pairs_equal", true, ""};
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const auto& pa = owner(0, i);
            const auto& pb = owner(1, i);
            if (pa.kind == Piece::Kind::Tile && pb.kind == Piece::Kind::Tile && pa.sign != pb.sign) {
                return fail(out, "entry " + std::to_string(i + 1) + " is labelled (" + sign_char(pa.sign) + "," +
                                     sign_char(pb.sign) + ")");
            }
        }
        return out;
    }

private:
    static LemmaCheck fail(LemmaCheck check, std::string detail) {
        check.passed = false;
        check.detail = std::move(detail);
        return check;
    }

    static std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

    static std::string describe(int side, const Piece& piece) {
        return std::string(side == 0 ? "a" : "b") + "-connector " + std::to_string(piece.index + 1);
    }

    bool is_connector_at(int side, std::size_t pos) const {
        return owner(side, pos).kind == Piece::Kind::Connector;
    }

    // The maximal component of the other side's tile holding the connector,
    // as an index into the other word's own components.
    std::optional<std::size_t> component_index(int side, const Piece& conn) const {
        const int other = 1 - side;
        const auto& tile = owner(other, conn.begin);
        if (tile.kind != Piece::Kind::Tile || owner_[other][conn.end - 1] != owner_[other][conn.begin]) {
            return std::nullopt;
        }
        const auto spans = component_spans(c_.entries().subspan(tile.begin, tile.end - tile.begin));
        const std::size_t lo = conn.begin - tile.begin;
        const std::size_t hi = conn.end - tile.begin;
        for (std::size_t j = 0; j < spans.size(); ++j) {
            const auto& s = spans[j];
            const bool whole = s.begin == lo && s.end == hi;
            const bool centre = hi == lo + 1 && c_[conn.begin] == 0 && (s.end - s.begin) % 2 == 1 &&
                                s.begin + (s.end - s.begin) / 2 == lo;
            if (whole || centre) {
                return tile.forward ? j : component_count_[other] - 1 - j;
            }
        }
        return std::nullopt;
    }

    bool placed_on_component(int side, const Piece& conn) const { return component_index(side, conn).has_value(); }

    const ExpandedWord& c_;
    std::array<std::vector<Piece>, 2> pieces_;
    std::array<std::vector<std::size_t>, 2> owner_;
    std::array<std::size_t, 2> component_count_;
};

} // namespace

void enumerate_S(std::size_t max_len, bool even_only, const std::function<bool(const ExpandedWord&)>& visit) {
    std::vector<int> w;
    for (std::size_t len = 1; len <= max_len; ++len) {
        if (even_only && len % 2 != 0) continue;
        if (!enumerate_length(w, len, visit)) return;
    }
}

std::vector<ExpandedWord> enumerate_S(std::size_t max_len, bool even_only) {
    std::vector<ExpandedWord> out;
    enumerate_S(max_len, even_only, [&](const ExpandedWord& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::vector<WordClass> even_classes(std::size_t max_len) {
    std::vector<WordClass> out;
    enumerate_S(max_len, true, [&](const ExpandedWord& w) {
        auto cls = class_of(w);
        if (cls.canonical() == w) out.push_back(std::move(cls));
        return true;
    });
    return out;
}

const char* to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoneDefinitive: return "none";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "unknown";
}

std::size_t completeness_bound(std::size_t len_a, std::size_t len_b) {
    std::size_t best = std::max(len_a, len_b);
    const std::size_t shorter = std::min(len_a, len_b);
    for (std::size_t le = 0; le < shorter; le += 2) {
        for (std::size_t lw = 2 * le + 2; lw + le <= shorter; lw += 2) {
            if ((len_a - le) % lw != 0 || (len_b - le) % lw != 0) continue;
            const auto p = (len_a - le) / lw;
            const auto q = (len_b - le) / lw;
            mpz_class l;
            mpz_lcm_ui(l.get_mpz_t(), mpz_class(2 * p + 1).get_mpz_t(), 2 * q + 1);
            const std::size_t t = (l.get_ui() - 1) / 2;
            best = std::max(best, t * lw + le);
        }
    }
    return best;
}

SearchResult search_double_parsing(const WordClass& a, const WordClass& b, const SearchBudget& budget) {
    if (a.parity() != Parity::Knot || b.parity() != Parity::Knot) {
        throw InvalidInput("double parsing search needs two even-length word classes");
    }
    SearchResult out;
    out.required_length = completeness_bound(a.length(), b.length());
    const auto deadline = Clock::now() + budget.time_limit;

    // Negation carries a double parsing of c to one of -c over -a and -b, so
    // the a side only needs a and its reverse.
    std::vector<ExpandedWord> a_sides{a.canonical()};
    if (a.canonical().reversed() != a.canonical()) a_sides.push_back(a.canonical().reversed());

    std::size_t limit = budget.max_word_length;
    bool complete = true;
    for (const auto& a_side : a_sides) {
        for (const auto& b_side : b.members()) {
            DoubleParsingSearch search(a_side, b_side, limit, budget.max_candidates, deadline);
            complete = search.run(out.candidates) && complete;
            if (!search.found().empty()) {
                const auto len = search.found().front().size();
                if (out.witnesses.empty() || len < out.length()) out.witnesses.clear();
                for (const auto& c : search.found()) out.witnesses.push_back(Witness{c, a_side, b_side});
                limit = len;
            }
            if (!complete) break;
        }
        if (!complete) break;
    }
    std::sort(out.witnesses.begin(), out.witnesses.end(), witness_less);
    out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());

    if (!complete) {
        out.status = SearchStatus::BudgetExhausted;
        out.searched_length = 0;
    } else if (!out.witnesses.empty()) {
        out.status = SearchStatus::Found;
        out.searched_length = out.length();
    } else {
        out.searched_length = budget.max_word_length;
        out.status = out.searched_length >= out.required_length ? SearchStatus::NoneDefinitive
                                                                : SearchStatus::BudgetExhausted;
    }
    return out;
}

bool LemmaReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

LemmaReport verify_parsing_lemmas(const ExpandedWord& c, const ExpandedWord& a, const ExpandedWord& b) {
    const auto pa = parse(c, a);
    const auto pb = parse(c, b);
    if (!pa || !pb) {
        throw NotADoubleParsing(c.to_string() + " does not parse with respect to both " + a.to_string() +
                                " and " + b.to_string());
    }
    LemmaReport out{Witness{c, a, b}, {}, 0, 0};
    const auto all = seams(c, *pa, *pb);
    for (const auto& s : all) (s.kind == SeamKind::Mixed ? out.mixed_seams : out.pure_seams)++;

    LemmaCheck pure{"no_pure_seams", out.pure_seams == 0, ""};
    if (!pure.passed) {
        auto it = std::find_if(all.begin(), all.end(), [](const Seam& s) { return s.kind == SeamKind::Pure; });
        pure.detail = "pure seam after entry " + std::to_string(it->position);
    }
    out.checks.push_back(pure);

    const LemmaChecker checker(c, *pa, *pb);
    out.checks.push_back(checker.connectors_disjoint());
    out.checks.push_back(checker.connector_placement(0));
    out.checks.push_back(checker.connector_placement(1));
    out.checks.push_back(checker.edge_uniform(false));
    out.checks.push_back(checker.edge_uniform(true));
    out.checks.push_back(checker.distinct_components(0));
    out.checks.push_back(checker.distinct_components(1));
    out.checks.push_back(checker.sign_pairs());

    LemmaCheck mixed{"mixed_seam_count", out.mixed_seams == 0 || out.mixed_seams == 2, ""};
    if (!mixed.passed) mixed.detail = std::to_string(out.mixed_seams) + " mixed seams";
    out.checks.push_back(mixed);
    return out;
}

SweepReport agreement_sweep(std::size_t max_len, const SearchBudget& budget, unsigned threads) {
    const auto classes = even_classes(max_len);
    SweepReport out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i; j < classes.size(); ++j) {
            out.rows.push_back(SweepRow{classes[i], classes[j], false, {}, false, 0});
        }
    }

    auto evaluate = [&](SweepRow& row) {
        const auto k1 = phi(row.a.canonical());
        const auto k2 = phi(row.b.canonical());
        const auto cert = upper_bound_exists(k1, k2);
        row.theorem = cert.exists;
        if (cert.exists) row.construction_length = shortest_lubs(k1, k2).front().size();
        SearchBudget b = budget;
        b.max_word_length = std::max(budget.max_word_length, completeness_bound(row.a.length(), row.b.length()));
        row.search = search_double_parsing(row.a, row.b, b);
        if (row.search.status == SearchStatus::BudgetExhausted) return;
        row.agrees = row.search.found() == row.theorem &&
                     (!row.theorem || row.search.length() == row.construction_length);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < out.rows.size();) evaluate(out.rows[k]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& row : out.rows) {
        if (row.search.status == SearchStatus::BudgetExhausted) {
            ++out.exhausted;
        } else if (!row.agrees) {
            ++out.disagreements;
        }
    }
    return out;
}

} // namespace bridge_order
