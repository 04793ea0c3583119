#include "bridge_order/words.hpp"

#include "bridge_order/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace bridge_order {

namespace {

constexpr std::size_t kMaxExpandedLength = std::size_t{1} << 24;

int entry_rank(int x) { return x == 2 ? 0 : (x == 0 ? 1 : 2); }

} // namespace

bool is_expanded(std::span<const int> a) {
    if (a.empty() || a.front() == 0 || a.back() == 0) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        int x = a[i];
        if (x != 2 && x != -2 && x != 0) {
            return false;
        }
        // Nonzero ends keep i - 1 and i + 1 in range.
        if (x == 0 && (a[i - 1] == 0 || a[i - 1] != a[i + 1])) {
            return false;
        }
    }
    return true;
}

ExpandedWord::ExpandedWord(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!entries_.empty() && !is_expanded(entries_)) {
        throw InvalidInput("word " + format_integer_list(entries_) +
                           " is not an expanded even vector");
    }
}

ExpandedWord ExpandedWord::parse(std::string_view text) {
    std::vector<int> entries;
    for (const auto& x : parse_integer_list(text)) {
        if (x != 2 && x != -2 && x != 0) {
            throw InvalidInput("word entries must be -2, 0 or 2, got " + x.get_str());
        }
        entries.push_back(static_cast<int>(x.get_si()));
    }
    return ExpandedWord(std::move(entries));
}

ExpandedWord ExpandedWord::reversed() const {
    ExpandedWord out;
    out.entries_.assign(entries_.rbegin(), entries_.rend());
    return out;
}

ExpandedWord ExpandedWord::negated() const {
    ExpandedWord out;
    out.entries_.reserve(entries_.size());
    for (int x : entries_) out.entries_.push_back(-x);
    return out;
}

bool word_less(std::span<const int> x, std::span<const int> y) {
    if (x.size() != y.size()) {
        return x.size() < y.size();
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
            return entry_rank(x[i]) < entry_rank(y[i]);
        }
    }
    return false;
}

std::vector<ExpandedWord> WordClass::members() const {
    std::vector<ExpandedWord> out{canonical_, canonical_.negated(), canonical_.reversed(),
                                  canonical_.reversed().negated()};
    std::sort(out.begin(), out.end(), WordOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WordClass class_of(const ExpandedWord& a) {
    std::array<ExpandedWord, 4> reps{a, a.negated(), a.reversed(), a.reversed().negated()};
    return WordClass(*std::min_element(reps.begin(), reps.end(), WordOrder{}));
}

bool is_connector(std::span<const int> c) {
    if (c.size() == 1) {
        return c[0] == 0 || c[0] == 2 || c[0] == -2;
    }
    if (c.size() % 2 == 0 || (c[0] != 2 && c[0] != -2)) {
        return false;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != (i % 2 == 0 ? c[0] : 0)) {
            return false;
        }
    }
    return true;
}

ConnectorWord ConnectorWord::from_word(std::span<const int> entries) {
    if (!is_connector(entries)) {
        throw InvalidInput(format_integer_list(entries) + " is not a connector");
    }
    long twos = static_cast<long>(entries.size() + 1) / 2;
    return ConnectorWord(entries[0] == 0 ? 0 : (entries[0] > 0 ? twos : -twos));
}

std::size_t ConnectorWord::length() const {
    return value_ == 0 ? 1 : static_cast<std::size_t>(2 * std::labs(value_) - 1);
}

std::vector<int> ConnectorWord::word() const {
    if (value_ == 0) {
        return {0};
    }
    const int s = value_ > 0 ? 2 : -2;
    std::vector<int> out(length(), 0);
    for (std::size_t i = 0; i < out.size(); i += 2) out[i] = s;
    return out;
}

ExpandedWord expand(const EvenWord& w) {
    std::size_t total = 0;
    for (const auto& x : w.entries()) {
        BigInt k = abs(x) / 2;
        if (!k.fits_ulong_p() || k.get_ui() > kMaxExpandedLength) {
            throw InvalidInput("partial quotient " + x.get_str() + " is too large to expand");
        }
        total += 2 * k.get_ui() - 1;
        if (total > kMaxExpandedLength) {
            throw InvalidInput("expanded word would exceed " + std::to_string(kMaxExpandedLength) +
                               " entries");
        }
    }
    std::vector<int> out;
    out.reserve(total);
    for (const auto& x : w.entries()) {
        auto piece = ConnectorWord(static_cast<long>(x.get_si() / 2)).word();
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return ExpandedWord(std::move(out));
}

std::vector<Component> component_spans(std::span<const int> a) {
    std::vector<Component> out;
    std::size_t i = 0;
    while (i < a.size()) {
        std::size_t j = i;
        if (a[i] != 0) {
            while (j + 2 < a.size() && a[j + 1] == 0 && a[j + 2] == a[i]) j += 2;
        }
        out.push_back(Component{i, j + 1, ConnectorWord::from_word(a.subspan(i, j + 1 - i))});
        i = j + 1;
    }
    return out;
}

std::vector<ConnectorWord> maximal_components(const ExpandedWord& a) {
    std::vector<ConnectorWord> out;
    for (const auto& c : component_spans(a.entries())) out.push_back(c.connector);
    return out;
}

EvenWord contract(const ExpandedWord& a) {
    std::vector<BigInt> out;
    for (const auto& c : component_spans(a.entries())) out.emplace_back(c.connector.sum());
    return EvenWord(std::move(out));
}

} // namespace bridge_order
