#pragma once

// Reference implementations used only by the tests. Each one takes a route
// that shares no code with the library function it checks.

#include "bridge_order/rational.hpp"
#include "bridge_order/words.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ref {

using bridge_order::BigInt;

// r + [a_1..a_n] as the matrix product [[r,1],[1,0]] [[a_1,1],[1,0]] ...,
// read off as (top-left / bottom-left) and reduced.
inline std::pair<BigInt, BigInt> cf_by_matrices(const BigInt& r, std::span<const int> a) {
    BigInt m00 = r, m01 = 1, m10 = 1, m11 = 0;
    for (int x : a) {
        BigInt n00 = m00 * x + m01, n10 = m10 * x + m11;
        m01 = m00;
        m11 = m10;
        m00 = n00;
        m10 = n10;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), m00.get_mpz_t(), m10.get_mpz_t());
    if (g != 0) {
        m00 /= g;
        m10 /= g;
    }
    if (m10 < 0) {
        m00 = -m00;
        m10 = -m10;
    }
    return {m00, m10};
}

// Number of words over {-2,0,2} of length n with nonzero ends and every zero
// between two equal nonzero entries, by a transfer matrix over the last two
// symbols (0: +2, 1: 0, 2: -2).
inline unsigned long count_expanded(std::size_t n) {
    if (n == 0) return 0;
    if (n == 1) return 2;
    unsigned long ways[3][3] = {};
    for (int p : {0, 2}) {
        for (int c = 0; c < 3; ++c) ways[p][c] = 1;
    }
    for (std::size_t len = 3; len <= n; ++len) {
        unsigned long next[3][3] = {};
        for (int p = 0; p < 3; ++p) {
            for (int c = 0; c < 3; ++c) {
                for (int x = 0; x < 3; ++x) {
                    if (c == 1 && x != p) continue;
                    if (x == 1 && c == 1) continue;
                    next[c][x] += ways[p][c];
                }
            }
        }
        std::copy(&next[0][0], &next[0][0] + 9, &ways[0][0]);
    }
    unsigned long total = 0;
    for (int p = 0; p < 3; ++p) total += ways[p][0] + ways[p][2];
    return total;
}

// Every way to cut c into tile, connector, tile, ... with tiles
// e_i a^((-1)^(i-1)), e_1 = +1, connectors from the connector set (any legal
// length, not just maximal runs) and the zero-connector sign rule.
inline std::size_t count_parsings(std::span<const int> c, std::span<const int> a) {
    const std::vector<int> fwd(a.begin(), a.end());
    const std::vector<int> back(a.rbegin(), a.rend());
    std::size_t total = 0;
    auto tile_at = [&](std::size_t pos, std::size_t k, int sign) {
        const auto& t = k % 2 == 0 ? fwd : back;
        if (pos + t.size() > c.size()) return false;
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (c[pos + j] != sign * t[j]) return false;
        }
        return true;
    };
    std::function<void(std::size_t, std::size_t, int)> go = [&](std::size_t pos, std::size_t k, int sign) {
        if (!tile_at(pos, k, sign)) return;
        const std::size_t end = pos + a.size();
        if (end == c.size()) {
            ++total;
            return;
        }
        for (std::size_t len = 1; end + len < c.size(); len += 2) {
            auto piece = c.subspan(end, len);
            if (!bridge_order::is_connector(piece)) continue;
            for (int s : {1, -1}) {
                if (piece.size() == 1 && piece[0] == 0 && s != sign) continue;
                go(end + len, k + 1, s);
            }
        }
    };
    if (!c.empty() && !a.empty()) go(0, 0, 1);
    return total;
}

} // namespace ref
