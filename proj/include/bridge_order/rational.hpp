#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bridge_order {

using BigInt = mpz_class;

// Reduced fraction with a positive denominator. The sign lives on the
// numerator.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    // Reduces and normalizes the sign; throws DivisionByZero for den == 0.
    Fraction(BigInt num, BigInt den = 1);

    // Accepts "p/q", "-p/q" or a bare integer. With require_reduced, an
    // unreduced input such as "2/6" is rejected instead of being reduced.
    static Fraction parse(std::string_view text, bool require_reduced = false);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    std::string to_string() const;

    friend bool operator==(const Fraction& x, const Fraction& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

private:
    BigInt num_;
    BigInt den_;
};

// Ordered list of nonzero even partial quotients.
class EvenWord {
public:
    EvenWord() = default;
    explicit EvenWord(std::vector<BigInt> entries);

    const std::vector<BigInt>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const BigInt& operator[](std::size_t i) const { return entries_[i]; }

    std::string to_string() const;

    friend bool operator==(const EvenWord&, const EvenWord&) = default;

private:
    std::vector<BigInt> entries_;
};

// r + [a_1, ..., a_n] with every a_i nonzero and even.
struct CFExpansion {
    BigInt integer_part;
    EvenWord word;

    friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

// Exact value of r + [a_1, ..., a_n], folded right to left. Zeros are allowed
// in the word; a tail that evaluates to zero and must be inverted raises
// DivisionByZero.
Fraction eval_cf(const BigInt& r, std::span<const int> word);
Fraction eval_cf(const BigInt& r, std::span<const BigInt> word);
inline Fraction eval_cf(const CFExpansion& e) { return eval_cf(e.integer_part, e.word.entries()); }

// Generalized Euclidean algorithm, always taking the even partial quotient.
// Odd denominators give one expansion (even word length, r with the parity of
// the numerator). Even denominators give two: r = floor(p/q) first, then
// r = ceil(p/q), both with odd word length.
std::vector<CFExpansion> even_expansion(const Fraction& f);

// Parses "[2,-2,0,-2]" (whitespace tolerated, "[]" allowed).
std::vector<BigInt> parse_integer_list(std::string_view text);

std::string format_integer_list(std::span<const int> entries);
std::string format_integer_list(std::span<const BigInt> entries);

} // namespace bridge_order
