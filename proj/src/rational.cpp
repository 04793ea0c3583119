#include "bridge_order/rational.hpp"

#include "bridge_order/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace bridge_order {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

BigInt parse_integer(std::string_view text) {
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
    }
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
        }
    }
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return BigInt(s, 10);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_even(const BigInt& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

template <typename T>
Fraction fold(const BigInt& r, std::span<const T> word) {
    if (word.empty()) {
        return Fraction(r);
    }
    // tail = num/den, kept coprime by construction (unimodular steps).
    BigInt num = BigInt(word.back());
    BigInt den = 1;
    for (std::size_t i = word.size() - 1; i-- > 0;) {
        if (num == 0) {
            throw DivisionByZero("continued fraction tail at position " + std::to_string(i + 2) +
                                 " evaluates to zero");
        }
        BigInt next = BigInt(word[i]) * num + den;
        den = num;
        num = next;
    }
    if (num == 0) {
        throw DivisionByZero("continued fraction evaluates to r + 1/0");
    }
    return Fraction(r * num + den, num);
}

// Runs the even-quotient Euclidean steps after the integer part has been
// chosen. prev = r_1 = q, cur = r_2 = p - r q.
CFExpansion finish_expansion(const Fraction& f, BigInt r) {
    BigInt prev = f.den();
    BigInt cur = f.num() - r * f.den();
    std::vector<BigInt> quotients;
    while (cur != 0) {
        BigInt lo = floor_div(prev, cur);
        BigInt a = is_even(lo) ? lo : ceil_div(prev, cur);
        if (!is_even(a)) {
            // Only reachable when prev is an odd multiple of cur, which the
            // parity argument rules out for reduced input.
            throw std::logic_error("even expansion produced an odd final quotient");
        }
        BigInt next = prev - a * cur;
        quotients.push_back(std::move(a));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return CFExpansion{std::move(r), EvenWord(std::move(quotients))};
}

} // namespace

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DivisionByZero("fraction with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::parse(std::string_view text, bool require_reduced) {
    text = trim(text);
    auto slash = text.find('/');
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(text.substr(slash + 1));
    }
    if (den == 0) {
        throw InvalidInput("fraction '" + std::string(text) + "' has zero denominator");
    }
    if (den < 0) {
        throw InvalidInput("fraction '" + std::string(text) + "' must have a positive denominator");
    }
    if (require_reduced) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) {
            throw InvalidInput("fraction '" + std::string(text) + "' is not reduced");
        }
    }
    return Fraction(std::move(num), std::move(den));
}

std::string Fraction::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

EvenWord::EvenWord(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    for (const auto& x : entries_) {
        if (x == 0 || !is_even(x)) {
            throw InvalidInput("even word entries must be nonzero and even, got " + x.get_str());
        }
    }
}

std::string EvenWord::to_string() const { return format_integer_list(entries_); }

Fraction eval_cf(const BigInt& r, std::span<const int> word) { return fold(r, word); }

Fraction eval_cf(const BigInt& r, std::span<const BigInt> word) { return fold(r, word); }

std::vector<CFExpansion> even_expansion(const Fraction& f) {
    const BigInt lo = floor_div(f.num(), f.den());
    const BigInt hi = ceil_div(f.num(), f.den());
    if (!is_even(f.den())) {
        // One of floor/ceil shares the numerator's parity (they coincide when q = 1).
        const bool num_even = is_even(f.num());
        BigInt r = (is_even(lo) == num_even) ? lo : hi;
        return {finish_expansion(f, std::move(r))};
    }
    return {finish_expansion(f, lo), finish_expansion(f, hi)};
}

std::vector<BigInt> parse_integer_list(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw InvalidInput("expected a bracketed list such as [2,-2,0,-2], got '" +
                           std::string(text) + "'");
    }
    std::string_view body = trim(text.substr(1, text.size() - 2));
    std::vector<BigInt> out;
    if (body.empty()) {
        return out;
    }
    while (true) {
        auto comma = body.find(',');
        out.push_back(parse_integer(body.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        body.remove_prefix(comma + 1);
    }
    return out;
}

std::string format_integer_list(std::span<const int> entries) {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries[i]);
    }
    return s + "]";
}

std::string format_integer_list(std::span<const BigInt> entries) {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += entries[i].get_str();
    }
    return s + "]";
}

} // namespace bridge_order
