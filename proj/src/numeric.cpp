#include "weylk/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace weylk {

std::string rat_to_string(const Rational &x) { return x.str(); }

Rational rat_from_string(const std::string &text) {
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) -> Integer {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        std::size_t digits_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits_begin)
            throw ParseError("invalid rational \"" + text + "\": expected digits at offset " +
                             std::to_string(start));
        return Integer(text.substr(start, pos - start));
    };

    Integer num = read_int(true);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
        if (den <= 0)
            throw ParseError("invalid rational \"" + text + "\": denominator must be positive");
    }
    if (pos != text.size())
        throw ParseError("invalid rational \"" + text + "\": trailing characters at offset " +
                         std::to_string(pos));
    return Rational(num, den);
}

Integer factorial_int(std::int64_t n) {
    if (n < 0)
        throw Error("factorial of negative argument");
    Integer r = 1;
    for (std::int64_t k = 2; k <= n; ++k)
        r *= k;
    return r;
}

Rational factorial(std::int64_t n) { return Rational(factorial_int(n)); }

Rational falling_factorial(const Rational &a, std::int64_t m) {
    if (m < 0)
        throw Error("falling factorial of negative length");
    Rational r = 1;
    for (std::int64_t k = 0; k < m; ++k)
        r *= a - k;
    return r;
}

Rational gen_binomial(const Rational &a, std::int64_t m) {
    if (m < 0)
        throw Error("binomial with negative lower index");
    return falling_factorial(a, m) / factorial(m);
}

Rational rat_pow(const Rational &x, std::int64_t k) {
    if (k < 0)
        throw Error("rat_pow with negative exponent");
    Rational r = 1;
    for (std::int64_t i = 0; i < k; ++i)
        r *= x;
    return r;
}

Rational powdiv(const Rational &x, std::int64_t k) {
    if (k <= -1)
        return Rational(0);
    return rat_pow(x, k) / factorial(k);
}

Integer multi_binomial(const IntVec &mu, const IntVec &lam) {
    if (mu.size() != lam.size())
        throw DimensionMismatch("multi_binomial: index lengths differ");
    Integer r = 1;
    for (std::size_t p = 0; p < mu.size(); ++p) {
        if (mu[p] < 0 || lam[p] < 0)
            throw Error("multi_binomial: negative entry");
        if (lam[p] > mu[p])
            return Integer(0);
        // C(mu_p, lam_p) over the integers
        Integer c = 1;
        for (std::int64_t k = 0; k < lam[p]; ++k) {
            c *= mu[p] - k;
            c /= k + 1; // exact at every step
        }
        r *= c;
    }
    return r;
}

Integer stirling2(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0)
        throw Error("stirling2: negative argument");
    if (k > n)
        return Integer(0);
    if (n == 0)
        return Integer(1); // k == 0 here
    if (k == 0)
        return Integer(0);
    // S(n, k) = k S(n-1, k) + S(n-1, k-1)
    std::vector<Integer> row(static_cast<std::size_t>(k) + 1, Integer(0));
    row[0] = 1; // S(0, 0)
    for (std::int64_t m = 1; m <= n; ++m) {
        for (std::int64_t j = std::min(m, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

std::int64_t level(const IntVec &v) {
    std::int64_t s = 0;
    for (auto e : v)
        s += e;
    return s;
}

std::strong_ordering compare_order(const IntVec &u, const IntVec &v) {
    if (u.size() != v.size())
        throw DimensionMismatch("compare_order: vector lengths differ");
    if (auto c = level(u) <=> level(v); c != 0)
        return c;
    for (std::size_t p = 0; p < u.size(); ++p)
        if (auto c = u[p] <=> v[p]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

} // namespace weylk
