#include "puiseux/numbers.hpp"

#include <cmath>
#include <cstdlib>

namespace puiseux {

unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299957)) + 3;
}

BigFloat bf(long v, unsigned bits) {
    BigFloat x(0);
    x.precision(digits10_for_bits(bits));
    x = v;
    return x;
}

BigFloat bf(const Rational& q, unsigned bits) {
    // conversion must happen after presetting the precision; the two-argument
    // constructor converts at the global default first
    BigFloat x(0);
    x.precision(digits10_for_bits(bits));
    x = q;
    return x;
}

BigFloat bf(const Integer& n, unsigned bits) {
    BigFloat x(0);
    x.precision(digits10_for_bits(bits));
    x = n;
    return x;
}

BigFloat bf_pow2(long e, unsigned bits) {
    BigFloat x = bf(1, bits);
    return ldexp(x, e);
}

std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::optional<Integer> exact_isqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto num = exact_isqrt(numerator(q));
    if (!num) return std::nullopt;
    auto den = exact_isqrt(denominator(q));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

std::pair<Integer, Integer> squarefree_split(const Integer& n) {
    Integer k = 1, s = 1, m = n;
    const long trial_bound = 100000;
    for (long p = 2; p <= trial_bound && m > 1; p == 2 ? p = 3 : p += 2) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) k *= p;
        if (e % 2 == 1) s *= p;
    }
    if (m > 1) {
        if (auto r = exact_isqrt(m)) {
            k *= *r;
        } else {
            s *= m;  // assumed squarefree beyond the trial bound
        }
    }
    return {k, s};
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Integer floor_rational(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

Integer ceil_rational(const Rational& q) {
    return -floor_div(-numerator(q), denominator(q));
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = text;
    bool negative = false;
    if (body[0] == '-' || body[0] == '+') {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den) || Integer(den) == 0) return std::nullopt;
        Rational q{Integer(num), Integer(den)};
        return negative ? Rational(-q) : q;
    }
    auto dot = body.find('.');
    if (dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!is_digits(ip) || !is_digits(fp)) return std::nullopt;
        Integer den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rational q = Rational(Integer(ip)) + Rational(Integer(fp.empty() ? "0" : fp), den);
        return negative ? -q : q;
    }
    if (!is_digits(body)) return std::nullopt;
    Rational q = Rational(Integer(body));
    return negative ? -q : q;
}

}  // namespace puiseux
