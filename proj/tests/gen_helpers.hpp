#pragma once

// Shared random generators and small constructors for tests.

#include "puiseux/series.hpp"

#include <random>
#include <vector>

namespace testgen {

using namespace puiseux;

inline Series mono(long num, long den, long coeff_num, long coeff_den = 1) {
    return Series::monomial(Coefficient::exact(Rational(coeff_num, coeff_den)),
                            Exponent(Rational(num, den)));
}

inline Series tpow(const Rational& e) {
    return Series::monomial(Coefficient::from_long(1), Exponent(e));
}

struct SeriesGen {
    std::mt19937_64 rng;
    explicit SeriesGen(unsigned seed) : rng(seed) {}

    Rational rand_rational(long lo = -8, long hi = 8, long max_den = 4) {
        std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
        return Rational(num(rng), den(rng));
    }

    Coefficient rand_coeff_nonzero() {
        while (true) {
            std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
            Coefficient c = Coefficient::exact(Rational(num(rng), den(rng)),
                                               (rng() % 3 == 0) ? Rational(num(rng), den(rng))
                                                                : Rational(0));
            if (!c.is_zero()) return c;
        }
    }

    // finite exact series with up to max_terms terms and rational exponents
    Series rand_series(int max_terms = 5, bool allow_zero = true) {
        std::uniform_int_distribution<int> nt(allow_zero ? 0 : 1, max_terms);
        int n = nt(rng);
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i)
            terms.push_back({Exponent(rand_rational()), rand_coeff_nonzero()});
        return Series::from_terms(std::move(terms));
    }

    Series rand_nonzero_series(int max_terms = 5) {
        while (true) {
            Series s = rand_series(max_terms, false);
            if (!s.known_zero()) return s;
        }
    }
};

}  // namespace testgen
