#pragma once

// Independent test oracles: deliberately naive implementations used to freeze
// expected values, kept free of the library's own algorithm paths.

#include "puiseux/series.hpp"

#include <map>
#include <vector>

namespace oracles {

using puiseux::Coefficient;
using puiseux::Exponent;
using puiseux::Term;

// Naive double-loop convolution of two finite term lists, truncated at bound.
inline std::vector<Term> naive_convolve(const std::vector<Term>& a, const std::vector<Term>& b,
                                        const Exponent& bound) {
    std::map<Exponent, Coefficient, puiseux::ExponentLess> acc;
    for (const auto& x : a)
        for (const auto& y : b) {
            Exponent e = x.exp + y.exp;
            if (Exponent::cmp(e, bound) > 0) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, x.coeff * y.coeff);
            else
                it->second = it->second + x.coeff * y.coeff;
        }
    std::vector<Term> out;
    for (const auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back({e, c});
    return out;
}

// Brute-force lower hull: a support point is a lower-hull vertex iff some
// line through it keeps every other point strictly above except for
// collinear ones, checked pair-by-pair in O(n^3).
struct HullPoint {
    long i;
    Exponent v;
};

inline std::vector<HullPoint> brute_force_lower_hull(std::vector<HullPoint> pts) {
    // pts sorted by i, one point per abscissa
    std::vector<HullPoint> hull;
    if (pts.empty()) return hull;
    size_t cur = 0;
    hull.push_back(pts[0]);
    while (cur + 1 < pts.size()) {
        // among all points to the right, pick the one minimising the slope;
        // ties go to the farthest (true vertex)
        size_t best = cur + 1;
        for (size_t j = cur + 2; j < pts.size(); ++j) {
            // slope(cur, j) < slope(cur, best) ?
            Exponent lhs = (pts[j].v - pts[cur].v).scaled(
                puiseux::Rational(pts[best].i - pts[cur].i));
            Exponent rhs = (pts[best].v - pts[cur].v).scaled(
                puiseux::Rational(pts[j].i - pts[cur].i));
            int c = Exponent::cmp(lhs, rhs);
            if (c < 0 || (c == 0 && pts[j].i > pts[best].i)) best = j;
        }
        hull.push_back(pts[best]);
        cur = best;
    }
    return hull;
}

}  // namespace oracles
