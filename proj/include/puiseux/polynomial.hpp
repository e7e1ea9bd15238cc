#pragma once

#include "puiseux/series.hpp"

#include <utility>
#include <vector>

namespace puiseux {

// Univariate polynomial over the series field, coefficients f_0..f_n.
// Trailing coefficients that are known-zero are stripped so the degree is
// honest; a lazily vanishing top coefficient surfaces later as an
// undetermined valuation.  val_cap bounds every valuation probe made on
// behalf of this polynomial.
class PolyOverK {
public:
    PolyOverK() = default;
    explicit PolyOverK(std::vector<Series> coeffs, Exponent val_cap = Exponent(64));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Series& coeff(size_t i) const { return coeffs_[i]; }
    const std::vector<Series>& coeffs() const { return coeffs_; }
    const Exponent& val_cap() const { return val_cap_; }
    PolyOverK with_val_cap(const Exponent& cap) const;

    // Bounded valuation probe for coefficient i (KnownZero / Determined /
    // AboveCap at val_cap).
    ValuationClass coeff_class(size_t i) const;

private:
    std::vector<Series> coeffs_;
    Exponent val_cap_{64};
};

struct SupportPoint {
    int index;
    Exponent val;
};

struct Face {
    int from_index;
    Exponent from_val;
    int to_index;
    Exponent to_val;
    Exponent slope;   // exact, (to_val - from_val)/(to_index - from_index)
    int length;       // horizontal extent
};

struct NewtonPolygon {
    std::vector<SupportPoint> support;   // all certified support points
    std::vector<SupportPoint> vertices;  // extreme points of the lower hull
    std::vector<Face> faces;             // ordered by increasing abscissa
};

// {(i, val f_i) | f_i != 0}.  Throws UndeterminedValuationError naming the
// first coefficient whose valuation cannot be certified at or below val_cap.
std::vector<SupportPoint> t_support(const PolyOverK& f);

// Lower hull of the t-support by a monotone chain over exact exponent
// comparisons.  Coefficients whose valuation exceeds the cap are skipped when
// they provably lie above the hull; otherwise the polygon is undetermined.
NewtonPolygon newton_polygon(const PolyOverK& f);

// min{val(f_i) + omega*i | f_i != 0}; requires val(f_i) >= 0 for all i.
Exponent ord_omega(const PolyOverK& f, const Exponent& omega);

// sum of lc(f_i) y^i over the indices attaining ord_omega.
CPoly t_initial_form(const PolyOverK& f, const Exponent& omega);

// Multiplies by t^{-min val} so valuations become >= 0 with minimum exactly 0;
// returns the applied shift (the exponent of the monomial multiplied in).
std::pair<PolyOverK, Exponent> normalize_min_val(const PolyOverK& f);

// y^n f(1/y): the coefficient list reversed.  Requires f_0 != 0.
PolyOverK reverse(const PolyOverK& f);

// f(y + c) by binomial re-expansion.
PolyOverK shift_root(const PolyOverK& f, const Coefficient& c);

// t^{-alpha} f(t^omega (y + c)), coefficients per
//   g_i = sum_{j>=i} f_j t^{j omega - alpha} C(j,i) c^{j-i}.
PolyOverK rescale_substitute(const PolyOverK& f, const Exponent& omega, const Coefficient& c,
                             const Exponent& alpha);

// Removes the largest power y^m dividing f (m = number of leading known-zero
// coefficients).  Errors on the zero polynomial.
std::pair<PolyOverK, int> strip_y_factor(const PolyOverK& f);

// Coefficient-wise scaling by a series or constant.
PolyOverK poly_scale_series(const PolyOverK& f, const Series& s);
PolyOverK poly_scale_coeff(const PolyOverK& f, const Coefficient& c);

// Horner evaluation of f at a series argument.
Series poly_eval_series(const PolyOverK& f, const Series& y);

// Rendering with coefficients expanded at or below the bound.
std::string poly_str(const PolyOverK& f, const Exponent& bound);

}  // namespace puiseux
