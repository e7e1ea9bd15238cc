#pragma once

#include "puiseux/errors.hpp"
#include "puiseux/numbers.hpp"

#include <string>
#include <utility>
#include <vector>

namespace puiseux {

enum class CoeffMode { Exact, Float };

// A complex number in one of two modes.
//
// Exact mode holds a Gaussian rational (pair of exact rationals) and its
// arithmetic is error-free.  Float mode holds a pair of arbitrary-precision
// floats at a working precision plus a tracked absolute error bound; a float
// value counts as zero exactly when its modulus is within the bound.  Mixed
// operations promote to Float at the larger working precision.
class Coefficient {
public:
    Coefficient() = default;  // exact zero

    static Coefficient exact(const Rational& re, const Rational& im = Rational(0));
    static Coefficient from_long(long v) { return exact(Rational(v)); }
    static Coefficient make_float(const BigFloat& re, const BigFloat& im,
                                  const BigFloat& err, unsigned prec_bits);
    // Exact value rounded at prec_bits with a matching error bound.
    Coefficient to_float(unsigned prec_bits) const;

    bool is_exact() const { return exact_; }
    unsigned precision() const { return prec_; }  // 0 in exact mode
    const Rational& re_exact() const { return re_q_; }
    const Rational& im_exact() const { return im_q_; }
    const BigFloat& re_float() const { return re_f_; }
    const BigFloat& im_float() const { return im_f_; }
    const BigFloat& error_bound() const { return err_; }

    bool is_zero() const;
    // Modulus, exactly in neither mode: an upper estimate good enough for
    // diagnostics and ordering heuristics.
    BigFloat abs_approx() const;

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator-() const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator/(const Coefficient& o) const;
    Coefficient inverse() const;
    Coefficient pow(unsigned k) const;

    // Structural equality (same mode, identical payloads).
    bool equals(const Coefficient& o) const;

    // Deterministic order by (re, im); exact before float never happens in one
    // list in practice, but mixed pairs compare by value.
    static int cmp_lex(const Coefficient& a, const Coefficient& b);

    // "a", "a+b*i" forms; exact rationals or decimal floats.
    std::string str() const;

private:
    bool exact_ = true;
    Rational re_q_, im_q_;
    BigFloat re_f_, im_f_, err_;
    unsigned prec_ = 0;
};

// Dense univariate polynomial over Coefficient, coefficient list c[0..n].
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(std::vector<Coefficient> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Coefficient& operator[](size_t i) const { return coeffs_[i]; }
    const std::vector<Coefficient>& coeffs() const { return coeffs_; }
    const Coefficient& leading() const { return coeffs_.back(); }

    // "y^2 + 3" style rendering with y as the variable.
    std::string str() const;

private:
    std::vector<Coefficient> coeffs_;  // trailing zeros stripped
};

// Horner evaluation.
Coefficient ceval(const CPoly& p, const Coefficient& z);
// k-th formal derivative.
CPoly cderiv(const CPoly& p, unsigned order = 1);

CPoly cpoly_add(const CPoly& a, const CPoly& b);
CPoly cpoly_mul(const CPoly& a, const CPoly& b);
CPoly cpoly_scale(const CPoly& a, const Coefficient& c);

struct RootsOptions {
    unsigned precision = 128;      // working bits for the float fallback
    unsigned precision_cap = 1024; // escalation limit
};

// All complex roots with multiplicities summing to deg p.  The exact path
// (zero roots, verified rational/Gaussian candidates, exact quadratics) is
// attempted first; anything beyond it escalates this whole call to the
// simultaneous-iteration float finder with cluster merging.  Roots come back
// sorted by (re, im).
std::vector<std::pair<Coefficient, int>> croots(const CPoly& p,
                                                const RootsOptions& opts = {});

}  // namespace puiseux
