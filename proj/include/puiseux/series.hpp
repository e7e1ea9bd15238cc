#pragma once

#include "puiseux/coeffs.hpp"
#include "puiseux/exponents.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace puiseux {

struct Term {
    Exponent exp;
    Coefficient coeff;
};

// An exponent or the distinguished value infinity (valuation of 0).
class Valuation {
public:
    static Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }
    Valuation() = default;
    Valuation(Exponent e) : value_(std::move(e)) {}  // NOLINT

    bool is_infinite() const { return infinite_; }
    const Exponent& value() const;
    std::string str() const { return infinite_ ? "inf" : value_.str(); }

    bool operator==(const Valuation& o) const {
        if (infinite_ != o.infinite_) return false;
        return infinite_ || value_ == o.value_;
    }

private:
    bool infinite_ = false;
    Exponent value_;
};

// How far a bounded valuation probe got.
struct ValuationClass {
    enum Kind { KnownZero, Determined, AboveCap } kind;
    Exponent value;  // meaningful for Determined
};

namespace detail {

struct ProduceResult {
    std::vector<Term> terms;
    bool float_cancellation = false;
};

// Pull-based producer behind a Series.  produce(B) must return every term
// with exponent <= B, strictly increasing, with no (mode-appropriate) zero
// coefficients.  Re-invocations with larger bounds must extend earlier
// windows; the memo layer verifies that.
class Generator {
public:
    virtual ~Generator() = default;
    virtual ProduceResult produce(const Exponent& bound) = 0;
    // true when a window mismatch should be reported as a broken Cauchy
    // promise rather than an internal error
    virtual bool mismatch_is_cauchy() const { return false; }
};

// term-list helpers shared by generators and the Weierstrass lifting
std::vector<Term> tl_filter_below(const std::vector<Term>& terms, const Exponent& bound);
std::vector<Term> tl_merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                               bool* float_cancel);
std::vector<Term> tl_scale_shift(const std::vector<Term>& terms, const Coefficient& factor,
                                 const Exponent& shift, bool* float_cancel);
// best-first frontier over index pairs; bound == nullptr means no bound
std::vector<Term> tl_convolve(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Exponent* bound, bool* float_cancel);

}  // namespace detail

// A generalised Puiseux series: a lazily produced, memoized stream of
// (Exponent, Coefficient) terms with strictly increasing exponents.  Every
// observation carries an explicit exponent bound; for every bound the window
// of terms at or below it is finite.  Handles share state; all methods are
// safe for concurrent use (queries behave as if serialized).
//
// A series is "complete" when its whole (finite) support is known, in which
// case zero-ness and valuation are decidable; zero-ness of a general lazily
// defined series is only semi-decidable and surfaces as AboveCap/
// UndeterminedValuationError.
class Series {
public:
    Series();  // the zero series (known zero)

    static Series zero();
    // Normalises: sorts, combines equal exponents, drops zero coefficients.
    static Series from_terms(std::vector<Term> terms);
    static Series monomial(const Coefficient& a, const Exponent& alpha);
    static Series constant(const Coefficient& a);
    // Finite list certified only up to `bound`; queries beyond it throw
    // TruncationError.
    static Series truncated(std::vector<Term> terms, Exponent bound);
    // 1/(1 - t^e) for e > 0.
    static Series geometric(const Exponent& e);
    static Series from_generator(std::unique_ptr<detail::Generator> gen);

    // Terms with exponent <= bound, strictly increasing.
    std::vector<Term> terms_below(const Exponent& bound) const;
    // The full support of a complete series; throws otherwise.
    std::vector<Term> complete_terms() const;

    bool known_zero() const;
    bool is_complete() const;
    // True if some float-mode coefficient cancelled to numerically zero while
    // producing this series (signal for precision escalation).
    bool float_cancellation_seen() const;

    ValuationClass classify_valuation(const Exponent& cap) const;
    void mark_float_cancellation();
    // Throws UndeterminedValuationError when no term exists at or below cap
    // and the series is not known to be zero.
    Valuation valuation(const Exponent& cap) const;
    Coefficient leading_coefficient(const Exponent& cap) const;
    // exp(-val(f)), with exp(-inf) = 0, at the given precision.
    BigFloat norm(const Exponent& cap, unsigned precision) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    friend Series series_add(const Series&, const Series&);
    friend Series series_mul(const Series&, const Series&);
};

Series series_add(const Series& f, const Series& g);
Series series_sub(const Series& f, const Series& g);
Series series_neg(const Series& f);
Series series_mul(const Series& f, const Series& g);
// Multiplication by a constant coefficient.
Series series_scale(const Series& f, const Coefficient& c);
// t^omega * f, i.e. the support shift alpha -> alpha + omega.
Series series_shift(const Series& f, const Exponent& omega);
// Requires a determined valuation at or below cap.
Series series_inverse(const Series& f, const Exponent& cap);

// Substitution of positive-valuation series into a truncated multivariate
// power series G = sum of (multi-exponent, coefficient) terms; the result is
// certified up to `bound`.
struct MultiTerm {
    std::vector<unsigned> exps;  // one entry per argument
    Coefficient coeff;
};
Series series_substitute(const std::vector<MultiTerm>& g, const std::vector<Series>& args,
                         const Exponent& bound);

// Limit of a Cauchy sequence: provider(M) must return a series agreeing with
// the limit on all exponents <= M.  Inconsistent windows are detected and
// reported as NotCauchyError.
Series cauchy_limit(std::function<Series(long)> provider);

bool equal_up_to(const Series& f, const Series& g, const Exponent& bound);

// "3*t^(5/2) + t - 2" style rendering of the window at or below bound.
std::string series_str(const Series& f, const Exponent& bound);

}  // namespace puiseux
