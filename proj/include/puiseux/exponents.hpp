#pragma once

#include "puiseux/errors.hpp"
#include "puiseux/numbers.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace puiseux {

// Closed rational interval [lo, hi].
struct Interval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};

// Given a requested width w > 0, returns an enclosure of width <= w.
using IntervalEvaluator = std::function<Interval(const Rational& width)>;

// An ordered registry of named real constants with interval evaluators.
// Index 0 is always the rational unit "1".  The constants are assumed (not
// checked) to be linearly independent over Q; that assumption is what makes
// sign determination by interval refinement terminate.
class RealBasis {
public:
    // Fresh basis holding only "1".
    static std::shared_ptr<RealBasis> create();

    // Appends a constant, or returns the existing index when the name is
    // already registered.
    size_t register_constant(const std::string& name, IntervalEvaluator eval);
    size_t size() const;
    std::string name(size_t index) const;
    Interval enclose(size_t index, const Rational& width) const;

    // Indices of the built-in constants, registering them on first use.
    size_t e_index();
    size_t pi_index();
    size_t sqrt_index(const Integer& squarefree);

private:
    RealBasis() = default;
    struct Entry {
        std::string name;
        IntervalEvaluator eval;
    };
    mutable std::mutex mu_;
    std::vector<Entry> entries_;
};

// An exact real number written as a Q-linear combination of basis constants.
// Equality is vector equality; ordering is decided by exact rational
// comparison when possible and by interval refinement otherwise.
class Exponent {
public:
    Exponent() = default;                     // zero
    Exponent(long v) : coeffs_{Rational(v)} { trim(); }  // NOLINT: implicit by design
    Exponent(const Rational& v) : coeffs_{v} { trim(); } // NOLINT
    Exponent(std::shared_ptr<const RealBasis> basis, std::vector<Rational> coeffs);

    static Exponent constant(const std::shared_ptr<RealBasis>& basis, size_t index,
                             const Rational& scale = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return coeffs_.size() <= 1; }
    // Requires is_rational().
    Rational rational_value() const;

    const std::shared_ptr<const RealBasis>& basis() const { return basis_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;
    Exponent operator-() const;
    Exponent scaled(const Rational& q) const;
    Exponent operator*(long k) const { return scaled(Rational(k)); }

    bool operator==(const Exponent& o) const;
    bool operator!=(const Exponent& o) const { return !(*this == o); }

    // -1, 0, +1.  Refines enclosures geometrically from width 1/16.
    static int cmp(const Exponent& a, const Exponent& b);
    bool operator<(const Exponent& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Exponent& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Exponent& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Exponent& o) const { return cmp(*this, o) >= 0; }

    // Enclosure of the denoted real with width <= w.
    Interval enclose(const Rational& w) const;
    double to_double() const;
    // Smallest integer >= the denoted value.
    long ceil_long() const;

    // Textual form compatible with the CLI exponent grammar, e.g. "5/2",
    // "4/5*e", "1 + 1/2*pi".
    std::string str() const;

private:
    void trim();
    static void unify(const Exponent& a, const Exponent& b,
                      std::shared_ptr<const RealBasis>& basis);

    std::shared_ptr<const RealBasis> basis_;  // null when support is {1}
    std::vector<Rational> coeffs_;            // trailing zeros trimmed
};

struct ExponentLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return Exponent::cmp(a, b) < 0;
    }
};

// Built-in constants as exponents over the given basis.
Exponent e_const(const std::shared_ptr<RealBasis>& basis);
Exponent pi_const(const std::shared_ptr<RealBasis>& basis);
// sqrt(q) for rational q > 0, canonicalised so that perfect squares come back
// rational and square parts are factored out of the radicand.
Exponent sqrt_const(const std::shared_ptr<RealBasis>& basis, const Rational& q);

}  // namespace puiseux
