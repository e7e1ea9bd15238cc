#include "puiseux/exponents.hpp"

#include <algorithm>
#include <sstream>

namespace puiseux {

namespace {

// Rounds the endpoints outward onto a dyadic grid no coarser than `grid`.
// Keeps evaluator internals (Newton iterates, long partial sums) from leaking
// huge denominators into every later comparison.
Interval snap_out(const Interval& iv, const Rational& grid) {
    Integer k = 1;
    Rational g(1);
    while (g > grid) {
        g /= 2;
        k *= 2;
    }
    Rational lo = Rational(floor_rational(iv.lo * k), k);
    Rational hi = -Rational(floor_rational(-(iv.hi * k)), k);
    return {lo, hi};
}

Interval eval_e(const Rational& width) {
    // e = sum 1/k!, tail after n terms < 2/(n+1)!
    Rational target = width / 2;
    Rational sum = 1, term = 1, tail = 2;
    unsigned k = 0;
    do {
        ++k;
        term /= k;
        sum += term;
        tail = 2 * term / (k + 1);
    } while (tail > target);
    return snap_out({sum, sum + tail}, width / 8);
}

// arctan(1/x) for integer x >= 2, alternating series, error bounded by the
// first omitted term.
Interval eval_arctan_inv(long x, const Rational& err) {
    Rational inv(1, x);
    Rational inv2 = inv * inv;
    Rational term = inv, sum = 0;
    long k = 0;
    bool add = true;
    while (true) {
        Rational contrib = term / (2 * k + 1);
        if (contrib <= err) {
            // partial sums bracket the limit
            if (add) return {sum, sum + contrib};
            return {sum - contrib, sum};
        }
        sum += add ? contrib : -contrib;
        add = !add;
        term *= inv2;
        ++k;
    }
}

Interval eval_pi(const Rational& width) {
    // Machin: pi = 16*arctan(1/5) - 4*arctan(1/239)
    Interval a = eval_arctan_inv(5, width / 64);
    Interval b = eval_arctan_inv(239, width / 16);
    Interval r{16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
    return snap_out(r, width / 8);
}

Interval eval_sqrt(const Integer& s, const Rational& width) {
    // Newton from above: x_{k+1} = (x + s/x)/2 >= sqrt(s), lower bound s/x.
    Rational x = s > 1 ? Rational(s) : Rational(1);
    while (x - Rational(s) / x > width / 2) {
        x = (x + Rational(s) / x) / 2;
        // snap up, keeping x an upper bound
        Rational g = width / 16;
        Integer k = 1;
        Rational gg(1);
        while (gg > g) {
            gg /= 2;
            k *= 2;
        }
        x = -Rational(floor_rational(-(x * k)), k);
    }
    return snap_out({Rational(s) / x, x}, width / 8);
}

}  // namespace

std::shared_ptr<RealBasis> RealBasis::create() {
    auto b = std::shared_ptr<RealBasis>(new RealBasis());
    b->register_constant("1", [](const Rational&) { return Interval{1, 1}; });
    return b;
}

size_t RealBasis::register_constant(const std::string& name, IntervalEvaluator eval) {
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].name == name) return i;
    entries_.push_back({name, std::move(eval)});
    return entries_.size() - 1;
}

size_t RealBasis::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

std::string RealBasis::name(size_t index) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.at(index).name;
}

Interval RealBasis::enclose(size_t index, const Rational& width) const {
    IntervalEvaluator eval;
    {
        std::lock_guard<std::mutex> lock(mu_);
        eval = entries_.at(index).eval;
    }
    Interval iv = eval(width);
    if (iv.width() > width)
        throw Error("evaluator for '" + name(index) + "' exceeded the requested width");
    return iv;
}

size_t RealBasis::e_index() {
    return register_constant("e", eval_e);
}

size_t RealBasis::pi_index() {
    return register_constant("pi", eval_pi);
}

size_t RealBasis::sqrt_index(const Integer& squarefree) {
    Integer s = squarefree;
    return register_constant("sqrt(" + s.str() + ")",
                             [s](const Rational& w) { return eval_sqrt(s, w); });
}

Exponent::Exponent(std::shared_ptr<const RealBasis> basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    trim();
}

Exponent Exponent::constant(const std::shared_ptr<RealBasis>& basis, size_t index,
                            const Rational& scale) {
    std::vector<Rational> c(index + 1, Rational(0));
    c[index] = scale;
    return Exponent(basis, std::move(c));
}

void Exponent::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() <= 1) basis_.reset();
}

Rational Exponent::rational_value() const {
    if (!is_rational()) throw Error("exponent " + str() + " is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void Exponent::unify(const Exponent& a, const Exponent& b,
                     std::shared_ptr<const RealBasis>& basis) {
    basis = a.basis_ ? a.basis_ : b.basis_;
    if (a.basis_ && b.basis_ && a.basis_ != b.basis_) throw BasisMismatchError();
}

Exponent Exponent::operator+(const Exponent& o) const {
    std::shared_ptr<const RealBasis> basis;
    unify(*this, o, basis);
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Exponent(basis, std::move(c));
}

Exponent Exponent::operator-(const Exponent& o) const { return *this + (-o); }

Exponent Exponent::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& q : c) q = -q;
    return Exponent(basis_, std::move(c));
}

Exponent Exponent::scaled(const Rational& q) const {
    if (q == 0) return Exponent();
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x *= q;
    return Exponent(basis_, std::move(c));
}

bool Exponent::operator==(const Exponent& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    if (coeffs_.size() > 1 && basis_ != o.basis_) throw BasisMismatchError();
    return coeffs_ == o.coeffs_;
}

Interval Exponent::enclose(const Rational& w) const {
    Rational rat = coeffs_.empty() ? Rational(0) : coeffs_[0];
    size_t irr = 0;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) ++irr;
    Interval acc{rat, rat};
    if (irr == 0) return acc;
    if (!basis_) throw Error("irrational exponent without basis");
    Rational each = w / Rational(static_cast<long>(irr));
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        const Rational& q = coeffs_[i];
        if (q == 0) continue;
        Rational aq = q < 0 ? -q : q;
        Interval iv = basis_->enclose(i, each / aq);
        if (q >= 0) {
            acc.lo += q * iv.lo;
            acc.hi += q * iv.hi;
        } else {
            acc.lo += q * iv.hi;
            acc.hi += q * iv.lo;
        }
    }
    return acc;
}

int Exponent::cmp(const Exponent& a, const Exponent& b) {
    if (a == b) return 0;
    Exponent d = a - b;
    if (d.is_rational()) {
        Rational v = d.rational_value();
        return v < 0 ? -1 : 1;
    }
    Rational w(1, 16);
    while (true) {
        Interval iv = d.enclose(w);
        if (!iv.contains_zero()) return iv.lo > 0 ? 1 : -1;
        w /= 2;
    }
}

double Exponent::to_double() const {
    Interval iv = enclose(Rational(1, Integer(1) << 40));
    return static_cast<double>(BigFloat((iv.lo + iv.hi) / 2, 25));
}

long Exponent::ceil_long() const {
    if (is_rational()) {
        Integer c = ceil_rational(rational_value());
        return static_cast<long>(c);
    }
    Interval iv = enclose(Rational(1, 8));
    long cand = static_cast<long>(floor_rational(iv.hi)) + 1;
    // cand >= hi >= value, and is within 2 of the true ceiling; good enough
    // for the integer stabilisation indices it serves.
    return cand;
}

std::string Exponent::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& q = coeffs_[i];
        if (q == 0) continue;
        Rational aq = q < 0 ? -q : q;
        if (first) {
            if (q < 0) os << "-";
            first = false;
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << rational_str(aq);
        } else {
            std::string nm = basis_->name(i);
            if (aq == 1)
                os << nm;
            else
                os << rational_str(aq) << "*" << nm;
        }
    }
    return os.str();
}

Exponent e_const(const std::shared_ptr<RealBasis>& basis) {
    return Exponent::constant(basis, basis->e_index());
}

Exponent pi_const(const std::shared_ptr<RealBasis>& basis) {
    return Exponent::constant(basis, basis->pi_index());
}

Exponent sqrt_const(const std::shared_ptr<RealBasis>& basis, const Rational& q) {
    if (q <= 0) throw SemanticError("sqrt of a non-positive rational exponent");
    if (auto r = exact_sqrt(q)) return Exponent(*r);
    // sqrt(num/den) = sqrt(num*den)/den = (k/den)*sqrt(s), s squarefree
    Integer n = numerator(q) * denominator(q);
    auto [k, s] = squarefree_split(n);
    Rational scale(k, denominator(q));
    if (s == 1) return Exponent(scale);
    return Exponent::constant(basis, basis->sqrt_index(s), scale);
}

}  // namespace puiseux
