#include "puiseux/series.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace puiseux {

const Exponent& Valuation::value() const {
    if (infinite_) throw Error("valuation is infinite");
    return value_;
}

namespace detail {

std::vector<Term> tl_filter_below(const std::vector<Term>& terms, const Exponent& bound) {
    std::vector<Term> out;
    for (const auto& t : terms) {
        if (Exponent::cmp(t.exp, bound) > 0) break;
        out.push_back(t);
    }
    return out;
}

std::vector<Term> tl_merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                               bool* float_cancel) {
    std::vector<Term> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i >= a.size())
            c = 1;
        else if (j >= b.size())
            c = -1;
        else
            c = Exponent::cmp(a[i].exp, b[j].exp);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j++]);
        } else {
            Coefficient s = a[i].coeff + b[j].coeff;
            if (!s.is_zero())
                out.push_back({a[i].exp, s});
            else if (!s.is_exact() && float_cancel)
                *float_cancel = true;
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<Term> tl_scale_shift(const std::vector<Term>& terms, const Coefficient& factor,
                                 const Exponent& shift, bool* float_cancel) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        Coefficient c = t.coeff * factor;
        if (c.is_zero()) {
            if (!c.is_exact() && float_cancel) *float_cancel = true;
            continue;
        }
        out.push_back({t.exp + shift, c});
    }
    return out;
}

std::vector<Term> tl_convolve(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Exponent* bound, bool* float_cancel) {
    std::vector<Term> out;
    if (a.empty() || b.empty()) return out;

    struct Entry {
        Exponent sum;
        size_t i, j;
    };
    auto entry_greater = [](const Entry& x, const Entry& y) {
        return Exponent::cmp(x.sum, y.sum) > 0;
    };
    std::vector<Entry> heap;
    auto push = [&](size_t i, size_t j) {
        heap.push_back({a[i].exp + b[j].exp, i, j});
        std::push_heap(heap.begin(), heap.end(), entry_greater);
    };
    push(0, 0);
    while (!heap.empty()) {
        Exponent cur = heap.front().sum;
        if (bound && Exponent::cmp(cur, *bound) > 0) break;
        Coefficient acc;
        while (!heap.empty() && heap.front().sum == cur) {
            std::pop_heap(heap.begin(), heap.end(), entry_greater);
            Entry e = heap.back();
            heap.pop_back();
            acc = acc + a[e.i].coeff * b[e.j].coeff;
            // each pair (i, j) enters the frontier exactly once: from
            // (i-1, j), or from (0, j-1) along the first row
            if (e.i + 1 < a.size()) push(e.i + 1, e.j);
            if (e.i == 0 && e.j + 1 < b.size()) push(0, e.j + 1);
        }
        if (!acc.is_zero())
            out.push_back({cur, acc});
        else if (!acc.is_exact() && float_cancel)
            *float_cancel = true;
    }
    return out;
}

}  // namespace detail

using detail::Generator;
using detail::ProduceResult;

// ---------------------------------------------------------------------------
// Series impl and memo layer
// ---------------------------------------------------------------------------

struct Series::Impl {
    mutable std::mutex mu;
    std::vector<Term> memo;
    std::optional<Exponent> frontier;  // memo holds all terms <= frontier
    bool complete = false;             // memo is the entire support
    bool float_cancel = false;
    std::unique_ptr<Generator> gen;    // null for complete series
};

Series::Series() : impl_(std::make_shared<Impl>()) {
    impl_->complete = true;
}

Series Series::zero() { return Series(); }

Series Series::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return Exponent::cmp(x.exp, y.exp) < 0;
    });
    bool cancel = false;
    std::vector<Term> norm;
    for (auto& t : terms) {
        if (!norm.empty() && norm.back().exp == t.exp) {
            Coefficient s = norm.back().coeff + t.coeff;
            norm.pop_back();
            if (!s.is_zero())
                norm.push_back({t.exp, s});
            else if (!s.is_exact())
                cancel = true;
        } else if (!t.coeff.is_zero()) {
            norm.push_back(std::move(t));
        } else if (!t.coeff.is_exact()) {
            cancel = true;
        }
    }
    Series s;
    s.impl_->memo = std::move(norm);
    s.impl_->complete = true;
    s.impl_->float_cancel = cancel;
    return s;
}

namespace {

Series with_cancel_flag(Series s, bool cancel) {
    if (cancel) s.mark_float_cancellation();
    return s;
}

}  // namespace

void Series::mark_float_cancellation() {
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->float_cancel = true;
}

Series Series::monomial(const Coefficient& a, const Exponent& alpha) {
    return from_terms({{alpha, a}});
}

Series Series::constant(const Coefficient& a) { return monomial(a, Exponent()); }

Series Series::from_generator(std::unique_ptr<Generator> gen) {
    Series s;
    s.impl_->complete = false;
    s.impl_->gen = std::move(gen);
    return s;
}

std::vector<Term> Series::terms_below(const Exponent& bound) const {
    Impl& im = *impl_;
    std::lock_guard<std::mutex> lock(im.mu);
    if (im.complete || (im.frontier && Exponent::cmp(bound, *im.frontier) <= 0))
        return detail::tl_filter_below(im.memo, bound);
    ProduceResult res = im.gen->produce(bound);
    bool consistent = im.memo.size() <= res.terms.size();
    for (size_t i = 0; consistent && i < im.memo.size(); ++i)
        consistent = im.memo[i].exp == res.terms[i].exp &&
                     im.memo[i].coeff.equals(res.terms[i].coeff);
    if (!consistent) {
        if (im.gen->mismatch_is_cauchy())
            throw NotCauchyError("windows at different stabilisation levels disagree");
        throw Error("internal: generator produced an inconsistent window");
    }
    im.memo = std::move(res.terms);
    im.frontier = bound;
    im.float_cancel = im.float_cancel || res.float_cancellation;
    return im.memo;
}

std::vector<Term> Series::complete_terms() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->complete) throw Error("series is not complete");
    return impl_->memo;
}

bool Series::known_zero() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->complete && impl_->memo.empty();
}

bool Series::is_complete() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->complete;
}

bool Series::float_cancellation_seen() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->float_cancel;
}

ValuationClass Series::classify_valuation(const Exponent& cap) const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->complete) {
            if (impl_->memo.empty()) return {ValuationClass::KnownZero, Exponent()};
            const Exponent& v = impl_->memo.front().exp;
            if (Exponent::cmp(v, cap) <= 0) return {ValuationClass::Determined, v};
            return {ValuationClass::AboveCap, Exponent()};
        }
    }
    auto window = terms_below(cap);
    if (!window.empty()) return {ValuationClass::Determined, window.front().exp};
    return {ValuationClass::AboveCap, Exponent()};
}

Valuation Series::valuation(const Exponent& cap) const {
    auto cls = classify_valuation(cap);
    switch (cls.kind) {
        case ValuationClass::KnownZero:
            return Valuation::infinity();
        case ValuationClass::Determined:
            return Valuation(cls.value);
        default:
            throw UndeterminedValuationError("series", cap.str());
    }
}

Coefficient Series::leading_coefficient(const Exponent& cap) const {
    Valuation v = valuation(cap);
    if (v.is_infinite()) throw SemanticError("leading coefficient of the zero series");
    auto window = terms_below(v.value());
    return window.front().coeff;
}

BigFloat Series::norm(const Exponent& cap, unsigned precision) const {
    Valuation v = valuation(cap);
    if (v.is_infinite()) return bf(0, precision);
    Interval iv = v.value().enclose(Rational(1, Integer(1) << (precision / 2 + 8)));
    BigFloat mid = bf(Rational((iv.lo + iv.hi) / 2), precision);
    return exp(-mid);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace {

class AddGen final : public Generator {
public:
    AddGen(Series f, Series g) : f_(std::move(f)), g_(std::move(g)) {}
    ProduceResult produce(const Exponent& bound) override {
        ProduceResult r;
        r.terms = detail::tl_merge_add(f_.terms_below(bound), g_.terms_below(bound),
                                       &r.float_cancellation);
        return r;
    }

private:
    Series f_, g_;
};

class MapGen final : public Generator {
public:
    MapGen(Series f, Coefficient factor, Exponent shift)
        : f_(std::move(f)), factor_(std::move(factor)), shift_(std::move(shift)) {}
    ProduceResult produce(const Exponent& bound) override {
        ProduceResult r;
        r.terms = detail::tl_scale_shift(f_.terms_below(bound - shift_), factor_, shift_,
                                         &r.float_cancellation);
        return r;
    }

private:
    Series f_;
    Coefficient factor_;
    Exponent shift_;
};

class MulGen final : public Generator {
public:
    MulGen(Series f, Series g) : f_(std::move(f)), g_(std::move(g)) {}
    ProduceResult produce(const Exponent& bound) override {
        ProduceResult r;
        Exponent probe_cap = Exponent::cmp(bound, Exponent()) > 0 ? bound : Exponent();
        // product terms at or below the bound draw on f-terms <= bound-val(g)
        // and g-terms <= bound-val(f); a factor with nothing at or below the
        // probe cap provably contributes nothing in this window
        auto wf = f_.terms_below(probe_cap);
        auto wg = g_.terms_below(probe_cap);
        if (wf.empty() && wg.empty()) return r;
        std::vector<Term> tf, tg;
        if (!wf.empty() && !wg.empty()) {
            tf = f_.terms_below(bound - wg.front().exp);
            tg = g_.terms_below(bound - wf.front().exp);
        } else if (!wf.empty()) {
            tg = g_.terms_below(bound - wf.front().exp);
            if (tg.empty()) return r;
            tf = f_.terms_below(bound - tg.front().exp);
        } else {
            tf = f_.terms_below(bound - wg.front().exp);
            if (tf.empty()) return r;
            tg = g_.terms_below(bound - tf.front().exp);
        }
        r.terms = detail::tl_convolve(tf, tg, &bound, &r.float_cancellation);
        return r;
    }

private:
    Series f_, g_;
};

class TruncGen final : public Generator {
public:
    TruncGen(std::vector<Term> terms, Exponent cert)
        : terms_(std::move(terms)), cert_(std::move(cert)) {}
    ProduceResult produce(const Exponent& bound) override {
        if (Exponent::cmp(bound, cert_) > 0)
            throw TruncationError("series window", cert_.str());
        return {detail::tl_filter_below(terms_, bound), false};
    }

private:
    std::vector<Term> terms_;
    Exponent cert_;
};

// 1/f written as lc^{-1} t^{-v} sum_k (-h)^k for f = lc t^v (1 + h) with
// val(h) > 0; a query at bound B needs powers k while k*val(h) <= B + v.
class InverseGen final : public Generator {
public:
    InverseGen(Series f, Exponent val, Coefficient lc)
        : f_(std::move(f)), val_(std::move(val)), lc_inv_(lc.inverse()) {}
    ProduceResult produce(const Exponent& bound) override {
        ProduceResult r;
        Exponent inner = bound + val_;  // bound for sum_k (-h)^k
        if (Exponent::cmp(inner, Exponent()) < 0) return r;
        auto wf = f_.terms_below(inner + val_);
        std::vector<Term> minus_h;
        bool first = true;
        for (const auto& t : wf) {
            if (first) {
                first = false;  // the unit term lc * t^v itself
                continue;
            }
            Coefficient c = -(t.coeff * lc_inv_);
            if (c.is_zero()) {
                if (!c.is_exact()) r.float_cancellation = true;
                continue;
            }
            if (Exponent::cmp(t.exp - val_, inner) <= 0) minus_h.push_back({t.exp - val_, c});
        }
        std::vector<Term> acc{{Exponent(), Coefficient::from_long(1)}};
        if (!minus_h.empty()) {
            std::vector<Term> power = acc;
            while (true) {
                power = detail::tl_convolve(power, minus_h, &inner, &r.float_cancellation);
                if (power.empty()) break;
                acc = detail::tl_merge_add(acc, power, &r.float_cancellation);
            }
        }
        r.terms = detail::tl_scale_shift(acc, lc_inv_, -val_, &r.float_cancellation);
        r.terms = detail::tl_filter_below(r.terms, bound);
        return r;
    }

private:
    Series f_;
    Exponent val_;
    Coefficient lc_inv_;
};

class CauchyGen final : public Generator {
public:
    explicit CauchyGen(std::function<Series(long)> provider) : provider_(std::move(provider)) {}
    ProduceResult produce(const Exponent& bound) override {
        long m = bound.ceil_long();
        Series s = provider_(m);
        return {s.terms_below(bound), false};
    }
    bool mismatch_is_cauchy() const override { return true; }

private:
    std::function<Series(long)> provider_;
};

bool both_complete(const Series& f, const Series& g) {
    return f.is_complete() && g.is_complete();
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

Series series_add(const Series& f, const Series& g) {
    if (f.known_zero()) return g;
    if (g.known_zero()) return f;
    if (both_complete(f, g)) {
        bool cancel = f.float_cancellation_seen() || g.float_cancellation_seen();
        auto terms = detail::tl_merge_add(f.complete_terms(), g.complete_terms(), &cancel);
        return with_cancel_flag(Series::from_terms(std::move(terms)), cancel);
    }
    return Series::from_generator(std::make_unique<AddGen>(f, g));
}

Series series_neg(const Series& f) { return series_scale(f, Coefficient::from_long(-1)); }

Series series_sub(const Series& f, const Series& g) { return series_add(f, series_neg(g)); }

Series series_scale(const Series& f, const Coefficient& c) {
    if (c.is_exact() && c.is_zero()) return Series::zero();
    if (f.known_zero()) return f;
    if (f.is_complete()) {
        bool cancel = f.float_cancellation_seen();
        return with_cancel_flag(
            Series::from_terms(detail::tl_scale_shift(f.complete_terms(), c, Exponent(), &cancel)),
            cancel);
    }
    return Series::from_generator(std::make_unique<MapGen>(f, c, Exponent()));
}

Series series_shift(const Series& f, const Exponent& omega) {
    if (f.known_zero() || omega.is_zero()) return f;
    if (f.is_complete()) {
        bool cancel = f.float_cancellation_seen();
        return with_cancel_flag(
            Series::from_terms(
                detail::tl_scale_shift(f.complete_terms(), Coefficient::from_long(1), omega, &cancel)),
            cancel);
    }
    return Series::from_generator(std::make_unique<MapGen>(f, Coefficient::from_long(1), omega));
}

Series series_mul(const Series& f, const Series& g) {
    if (f.known_zero()) return f;
    if (g.known_zero()) return g;
    if (both_complete(f, g)) {
        bool cancel = f.float_cancellation_seen() || g.float_cancellation_seen();
        return with_cancel_flag(
            Series::from_terms(
                detail::tl_convolve(f.complete_terms(), g.complete_terms(), nullptr, &cancel)),
            cancel);
    }
    return Series::from_generator(std::make_unique<MulGen>(f, g));
}

Series series_inverse(const Series& f, const Exponent& cap) {
    Valuation v = f.valuation(cap);
    if (v.is_infinite()) throw SemanticError("inverse of the zero series");
    Coefficient lc = f.leading_coefficient(cap);
    if (f.is_complete() && f.complete_terms().size() == 1)
        return Series::monomial(lc.inverse(), -v.value());
    return Series::from_generator(std::make_unique<InverseGen>(f, v.value(), lc));
}

Series Series::truncated(std::vector<Term> terms, Exponent bound) {
    Series norm = from_terms(std::move(terms));
    return from_generator(std::make_unique<TruncGen>(norm.complete_terms(), std::move(bound)));
}

Series Series::geometric(const Exponent& e) {
    if (Exponent::cmp(e, Exponent()) <= 0)
        throw SemanticError("geometric series requires a positive exponent");
    Series base = from_terms(
        {{Exponent(), Coefficient::from_long(1)}, {e, Coefficient::from_long(-1)}});
    return series_inverse(base, Exponent());
}

Series series_substitute(const std::vector<MultiTerm>& g, const std::vector<Series>& args,
                         const Exponent& bound) {
    // arguments must have strictly positive valuation; one with no terms at
    // or below the bound contributes nothing observable here
    for (const auto& a : args) {
        auto cls = a.classify_valuation(bound);
        if (cls.kind == ValuationClass::Determined && Exponent::cmp(cls.value, Exponent()) <= 0)
            throw SemanticError("substitute: argument has valuation <= 0");
    }
    bool cancel = false;
    std::vector<Term> acc;
    for (const auto& mt : g) {
        if (mt.exps.size() > args.size())
            throw SemanticError("substitute: monomial refers to a missing argument");
        std::vector<Term> prod{{Exponent(), Coefficient::from_long(1)}};
        for (size_t i = 0; i < mt.exps.size() && !prod.empty(); ++i) {
            auto w = args[i].terms_below(bound);
            for (unsigned k = 0; k < mt.exps[i] && !prod.empty(); ++k)
                prod = detail::tl_convolve(prod, w, &bound, &cancel);
        }
        prod = detail::tl_scale_shift(prod, mt.coeff, Exponent(), &cancel);
        acc = detail::tl_merge_add(acc, prod, &cancel);
    }
    return Series::truncated(std::move(acc), bound);
}

Series cauchy_limit(std::function<Series(long)> provider) {
    return Series::from_generator(std::make_unique<CauchyGen>(std::move(provider)));
}

bool equal_up_to(const Series& f, const Series& g, const Exponent& bound) {
    return series_sub(f, g).terms_below(bound).empty();
}

std::string series_str(const Series& f, const Exponent& bound) {
    auto terms = f.terms_below(bound);
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        std::string cs = t.coeff.str();
        bool plain_negative = cs.size() > 1 && cs[0] == '-' &&
                              cs.find_first_of("+-", 1) == std::string::npos;
        if (first) {
            first = false;
        } else if (plain_negative) {
            os << " - ";
            cs = cs.substr(1);
            plain_negative = false;
        } else {
            os << " + ";
        }
        if (t.exp.is_zero()) {
            os << cs;
            continue;
        }
        if (cs == "1") {
        } else if (cs == "-1") {
            os << "-";
        } else if (cs.find_first_of("+-", 1) == std::string::npos &&
                   cs.find('i') == std::string::npos) {
            os << cs << "*";
        } else {
            os << "(" << cs << ")*";
        }
        if (t.exp == Exponent(1))
            os << "t";
        else
            os << "t^(" << t.exp.str() << ")";
    }
    return os.str();
}

}  // namespace puiseux
