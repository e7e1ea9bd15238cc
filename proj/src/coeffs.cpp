#include "puiseux/coeffs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace puiseux {

namespace {

constexpr unsigned kErrBits = 64;

// Conservative inflation so that bound arithmetic done in rounded floats stays
// an upper bound.
BigFloat bnd(const BigFloat& x) {
    return x * (bf(1, kErrBits) + bf_pow2(-40, kErrBits));
}

BigFloat abs_complex(const BigFloat& re, const BigFloat& im) {
    return sqrt(re * re + im * im);
}

}  // namespace

Coefficient Coefficient::exact(const Rational& re, const Rational& im) {
    Coefficient c;
    c.exact_ = true;
    c.re_q_ = re;
    c.im_q_ = im;
    return c;
}

Coefficient Coefficient::make_float(const BigFloat& re, const BigFloat& im,
                                    const BigFloat& err, unsigned prec_bits) {
    Coefficient c;
    c.exact_ = false;
    c.re_f_ = re;
    c.im_f_ = im;
    c.err_ = err;
    c.prec_ = prec_bits;
    return c;
}

Coefficient Coefficient::to_float(unsigned prec_bits) const {
    if (!exact_) {
        if (prec_bits <= prec_) return *this;
        Coefficient c = *this;
        c.prec_ = prec_bits;
        return c;
    }
    BigFloat re = bf(re_q_, prec_bits), im = bf(im_q_, prec_bits);
    BigFloat err = bnd((abs(re) + abs(im) + bf_pow2(-60, kErrBits)) *
                       bf_pow2(2 - static_cast<long>(prec_bits), kErrBits));
    return make_float(re, im, err, prec_bits);
}

bool Coefficient::is_zero() const {
    if (exact_) return re_q_ == 0 && im_q_ == 0;
    return re_f_ * re_f_ + im_f_ * im_f_ <= err_ * err_;
}

BigFloat Coefficient::abs_approx() const {
    if (exact_) {
        BigFloat re = bf(re_q_, kErrBits), im = bf(im_q_, kErrBits);
        return abs_complex(re, im);
    }
    return abs_complex(re_f_, im_f_);
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    if (exact_ && o.exact_) return exact(re_q_ + o.re_q_, im_q_ + o.im_q_);
    unsigned p = std::max(exact_ ? o.prec_ : prec_, o.exact_ ? prec_ : o.prec_);
    Coefficient a = to_float(p), b = o.to_float(p);
    BigFloat re = a.re_f_ + b.re_f_, im = a.im_f_ + b.im_f_;
    BigFloat round = (abs(re) + abs(im)) * bf_pow2(2 - static_cast<long>(p), kErrBits);
    return make_float(re, im, bnd(a.err_ + b.err_ + round), p);
}

Coefficient Coefficient::operator-() const {
    if (exact_) return exact(-re_q_, -im_q_);
    return make_float(-re_f_, -im_f_, err_, prec_);
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
    if (exact_ && o.exact_)
        return exact(re_q_ * o.re_q_ - im_q_ * o.im_q_,
                     re_q_ * o.im_q_ + im_q_ * o.re_q_);
    unsigned p = std::max(exact_ ? o.prec_ : prec_, o.exact_ ? prec_ : o.prec_);
    Coefficient a = to_float(p), b = o.to_float(p);
    BigFloat re = a.re_f_ * b.re_f_ - a.im_f_ * b.im_f_;
    BigFloat im = a.re_f_ * b.im_f_ + a.im_f_ * b.re_f_;
    BigFloat am = abs_complex(a.re_f_, a.im_f_), bm = abs_complex(b.re_f_, b.im_f_);
    BigFloat round = (abs(re) + abs(im) + am * bm) * bf_pow2(4 - static_cast<long>(p), kErrBits);
    BigFloat err = am * b.err_ + bm * a.err_ + a.err_ * b.err_ + round;
    return make_float(re, im, bnd(err), p);
}

Coefficient Coefficient::inverse() const {
    if (exact_) {
        Rational n = re_q_ * re_q_ + im_q_ * im_q_;
        if (n == 0) throw SemanticError("division by zero coefficient");
        return exact(re_q_ / n, -im_q_ / n);
    }
    BigFloat m = abs_complex(re_f_, im_f_);
    if (m <= err_) throw SemanticError("division by numerically zero coefficient");
    BigFloat n = re_f_ * re_f_ + im_f_ * im_f_;
    BigFloat re = re_f_ / n, im = -im_f_ / n;
    BigFloat lower = m - err_;
    BigFloat err = err_ / (m * lower) +
                   (abs(re) + abs(im)) * bf_pow2(4 - static_cast<long>(prec_), kErrBits);
    return make_float(re, im, bnd(err), prec_);
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
    return *this * o.inverse();
}

Coefficient Coefficient::pow(unsigned k) const {
    Coefficient r = exact(Rational(1));
    Coefficient b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool Coefficient::equals(const Coefficient& o) const {
    if (exact_ != o.exact_) return false;
    if (exact_) return re_q_ == o.re_q_ && im_q_ == o.im_q_;
    return re_f_ == o.re_f_ && im_f_ == o.im_f_;
}

int Coefficient::cmp_lex(const Coefficient& a, const Coefficient& b) {
    if (a.exact_ && b.exact_) {
        if (a.re_q_ != b.re_q_) return a.re_q_ < b.re_q_ ? -1 : 1;
        if (a.im_q_ != b.im_q_) return a.im_q_ < b.im_q_ ? -1 : 1;
        return 0;
    }
    unsigned p = std::max(a.exact_ ? 64u : a.prec_, b.exact_ ? 64u : b.prec_);
    Coefficient x = a.to_float(p), y = b.to_float(p);
    if (x.re_f_ != y.re_f_) return x.re_f_ < y.re_f_ ? -1 : 1;
    if (x.im_f_ != y.im_f_) return x.im_f_ < y.im_f_ ? -1 : 1;
    return 0;
}

namespace {

std::string float_str(const BigFloat& x, unsigned prec) {
    unsigned digits = std::max(6u, digits10_for_bits(prec) - 3);
    return x.str(digits);
}

}  // namespace

std::string Coefficient::str() const {
    if (exact_) {
        if (im_q_ == 0) return rational_str(re_q_);
        Rational ai = im_q_ < 0 ? Rational(-im_q_) : im_q_;
        std::string imp = (ai == 1) ? "i" : rational_str(ai) + "*i";
        if (re_q_ == 0) return (im_q_ < 0 ? "-" : "") + imp;
        return rational_str(re_q_) + (im_q_ < 0 ? "-" : "+") + imp;
    }
    if (im_f_ == 0) return float_str(re_f_, prec_);
    std::string imp = float_str(BigFloat(abs(im_f_)), prec_) + "*i";
    if (re_f_ == 0) return (im_f_ < 0 ? "-" : "") + imp;
    return float_str(re_f_, prec_) + (im_f_ < 0 ? "-" : "+") + imp;
}

CPoly::CPoly(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string CPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Coefficient& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
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
        if (i == 0) {
            os << cs;
        } else {
            if (cs == "1") {
                // bare y^i
            } else if (cs == "-1") {
                os << "-";
            } else if (cs.find_first_of("+-", 1) == std::string::npos &&
                       cs.find('i') == std::string::npos) {
                os << cs << "*";
            } else {
                os << "(" << cs << ")*";
            }
            os << "y";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Coefficient ceval(const CPoly& p, const Coefficient& z) {
    if (p.is_zero()) return Coefficient::exact(Rational(0));
    Coefficient acc = p.leading();
    for (int i = p.degree() - 1; i >= 0; --i) acc = acc * z + p[i];
    return acc;
}

CPoly cderiv(const CPoly& p, unsigned order) {
    std::vector<Coefficient> c = p.coeffs();
    for (unsigned k = 0; k < order; ++k) {
        if (c.size() <= 1) return CPoly(std::vector<Coefficient>{});
        std::vector<Coefficient> d;
        d.reserve(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i)
            d.push_back(c[i] * Coefficient::from_long(static_cast<long>(i)));
        c = std::move(d);
    }
    return CPoly(std::move(c));
}

CPoly cpoly_add(const CPoly& a, const CPoly& b) {
    std::vector<Coefficient> c(std::max(a.coeffs().size(), b.coeffs().size()),
                               Coefficient::exact(Rational(0)));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = c[i] + a[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] = c[i] + b[i];
    return CPoly(std::move(c));
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return CPoly(std::vector<Coefficient>{});
    std::vector<Coefficient> c(a.coeffs().size() + b.coeffs().size() - 1,
                               Coefficient::exact(Rational(0)));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return CPoly(std::move(c));
}

CPoly cpoly_scale(const CPoly& a, const Coefficient& c) {
    std::vector<Coefficient> out;
    out.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) out.push_back(x * c);
    return CPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// Exact root extraction
// ---------------------------------------------------------------------------

namespace {

struct GaussianRational {
    Rational re, im;
};

// Exact square root in Q(i), if one exists.
std::optional<GaussianRational> gaussian_sqrt(const Rational& a, const Rational& b) {
    if (b == 0) {
        if (a >= 0) {
            if (auto s = exact_sqrt(a)) return GaussianRational{*s, Rational(0)};
            return std::nullopt;
        }
        if (auto s = exact_sqrt(Rational(-a))) return GaussianRational{Rational(0), *s};
        return std::nullopt;
    }
    auto m = exact_sqrt(a * a + b * b);
    if (!m) return std::nullopt;
    auto x = exact_sqrt((a + *m) / 2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = b / (2 * *x);
    if (*x * *x - y * y == a && 2 * *x * y == b) return GaussianRational{*x, y};
    return std::nullopt;
}

// Divides c by (y - r) as often as the remainder stays exactly zero; returns
// the multiplicity.
int divide_out_root(std::vector<Coefficient>& c, const Coefficient& r) {
    int mult = 0;
    while (c.size() >= 2) {
        std::vector<Coefficient> q(c.size() - 1, Coefficient::exact(Rational(0)));
        Coefficient carry = c.back();
        for (size_t i = c.size() - 1; i >= 1; --i) {
            q[i - 1] = carry;
            carry = c[i - 1] + r * carry;
        }
        if (!(carry.is_exact() && carry.is_zero())) break;
        c = std::move(q);
        ++mult;
    }
    return mult;
}

// d >= 1 with d^2 | n, from a trial-division factorisation.
std::vector<Integer> square_divisors(Integer n) {
    if (n < 0) n = -n;
    std::map<Integer, int> fac;
    Integer m = n;
    for (long p = 2; p <= 100000 && m > 1; p == 2 ? p = 3 : p += 2) {
        while (m % p == 0) {
            fac[Integer(p)]++;
            m /= p;
        }
        if (Integer(p) * p > m && m > 1) {
            fac[m]++;
            m = 1;
        }
    }
    if (m > 1) fac[m]++;
    std::vector<Integer> out{1};
    for (const auto& [p, e] : fac) {
        int half = e / 2;
        if (half == 0) continue;
        size_t base = out.size();
        Integer pk = 1;
        for (int k = 1; k <= half; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
                if (out.size() > 256) {
                    std::sort(out.begin(), out.end());
                    out.erase(std::unique(out.begin(), out.end()), out.end());
                    return out;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::vector<std::pair<Coefficient, int>>> exact_roots(const CPoly& p) {
    for (const auto& x : p.coeffs())
        if (!x.is_exact()) return std::nullopt;
    std::vector<Coefficient> c = p.coeffs();
    std::vector<std::pair<Coefficient, int>> out;

    size_t zero_mult = 0;
    while (zero_mult + 1 < c.size() && c[zero_mult].is_zero()) ++zero_mult;
    if (zero_mult) {
        out.emplace_back(Coefficient::exact(Rational(0)), static_cast<int>(zero_mult));
        c.erase(c.begin(), c.begin() + static_cast<long>(zero_mult));
    }

    while (c.size() > 3) {
        // candidates (p/q)*unit with p^2 | N(A_0) and q^2 | N(A_n) after
        // clearing denominators (root p/q of an integer Gaussian polynomial
        // has p | A_0 and q | A_n in Z[i], so the norms divide)
        Integer l = 1;
        for (const auto& x : c) {
            l = lcm(l, denominator(x.re_exact()));
            l = lcm(l, denominator(x.im_exact()));
        }
        auto norm_of = [&](const Coefficient& x) {
            Rational sre = x.re_exact() * l, sim = x.im_exact() * l;
            Integer re = numerator(sre), im = numerator(sim);
            return Integer(re * re + im * im);
        };
        auto ps = square_divisors(norm_of(c.front()));
        auto qs = square_divisors(norm_of(c.back()));
        bool found = false;
        for (const Integer& pp : ps) {
            for (const Integer& qq : qs) {
                Rational v{pp, qq};
                const Coefficient cands[4] = {
                    Coefficient::exact(v), Coefficient::exact(Rational(-v)),
                    Coefficient::exact(Rational(0), v),
                    Coefficient::exact(Rational(0), Rational(-v))};
                for (const auto& cand : cands) {
                    if (ceval(CPoly(c), cand).is_zero()) {
                        int m = divide_out_root(c, cand);
                        out.emplace_back(cand, m);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }

    while (c.size() >= 2) {
        if (c.size() == 2) {
            Coefficient r = -(c[0] / c[1]);
            int m = divide_out_root(c, r);
            if (m == 0) throw Error("internal: exact linear factor did not divide");
            out.emplace_back(r, m);
            continue;
        }
        Coefficient D = c[1] * c[1] - Coefficient::from_long(4) * c[2] * c[0];
        auto s = gaussian_sqrt(D.re_exact(), D.im_exact());
        if (!s) return std::nullopt;
        Coefficient sq = Coefficient::exact(s->re, s->im);
        Coefficient twoa = Coefficient::from_long(2) * c[2];
        Coefficient r1 = (-c[1] + sq) / twoa;
        Coefficient r2 = (-c[1] - sq) / twoa;
        int m1 = divide_out_root(c, r1);
        if (m1) out.emplace_back(r1, m1);
        if (c.size() >= 2) {
            int m2 = divide_out_root(c, r2);
            if (m2) out.emplace_back(r2, m2);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich float path
// ---------------------------------------------------------------------------

struct CF {
    BigFloat re, im;
};

CF cf_add(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF cf_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF cf_mul(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CF cf_div(const CF& a, const CF& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
BigFloat cf_abs(const CF& a) { return abs_complex(a.re, a.im); }

struct RetryAtHigherPrecision {};

std::vector<std::pair<Coefficient, int>> aberth_roots(const CPoly& p, unsigned prec,
                                                      unsigned report_prec) {
    const unsigned wp = prec + 64;
    const int n = p.degree();

    std::vector<CF> a(n + 1);
    BigFloat input_err = bf(0, kErrBits);
    for (int i = 0; i <= n; ++i) {
        Coefficient f = p[i].to_float(wp);
        a[i] = {f.re_float(), f.im_float()};
        input_err = (std::max)(input_err, f.error_bound());
    }
    CF lead = a[n];
    if (cf_abs(lead) == 0) throw RetryAtHigherPrecision{};
    for (int i = 0; i <= n; ++i) a[i] = cf_div(a[i], lead);
    a[n] = {bf(1, wp), bf(0, wp)};

    auto eval_both = [&](const CF& z, CF& pv, CF& dv) {
        pv = a[n];
        dv = {bf(0, wp), bf(0, wp)};
        for (int i = n - 1; i >= 0; --i) {
            dv = cf_add(cf_mul(dv, z), pv);
            pv = cf_add(cf_mul(pv, z), a[i]);
        }
    };

    // Knuth-style starting radius: 2 * max |a_i|^{1/(n-i)}
    BigFloat radius = bf(1, wp) / 2;
    for (int i = 0; i < n; ++i) {
        BigFloat m = cf_abs(a[i]);
        if (m == 0) continue;
        BigFloat r = pow(m, bf(1, wp) / (n - i));
        radius = (std::max)(radius, r);
    }
    radius *= 2;

    std::vector<CF> z(n);
    {
        // enough digits of pi for angle placement
        BigFloat pi_val = bf(Rational(Integer("2646693125139304345"),
                                      Integer("842468587426513207")),
                             wp);
        for (int k = 0; k < n; ++k) {
            BigFloat theta = (2 * pi_val * k) / n + bf(2, wp) / 5 +
                             (bf(1, wp) * k) / (7 * n + 3);
            z[k] = {radius * cos(theta), radius * sin(theta)};
        }
    }

    const BigFloat stop_eps = bf_pow2(-static_cast<long>(wp - 8), wp);
    std::vector<bool> done(n, false);
    std::vector<BigFloat> newton_radius(n, bf(0, kErrBits));

    const int max_iter = 80 + 40 * n;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int k = 0; k < n; ++k) {
            CF pv, dv;
            eval_both(z[k], pv, dv);
            // backward-error stop: z_k is an exact root of a polynomial whose
            // coefficients are within stop_eps relatively of p's
            BigFloat scale = bf(0, wp), zp = bf(1, wp), az = cf_abs(z[k]);
            for (int i = 0; i <= n; ++i) {
                scale += cf_abs(a[i]) * zp;
                zp *= az;
            }
            if (cf_abs(pv) <= stop_eps * scale) {
                done[k] = true;
                newton_radius[k] = cf_abs(dv) > 0
                                       ? BigFloat(n * cf_abs(pv) / cf_abs(dv))
                                       : BigFloat(bf_pow2(-static_cast<long>(prec) / 2, kErrBits));
                continue;
            }
            done[k] = false;
            all_done = false;
            if (cf_abs(dv) == 0) {
                z[k].re += stop_eps + bf(1, wp) / 1000;
                continue;
            }
            CF newton = cf_div(pv, dv);
            CF rep{bf(0, wp), bf(0, wp)};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                CF d = cf_sub(z[k], z[j]);
                if (cf_abs(d) == 0) d.re += stop_eps + bf_pow2(-static_cast<long>(prec) / 2, wp);
                rep = cf_add(rep, cf_div({bf(1, wp), bf(0, wp)}, d));
            }
            CF denom = cf_sub({bf(1, wp), bf(0, wp)}, cf_mul(newton, rep));
            CF w = cf_abs(denom) > 0 ? cf_div(newton, denom) : newton;
            z[k] = cf_sub(z[k], w);
            newton_radius[k] = n * cf_abs(newton);
        }
        if (all_done) break;
    }
    if (iter >= max_iter) throw RetryAtHigherPrecision{};

    // merge clusters; Newton inclusion disks handle multiplicity >= 3, the
    // 2^{-p/2} absolute tolerance is the documented floor
    BigFloat zmax = bf(1, wp);
    for (int k = 0; k < n; ++k) zmax = (std::max)(zmax, cf_abs(z[k]));
    BigFloat tol = bf_pow2(-static_cast<long>(prec / 2), wp) * zmax;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            BigFloat d = cf_abs(cf_sub(z[i], z[j]));
            if (d <= tol || d <= newton_radius[i] + newton_radius[j])
                parent[find(i)] = find(j);
        }

    std::map<int, std::vector<int>> clusters;
    for (int i = 0; i < n; ++i) clusters[find(i)].push_back(i);

    struct Cluster {
        CF centroid;
        BigFloat radius;
        BigFloat maxnewton;
        int mult;
    };
    std::vector<Cluster> cs;
    for (const auto& [root, members] : clusters) {
        (void)root;
        CF cen{bf(0, wp), bf(0, wp)};
        for (int i : members) cen = cf_add(cen, z[i]);
        cen = {cen.re / static_cast<long>(members.size()),
               cen.im / static_cast<long>(members.size())};
        BigFloat rad = bf(0, kErrBits), mn = bf(0, kErrBits);
        for (int i : members) {
            rad = (std::max)(rad, cf_abs(cf_sub(z[i], cen)));
            mn = (std::max)(mn, newton_radius[i]);
        }
        cs.push_back({cen, rad, mn, static_cast<int>(members.size())});
    }

    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j) {
            BigFloat d = cf_abs(cf_sub(cs[i].centroid, cs[j].centroid));
            if (d < 4 * (cs[i].radius + cs[j].radius + tol)) throw RetryAtHigherPrecision{};
        }

    // reconstruction validation against the monic input
    {
        std::vector<CF> rec{CF{bf(1, wp), bf(0, wp)}};
        for (const auto& c : cs)
            for (int m = 0; m < c.mult; ++m) {
                std::vector<CF> nxt(rec.size() + 1, CF{bf(0, wp), bf(0, wp)});
                for (size_t i = 0; i < rec.size(); ++i) {
                    nxt[i + 1] = cf_add(nxt[i + 1], rec[i]);
                    nxt[i] = cf_sub(nxt[i], cf_mul(rec[i], c.centroid));
                }
                rec = std::move(nxt);
            }
        BigFloat amax = bf(1, wp);
        for (int i = 0; i <= n; ++i) amax = (std::max)(amax, cf_abs(a[i]));
        BigFloat budget = bf_pow2(-static_cast<long>(prec / 4), wp) * amax + 8 * input_err;
        for (int i = 0; i <= n; ++i)
            if (cf_abs(cf_sub(rec[i], a[i])) > budget) throw RetryAtHigherPrecision{};
    }

    std::vector<std::pair<Coefficient, int>> out;
    for (const auto& c : cs) {
        BigFloat err = bnd(2 * c.radius + c.maxnewton +
                           bf_pow2(-static_cast<long>(prec) + 6, kErrBits) *
                               (1 + cf_abs(c.centroid)) +
                           8 * input_err);
        out.emplace_back(Coefficient::make_float(c.centroid.re, c.centroid.im, err, report_prec),
                         c.mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return Coefficient::cmp_lex(x.first, y.first) < 0;
    });
    return out;
}

}  // namespace

std::vector<std::pair<Coefficient, int>> croots(const CPoly& p, const RootsOptions& opts) {
    if (p.is_zero()) throw SemanticError("croots: zero polynomial");
    if (p.degree() < 1) throw SemanticError("croots: constant polynomial has no roots");

    if (auto r = exact_roots(p)) {
        std::sort(r->begin(), r->end(), [](const auto& x, const auto& y) {
            return Coefficient::cmp_lex(x.first, y.first) < 0;
        });
        return *r;
    }

    unsigned prec = opts.precision;
    while (true) {
        try {
            return aberth_roots(p, prec, opts.precision);
        } catch (const RetryAtHigherPrecision&) {
            if (prec * 2 > opts.precision_cap)
                throw PrecisionExhaustedError("root clusters remain ambiguous at " +
                                              std::to_string(prec) + " bits");
            prec *= 2;
        }
    }
}

}  // namespace puiseux
