#include "qmirror/series.hpp"

#include "qmirror/error.hpp"

#include <algorithm>
#include <sstream>

namespace qmirror {

namespace {

const ConstScalar kZero;

int finite_order(int order2, const char* what) {
    if (order2 >= HalfLogSeries::kExact)
        fail(ErrorKind::Unsupported, std::string(what) + " needs a finite truncation order");
    return order2;
}

void require_log_free(const HalfLogSeries& f, const char* what) {
    if (f.has_logs()) fail(ErrorKind::Precondition, std::string(what) + " requires a log-free series");
}

void require_integer_support(const HalfLogSeries& f, const char* what) {
    if (!f.has_integer_support())
        fail(ErrorKind::Precondition, std::string(what) + " requires integer exponents");
}

}  // namespace

const char* to_string(Var v) { return v == Var::z ? "z" : "q"; }

HalfLogSeries::HalfLogSeries(Var var, int order2) : var_(var), order2_(std::min(order2, kExact)) {
    if (order2 < 0) fail(ErrorKind::Precondition, "negative truncation order");
}

HalfLogSeries HalfLogSeries::monomial(Var var, int m2, int logpow, const ConstScalar& c, int order2) {
    HalfLogSeries out(var, order2);
    out.set(m2, logpow, c);
    return out;
}

HalfLogSeries HalfLogSeries::constant(Var var, const ConstScalar& c, int order2) {
    return monomial(var, 0, 0, c, order2);
}

HalfLogSeries HalfLogSeries::from_integer_coeffs(Var var, std::span<const Rational> coeffs, int order2) {
    if (order2 < 0) order2 = coeffs.empty() ? 0 : 2 * (static_cast<int>(coeffs.size()) - 1);
    HalfLogSeries out(var, order2);
    for (size_t n = 0; n < coeffs.size(); ++n) out.set(2 * static_cast<int>(n), 0, coeffs[n]);
    return out;
}

const ConstScalar& HalfLogSeries::coeff(int m2, int logpow) const {
    if (m2 < 0 || m2 >= extent() || logpow < 0 || logpow > kMaxLog) return kZero;
    return c_[static_cast<size_t>(m2)][static_cast<size_t>(logpow)];
}

void HalfLogSeries::set(int m2, int logpow, const ConstScalar& value) {
    if (m2 < 0) fail(ErrorKind::Precondition, "negative exponent");
    if (logpow < 0 || logpow > kMaxLog) {
        if (value.is_zero()) return;
        fail(ErrorKind::DomainOverflow, "log degree exceeds 3");
    }
    if (m2 > order2_) return;  // beyond truncation
    if (m2 >= extent()) {
        if (value.is_zero()) return;
        c_.resize(static_cast<size_t>(m2) + 1);
    }
    c_[static_cast<size_t>(m2)][static_cast<size_t>(logpow)] = value;
    trim();
}

void HalfLogSeries::add_to(int m2, int logpow, const ConstScalar& value) {
    if (value.is_zero() || m2 > order2_) return;
    if (logpow > kMaxLog) fail(ErrorKind::DomainOverflow, "log degree exceeds 3");
    if (m2 >= extent()) c_.resize(static_cast<size_t>(m2) + 1);
    c_[static_cast<size_t>(m2)][static_cast<size_t>(logpow)] += value;
    trim();
}

void HalfLogSeries::trim() {
    while (!c_.empty()) {
        const auto& last = c_.back();
        if (std::all_of(last.begin(), last.end(), [](const ConstScalar& c) { return c.is_zero(); }))
            c_.pop_back();
        else
            break;
    }
}

int HalfLogSeries::log_degree() const {
    int deg = -1;
    for (const auto& row : c_)
        for (int k = kMaxLog; k > deg; --k)
            if (!row[static_cast<size_t>(k)].is_zero()) deg = k;
    return deg;
}

bool HalfLogSeries::has_integer_support() const {
    for (int m = 1; m < extent(); m += 2)
        for (const auto& c : c_[static_cast<size_t>(m)])
            if (!c.is_zero()) return false;
    return true;
}

bool HalfLogSeries::has_half_odd_support() const {
    for (int m = 0; m < extent(); m += 2)
        for (const auto& c : c_[static_cast<size_t>(m)])
            if (!c.is_zero()) return false;
    return true;
}

bool HalfLogSeries::has_rational_coeffs() const {
    for (const auto& row : c_)
        for (const auto& c : row)
            if (!c.is_rational()) return false;
    return true;
}

HalfLogSeries HalfLogSeries::truncated(int order2) const {
    HalfLogSeries out(var_, std::min(order2, order2_));
    int keep = std::min(extent(), out.order2_ + 1);
    out.c_.assign(c_.begin(), c_.begin() + keep);
    out.trim();
    return out;
}

HalfLogSeries HalfLogSeries::with_var(Var var) const {
    HalfLogSeries out(*this);
    out.var_ = var;
    return out;
}

HalfLogSeries HalfLogSeries::log_part(int logpow) const {
    HalfLogSeries out(var_, order2_);
    for (int m = 0; m < extent(); ++m) out.set(m, 0, coeff(m, logpow));
    return out;
}

HalfLogSeries HalfLogSeries::shifted(int shift2) const {
    int order = order2_ >= kExact ? kExact : order2_ + shift2;
    if (order < 0) fail(ErrorKind::Precondition, "shift below zero order");
    HalfLogSeries out(var_, order);
    for (int m = 0; m < extent(); ++m)
        for (int k = 0; k <= kMaxLog; ++k) {
            const auto& c = coeff(m, k);
            if (c.is_zero()) continue;
            if (m + shift2 < 0) fail(ErrorKind::Precondition, "shift produces a negative exponent");
            out.set(m + shift2, k, c);
        }
    return out;
}

HalfLogSeries HalfLogSeries::operator-() const {
    HalfLogSeries out(*this);
    for (auto& row : out.c_)
        for (auto& c : row) c = -c;
    return out;
}

void HalfLogSeries::check_compatible(const HalfLogSeries& o) const {
    if (var_ != o.var_) fail(ErrorKind::Precondition, "series in different base variables");
}

HalfLogSeries& HalfLogSeries::operator+=(const HalfLogSeries& o) {
    check_compatible(o);
    *this = truncated(o.order2_);
    for (int m = 0; m < std::min(o.extent(), order2_ + 1); ++m)
        for (int k = 0; k <= kMaxLog; ++k) add_to(m, k, o.coeff(m, k));
    return *this;
}

HalfLogSeries& HalfLogSeries::operator-=(const HalfLogSeries& o) { return *this += -o; }

HalfLogSeries& HalfLogSeries::operator*=(const ConstScalar& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& row : c_)
        for (auto& x : row)
            if (!x.is_zero()) x = x * c;
    trim();
    return *this;
}

HalfLogSeries operator*(const HalfLogSeries& a, const HalfLogSeries& b) {
    a.check_compatible(b);
    HalfLogSeries out(a.var_, std::min(a.order2_, b.order2_));
    if (a.is_zero() || b.is_zero()) return out;
    int limit = std::min(out.order2_, a.extent() + b.extent() - 2);
    std::vector<HalfLogSeries::Coeffs> acc(static_cast<size_t>(limit) + 1);
    for (int i = 0; i < a.extent() && i <= limit; ++i) {
        const auto& ra = a.c_[static_cast<size_t>(i)];
        for (int j = 0; j < b.extent() && i + j <= limit; ++j) {
            const auto& rb = b.c_[static_cast<size_t>(j)];
            for (int ka = 0; ka <= HalfLogSeries::kMaxLog; ++ka) {
                if (ra[static_cast<size_t>(ka)].is_zero()) continue;
                for (int kb = 0; kb <= HalfLogSeries::kMaxLog; ++kb) {
                    if (rb[static_cast<size_t>(kb)].is_zero()) continue;
                    if (ka + kb > HalfLogSeries::kMaxLog)
                        fail(ErrorKind::DomainOverflow, "log degree exceeds 3");
                    acc[static_cast<size_t>(i + j)][static_cast<size_t>(ka + kb)] +=
                        ra[static_cast<size_t>(ka)] * rb[static_cast<size_t>(kb)];
                }
            }
        }
    }
    out.c_ = std::move(acc);
    out.trim();
    return out;
}

bool operator==(const HalfLogSeries& a, const HalfLogSeries& b) {
    return a.var_ == b.var_ && a.order2_ == b.order2_ && a.c_ == b.c_;
}

bool agree_to_order(const HalfLogSeries& a, const HalfLogSeries& b, int order2) {
    if (a.var() != b.var()) return false;
    int limit = std::min({a.order2(), b.order2(), order2});
    int upto = std::min(limit, std::max(a.extent(), b.extent()) - 1);
    for (int m = 0; m <= upto; ++m)
        for (int k = 0; k <= HalfLogSeries::kMaxLog; ++k)
            if (!(a.coeff(m, k) == b.coeff(m, k))) return false;
    return true;
}

std::string HalfLogSeries::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const char* x = qmirror::to_string(var_);
    bool first = true;
    for (int m = 0; m < extent(); ++m)
        for (int k = 0; k <= kMaxLog; ++k) {
            const auto& c = coeff(m, k);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")";
            if (m == 2) os << "*" << x;
            else if (m % 2 == 0 && m > 0) os << "*" << x << "^" << m / 2;
            else if (m % 2 == 1) os << "*" << x << "^(" << m << "/2)";
            if (k == 1) os << "*log(" << x << ")";
            else if (k > 1) os << "*log(" << x << ")^" << k;
        }
    if (!is_exact()) os << " + O(" << x << "^(" << order2_ + 1 << "/2))";
    return os.str();
}

HalfLogSeries theta(const HalfLogSeries& f) {
    HalfLogSeries out(f.var(), f.order2());
    for (int m = 0; m < f.extent(); ++m)
        for (int k = 0; k <= HalfLogSeries::kMaxLog; ++k) {
            const auto& c = f.coeff(m, k);
            if (c.is_zero()) continue;
            if (m != 0) out.add_to(m, k, c * ConstScalar(make_rational(m, 2)));
            if (k > 0) out.add_to(m, k - 1, c * ConstScalar(k));
        }
    return out;
}

HalfLogSeries series_invert(const HalfLogSeries& f, int max_order2) {
    require_log_free(f, "series_invert");
    int order = finite_order(std::min(f.order2(), max_order2), "series_invert");
    const ConstScalar& lead = f.coeff(0);
    if (lead.is_zero()) fail(ErrorKind::Precondition, "series_invert: zero constant term");
    ConstScalar inv = lead.inverse();
    HalfLogSeries g(f.var(), order);
    std::vector<ConstScalar> gc(static_cast<size_t>(order) + 1);
    gc[0] = inv;
    for (int m = 1; m <= order; ++m) {
        ConstScalar acc;
        for (int j = 1; j <= m && j < f.extent(); ++j) {
            const auto& fj = f.coeff(j);
            if (fj.is_zero() || gc[static_cast<size_t>(m - j)].is_zero()) continue;
            acc += fj * gc[static_cast<size_t>(m - j)];
        }
        gc[static_cast<size_t>(m)] = -(acc * inv);
    }
    for (int m = 0; m <= order; ++m) g.set(m, 0, gc[static_cast<size_t>(m)]);
    return g;
}

HalfLogSeries series_exp(const HalfLogSeries& f, int max_order2) {
    require_log_free(f, "series_exp");
    int order = finite_order(std::min(f.order2(), max_order2), "series_exp");
    if (!f.coeff(0).is_zero()) fail(ErrorKind::Precondition, "series_exp requires f(0) = 0");
    std::vector<ConstScalar> gc(static_cast<size_t>(order) + 1);
    gc[0] = ConstScalar(1);
    for (int m = 1; m <= order; ++m) {
        ConstScalar acc;
        for (int j = 1; j <= m && j < f.extent(); ++j) {
            const auto& fj = f.coeff(j);
            if (fj.is_zero() || gc[static_cast<size_t>(m - j)].is_zero()) continue;
            acc += fj * gc[static_cast<size_t>(m - j)] * ConstScalar(j);
        }
        gc[static_cast<size_t>(m)] = acc * ConstScalar(make_rational(1, m));
    }
    HalfLogSeries g(f.var(), order);
    for (int m = 0; m <= order; ++m) g.set(m, 0, gc[static_cast<size_t>(m)]);
    return g;
}

HalfLogSeries series_log(const HalfLogSeries& f, int max_order2) {
    require_log_free(f, "series_log");
    int order = finite_order(std::min(f.order2(), max_order2), "series_log");
    if (!(f.coeff(0) == ConstScalar(1))) fail(ErrorKind::Precondition, "series_log requires f(0) = 1");
    std::vector<ConstScalar> gc(static_cast<size_t>(order) + 1);
    for (int m = 1; m <= order; ++m) {
        ConstScalar acc = f.coeff(m) * ConstScalar(m);
        for (int j = 1; j < m && j < f.extent(); ++j) {
            const auto& fj = f.coeff(j);
            if (fj.is_zero() || gc[static_cast<size_t>(m - j)].is_zero()) continue;
            acc -= fj * gc[static_cast<size_t>(m - j)] * ConstScalar(m - j);
        }
        gc[static_cast<size_t>(m)] = acc * ConstScalar(make_rational(1, m));
    }
    HalfLogSeries g(f.var(), order);
    for (int m = 1; m <= order; ++m) g.set(m, 0, gc[static_cast<size_t>(m)]);
    return g;
}

HalfLogSeries series_power(const HalfLogSeries& f, const Rational& alpha, int max_order2) {
    return series_exp(series_log(f, max_order2) * ConstScalar(alpha), max_order2);
}

HalfLogSeries series_compose(const HalfLogSeries& f, const HalfLogSeries& g) {
    require_log_free(f, "series_compose");
    require_log_free(g, "series_compose");
    require_integer_support(f, "series_compose");
    require_integer_support(g, "series_compose");
    if (!g.coeff(0).is_zero()) fail(ErrorKind::Precondition, "series_compose requires g(0) = 0");
    int order = std::min(f.order2(), g.order2());
    HalfLogSeries result(g.var(), order);
    int top = (f.extent() - 1) / 2;
    for (int n = top; n >= 0; --n) {
        result = result * g;
        result += HalfLogSeries::constant(g.var(), f.coeff(2 * n), order);
    }
    return result.truncated(order);
}

HalfLogSeries series_reversion(const HalfLogSeries& f, int max_order2) {
    require_log_free(f, "series_reversion");
    require_integer_support(f, "series_reversion");
    if (!f.coeff(0).is_zero()) fail(ErrorKind::Precondition, "series_reversion requires f(0) = 0");
    int order = finite_order(std::min(f.order2(), max_order2), "series_reversion");
    const ConstScalar& c1 = f.coeff(2);
    if (c1.is_zero()) fail(ErrorKind::Precondition, "series_reversion requires a nonzero linear term");
    (void)c1.inverse();  // throws Unsupported unless an invertible monomial

    // Lagrange inversion: [x^n] g = (1/n) [w^{n-1}] (w / f(w))^n.
    HalfLogSeries h = series_invert(f.shifted(-2), order);
    HalfLogSeries g(f.var(), order);
    HalfLogSeries hn = HalfLogSeries::constant(f.var(), ConstScalar(1), order);
    for (int n = 1; 2 * n <= order; ++n) {
        hn = hn * h;
        g.set(2 * n, 0, hn.coeff(2 * (n - 1)) * ConstScalar(make_rational(1, n)));
    }
    return g;
}

}  // namespace qmirror
