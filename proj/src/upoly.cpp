#include "qmirror/upoly.hpp"

#include "qmirror/error.hpp"

#include <algorithm>
#include <sstream>

namespace qmirror {

UPoly::UPoly(int order2) : order2_(std::min(order2, HalfLogSeries::kExact)) {
    for (auto& c : c_) c = HalfLogSeries(Var::q, order2_);
}

UPoly UPoly::constant(const ConstScalar& c, int order2) { return u_power(0, c, order2); }

UPoly UPoly::u_power(int power, const ConstScalar& c, int order2) {
    if (power < 0 || power > kMaxDegree) fail(ErrorKind::DomainOverflow, "u-degree exceeds 3");
    UPoly out(order2);
    out.c_[static_cast<size_t>(power)] = HalfLogSeries::constant(Var::q, c, order2);
    return out;
}

UPoly UPoly::from_series(const HalfLogSeries& q_series) {
    if (q_series.var() != Var::q) fail(ErrorKind::Precondition, "UPoly coefficients are q-series");
    if (q_series.has_logs()) fail(ErrorKind::Precondition, "UPoly coefficients are log-free");
    UPoly out(q_series.order2());
    out.c_[0] = q_series;
    return out;
}

int UPoly::degree() const {
    for (int d = kMaxDegree; d >= 0; --d)
        if (!c_[static_cast<size_t>(d)].is_zero()) return d;
    return -1;
}

void UPoly::set_coeff(int upow, const HalfLogSeries& s) {
    if (upow < 0 || upow > kMaxDegree) {
        if (s.is_zero()) return;
        fail(ErrorKind::DomainOverflow, "u-degree exceeds 3");
    }
    if (s.var() != Var::q || s.has_logs()) fail(ErrorKind::Precondition, "UPoly coefficients are log-free q-series");
    order2_ = std::min(order2_, s.order2());
    c_[static_cast<size_t>(upow)] = s;
    for (auto& c : c_) c = c.truncated(order2_);
}

UPoly UPoly::truncated(int order2) const {
    UPoly out(std::min(order2, order2_));
    for (size_t d = 0; d < c_.size(); ++d) out.c_[d] = c_[d].truncated(out.order2_);
    return out;
}

UPoly UPoly::operator-() const {
    UPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    order2_ = std::min(order2_, o.order2_);
    for (size_t d = 0; d < c_.size(); ++d) c_[d] = (c_[d] + o.c_[d]).truncated(order2_);
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly& UPoly::operator*=(const ConstScalar& c) {
    for (auto& x : c_) x *= c;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out(std::min(a.order2_, b.order2_));
    for (int i = 0; i <= UPoly::kMaxDegree; ++i) {
        const auto& ai = a.c_[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        for (int j = 0; j <= UPoly::kMaxDegree; ++j) {
            const auto& bj = b.c_[static_cast<size_t>(j)];
            if (bj.is_zero()) continue;
            HalfLogSeries prod = ai * bj;
            if (prod.truncated(out.order2_).is_zero()) continue;
            if (i + j > UPoly::kMaxDegree) fail(ErrorKind::DomainOverflow, "u-degree exceeds 3");
            out.c_[static_cast<size_t>(i + j)] += prod;
        }
    }
    for (auto& c : out.c_) c = c.truncated(out.order2_);
    return out;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.order2_ == b.order2_ && a.c_ == b.c_; }

bool agree_to_order(const UPoly& a, const UPoly& b, int order2) {
    for (int d = 0; d <= UPoly::kMaxDegree; ++d)
        if (!agree_to_order(a.coeff(d), b.coeff(d), std::min({order2, a.order2(), b.order2()}))) return false;
    return true;
}

std::string UPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= kMaxDegree; ++d) {
        const auto& c = c_[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        if (d == 1) os << "*u";
        else if (d > 1) os << "*u^" << d;
    }
    return first ? "0" : os.str();
}

UPoly delta(const UPoly& f) {
    UPoly out(f.order2());
    for (int d = 0; d <= UPoly::kMaxDegree; ++d) {
        const auto& c = f.coeff(d);
        if (c.is_zero()) continue;
        // 2 pi i q d/dq on the coefficient
        HalfLogSeries dq = theta(c) * ConstScalar::two_pi_i();
        HalfLogSeries next = out.coeff(d) + dq;
        if (d > 0) {
            HalfLogSeries lower = out.coeff(d - 1) + c * ConstScalar(d);
            out.set_coeff(d - 1, lower);
        }
        out.set_coeff(d, next);
    }
    return out;
}

UPoly shift_u(const UPoly& f, int turns) {
    UPoly out(f.order2());
    for (int d = 0; d <= UPoly::kMaxDegree; ++d) {
        HalfLogSeries c = f.coeff(d);
        if (c.is_zero()) continue;
        if (turns % 2 != 0)
            for (int m = 1; m < c.extent(); m += 2) c.set(m, 0, -c.coeff(m));
        // u^d -> sum_j binom(d, j) turns^{d-j} u^j
        for (int j = 0; j <= d; ++j) {
            Rational w = binomial(d, j);
            Rational p = 1;
            for (int e = 0; e < d - j; ++e) p *= turns;
            out.set_coeff(j, out.coeff(j) + c * ConstScalar(Rational(w * p)));
        }
    }
    return out;
}

}  // namespace qmirror
