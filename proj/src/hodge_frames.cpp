#include "qmirror/hodge_frames.hpp"

#include "qmirror/error.hpp"

#include <sstream>
#include <vector>

namespace qmirror {

namespace {

constexpr int kExact = HalfLogSeries::kExact;

UPoly cst(const ConstScalar& c) { return UPoly::constant(c); }

UPoly u_var(int order2 = kExact) { return UPoly::u_power(1, ConstScalar(1), order2); }

// The value of a u- and q-independent polynomial.
std::optional<ConstScalar> constant_value(const UPoly& p) {
    if (p.degree() > 0) return std::nullopt;
    const auto& s = p.coeff(0);
    for (int m = 1; m < s.extent(); ++m)
        for (int k = 0; k <= HalfLogSeries::kMaxLog; ++k)
            if (!s.coeff(m, k).is_zero()) return std::nullopt;
    for (int k = 1; k <= HalfLogSeries::kMaxLog; ++k)
        if (!s.coeff(0, k).is_zero()) return std::nullopt;
    return s.coeff(0);
}

Rational rational_value(const UPoly& p, const char* what) {
    auto c = constant_value(p);
    if (!c) fail(ErrorKind::Inconsistency, std::string(what) + " depends on u or q");
    return c->as_rational();
}

}  // namespace

// ---- cohomology classes ----

CohomClass CohomClass::scalar(const UPoly& c) {
    CohomClass out;
    out.c_[0] = c;
    return out;
}

CohomClass CohomClass::hyperplane() {
    CohomClass out;
    out.c_[1] = cst(1);
    return out;
}

CohomClass CohomClass::twisted() const {
    CohomClass out(*this);
    for (int p = 1; p < 4; ++p) out.c_[static_cast<size_t>(p)] = c_[static_cast<size_t>(p)] * ConstScalar::two_pi_i(p);
    return out;
}

UPoly CohomClass::integrate() const { return c_[3] * ConstScalar(5); }

CohomClass CohomClass::operator-() const {
    CohomClass out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

CohomClass operator+(const CohomClass& a, const CohomClass& b) {
    CohomClass out(a);
    for (size_t j = 0; j < 4; ++j) out.c_[j] += b.c_[j];
    return out;
}

CohomClass operator-(const CohomClass& a, const CohomClass& b) { return a + (-b); }

CohomClass operator*(const CohomClass& a, const CohomClass& b) {
    CohomClass out;
    for (size_t i = 0; i < 4; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < 4; ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

CohomClass operator*(const CohomClass& a, const UPoly& s) { return a * CohomClass::scalar(s); }

bool operator==(const CohomClass& a, const CohomClass& b) { return a.c_ == b.c_; }

std::string CohomClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < 4; ++j) {
        if (c_[static_cast<size_t>(j)].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[static_cast<size_t>(j)].to_string() << ")";
        if (j > 0) os << "*H" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    return first ? "0" : os.str();
}

CohomClass class_exp(const CohomClass& x) {
    if (!x.coeff(0).is_zero()) fail(ErrorKind::Precondition, "class_exp needs a nilpotent class");
    CohomClass out = CohomClass::scalar(cst(1)), term = out;
    for (int k = 1; k < 4; ++k) {
        term = term * x * cst(make_rational(1, k));
        out = out + term;
    }
    return out;
}

CohomClass chern_character(Sheaf e) {
    CohomClass out;
    switch (e) {
        case Sheaf::O_V:
            out.set_coeff(0, cst(1));
            break;
        case Sheaf::O_H:  // 1 - e^{-H}
            out.set_coeff(1, cst(1));
            out.set_coeff(2, cst(make_rational(-1, 2)));
            out.set_coeff(3, cst(make_rational(1, 6)));
            break;
        case Sheaf::O_C:
            out.set_coeff(2, cst(make_rational(1, 5)));
            out.set_coeff(3, cst(make_rational(1, 5)));
            break;
        case Sheaf::O_pt:
            out.set_coeff(3, cst(make_rational(1, 5)));
            break;
    }
    return out;
}

CohomClass tangent_chern_character() {
    CohomClass h = CohomClass::hyperplane();
    CohomClass e_h = class_exp(h);
    CohomClass e_5h = class_exp(h * cst(5));
    return e_h * cst(5) - CohomClass::scalar(cst(1)) - e_5h;
}

CohomClass gamma_class() {
    CohomClass ch = tangent_chern_character();
    CohomClass x;
    x.set_coeff(2, ch.coeff(2) * ConstScalar::zeta2());
    x.set_coeff(3, ch.coeff(3) * (ConstScalar::zeta3() * ConstScalar(-2)));
    return class_exp(x);
}

CohomClass asymptotic_class(Sheaf e) {
    CohomClass hu = CohomClass::hyperplane() * UPoly::u_power(1, ConstScalar::two_pi_i(1) * ConstScalar(-1));
    return class_exp(hu) * gamma_class() * chern_character(e).twisted() * cst(ConstScalar::two_pi_i(-3));
}

std::array<CohomClass, 4> asymptotic_flat_basis() {
    return {asymptotic_class(Sheaf::O_pt), asymptotic_class(Sheaf::O_C), asymptotic_class(Sheaf::O_H),
            asymptotic_class(Sheaf::O_V)};
}

UPoly pairing(const CohomClass& a, const CohomClass& b) {
    UPoly out;
    for (int p = 0; p < 4; ++p) {
        const auto& x = a.coeff(p);
        const auto& y = b.coeff(3 - p);
        if (x.is_zero() || y.is_zero()) continue;
        ConstScalar w = ConstScalar::two_pi_i(3) * ConstScalar(p % 2 ? -5 : 5);
        out += x * y * w;
    }
    return out;
}

Matrix pairing_matrix() {
    auto s = asymptotic_flat_basis();
    Matrix out(4, 4);
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            out(p, q) = rational_value(pairing(s[static_cast<size_t>(p)], s[static_cast<size_t>(q)]), "pairing of flat sections");
    return out;
}

std::array<UPoly, 4> s_coordinates(const CohomClass& x) {
    static const auto basis = asymptotic_flat_basis();
    std::array<UPoly, 4> coords;
    CohomClass rest = x;
    // s^p leads with H^{3-p}
    for (int p = 3; p >= 0; --p) {
        const int j = 3 - p;
        auto lead = constant_value(basis[static_cast<size_t>(p)].coeff(j));
        if (!lead) fail(ErrorKind::Inconsistency, "flat basis has a non-constant leading term");
        UPoly a = rest.coeff(j) * lead->inverse();
        coords[static_cast<size_t>(p)] = a;
        rest = rest - basis[static_cast<size_t>(p)] * a;
    }
    for (int j = 0; j < 4; ++j)
        if (!rest.coeff(j).is_zero()) fail(ErrorKind::Inconsistency, "class is not in the span of the flat basis");
    return coords;
}

Matrix monodromy_log() {
    auto s = asymptotic_flat_basis();
    CohomClass n = CohomClass::hyperplane() * cst(ConstScalar::two_pi_i(1) * ConstScalar(-1));
    Matrix out(4, 4);
    for (int j = 0; j < 4; ++j) {
        auto c = s_coordinates(n * s[static_cast<size_t>(j)]);
        for (int i = 0; i < 4; ++i) out(i, j) = rational_value(c[static_cast<size_t>(i)], "monodromy logarithm");
    }
    return out;
}

Matrix monodromy_log_by_shift() {
    auto s = asymptotic_flat_basis();
    Matrix t(4, 4);
    for (int j = 0; j < 4; ++j) {
        CohomClass shifted;
        for (int k = 0; k < 4; ++k) shifted.set_coeff(k, shift_u(s[static_cast<size_t>(j)].coeff(k), 1));
        auto c = s_coordinates(shifted);
        for (int i = 0; i < 4; ++i) t(i, j) = rational_value(c[static_cast<size_t>(i)], "monodromy of the flat basis");
    }
    return log_unipotent(t);
}

// ---- frames ----

FrameMatrix FrameMatrix::identity(int order2) {
    FrameMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = UPoly(order2);
    for (int i = 0; i < 4; ++i) out(i, i) = UPoly::constant(1, order2);
    return out;
}

FrameMatrix FrameMatrix::truncated(int order2) const {
    FrameMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = (*this)(i, j).truncated(order2);
    return out;
}

FrameMatrix operator*(const FrameMatrix& a, const FrameMatrix& b) {
    FrameMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            UPoly acc;
            for (int k = 0; k < 4; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc += a(i, k) * b(k, j);
            }
            out(i, j) = acc;
        }
    return out;
}

bool operator==(const FrameMatrix& a, const FrameMatrix& b) { return a.m == b.m; }

bool agree_to_order(const FrameMatrix& a, const FrameMatrix& b, int order2) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!agree_to_order(a(i, j), b(i, j), order2)) return false;
    return true;
}

FrameMatrix inverse_unitriangular(const FrameMatrix& a) {
    for (int i = 0; i < 4; ++i) {
        if (!(constant_value(a(i, i)) == std::optional<ConstScalar>(ConstScalar(1))))
            fail(ErrorKind::Precondition, "frame matrix is not unitriangular");
        for (int j = i + 1; j < 4; ++j)
            if (!a(i, j).is_zero()) fail(ErrorKind::Precondition, "frame matrix is not lower triangular");
    }
    FrameMatrix x;
    for (int p = 0; p < 4; ++p) {
        for (int j = 0; j < 4; ++j) x(p, j) = j == p ? cst(1) : UPoly();
        for (int k = 0; k < p; ++k) {
            if (a(p, k).is_zero()) continue;
            for (int j = 0; j <= k; ++j)
                if (!x(k, j).is_zero()) x(p, j) -= a(p, k) * x(k, j);
        }
    }
    return x;
}

CjkConstants tabulated_cjk() {
    return {ConstScalar(-1),
            ConstScalar(make_rational(5, 2)),
            ConstScalar(make_rational(-35, 12)),
            ConstScalar(0),
            ConstScalar(make_rational(-25, 12)),
            ConstScalar::i_zeta3_over_pi_cubed() * ConstScalar(-25)};
}

FrameMatrix tilde_s_frame(const UPoly& phi) {
    const int order2 = phi.order2();
    const ConstScalar ic = ConstScalar::two_pi_i(-3);
    UPoly d1 = delta(phi), d2 = delta(d1), u = u_var(order2);
    FrameMatrix f = FrameMatrix::identity(order2);
    f(1, 0) = -u;
    f(2, 0) = d1 * ic;
    f(2, 1) = -(d2 * ic);
    f(3, 0) = -((u * d1 - phi * ConstScalar(2)) * ic);
    f(3, 1) = (u * d2 - d1) * ic;
    f(3, 2) = -u;
    return f;
}

FrameMatrix s_from_tilde_s(const CjkConstants& c) {
    FrameMatrix f = FrameMatrix::identity();
    f(1, 0) = cst(-c.c10);
    f(2, 0) = cst(-c.c20);
    f(2, 1) = cst(-c.c21);
    f(3, 0) = cst(-c.c30);
    f(3, 1) = cst(-c.c31);
    f(3, 2) = cst(-c.c32);
    return f;
}

FrameMatrix e_frame(const UPoly& phi, const CjkConstants& c) {
    return inverse_unitriangular(s_from_tilde_s(c) * tilde_s_frame(phi)).truncated(phi.order2());
}

FrameMatrix connection_applied(const FrameMatrix& rows, const UPoly& yukawa) {
    FrameMatrix out;
    for (int p = 0; p < 4; ++p) {
        for (int k = 0; k < 4; ++k) out(p, k) = delta(rows(p, k));
        out(p, 0) += rows(p, 1);
        if (!rows(p, 2).is_zero()) out(p, 1) += rows(p, 2) * yukawa;
        out(p, 2) += rows(p, 3);
    }
    return out;
}

UPoly pairing_in_s(const std::array<UPoly, 4>& x, const std::array<UPoly, 4>& y, const Matrix& s_pairing) {
    UPoly out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rational& w = s_pairing(i, j);
            if (w == 0 || x[static_cast<size_t>(i)].is_zero() || y[static_cast<size_t>(j)].is_zero()) continue;
            out += x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] * ConstScalar(w);
        }
    return out;
}

std::array<CohomClass, 4> frame_classes(const FrameMatrix& rows) {
    auto s = asymptotic_flat_basis();
    std::array<CohomClass, 4> out;
    for (int p = 0; p < 4; ++p)
        for (int k = 0; k < 4; ++k)
            if (!rows(p, k).is_zero()) out[static_cast<size_t>(p)] = out[static_cast<size_t>(p)] + s[static_cast<size_t>(k)] * rows(p, k);
    return out;
}

// ---- c^{jk} from the Hodge filtration ----

namespace {

// Coefficients (of every u-power) of the H^j components with j + p > 3.
std::vector<ConstScalar> filtration_residual(const CjkConstants& c, int p) {
    UPoly phi = UPoly::u_power(3, ConstScalar::two_pi_i(3) * ConstScalar(make_rational(5, 6)));
    auto t = frame_classes(e_frame(phi, c));
    std::vector<ConstScalar> out;
    for (int j = 4 - p; j < 4; ++j) {
        const UPoly& v = t[static_cast<size_t>(p)].coeff(j);
        for (int d = 0; d <= UPoly::kMaxDegree; ++d) out.push_back(v.coeff(d).coeff(0));
    }
    return out;
}

// Solves the affine system r(x) = 0 where r is affine in the unknowns
// addressed by the slots; pivots must be invertible monomials.
void solve_stage(CjkConstants& c, std::vector<ConstScalar CjkConstants::*> slots, int p) {
    for (auto s : slots) c.*s = ConstScalar(0);
    auto r0 = filtration_residual(c, p);
    const size_t n = slots.size(), m = r0.size();
    std::vector<std::vector<ConstScalar>> a(m, std::vector<ConstScalar>(n + 1));
    for (size_t k = 0; k < n; ++k) {
        c.*slots[k] = ConstScalar(1);
        auto rk = filtration_residual(c, p);
        c.*slots[k] = ConstScalar(0);
        for (size_t i = 0; i < m; ++i) a[i][k] = rk[i] - r0[i];
    }
    for (size_t i = 0; i < m; ++i) a[i][n] = -r0[i];

    std::vector<size_t> pivot_row(n, m);
    size_t row = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = m;
        bool any = false;
        for (size_t i = row; i < m; ++i) {
            if (a[i][k].is_zero()) continue;
            any = true;
            if (a[i][k].is_monomial() && a[i][k].terms().begin()->first.zeta3 == 0) {
                piv = i;
                break;
            }
        }
        if (piv == m) {
            if (any) fail(ErrorKind::Unsupported, "no invertible pivot while solving for the basis-change constants");
            fail(ErrorKind::Ambiguity, "basis-change constants are underdetermined");
        }
        std::swap(a[row], a[piv]);
        ConstScalar inv = a[row][k].inverse();
        for (auto& x : a[row]) x *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][k].is_zero()) continue;
            ConstScalar f = a[i][k];
            for (size_t j = 0; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_row[k] = row++;
    }
    for (size_t i = row; i < m; ++i)
        if (!a[i][n].is_zero()) fail(ErrorKind::Inconsistency, "basis-change constants: inconsistent vanishing conditions");
    for (size_t k = 0; k < n; ++k) c.*slots[k] = a[pivot_row[k]][n];
    for (const auto& x : filtration_residual(c, p))
        if (!x.is_zero()) fail(ErrorKind::Inconsistency, "basis-change constants: residual after solving");
}

}  // namespace

CjkConstants derive_cjk() {
    CjkConstants c{};
    solve_stage(c, {&CjkConstants::c10}, 1);
    solve_stage(c, {&CjkConstants::c21, &CjkConstants::c20}, 2);
    solve_stage(c, {&CjkConstants::c32, &CjkConstants::c31, &CjkConstants::c30}, 3);
    return c;
}

// ---- integral periods ----

ConstMatrix period_matrix() {
    ConstMatrix b{};
    const auto t = [](int k) { return ConstScalar::two_pi_i(k); };
    b[0][0] = 1;
    b[1][1] = t(-1);
    b[2][0] = ConstScalar(make_rational(-25, 12));
    b[2][1] = t(-1) * ConstScalar(make_rational(5, 2));
    b[2][2] = t(-2) * ConstScalar(5);
    b[3][0] = ConstScalar(make_rational(25, 12)) - ConstScalar::i_zeta3_over_pi_cubed() * ConstScalar(25);
    b[3][1] = t(-1) * ConstScalar(make_rational(-65, 12));
    b[3][2] = t(-2) * ConstScalar(-5);
    b[3][3] = t(-3) * ConstScalar(5);
    return b;
}

std::array<HalfLogSeries, 4> integral_periods(const FrobeniusBasis& basis) {
    auto b = period_matrix();
    std::array<HalfLogSeries, 4> eta;
    for (size_t j = 0; j < 4; ++j) {
        eta[j] = HalfLogSeries(Var::z, basis.y[0].order2());
        for (size_t k = 0; k < 4; ++k)
            if (!b[j][k].is_zero()) eta[j] += basis.y[k] * b[j][k];
    }
    return eta;
}

namespace {

ConstMatrix mul(const ConstMatrix& a, const ConstMatrix& b) {
    ConstMatrix out{};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            for (size_t k = 0; k < 4; ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    return out;
}

ConstMatrix lower_inverse(const ConstMatrix& a) {
    ConstMatrix x{};
    for (size_t p = 0; p < 4; ++p) {
        ConstScalar d = a[p][p].inverse();
        for (size_t j = 0; j <= p; ++j) {
            ConstScalar acc = j == p ? ConstScalar(1) : ConstScalar(0);
            for (size_t k = j; k < p; ++k)
                if (!a[p][k].is_zero() && !x[k][j].is_zero()) acc -= a[p][k] * x[k][j];
            x[p][j] = d * acc;
        }
    }
    return x;
}

}  // namespace

Matrix period_monodromy() { return period_monodromy(period_matrix()); }

Matrix period_monodromy(const ConstMatrix& b) {
    // y_j(log z + 2 pi i) = sum_r (2 pi i)^r / r! y_{j-r}
    ConstMatrix u{};
    const Rational inv_fact[4] = {1, 1, make_rational(1, 2), make_rational(1, 6)};
    for (size_t j = 0; j < 4; ++j)
        for (size_t r = 0; r <= j; ++r) u[j][j - r] = ConstScalar::monomial(static_cast<int>(r), 0, inv_fact[r]);
    ConstMatrix a = mul(mul(b, u), lower_inverse(b));
    Matrix out(4, 4);
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            const auto& v = a[static_cast<size_t>(3 - p)][static_cast<size_t>(3 - q)];
            if (!v.is_rational()) fail(ErrorKind::Inconsistency, "period monodromy is not rational: " + v.to_string());
            out(p, q) = v.as_rational();
        }
    return out;
}

}  // namespace qmirror
