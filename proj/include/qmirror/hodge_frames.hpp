#pragma once

#include "qmirror/linalg.hpp"
#include "qmirror/picard_fuchs.hpp"
#include "qmirror/upoly.hpp"

#include <array>
#include <optional>

namespace qmirror {

/// c_0 + c_1 H + c_2 H^2 + c_3 H^3 in Q[H]/(H^4) with u-polynomial coefficients;
/// the quintic has int_V H^3 = 5.
class CohomClass {
public:
    CohomClass() = default;
    static CohomClass scalar(const UPoly& c);
    static CohomClass hyperplane();

    const UPoly& coeff(int j) const { return c_.at(static_cast<size_t>(j)); }
    void set_coeff(int j, const UPoly& v) { c_.at(static_cast<size_t>(j)) = v; }

    /// (2 pi i)^{deg/2}: multiplies the H^p component by (2 pi i)^p.
    CohomClass twisted() const;
    UPoly integrate() const;

    CohomClass operator-() const;
    friend CohomClass operator+(const CohomClass& a, const CohomClass& b);
    friend CohomClass operator-(const CohomClass& a, const CohomClass& b);
    friend CohomClass operator*(const CohomClass& a, const CohomClass& b);
    friend CohomClass operator*(const CohomClass& a, const UPoly& s);
    friend bool operator==(const CohomClass& a, const CohomClass& b);

    std::string to_string() const;

private:
    std::array<UPoly, 4> c_;
};

/// exp(x) for x without H^0 component.
CohomClass class_exp(const CohomClass& x);

enum class Sheaf { O_V, O_H, O_C, O_pt };

CohomClass chern_character(Sheaf e);
/// ch(T_V) = 5 e^H - 1 - e^{5H} from the tangent sequence.
CohomClass tangent_chern_character();
/// exp(zeta(2) ch_2 - 2 zeta(3) ch_3).
CohomClass gamma_class();
/// (2 pi i)^{-3} e^{-2 pi i u H} Gamma (2 pi i)^{deg/2} ch(E).
CohomClass asymptotic_class(Sheaf e);
/// s^0..s^3 = s(O_pt), s(O_C), s(O_H), s(O_V).
std::array<CohomClass, 4> asymptotic_flat_basis();

/// S(a, b) = sum_p (-1)^p (2 pi i)^3 int a_p b_{3-p}.
UPoly pairing(const CohomClass& a, const CohomClass& b);

/// (S(s^p, s^q))_{p,q}; throws Inconsistency when u-dependence survives.
Matrix pairing_matrix();

/// Coordinates of a class in the basis s^0..s^3 (triangular solve).
std::array<UPoly, 4> s_coordinates(const CohomClass& x);

/// Column j holds the s-coordinates of N s^j with N = cup product by -2 pi i H.
Matrix monodromy_log();
/// log of the substitution u -> u + 1 acting on the classes s^p.
Matrix monodromy_log_by_shift();

/// 4x4 matrix of u-polynomials. Row p holds the coordinates of the p-th
/// vector of one frame in another frame.
struct FrameMatrix {
    std::array<std::array<UPoly, 4>, 4> m;

    static FrameMatrix identity(int order2 = HalfLogSeries::kExact);
    UPoly& operator()(int i, int j) { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const UPoly& operator()(int i, int j) const { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    FrameMatrix truncated(int order2) const;
    friend FrameMatrix operator*(const FrameMatrix& a, const FrameMatrix& b);
    friend bool operator==(const FrameMatrix& a, const FrameMatrix& b);
};

bool agree_to_order(const FrameMatrix& a, const FrameMatrix& b, int order2 = HalfLogSeries::kExact);
/// Inverse of a lower unitriangular frame matrix by forward substitution.
FrameMatrix inverse_unitriangular(const FrameMatrix& a);

/// c^{10}, c^{21}, c^{20}, c^{32}, c^{31}, c^{30} with
/// s^p = s~^p - sum_{k<p} c^{pk} s~^k.
struct CjkConstants {
    ConstScalar c10, c21, c20, c32, c31, c30;
    friend bool operator==(const CjkConstants&, const CjkConstants&) = default;
};

/// Tabulated values -1, 5/2, -35/12, 0, -25/12, -25 i zeta(3)/pi^3.
CjkConstants tabulated_cjk();
/// Solves for the constants from F^p-membership of T^p (H^j terms vanish for j + p > 3).
CjkConstants derive_cjk();

/// Rows: s~^p in the e-frame, built from the potential Phi.
FrameMatrix tilde_s_frame(const UPoly& phi);
/// Rows: s^p in the s~-frame.
FrameMatrix s_from_tilde_s(const CjkConstants& c);
/// Rows: e^p in the s-frame, (s_from_tilde_s * tilde_s_frame)^{-1}.
FrameMatrix e_frame(const UPoly& phi, const CjkConstants& c);

/// Row p: nabla_delta of the p-th vector of a frame given in e-coordinates,
/// with nabla e^0 = 0, nabla e^1 = e^0, nabla e^2 = Y e^1, nabla e^3 = e^2.
FrameMatrix connection_applied(const FrameMatrix& rows_in_e, const UPoly& yukawa);

/// S(x, y) for x, y given in s-coordinates.
UPoly pairing_in_s(const std::array<UPoly, 4>& x, const std::array<UPoly, 4>& y, const Matrix& s_pairing);

/// The classes T^p = sum_k E_{pk} s^k of a frame E given in s-coordinates.
std::array<CohomClass, 4> frame_classes(const FrameMatrix& rows_in_s);

/// eta_0..eta_3 as z-series (with the rational/zeta constants attached).
std::array<HalfLogSeries, 4> integral_periods(const FrobeniusBasis& basis);

/// Constant 4x4 matrix B with eta_j = sum_k B_{jk} y_k.
using ConstMatrix = std::array<std::array<ConstScalar, 4>, 4>;
ConstMatrix period_matrix();
/// Continuation of the periods P_p = eta_{3-p} under log z -> log z + 2 pi i:
/// P_p -> sum_q A_{pq} P_q. Throws Inconsistency unless A is rational.
Matrix period_monodromy();
Matrix period_monodromy(const ConstMatrix& b);

}  // namespace qmirror
