#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

#include "polybloch/exact_core.hpp"

namespace pb {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kZeta3 = 1.20205690315959428539973816151;
inline constexpr double kLog2 = 0.693147180559945309417232121458;
inline const cplx kI{0.0, 1.0};

struct BranchPoint : std::domain_error {
    using std::domain_error::domain_error;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// which side of the real axis a real argument is approached from
enum class Side : int { None = 0, Above = 1, Below = -1 };

inline Side flip(Side s) { return static_cast<Side>(-static_cast<int>(s)); }

// principal Log; real negative input needs a side
cplx log_sided(cplx z, Side side);

double zeta(int n);  // n >= 2, cached
cplx li_principal(int n, cplx z, Side side = Side::None);
double zagier_L(int n, cplx z);  // infinite z gives 0

// <z; p, q>_{s1 s2}
struct ExtendedPoint {
    int sign1 = 1, sign2 = 1;
    cplx z;
    Side side = Side::None;  // only meaningful for real z
    long p = 0, q = 0;

    std::pair<cplx, cplx> to_uv() const;
    static ExtendedPoint from_uv(cplx u, cplx v, int sign1, int sign2, double tol = 1e-9);
    bool needs_side() const;
};

cplx lhat_raw(int n, const ExtendedPoint& pt);  // without the (-,-) correction
cplx lhat(int n, const ExtendedPoint& pt);
cplx lhat_uv(int n, cplx u, cplx v, int sign1, int sign2);

enum class Interval { NegReal, Unit, AboveOne };  // (-inf,0), (0,1), (1,inf)

Rational delta_fn(const Rational& p, int n);  // (-1)^n((p-1)^{n-1} - p^{n-1})
Rational cut_jump(int n, Interval iv, int sign1, int sign2, long p, long q);
Rational kappa(int n);

struct LatticeModulus {
    cplx base;
};

cplx lattice_unit(int n);       // (2 pi i)^n/(n-1)!
cplx half_lattice_unit(int n);  // (pi i)^n/(n-1)!
LatticeModulus period_modulus(int n, int sign1, int sign2);

struct Congruence {
    bool ok = false;
    long long k = 0;
    double residual = 0;
};
Congruence congruent_mod(cplx x, cplx y, const LatticeModulus& m, double tol);

struct ComparisonTable {
    int n = 0;
    std::map<std::pair<int, int>, Rational> c, d;
};
Rational comparison_ci(int i);
ComparisonTable comparison_table(int n);
double comparison_residual(int n, const ExtendedPoint& pt);

// Neumann's lifted dilogarithm in pi*i conventions
cplx neumann_R(cplx z, long p, long q);

}  // namespace pb
