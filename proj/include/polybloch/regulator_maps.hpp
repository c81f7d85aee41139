#pragma once

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polybloch/quiver_engine.hpp"
#include "polybloch/realization_verify.hpp"
#include "polybloch/symbolic_relations.hpp"

namespace pb {

struct Degenerate : std::domain_error {
    using std::domain_error::domain_error;
};

using Label = std::vector<int>;  // sorted 1-based column triple

// sign * prod a_I^e
struct PluckerMonomial {
    int sign = 1;
    std::map<Label, int> exps;
    auto operator<=>(const PluckerMonomial&) const = default;
};
// a_{cols} for unsorted cols as a signed monomial
PluckerMonomial minor_monomial(std::vector<int> cols);
PluckerMonomial mono_mul(const PluckerMonomial& a, const PluckerMonomial& b, int eb = 1);
// apply column relabelling i -> perm[i-1]+1 (0-based image), re-sorting labels with signs
PluckerMonomial mono_permute(const PluckerMonomial& m, const std::vector<int>& perm);
cplx mono_eval(const PluckerMonomial& m, const CMatrix& c);
std::string format_label(const Label& l);
std::string format_monomial(const PluckerMonomial& m);
// "a124a135/a125a134" style, all positive signs
PluckerMonomial parse_monomial(const std::string& num, const std::string& den);

struct GenericConfig {
    CMatrix m;
    std::map<Label, cplx> minors;
    cplx y1 = 0, y2 = 0;  // k == 6 only
    bool generic = false;
    int k() const { return int(m.cols()); }
};
GenericConfig make_config(const CMatrix& m, double tol = 1e-12);

struct SignedFace {
    int sign = 1;
    std::vector<int> columns;  // kept original columns, 1-based
    CMatrix m;
};
std::vector<std::pair<int, std::vector<int>>> face_boundary_columns(const std::vector<int>& cols);
std::vector<SignedFace> face_boundary(const CMatrix& m);
// d(d(cols)) as a signed multiset after cancellation (empty when the simplicial identity holds)
std::map<std::vector<int>, long long> boundary_squared(int k);

cplx cross_ratio(cplx x1, cplx x2, cplx x3, cplx x4);
// r(v1 | v2, v3, v4, v5) for a 3x5 matrix
cplx cross_ratio_projected(const CMatrix& c5);

// formal outputs: integer coefficients, common rational prefactor
struct FormalOutput {
    int level = 0;
    Rational prefactor = 1;
    long long raw_terms = 0;                                    // before cancellation
    std::map<std::array<Label, 3>, long long> wedge;           // level 3: a ^ b ^ c (mod 2-torsion)
    std::map<std::pair<PluckerMonomial, Label>, long long> tensor;  // level 4: [x] (x) a
    std::map<PluckerMonomial, long long> points;               // level 5: [x]
};
FormalOutput g_map(int level);
// level 3 and 4 lifts as symbolic data over Pluecker labels
FormalOutput f3_labels();
struct LiftedTensorTerm {
    long long coef = 0;
    PluckerMonomial x;  // X-coordinate; pair (log x, log(1+x)) with signs (-1, 1)
    PluckerMonomial one_plus_x;
    Label tensor;
};
std::vector<LiftedTensorTerm> f4_terms();

// numeric values
double L3_of_g5(const CMatrix& m);
// f5 = eta~ realized at a 3x6 matrix with principal logs
Realization f5_realization(const CMatrix& m);
cplx lhat3_of_f5(const CMatrix& m);

struct MultisetComparison {
    std::size_t lhs_terms = 0, rhs_terms = 0;  // distinct values after merging
    std::size_t collisions = 0;                 // merges of distinct symbolic terms
    double max_coef_diff = 0;
    bool match = false;
};
using WeightedPoints = std::vector<std::pair<Rational, cplx>>;
// identifications applied before comparing:
//   inversion:   [z] = [1/z]                         (weight 3, modulo torsion)
//   anharmonic:  [z] = -[1/z] = [1/(1-z)]            (weight 2, modulo the constants c)
enum class Identify { none, inversion, anharmonic };
WeightedPoints identify(const WeightedPoints& pts, Identify how);
MultisetComparison compare_multisets(const WeightedPoints& a, const WeightedPoints& b, double tol = 1e-9);
WeightedPoints alt6_r_f5(const CMatrix& m, bool triple_ratio_terms_only = false);  // (1/720) Alt6 r(f5)
WeightedPoints g5_points(const CMatrix& m);

struct Alt6Comparison {
    MultisetComparison raw;              // no identifications
    MultisetComparison triple_part;      // terms of f5 with three-minor numerators, raw
    MultisetComparison modulo_inversion; // everything, [z] = [1/z]
    bool pass() const { return triple_part.match && modulo_inversion.match; }
};
Alt6Comparison compare_alt6(const CMatrix& m);

struct ConsistencyReport {
    double L2_R1 = 0, L2_R2 = 0;
    MultisetComparison x_vs_R1, y_vs_R2;          // modulo the anharmonic identifications
    MultisetComparison x_vs_R1_raw, y_vs_R2_raw;
    std::size_t ft_arguments = 0;  // raw arguments in the FT+ expansions of x and y
    double L2_R1i = 0, L2_R2i = 0;  // max over i
    bool pass = false;
};
double bloch_wigner_sum(const WeightedPoints& pts);
WeightedPoints R1_points(const CMatrix& m);
WeightedPoints R2_points(const CMatrix& m);
WeightedPoints x_points(const CMatrix& m);
WeightedPoints y_points(const CMatrix& m);
WeightedPoints R1i_points(int i, cplx a1, cplx a2, cplx a3);
WeightedPoints R2i_points(int i, cplx a1, cplx a2, cplx a3);
ConsistencyReport consistency_checks(const CMatrix& c6, std::array<cplx, 3> alpha = {2.0, 3.0, 5.0});

struct BoundaryCheck {
    double lhat_residual = 0;  // distance of the sum from (pi i)^3/2 Z
    long long multiple = 0;
    double L3_g5 = 0;
};
BoundaryCheck boundary_check(const CMatrix& c7);

struct RegulatorReport {
    bool dd_zero = false;
    double max_L2 = 0;
    bool multisets_match = false;
    double max_boundary_residual = 0;
    double max_L3_boundary = 0;
    bool pass = false;
};
RegulatorReport regulator_suite(std::uint64_t seed, int configs6 = 10, int configs7 = 3);

}  // namespace pb
