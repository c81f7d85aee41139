#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polybloch/lifted_polylog.hpp"
#include "polybloch/quiver_engine.hpp"
#include "polybloch/symbolic_relations.hpp"

namespace pb {

struct MismatchedRegistry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ComponentMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

using SignDetermination = std::vector<std::pair<int, int>>;

// point p and lift p~, keyed by generator name
struct Realization {
    SignDetermination signs;
    std::map<std::string, cplx> values, logs;
};

SignDetermination signs_of(const RelationSum& alpha);

struct RealizationCheck {
    bool ok = false;
    double lift_residual = 0;            // max |exp(log) - value|, relative
    std::vector<double> term_residuals;  // |e1 p(u) + e2 p(v) - 1|
};
RealizationCheck check_realization(const RelationSum& alpha, const Realization& r, double tol = 1e-9);

// principal logs of the given values
Realization realize(const RelationSum& alpha, const std::map<std::string, cplx>& values);

struct Evaluation {
    cplx value = 0;
    std::vector<ExtendedPoint> points;
};
Evaluation evaluate_relation(int n, const RelationSum& alpha, const Realization& r);

// negate a_j, add pi*i to its log, adjust sign pairs by the parity of k_j, l_j
Realization sign_flip(const Realization& r, const RelationSum& alpha, const std::string& gen);

// max over generators of the distance of L(T_j r) - L(r) from (pi i)^n/(n-1)! Z
double flip_invariance_check(int n, const RelationSum& alpha, const Realization& r);

// random admissible realizations of the built-in relations
Realization random_realization(NamedRelation name, const RelationSum& alpha, std::mt19937_64& rng);
// a Gr(3,6)/Gr(p,q) relation realized at a matrix, principal logs
Realization grassmannian_realization(const GrassmannianClass& gc, const RelationSum& alpha, const CMatrix& m);
CMatrix random_matrix(int rows, int cols, std::mt19937_64& rng);

// right-hand side of the shift formula for L^_n(u + k pi i, v + l pi i) - L^_n(u, v)
cplx lhat_shift_rhs(int n, cplx u, cplx v, int sign1, int sign2, long k, long l);

struct ScenarioReport {
    std::string name;
    cplx expected = 0;
    cplx modulus = 0;
    int samples = 0;
    double max_residual = 0;
    std::vector<long long> multiples;
    bool pass = false;
    std::string note;
};
std::vector<std::string> scenario_names();
ScenarioReport run_scenario(const std::string& name, std::uint64_t seed = 0, int samples = 10);

}  // namespace pb
