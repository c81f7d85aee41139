#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polybloch/exact_core.hpp"
#include "polybloch/symbolic_relations.hpp"

namespace pb {

struct FrozenVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Quiver {
    std::size_t m = 0;
    std::vector<bool> frozen;
    std::vector<std::vector<int>> eps;  // eps[i][j] = #arrows i->j minus #arrows j->i
    std::vector<std::string> names;

    explicit Quiver(std::size_t m_ = 0) : m(m_), frozen(m_, false), eps(m_, std::vector<int>(m_, 0)), names(m_) {
        for (std::size_t i = 0; i < m_; ++i) names[i] = "x" + std::to_string(i + 1);
    }
    void add_arrow(std::size_t i, std::size_t j, int mult = 1) {
        eps[i][j] += mult;
        eps[j][i] -= mult;
    }
    std::vector<std::size_t> mutable_vertices() const;
    bool operator==(const Quiver& o) const { return frozen == o.frozen && eps == o.eps; }
};

Quiver mutate_quiver(const Quiver& q, std::size_t k);

// bijection id <-> canonical Laurent polynomial in the initial variables
class ACoordRegistry {
public:
    explicit ACoordRegistry(std::size_t nvars = 0) : nvars_(nvars) {}
    std::size_t intern(const LaurentPoly& p);
    std::optional<std::size_t> find(const LaurentPoly& p) const;
    const LaurentPoly& poly(std::size_t id) const { return polys_.at(id); }
    std::size_t size() const { return polys_.size(); }
    std::size_t nvars() const { return nvars_; }

private:
    std::size_t nvars_;
    std::vector<LaurentPoly> polys_;
    std::map<LaurentPoly, std::size_t> ids_;
};

struct Seed {
    Quiver quiver;
    std::vector<std::size_t> coords;  // A-coordinate id per vertex
};

Seed initial_seed(const Quiver& q0, ACoordRegistry& reg);
// exchange polynomial for a'_k, divided exactly by a_k
LaurentPoly exchange(const Seed& s, std::size_t k, const ACoordRegistry& reg);
Seed mutate_seed(const Seed& s, std::size_t k, ACoordRegistry& reg);
// mutable vertices reordered by coordinate id; frozen vertices keep their places
Seed canonical_seed(const Seed& s);

struct MutationTriple {
    std::size_t seed = 0;       // index into MutationClass::seeds
    std::size_t k = 0;          // vertex in that (canonical) seed
    std::size_t new_coord = 0;  // id of a'_k
    std::size_t target = 0;     // index of the mutated seed
};

struct MutationClass {
    Quiver q0;
    ACoordRegistry reg;
    std::vector<Seed> seeds;
    std::vector<MutationTriple> triples;
    std::size_t triple_index(std::size_t seed, std::size_t k) const;
};

// breadth-first closure; throws CapExceeded when more than cap seeds appear
MutationClass mutation_class(const Quiver& q0, std::size_t cap = 100000);

// closure from one seed of a class using only the listed vertices (positions in that seed);
// returns seed indices of the class
std::vector<std::size_t> sub_mutation_class(const MutationClass& mc, std::size_t seed,
                                            const std::vector<std::size_t>& vertices);

using XCoordinate = LinComb;  // exponents over A-coordinate ids

XCoordinate x_coordinate(const MutationClass& mc, const MutationTriple& t);
SymbolicLogPair x_log_pair(const MutationClass& mc, const MutationTriple& t);
std::vector<XCoordinate> distinct_x_coordinates(const MutationClass& mc);
// X -> X^(X); throws if two triples with the same X give different pairs
std::map<XCoordinate, SymbolicLogPair> xhat_by_x(const MutationClass& mc);

// Grassmannian Gr(p, p+q) and its Pluecker data
struct GrassmannianQuiver {
    int p = 0, q = 0;
    Quiver quiver;
    std::vector<std::vector<int>> labels;  // 1-based sorted index set per vertex
};
GrassmannianQuiver grassmannian_quiver(int p, int q);

struct GrassmannianClass {
    GrassmannianQuiver gq;
    MutationClass mc;
    GeneratorRegistry names;  // A-coordinate id -> "a136", "y1", "c3", ...
};
GrassmannianClass grassmannian_class(int p, int q, std::size_t cap = 100000);

using CMatrix = Eigen::MatrixXcd;

std::complex<double> plucker_eval(const CMatrix& m, const std::vector<int>& I);  // 1-based columns
std::complex<double> y_eval(const CMatrix& m, int which);                       // y1 / y2 for 3x6
// value of every A-coordinate at a p x n matrix
std::vector<std::complex<double>> a_coordinate_values(const GrassmannianClass& gc, const CMatrix& m);

// action of a column permutation (0-based image) on A-coordinate ids, up to sign
std::vector<std::size_t> coordinate_permutation(const GrassmannianClass& gc, const std::vector<int>& perm);
XCoordinate permute_x(const XCoordinate& x, const std::vector<std::size_t>& coord_perm);

// orbit sizes of inversion classes {X, 1/X} under the given column permutation group
std::vector<std::size_t> x_orbit_sizes(const GrassmannianClass& gc, const std::vector<std::vector<int>>& gens);

// sigma = (1,...,n), tau = reflection i <-> n+1-i, both 0-based images
std::vector<int> cyclic_perm(int n);
std::vector<int> reflection_perm(int n);

// column permutations acting on X-coordinates of a Grassmannian class (the class must outlive the result)
std::function<XCoordinate(const std::vector<int>&, const XCoordinate&)> gr36_column_action(const GrassmannianClass& gc);
// the 20-term element eta~ on Gr(3,6) and the 40-term sum sigma(eta~) + eta~, signs (-1,1)
RelationSum gr36_eta_tilde(const GrassmannianClass& gc);
RelationSum gr36_r40(const GrassmannianClass& gc);

}  // namespace pb
