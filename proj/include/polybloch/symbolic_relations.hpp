#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polybloch/exact_core.hpp"
#include "polybloch/lifted_polylog.hpp"

namespace pb {

class GeneratorRegistry {
public:
    GeneratorRegistry() = default;
    explicit GeneratorRegistry(std::vector<std::string> names);

    std::size_t add(const std::string& name);  // idempotent
    std::size_t id(const std::string& name) const;
    std::optional<std::size_t> find(const std::string& name) const;
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    bool operator==(const GeneratorRegistry& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

// sparse integer combination of generators; zero entries never stored
using LinComb = std::map<std::size_t, long long>;

LinComb lc_add(const LinComb& a, const LinComb& b, long long sb = 1);
LinComb lc_scale(const LinComb& a, long long s);
long long lc_coeff(const LinComb& a, std::size_t j);
LinComb lc_gen(std::size_t j, long long c = 1);

struct SymbolicLogPair {
    LinComb u, v;
    auto operator<=>(const SymbolicLogPair&) const = default;
};

// (u,v) -> (-u, v-u)
SymbolicLogPair tau_pair(const SymbolicLogPair& p);

struct RelationTerm {
    long long coef = 0;
    SymbolicLogPair pair;
    int sign1 = 0, sign2 = 0;  // 0 = no sign pair attached
};

struct RelationSum {
    GeneratorRegistry reg;
    std::vector<RelationTerm> terms;

    void add(long long coef, SymbolicLogPair p, int s1 = 0, int s2 = 0);
    // merge equal (pair, signs), drop zeros, sort
    void canonicalize();
    std::size_t size() const { return terms.size(); }
};

// small builder: "a1+a3-2a4" style strings over a registry
LinComb parse_lincomb(GeneratorRegistry& reg, const std::string& s);
std::string format_lincomb(const GeneratorRegistry& reg, const LinComb& c);

// element of Omega^1_{n-1}: key = sorted monomial indices (length n-1) followed by the differential index
struct OneForm {
    std::map<std::vector<std::uint32_t>, Int> terms;
    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<std::uint32_t>& key, const Int& c);
    bool operator==(const OneForm& o) const { return terms == o.terms; }
};

OneForm w_pair(int n, const SymbolicLogPair& p, long long coef = 1);
OneForm w_form(int n, const RelationSum& alpha);

// sum_i r_i w_{n-l}(u_i,v_i) (x) u_i^l, keyed by w-key followed by the sorted l-multiset
OneForm w_tensor_sym(int n, int l, const RelationSum& alpha);

RelationSum level_projection(const RelationSum& alpha, const std::vector<std::size_t>& indices);

struct DiffRelReport {
    bool direct = false;
    bool projections = false;
    bool one_lower = false;
    bool symk = false;
    bool agree() const { return direct == projections && direct == one_lower && direct == symk; }
};
bool is_differential_relation(int n, const RelationSum& alpha);
DiffRelReport differential_relation_report(int n, const RelationSum& alpha);

// u ^ v in the exterior square taken as S (x) S / <x(x)y + y(x)x>: x^x survives as 2-torsion,
// so besides the antisymmetric part we keep the parity of each diagonal coefficient
struct WedgeElem {
    std::map<std::pair<std::size_t, std::size_t>, long long> off;  // i<j, coefficient of a_i ^ a_j
    std::map<std::size_t, int> diag;                               // coefficient of a_i ^ a_i mod 2 (only 1s)
    bool is_zero() const { return off.empty() && diag.empty(); }
    bool twice_is_zero() const { return off.empty(); }
};
WedgeElem nu(const RelationSum& alpha);

struct Ambiguity {
    std::vector<Int> entries;  // indexed by generator
    bool proper = false;
    std::optional<WedgeElem> wedge;  // n == 2 only
};
Ambiguity ambiguity_vector(int n, const RelationSum& alpha);

enum class NamedRelation {
    lifted_ft,
    inverted_lifted_ft,
    nonalt_lifted_ft,
    two_term,
    three_term,
    nonalt_five,
    bad_l4,
    goncharov22,
    r40
};
std::vector<NamedRelation> all_named();
std::string to_string(NamedRelation r);
std::optional<NamedRelation> named_from_string(const std::string& s);

struct ExpectedValue {
    bool has_constant = false;
    cplx value = 0;
    cplx modulus = 0;
};

struct NamedBuild {
    NamedRelation name;
    int n = 0;
    RelationSum alpha;  // terms carry their sign pairs
    ExpectedValue expected;
};
// weight only matters for two_term
NamedBuild build_named(NamedRelation name, int weight = 2);

// signed permutations acting on labels 0..k-1
struct SignedPerm {
    std::vector<int> image;
    int sign = 1;
};
int perm_sign(const std::vector<int>& image);
std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b);  // a after b
// closure of the generators under composition, sorted, each with its sign
std::vector<SignedPerm> generate_group(std::size_t k, const std::vector<std::vector<int>>& gens);

template <class T>
using FormalSum = std::map<T, long long>;

template <class T, class Act>
FormalSum<T> alt_apply(const std::vector<SignedPerm>& group, const FormalSum<T>& x, Act&& act) {
    FormalSum<T> out;
    for (auto& [key, c] : x)
        for (auto& g : group) {
            auto& slot = out[act(g.image, key)];
            slot += g.sign * c;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace pb
