#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polybloch/exact_core.hpp"
#include "polybloch/quiver_engine.hpp"
#include "polybloch/symbolic_relations.hpp"

namespace pb {

// [p] = sign * [rep] in the quotient by (u,v) + (-1)^n (-u, v-u)
struct OrientedRep {
    SymbolicLogPair rep;
    int sign = 1;
};
OrientedRep xhat_canonical(const SymbolicLogPair& p, int n);

struct XhatBasis {
    int n = 0;
    GeneratorRegistry names;  // one generator per A-coordinate id
    std::vector<SymbolicLogPair> reps;
    std::map<SymbolicLogPair, std::size_t> index;  // rep -> column
    std::size_t dim() const { return reps.size(); }
    // column and orientation of any pair, if its class is in the basis
    std::optional<std::pair<std::size_t, int>> locate(const SymbolicLogPair& p) const;
};

XhatBasis xhat_basis(const MutationClass& mc, const GeneratorRegistry& names, int n);
XhatBasis xhat_basis(const GrassmannianClass& gc, int n);
// plain quivers: A-coordinates are named A1, A2, ... in order of discovery
XhatBasis xhat_basis(const Quiver& q0, int n, std::size_t cap = 100000);

// columns of the basis met by the triples of the listed seeds whose targets stay in the list
std::vector<std::size_t> basis_columns(const MutationClass& mc, const XhatBasis& b, const std::vector<std::size_t>& seeds);

// integer kernel of w_n restricted to the given columns, in full basis coordinates, support-reduced
std::vector<IntVec> kernel_vectors(const XhatBasis& b, const std::vector<std::size_t>& columns);
std::vector<IntVec> kernel_vectors(const XhatBasis& b);

RelationSum relation_from_vector(const XhatBasis& b, const IntVec& v);
std::optional<IntVec> to_quotient(const XhatBasis& b, const RelationSum& alpha);

std::vector<RelationSum> discover_kernel(const XhatBasis& b);

// pairwise size reduction towards small supports
void reduce_supports(std::vector<IntVec>& basis);
std::size_t support(const IntVec& v);
bool equal_up_to_sign(const IntVec& a, const IntVec& b);

// five terms that, after choosing orientations, read sum [(u_i, u_{i-1} + u_{i+1})] cyclically, up to sign
bool is_nonalt_five_instance(const RelationSum& alpha, int n = 2);

struct SubclassKernel {
    std::vector<std::size_t> seeds;  // sorted
    std::vector<IntVec> kernel;
};
// distinct sub-classes spanned by `size` mutable vertices with exactly `class_size` seeds
std::vector<SubclassKernel> subclass_kernels(const MutationClass& mc, const XhatBasis& b, std::size_t size,
                                             std::size_t class_size);

struct SpanReport {
    std::size_t kernel_dim = 0;
    std::size_t subclasses = 0;
    std::size_t distinct_relations = 0;  // up to sign
    std::size_t relation_terms_min = 0, relation_terms_max = 0;
    bool contained = false;  // every sub-relation lies in the kernel
    bool spans = false;      // they span the kernel over Q
    bool lattice = false;    // the kernel basis lies in their Z-span
};
SpanReport subclass_span_report(const MutationClass& mc, const XhatBasis& b, std::size_t size, std::size_t class_size,
                                bool check_lattice);

}  // namespace pb
