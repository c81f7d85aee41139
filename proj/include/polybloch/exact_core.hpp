#pragma once

#include <cstdint>

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pb {

using Int = mpz_class;
using Rational = mpq_class;

struct NonDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// standard convention, B_1 = -1/2
Rational bernoulli(unsigned r);
Int factorial(unsigned n);
Int binomial(long n, long k);
Rational rat_pow(const Rational& x, unsigned e);
Rational rat_gcd(const std::vector<Rational>& xs);  // generator of the Z-module spanned by xs (>= 0)

// Multivariate Laurent polynomial with integer coefficients.
// Terms sorted by exponent vector (lexicographic), zero coefficients never stored.
class LaurentPoly {
public:
    using Exp = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Int& c);
    static LaurentPoly variable(std::size_t nvars, std::size_t i, int power = 1);
    static LaurentPoly monomial(const Exp& e, const Int& c = 1);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exp, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exp& e, const Int& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly pow(unsigned e) const;
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

    // per-variable exponent range [lo, hi]; requires nonzero
    std::pair<Exp, Exp> degree_box() const;

    template <class T, class PowFn>
    T evaluate(PowFn&& power_of_var) const {
        T s{};
        for (auto& [e, c] : terms_) {
            T t = T(c.get_d());
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t *= power_of_var(i, e[i]);
            s += t;
        }
        return s;
    }
    // modular evaluation, used as a fast hash
    unsigned long long eval_mod(const std::vector<unsigned long long>& pt, unsigned long long prime) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exp, Int> terms_;
};

LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

struct RatMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> data;
    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using IntVec = std::vector<Int>;

// Row echelon form built one row at a time (fraction-free, rows kept primitive).
// Only rank-many rows are stored so very tall sparse matrices can be streamed.
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}
    // returns true if the row increased the rank
    bool add_row(IntVec row);
    bool add_sparse_row(const std::vector<std::pair<std::size_t, Int>>& entries);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    // basis of the right nullspace: coprime integer vectors, positive leading entry,
    // one per free column in increasing column order
    std::vector<IntVec> nullspace() const;

private:
    std::size_t cols_;
    std::vector<IntVec> rows_;         // sorted by pivot
    std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

std::vector<IntVec> rational_nullspace(const RatMatrix& m);
std::size_t rational_rank(const std::vector<IntVec>& rows, std::size_t cols);

void make_primitive(IntVec& v);  // divide by content, first nonzero positive

// Right nullspace of a tall sparse integer matrix. Same basis convention as IncrementalEchelon.
// Works modulo word-size primes on random row combinations, lifts by CRT and rational
// reconstruction, and keeps an answer only after checking every row exactly.
using SparseIntRow = std::vector<std::pair<std::size_t, Int>>;
std::vector<IntVec> sparse_nullspace(const std::vector<SparseIntRow>& rows, std::size_t cols,
                                     std::uint64_t seed = 0);

// Z-lattice in Z^cols kept in Hermite normal form (row style).
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t cols) : cols_(cols) {}
    void insert(IntVec v);
    bool contains(IntVec v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t cols_;
    std::vector<IntVec> rows_;  // rows_[i] has pivot piv_[i], positive pivot entry
    std::vector<std::size_t> piv_;
};

}  // namespace pb
