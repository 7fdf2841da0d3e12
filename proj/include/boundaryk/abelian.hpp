#pragma once

// Exact arithmetic for finitely generated abelian groups.
//
// Every group is kept in canonical form: a free rank plus an ascending chain
// of invariant factors d1 | d2 | ... with every di >= 2. Two groups are
// isomorphic exactly when their canonical forms are equal.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boundaryk {

using Integer = boost::multiprecision::cpp_int;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Integer>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_diagonal() const;

    // Fraction-free (Bareiss) determinant; square matrices only.
    Integer determinant() const;

    // Horizontal concatenation [*this | rhs]; row counts must agree.
    IntMatrix hconcat(const IntMatrix& rhs) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    IntMatrix left;      // U, unimodular
    IntMatrix diagonal;  // D = U * M * V
    IntMatrix right;     // V, unimodular
};

// Smith normal form with transforms: U*M*V = D, D diagonal, d1 | d2 | ...,
// all di >= 0 (zeros trail the nonzero entries).
SmithForm smith_normal_form(const IntMatrix& m);

class FgAbGroup {
public:
    // The trivial group.
    FgAbGroup() = default;

    // Builds Z^rank + Z/o1 + Z/o2 + ... for arbitrary cyclic orders; entries
    // equal to 1 are dropped, 0 adds a free summand, the rest are normalized
    // into an invariant factor chain.
    FgAbGroup(std::size_t rank, std::vector<Integer> cyclic_orders);

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
    // Z/order; order 0 gives Z, order 1 the trivial group.
    static FgAbGroup cyclic(const Integer& order);

    std::size_t rank() const { return rank_; }
    const std::vector<Integer>& invariant_factors() const { return factors_; }

    bool is_trivial() const { return rank_ == 0 && factors_.empty(); }
    bool is_free() const { return factors_.empty(); }
    bool is_finite() const { return rank_ == 0; }

    Integer torsion_order() const;
    std::size_t torsion_generator_count() const { return factors_.size(); }
    FgAbGroup torsion_part() const { return FgAbGroup(0, factors_); }
    FgAbGroup free_part() const { return free(rank_); }

    // Number of canonical generators: one per free summand, one per factor.
    std::size_t generator_count() const { return rank_ + factors_.size(); }

    // Order of the i-th canonical generator (0 for a free generator).
    Integer generator_order(std::size_t i) const;

    // `Z^r + Z/d1 + ...`, `0` for the trivial group.
    std::string to_string() const;
    static FgAbGroup parse(std::string_view text);

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
    friend std::strong_ordering operator<=>(const FgAbGroup& a, const FgAbGroup& b);

private:
    std::size_t rank_ = 0;
    std::vector<Integer> factors_;
};

class GroupParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The extension oracle refuses rather than guess when inputs are too large.
class OracleRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Z^rows / image(M) for M : Z^cols -> Z^rows.
FgAbGroup cokernel(const IntMatrix& m);

// Presentation matrix of a canonical group on its canonical generators:
// one column per invariant factor.
IntMatrix relation_matrix(const FgAbGroup& g);

// A homomorphism between canonical groups, recorded by the images of the
// source's canonical generators (target.generator_count() x
// source.generator_count()). The caller guarantees the map is well defined.
struct GroupHom {
    FgAbGroup source;
    FgAbGroup target;
    IntMatrix matrix;
};

FgAbGroup kernel(const GroupHom& f);
FgAbGroup cokernel(const GroupHom& f);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_sum(const std::vector<FgAbGroup>& groups);

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b);
inline Integer torsion_order(const FgAbGroup& a) { return a.torsion_order(); }
inline std::size_t torsion_generator_count(const FgAbGroup& a) { return a.torsion_generator_count(); }

FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup ext(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);

struct ExtensionCap {
    // Refuse when |A_t| * |B_t| exceeds this.
    Integer torsion_product = 10000;
    // Refuse when the number of extension cocycles to try exceeds this.
    Integer search = 1000000;
};

// All G, up to isomorphism, admitting 0 -> A -> G -> B -> 0. Sorted,
// duplicate-free. Throws OracleRefused when a cap is exceeded.
std::vector<FgAbGroup> enumerate_extensions(const FgAbGroup& a, const FgAbGroup& b,
                                            const ExtensionCap& cap = {});

}  // namespace boundaryk
