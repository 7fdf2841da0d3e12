#include "boundaryk/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace boundaryk {

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a);
    Integer y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("hconcat: row counts differ");
    IntMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Row/column operations applied to D and mirrored into U (rows) or V (cols).
class SmithReducer {
public:
    explicit SmithReducer(const IntMatrix& m)
        : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

    SmithForm run() {
        const std::size_t limit = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            if (!reduce_pivot(t)) break;
            if (d_(t, t) < 0) negate_row(t);
        }
        return {std::move(u_), std::move(d_), std::move(v_)};
    }

private:
    // Returns false when the trailing submatrix is zero.
    bool reduce_pivot(std::size_t t) {
        for (;;) {
            if (!move_smallest_to(t)) return false;
            bool clear = true;
            for (std::size_t i = t + 1; i < d_.rows(); ++i) {
                if (d_(i, t) == 0) continue;
                add_row(i, t, -(d_(i, t) / d_(t, t)));
                if (d_(i, t) != 0) clear = false;
            }
            for (std::size_t j = t + 1; j < d_.cols(); ++j) {
                if (d_(t, j) == 0) continue;
                add_col(j, t, -(d_(t, j) / d_(t, t)));
                if (d_(t, j) != 0) clear = false;
            }
            if (!clear) continue;

            // Pivot must divide the whole trailing block for the chain d_t | d_t+1.
            bool divides = true;
            for (std::size_t i = t + 1; i < d_.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d_.cols(); ++j)
                    if (d_(i, j) % d_(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) return true;
        }
    }

    bool move_smallest_to(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < d_.rows(); ++i)
            for (std::size_t j = t; j < d_.cols(); ++j) {
                if (d_(i, j) == 0) continue;
                Integer a = abs(d_(i, j));
                if (!found || a < best) {
                    best = std::move(a);
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
        for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
        for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
    }

    // row[target] += k * row[source]
    void add_row(std::size_t target, std::size_t source, const Integer& k) {
        for (std::size_t j = 0; j < d_.cols(); ++j) d_(target, j) += k * d_(source, j);
        for (std::size_t j = 0; j < u_.cols(); ++j) u_(target, j) += k * u_(source, j);
    }

    // col[target] += k * col[source]
    void add_col(std::size_t target, std::size_t source, const Integer& k) {
        for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, target) += k * d_(i, source);
        for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, target) += k * v_(i, source);
    }

    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
        for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
    }

    IntMatrix d_;
    IntMatrix u_;
    IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

// ---------------------------------------------------------------------------
// FgAbGroup

FgAbGroup::FgAbGroup(std::size_t rank, std::vector<Integer> cyclic_orders) : rank_(rank) {
    std::vector<Integer> orders;
    for (auto& o : cyclic_orders) {
        Integer a = abs(o);
        if (a == 0)
            ++rank_;
        else if (a != 1)
            orders.push_back(std::move(a));
    }
    std::sort(orders.begin(), orders.end());
    // Z/a + Z/b = Z/gcd + Z/lcm; after pass i, orders[i] divides every later entry.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            Integer g = gcd(orders[i], orders[j]);
            Integer l = orders[i] / g * orders[j];
            orders[i] = std::move(g);
            orders[j] = std::move(l);
        }
    for (auto& o : orders)
        if (o != 1) factors_.push_back(std::move(o));
}

FgAbGroup FgAbGroup::cyclic(const Integer& order) { return FgAbGroup(0, {order}); }

Integer FgAbGroup::torsion_order() const {
    Integer p = 1;
    for (const auto& d : factors_) p *= d;
    return p;
}

Integer FgAbGroup::generator_order(std::size_t i) const {
    if (i < rank_) return 0;
    return factors_.at(i - rank_);
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ == 1) {
        os << "Z";
        first = false;
    } else if (rank_ > 1) {
        os << "Z^" << rank_;
        first = false;
    }
    for (const auto& d : factors_) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

FgAbGroup FgAbGroup::parse(std::string_view text) {
    std::size_t rank = 0;
    std::vector<Integer> orders;
    std::string_view rest = text;
    bool any = false;
    for (;;) {
        auto plus = rest.find('+');
        std::string_view term = trim(rest.substr(0, plus));
        if (term.empty()) throw GroupParseError("empty term in group expression '" + std::string(text) + "'");
        any = true;
        if (term == "0") {
        } else if (term == "Z") {
            ++rank;
        } else if (term.starts_with("Z^") && all_digits(term.substr(2))) {
            rank += std::stoul(std::string(term.substr(2)));
        } else if (term.starts_with("Z/") && all_digits(term.substr(2))) {
            Integer d(std::string(term.substr(2)));
            if (d == 0) throw GroupParseError("cyclic order must be positive in '" + std::string(term) + "'");
            orders.push_back(std::move(d));
        } else {
            throw GroupParseError("malformed group term '" + std::string(term) + "'");
        }
        if (plus == std::string_view::npos) break;
        rest.remove_prefix(plus + 1);
    }
    if (!any) throw GroupParseError("empty group expression");
    return FgAbGroup(rank, std::move(orders));
}

std::strong_ordering operator<=>(const FgAbGroup& a, const FgAbGroup& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.factors_[i] < b.factors_[i]) return std::strong_ordering::less;
        if (b.factors_[i] < a.factors_[i]) return std::strong_ordering::greater;
    }
    return a.factors_.size() <=> b.factors_.size();
}

// ---------------------------------------------------------------------------
// Presentations, kernels, cokernels

FgAbGroup cokernel(const IntMatrix& m) {
    const SmithForm snf = smith_normal_form(m);
    const std::size_t diag = std::min(m.rows(), m.cols());
    std::size_t rank = m.rows() - diag;
    std::vector<Integer> orders;
    for (std::size_t t = 0; t < diag; ++t) {
        const Integer& d = snf.diagonal(t, t);
        if (d == 0)
            ++rank;
        else
            orders.push_back(d);
    }
    return FgAbGroup(rank, std::move(orders));
}

IntMatrix relation_matrix(const FgAbGroup& g) {
    const auto& f = g.invariant_factors();
    IntMatrix r(g.generator_count(), f.size());
    for (std::size_t j = 0; j < f.size(); ++j) r(g.rank() + j, j) = f[j];
    return r;
}

FgAbGroup cokernel(const GroupHom& f) {
    return cokernel(f.matrix.hconcat(relation_matrix(f.target)));
}

FgAbGroup kernel(const GroupHom& f) {
    const std::size_t source_gens = f.source.generator_count();
    if (source_gens == 0) return {};

    // Preimage lattice L = { x : F x in im R_target }, from the integer kernel
    // of [F | R_target] projected onto the x coordinates.
    const IntMatrix stacked = f.matrix.hconcat(relation_matrix(f.target));
    const SmithForm snf = smith_normal_form(stacked);
    std::size_t stacked_rank = 0;
    for (std::size_t t = 0; t < std::min(stacked.rows(), stacked.cols()); ++t)
        if (snf.diagonal(t, t) != 0) ++stacked_rank;

    const std::size_t kernel_dim = stacked.cols() - stacked_rank;
    IntMatrix lattice(source_gens, kernel_dim);
    for (std::size_t j = 0; j < kernel_dim; ++j)
        for (std::size_t i = 0; i < source_gens; ++i) lattice(i, j) = snf.right(i, stacked_rank + j);

    // Choose a basis of L from the SNF of its generators, then express the
    // source relations (which lie in L) in that basis.
    const SmithForm basis = smith_normal_form(lattice);
    std::size_t lattice_rank = 0;
    for (std::size_t t = 0; t < std::min(lattice.rows(), lattice.cols()); ++t)
        if (basis.diagonal(t, t) != 0) ++lattice_rank;

    const IntMatrix transformed = basis.left * relation_matrix(f.source);
    IntMatrix coords(lattice_rank, transformed.cols());
    for (std::size_t q = 0; q < transformed.cols(); ++q) {
        for (std::size_t j = 0; j < lattice_rank; ++j) {
            assert(transformed(j, q) % basis.diagonal(j, j) == 0);
            coords(j, q) = transformed(j, q) / basis.diagonal(j, j);
        }
    }
    return cokernel(coords);
}

// ---------------------------------------------------------------------------
// Functors

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Integer> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FgAbGroup(a.rank() + b.rank(), std::move(orders));
}

FgAbGroup direct_sum(const std::vector<FgAbGroup>& groups) {
    std::size_t rank = 0;
    std::vector<Integer> orders;
    for (const auto& g : groups) {
        rank += g.rank();
        orders.insert(orders.end(), g.invariant_factors().begin(), g.invariant_factors().end());
    }
    return FgAbGroup(rank, std::move(orders));
}

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

namespace {

// Applies a bi-additive rule to every pair of cyclic summands (order 0 = Z)
// and sums the results.
template <typename Rule>
FgAbGroup biadditive(const FgAbGroup& a, const FgAbGroup& b, Rule rule) {
    std::size_t rank = 0;
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < a.generator_count(); ++i)
        for (std::size_t j = 0; j < b.generator_count(); ++j) {
            // nullopt means the pair contributes nothing.
            if (auto o = rule(a.generator_order(i), b.generator_order(j))) {
                if (*o == 0)
                    ++rank;
                else
                    orders.push_back(std::move(*o));
            }
        }
    return FgAbGroup(rank, std::move(orders));
}

}  // namespace

FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b) {
    return biadditive(a, b, [](const Integer& m, const Integer& n) -> std::optional<Integer> {
        if (m == 0) return n;              // Hom(Z, C) = C
        if (n == 0) return std::nullopt;   // Hom(Z/m, Z) = 0
        return gcd(m, n);                  // Hom(Z/m, Z/n) = Z/(m,n)
    });
}

FgAbGroup ext(const FgAbGroup& a, const FgAbGroup& b) {
    return biadditive(a, b, [](const Integer& m, const Integer& n) -> std::optional<Integer> {
        if (m == 0) return std::nullopt;   // Ext(Z, -) = 0
        if (n == 0) return m;              // Z / mZ
        return gcd(m, n);                  // (Z/n) / m(Z/n)
    });
}

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
    return biadditive(a, b, [](const Integer& m, const Integer& n) -> std::optional<Integer> {
        if (m == 0 || n == 0) return std::nullopt;
        return gcd(m, n);
    });
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
    return biadditive(a, b, [](const Integer& m, const Integer& n) -> std::optional<Integer> {
        if (m == 0) return n;
        if (n == 0) return m;
        return gcd(m, n);
    });
}

// ---------------------------------------------------------------------------
// Extension enumeration
//
// For B = Z^f + Z/b_1 + ... + Z/b_k every extension of B by A is
//   G = (A + Z^k) / < b_j e_j - c_j >  +  Z^f
// for some cocycle (c_1..c_k) with c_j in A / b_j A, and every such choice is
// an extension. Automorphisms of the free part of A act on the free
// coordinates of the c_j by GL(a, Z); row-reducing that a x k block shows only
// min(a, k) free coordinates are needed, the rest of Z^a splits off.

std::vector<FgAbGroup> enumerate_extensions(const FgAbGroup& a, const FgAbGroup& b,
                                            const ExtensionCap& cap) {
    if (a.torsion_order() * b.torsion_order() > cap.torsion_product) {
        throw OracleRefused("extension oracle refused: |A_t|*|B_t| = " +
                            (a.torsion_order() * b.torsion_order()).str() + " exceeds cap " +
                            cap.torsion_product.str());
    }
    const auto& bf = b.invariant_factors();
    const std::size_t k = bf.size();
    if (k == 0) return {direct_sum(a, b)};

    const std::size_t kept_free = std::min(a.rank(), k);
    const std::size_t split_free = a.rank() - kept_free + b.rank();
    const auto& af = a.invariant_factors();
    const std::size_t a_gens = kept_free + af.size();

    // Range of each cocycle coordinate: c_j in A/b_jA.
    std::vector<Integer> ranges;
    ranges.reserve(k * a_gens);
    Integer total = 1;
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < a_gens; ++i) {
            Integer r = i < kept_free ? bf[j] : gcd(bf[j], af[i - kept_free]);
            total *= r;
            ranges.push_back(std::move(r));
        }
    if (total > cap.search) {
        throw OracleRefused("extension oracle refused: " + total.str() +
                            " cocycles exceed search cap " + cap.search.str());
    }

    IntMatrix presentation(a_gens + k, af.size() + k);
    for (std::size_t i = 0; i < af.size(); ++i) presentation(kept_free + i, i) = af[i];
    for (std::size_t j = 0; j < k; ++j) presentation(a_gens + j, af.size() + j) = bf[j];

    std::set<FgAbGroup> found;
    std::vector<Integer> counter(ranges.size(), Integer(0));
    for (;;) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < a_gens; ++i)
                presentation(i, af.size() + j) = -counter[j * a_gens + i];
        found.insert(direct_sum(cokernel(presentation), FgAbGroup::free(split_free)));

        std::size_t pos = 0;
        while (pos < counter.size()) {
            if (++counter[pos] < ranges[pos]) break;
            counter[pos] = 0;
            ++pos;
        }
        if (pos == counter.size()) break;
    }
    return {found.begin(), found.end()};
}

}  // namespace boundaryk
