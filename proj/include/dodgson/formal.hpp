#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dodgson/matrix.hpp"
#include "dodgson/scalar.hpp"

namespace dodgson {

/// One matrix-cell indeterminate a(row, col). Indices are 1-based: cell
/// (i, j) evaluates to the entry in row i, column j of a concrete matrix.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A product of cell indeterminates kept as a multiset: repeated cells are
/// legal and carry their multiplicity. Canonical form is sorted by (row, col).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Cell> cells);

    /// Multiset union (the product of two monomials).
    static Monomial merged(const Monomial& a, const Monomial& b);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t degree() const { return cells_.size(); }

    /// e.g. "a(1,1)*a(2,2)^2"; "1" for the empty monomial.
    std::string str() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Cell> cells_;  // invariant: sorted
};

/// Sparse integer-coefficient polynomial in cell indeterminates. Terms map
/// canonical monomials to nonzero coefficients; the zero polynomial has no
/// terms. Ordering of terms is the monomials' lexicographic cell order.
class FormalPoly {
public:
    FormalPoly() = default;

    static FormalPoly term(Monomial m, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    /// Adds coeff * m, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Int& coeff);

    FormalPoly& operator+=(const FormalPoly& o);
    FormalPoly& operator-=(const FormalPoly& o);

    friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
    friend FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }
    friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);

    friend bool operator==(const FormalPoly&, const FormalPoly&) = default;

    /// Substitutes a(i, j) := m(i-1, j-1). Cells outside the matrix raise
    /// DimensionError. Evaluation is an exact ring homomorphism.
    Scalar eval(const Matrix& m) const;

private:
    std::map<Monomial, Int> terms_;
};

}  // namespace dodgson
