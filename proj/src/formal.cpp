#include "dodgson/formal.hpp"

#include <algorithm>

namespace dodgson {

Monomial::Monomial(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
}

Monomial Monomial::merged(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.cells_.resize(a.cells_.size() + b.cells_.size());
    std::merge(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
               out.cells_.begin());
    return out;
}

std::string Monomial::str() const {
    if (cells_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < cells_.size();) {
        std::size_t j = i;
        while (j < cells_.size() && cells_[j] == cells_[i]) ++j;
        if (!out.empty()) out += "*";
        out += "a(" + std::to_string(cells_[i].row) + "," + std::to_string(cells_[i].col) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

FormalPoly FormalPoly::term(Monomial m, Int coeff) {
    FormalPoly p;
    if (sgn(coeff) != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

void FormalPoly::add_term(const Monomial& m, const Int& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (inserted) return;
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(Monomial::merged(ma, mb), ca * cb);
    return out;
}

Scalar FormalPoly::eval(const Matrix& m) const {
    Scalar sum;
    for (const auto& [mono, coeff] : terms_) {
        Scalar prod{coeff};
        for (const Cell& cell : mono.cells()) {
            if (cell.row < 1 || cell.row > m.rows() || cell.col < 1 || cell.col > m.cols())
                throw DimensionError("cell a(" + std::to_string(cell.row) + "," +
                                     std::to_string(cell.col) + ") outside a " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                     " matrix");
            prod *= m(cell.row - 1, cell.col - 1);
        }
        sum += prod;
    }
    return sum;
}

}  // namespace dodgson
