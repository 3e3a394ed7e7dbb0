#include "dodgson/matrix.hpp"

#include <sstream>

namespace dodgson {

Matrix to_scalar_matrix(const IntMatrix& m) {
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j));
    return out;
}

std::optional<IntMatrix> to_integer_matrix(const Matrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_integer()) return std::nullopt;
            out(i, j) = m(i, j).numerator();
        }
    return out;
}

Matrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Scalar>> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields{line};
        std::vector<Scalar> row;
        std::string field;
        while (fields >> field) {
            try {
                row.push_back(Scalar::parse(field));
            } catch (const Error& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(rows.front().size()) + " entries, got " +
                             std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no matrix rows in input");

    Matrix out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) = std::move(rows[i][j]);
    return out;
}

std::string format_matrix(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace dodgson
