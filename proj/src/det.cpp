#include "dodgson/det.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <utility>

#include "dodgson/gen.hpp"
#include "dodgson/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dodgson {

DetMethod method_from_name(std::string_view name) {
    if (name == "condensation") return DetMethod::Condensation;
    if (name == "bareiss") return DetMethod::Bareiss;
    if (name == "leibniz") return DetMethod::Leibniz;
    throw ParseError("unknown determinant method '" + std::string(name) + "'");
}

std::string_view method_name(DetMethod method) {
    switch (method) {
        case DetMethod::Condensation: return "condensation";
        case DetMethod::Bareiss: return "bareiss";
        case DetMethod::Leibniz: return "leibniz";
    }
    throw InternalError("unreachable determinant method");
}

namespace {

void require_square(const auto& m, const char* op) {
    if (!m.square()) throw DimensionError(std::string(op) + " requires a square matrix");
}

template <class T>
T leibniz_impl(const Mat<T>& m, int size_guard) {
    require_square(m, "leibniz_det");
    const int n = m.rows();
    if (n > size_guard)
        throw SizeGuardError("leibniz_det guard: n = " + std::to_string(n) + " exceeds " +
                             std::to_string(size_guard));
    if (n == 0) return T(1);

    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    T sum(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (cols[i] > cols[j]) ++inversions;
        T prod(inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) prod *= m(i, cols[i]);
        sum += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return sum;
}

// det(input) = det(result) / prefactor, with prefactor the product of the
// per-row denominator lcms.
std::pair<IntMatrix, Int> clear_denominators(const Matrix& m) {
    IntMatrix out(m.rows(), m.cols());
    Int prefactor = 1;
    for (int i = 0; i < m.rows(); ++i) {
        Int row_lcm = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                    m(i, j).denominator().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).numerator() * exact_div(row_lcm, m(i, j).denominator());
        prefactor *= row_lcm;
    }
    return {std::move(out), std::move(prefactor)};
}

// Shared elimination step: row i of the working matrix, columns k+1..n-1.
// Divisions by `prev` are exact: the updated entries are (k+2)-order minors
// of the row-permuted input, each divisible by the k+1-order leading minor.
void bareiss_update_row(IntMatrix& w, int k, int i, const Int& prev) {
    Int t;
    for (int j = k + 1; j < w.cols(); ++j) {
        t = w(k, k) * w(i, j);
        mpz_submul(t.get_mpz_t(), w(i, k).get_mpz_t(), w(k, j).get_mpz_t());
        w(i, j) = exact_div(t, prev);
    }
    w(i, k) = 0;
}

// Pivot selection shared by both kernels; returns false when the column is
// all zero below the diagonal, i.e. the determinant vanishes.
bool bareiss_pivot(IntMatrix& w, int k, int& sign) {
    if (sgn(w(k, k)) != 0) return true;
    for (int r = k + 1; r < w.rows(); ++r) {
        if (sgn(w(r, k)) != 0) {
            for (int j = 0; j < w.cols(); ++j) std::swap(w(k, j), w(r, j));
            sign = -sign;
            return true;
        }
    }
    return false;
}

}  // namespace

Scalar leibniz_det(const Matrix& m, int size_guard) { return leibniz_impl(m, size_guard); }
Int leibniz_det(const IntMatrix& m, int size_guard) { return leibniz_impl(m, size_guard); }

Int bareiss_det_serial(IntMatrix w) {
    require_square(w, "bareiss_det");
    const int n = w.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (!bareiss_pivot(w, k, sign)) return 0;
        for (int i = k + 1; i < n; ++i) bareiss_update_row(w, k, i, prev);
        prev = w(k, k);
    }
    return sign < 0 ? Int(-w(n - 1, n - 1)) : w(n - 1, n - 1);
}

Int bareiss_det_parallel(IntMatrix w, int threads) {
    require_square(w, "bareiss_det");
    const int n = w.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    const int nthreads = resolve_threads(threads);
    for (int k = 0; k + 1 < n; ++k) {
        if (!bareiss_pivot(w, k, sign)) return 0;
        std::atomic<bool> inexact{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads)
#endif
        for (int i = k + 1; i < n; ++i) {
            // Exceptions must not cross the parallel region.
            try {
                bareiss_update_row(w, k, i, prev);
            } catch (const Error&) {
                inexact.store(true, std::memory_order_relaxed);
            }
        }
        if (inexact.load()) throw InternalError("inexact division in parallel elimination");
        prev = w(k, k);
    }
    return sign < 0 ? Int(-w(n - 1, n - 1)) : w(n - 1, n - 1);
}

Int bareiss_det(const IntMatrix& m, int threads) {
    return resolve_threads(threads) == 1 ? bareiss_det_serial(m) : bareiss_det_parallel(m, threads);
}

Scalar bareiss_det(const Matrix& m, int threads) {
    require_square(m, "bareiss_det");
    auto [working, prefactor] = clear_denominators(m);
    return Scalar(bareiss_det(working, threads), prefactor);
}

namespace {

void check_step_shapes(const IntMatrix& cur, const IntMatrix& prev) {
    if (!cur.square() || !prev.square())
        throw DimensionError("condensation_step requires square layers");
    if (prev.rows() != cur.rows() + 1)
        throw DimensionError("previous layer must be one larger than the current layer");
    if (cur.rows() < 2) throw DimensionError("current layer must be at least 2x2");
}

// Raises on the first vanishing divisor in row-major order so the reported
// position is deterministic regardless of thread count.
void scan_divisors(const IntMatrix& prev, int out_size) {
    for (int i = 0; i < out_size; ++i)
        for (int j = 0; j < out_size; ++j)
            if (sgn(prev(i + 1, j + 1)) == 0) throw ZeroDivisorError(i + 1, j + 1);
}

void condense_entry(IntMatrix& out, const IntMatrix& cur, const IntMatrix& prev, int i, int j) {
    Int t = cur(i, j) * cur(i + 1, j + 1);
    mpz_submul(t.get_mpz_t(), cur(i, j + 1).get_mpz_t(), cur(i + 1, j).get_mpz_t());
    out(i, j) = exact_div(t, prev(i + 1, j + 1));
}

}  // namespace

IntMatrix condensation_step(const IntMatrix& cur, const IntMatrix& prev) {
    check_step_shapes(cur, prev);
    const int size = cur.rows() - 1;
    scan_divisors(prev, size);
    IntMatrix out(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) condense_entry(out, cur, prev, i, j);
    return out;
}

IntMatrix condensation_step_parallel(const IntMatrix& cur, const IntMatrix& prev, int threads) {
    check_step_shapes(cur, prev);
    const int size = cur.rows() - 1;
    scan_divisors(prev, size);
    IntMatrix out(size, size);
    const int nthreads = resolve_threads(threads);
    std::atomic<bool> inexact{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads)
#endif
    for (int i = 0; i < size; ++i) {
        try {
            for (int j = 0; j < size; ++j) condense_entry(out, cur, prev, i, j);
        } catch (const Error&) {
            inexact.store(true, std::memory_order_relaxed);
        }
    }
    if (inexact.load()) throw InternalError("inexact division in parallel condensation");
    return out;
}

namespace {

struct PassOutcome {
    bool ok = false;
    Int value;
    std::vector<IntMatrix> layers;
    // on failure: the vanishing divisor, as a window of the working matrix
    int divisor_order = 0;
    int at_row = 0;
    int at_col = 0;
};

PassOutcome run_condensation_pass(const IntMatrix& working, const CondensationConfig& cfg) {
    const int n = working.rows();
    PassOutcome outcome;
    if (cfg.record_layers) outcome.layers.push_back(working);

    IntMatrix prev = IntMatrix::constant(n + 1, n + 1, Int(1));
    IntMatrix cur = working;
    const bool serial = resolve_threads(cfg.threads) == 1;
    for (int k = 1; k < n; ++k) {
        // producing layer k+1; divisors live in layer k-1 (order k-1 minors)
        IntMatrix next;
        try {
            next = serial ? condensation_step(cur, prev)
                          : condensation_step_parallel(cur, prev, cfg.threads);
        } catch (const ZeroDivisorError& e) {
            outcome.divisor_order = k - 1;
            outcome.at_row = e.row;
            outcome.at_col = e.col;
            return outcome;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (cfg.record_layers) outcome.layers.push_back(cur);
    }
    outcome.ok = true;
    outcome.value = cur(0, 0);
    return outcome;
}

}  // namespace

CondensationResult condensation_det(const IntMatrix& m, const CondensationConfig& cfg) {
    require_square(m, "condensation_det");
    const int n = m.rows();
    CondensationResult result;
    if (n == 0) {
        result.value = Scalar(1);
        return result;
    }
    if (n == 1) {
        result.value = Scalar(m(0, 0));
        if (cfg.record_layers) result.trace.layers.push_back(m);
        return result;
    }

    Rng rng(cfg.seed);
    IntMatrix working = m;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        PassOutcome pass = run_condensation_pass(working, cfg);
        if (pass.ok) {
            result.value = Scalar(pass.value);
            result.trace.layers = std::move(pass.layers);
            return result;
        }
        if (attempt == cfg.max_retries) break;

        // Determinant-preserving repair: add t * (source row) to a row of
        // the vanishing minor's window. The window never spans all rows (it
        // is interior), so a source row outside it always exists; a source
        // inside it would leave the offending minor unchanged.
        const int win_lo = pass.at_row;
        const int win_hi = pass.at_row + std::max(pass.divisor_order - 1, 0);
        const int target = static_cast<int>(rng.uniform(win_lo, win_hi));
        int source = static_cast<int>(rng.uniform(0, n - 1 - (win_hi - win_lo + 1)));
        if (source >= win_lo) source += win_hi - win_lo + 1;
        long mult = static_cast<long>(rng.uniform(1, 4));
        if (rng.uniform(0, 1) == 1) mult = -mult;

        for (int j = 0; j < n; ++j) working(target, j) += mult * working(source, j);
        result.trace.repairs.push_back(RepairRecord{attempt + 1, target, source, mult,
                                                    pass.divisor_order, pass.at_row, pass.at_col});
    }

    // Every repair preserved the determinant, so the oracle may run on the
    // original input.
    result.trace.fallback_used = true;
    result.value = Scalar(bareiss_det(m, cfg.threads));
    return result;
}

CondensationResult condensation_det(const Matrix& m, const CondensationConfig& cfg) {
    require_square(m, "condensation_det");
    auto [working, prefactor] = clear_denominators(m);
    CondensationResult result = condensation_det(working, cfg);
    result.trace.prefactor = prefactor;
    result.value = Scalar(result.value.numerator(), result.value.denominator() * prefactor);
    return result;
}

Scalar minor_det(const Matrix& m, int row0, int col0, int order, DetMethod method) {
    if (order == 0) return Scalar(1);  // empty determinant under every method
    Matrix block = submatrix(m, row0, col0, order, order);
    switch (method) {
        case DetMethod::Bareiss: return bareiss_det(block);
        case DetMethod::Leibniz: return leibniz_det(block);
        case DetMethod::Condensation: return condensation_det(block).value;
    }
    throw InternalError("unreachable determinant method");
}

FormalPoly det_poly(std::vector<int> rows, std::vector<int> cols, int size_guard) {
    if (rows.size() != cols.size())
        throw DimensionError("det_poly needs index sets of equal size");
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
        std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw DimensionError("det_poly index sets must be duplicate-free");
    const int k = static_cast<int>(rows.size());
    if (k > size_guard)
        throw SizeGuardError("det_poly guard: k = " + std::to_string(k) + " exceeds " +
                             std::to_string(size_guard));

    FormalPoly out;
    if (k == 0) {
        out.add_term(Monomial{}, 1);
        return out;
    }
    std::vector<int> image = cols;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (image[i] > image[j]) ++inversions;
        std::vector<Cell> cells(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) cells[static_cast<std::size_t>(i)] = Cell{rows[i], image[i]};
        out.add_term(Monomial(std::move(cells)), inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

FormalPoly det_poly(const IndexRange& rows, const IndexRange& cols, int size_guard) {
    return det_poly(rows.to_vector(), cols.to_vector(), size_guard);
}

}  // namespace dodgson
