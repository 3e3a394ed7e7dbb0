#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dodgson/formal.hpp"
#include "dodgson/index_range.hpp"
#include "dodgson/matrix.hpp"

namespace dodgson {

enum class DetMethod { Condensation, Bareiss, Leibniz };

DetMethod method_from_name(std::string_view name);  // ParseError
std::string_view method_name(DetMethod method);

/// Signed permutation expansion, O(n * n!). The guard bounds n; exceeding it
/// raises SizeGuardError. Intended as a small-n oracle, not an algorithm.
Scalar leibniz_det(const Matrix& m, int size_guard = 9);
Int leibniz_det(const IntMatrix& m, int size_guard = 9);

/// Fraction-free elimination with row-swap pivoting. Every interior division
/// is exact over the integers and asserted, never silently rationalized.
/// The plain overloads clear denominators per row first, so rational
/// matrices cost one extra scalar division at the end.
Int bareiss_det_serial(IntMatrix working);
Int bareiss_det_parallel(IntMatrix working, int threads = 0);
Int bareiss_det(const IntMatrix& m, int threads = 1);
Scalar bareiss_det(const Matrix& m, int threads = 1);

/// One condensation layer:
///   out(i,j) = (cur(i,j)*cur(i+1,j+1) - cur(i,j+1)*cur(i+1,j)) / prev(i+1,j+1)
/// where `prev` is the previous layer, one larger than `cur` on each side.
/// Divisors are scanned in row-major order before any work, so the
/// ZeroDivisorError always names the first vanishing divisor's 0-based
/// position in `prev`, like every other matrix index in this library.
/// Divisions are exact by the minor recurrence and asserted.
IntMatrix condensation_step(const IntMatrix& cur, const IntMatrix& prev);
IntMatrix condensation_step_parallel(const IntMatrix& cur, const IntMatrix& prev, int threads = 0);

/// One determinant-preserving row repair: row `target_row` received
/// `multiplier` times row `source_row`, chosen to perturb the vanishing
/// minor of order `divisor_layer` found at (at_row, at_col) of its layer.
struct RepairRecord {
    int attempt = 0;  // 1-based retry index
    int target_row = 0;
    int source_row = 0;
    long multiplier = 0;
    int divisor_layer = 0;
    int at_row = 0;
    int at_col = 0;
};

struct CondensationTrace {
    /// Layers A(1)..A(n) of the final working matrix; layer k is
    /// (n-k+1) x (n-k+1) and holds the contiguous k x k minors. Empty when
    /// the run fell back to elimination or layer recording was disabled.
    std::vector<IntMatrix> layers;
    std::vector<RepairRecord> repairs;
    bool fallback_used = false;
    /// det(input) times this factor equals the integer determinant the
    /// engine computed; 1 unless denominators were cleared.
    Int prefactor = 1;
};

struct CondensationConfig {
    int max_retries = 10;
    std::uint64_t seed = 0;
    int threads = 1;  // 1 = serial reference kernel, 0 = all available
    bool record_layers = true;
};

struct CondensationResult {
    Scalar value;
    CondensationTrace trace;
};

/// Dodgson condensation from the all-ones layer down to the 1x1 layer.
/// A vanishing divisor aborts the pass; the engine then adds a small random
/// multiple of another row to a row of the offending window (determinant
/// preserved, drawn from the seeded generator) and restarts. After
/// `max_retries` failed passes it falls back to Bareiss elimination on the
/// original matrix, flagged in the trace. The value therefore always equals
/// bareiss_det.
CondensationResult condensation_det(const IntMatrix& m, const CondensationConfig& cfg = {});
CondensationResult condensation_det(const Matrix& m, const CondensationConfig& cfg = {});

/// Determinant of the contiguous square block of the given order whose
/// top-left corner sits at (row0, col0); order 0 is the empty determinant 1
/// for any method. Out-of-range blocks raise DimensionError.
Scalar minor_det(const Matrix& m, int row0, int col0, int order,
                 DetMethod method = DetMethod::Bareiss);

/// Symbolic determinant: sum over bijections of the row index set onto the
/// column index set of the signed cell products, the sign being the parity
/// after order-isomorphic relabeling of both sets. Index sets must be
/// duplicate-free and of equal size; the factorial guard works like
/// leibniz_det's.
FormalPoly det_poly(std::vector<int> rows, std::vector<int> cols, int size_guard = 7);
FormalPoly det_poly(const IndexRange& rows, const IndexRange& cols, int size_guard = 7);

}  // namespace dodgson
