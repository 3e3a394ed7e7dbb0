#pragma once

#include <cstdint>

#include "dodgson/bijection.hpp"
#include "dodgson/matrix.hpp"

namespace dodgson {

struct VerifyOptions {
    int threads = 1;       // 1 = serial reference kernels, 0 = all available
    int formal_bound = 0;  // 0 = default_formal_bound()
};

/// Cap for exhaustive formal verification: DODGSON_ENUM_BOUND when set to a
/// positive integer, 7 otherwise.
int default_formal_bound();

/// Outcome of verifying the identity symbolically at one size. The two
/// sides are computed twice each: by summing pairing weights over the
/// classes and as Leibniz determinant polynomials; `pass` requires all four
/// to agree.
struct FormalReport {
    int n = 0;
    std::uint64_t count_a = 0, count_b = 0, count_c = 0;
    std::uint64_t bad_b = 0, bad_c = 0;
    std::size_t lhs_terms = 0, rhs_terms = 0;
    bool lhs_routes_agree = false;  // enumerated LHS == det-poly LHS
    bool rhs_routes_agree = false;  // enumerated RHS == det-poly RHS
    bool sides_equal = false;       // LHS == RHS
    bool pass = false;
};

/// det(M) * det(interior) == det(NW) * det(SE) - det(NE) * det(SW) as formal
/// polynomials, by full enumeration and by determinant expansion. Requires
/// 2 <= n <= the formal bound.
FormalReport verify_identity_formal(int n, const VerifyOptions& opts = {});

/// One numeric instance of the identity on an exact matrix.
struct NumericReport {
    int n = 0;
    Scalar lhs, rhs;
    bool enum_checked = false;  // the n <= 5 weight-sum route also ran
    bool pass = false;
};

/// Evaluates both sides with Bareiss minors; for n <= 5 additionally
/// evaluates the enumerated weight sums of all three classes and requires
/// them to match the determinant route. Requires square M with n >= 2.
NumericReport verify_identity_numeric(const Matrix& m, const VerifyOptions& opts = {});

/// Sum of pairing weights over a whole class as a formal polynomial; the
/// parallel variant shards the enumeration index space and merges partial
/// sums (addition is commutative, so the result is identical).
FormalPoly class_weight_sum(int n, PairingClass cls);
FormalPoly class_weight_sum_parallel(int n, PairingClass cls, int threads = 0);

}  // namespace dodgson
