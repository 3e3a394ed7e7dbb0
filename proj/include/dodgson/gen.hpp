#pragma once

#include <cstdint>
#include <string_view>

#include "dodgson/matrix.hpp"

namespace dodgson {

/// SplitMix64. Tiny, seeded, and bit-identical on every platform, which is
/// what the reproducibility contract actually needs; statistical quality is
/// irrelevant here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, 2^bit_count).
    Int bits(int bit_count);

private:
    std::uint64_t state_;
};

enum class MatrixKind { Random, Vandermonde, SingularInterior };

MatrixKind kind_from_name(std::string_view name);  // ParseError
std::string_view kind_name(MatrixKind kind);

/// Deterministic matrices for tests and benchmarks; a fixed (kind, n, bound,
/// seed) tuple always yields the same matrix.
///   random:            entries uniform in [-entry_bound, entry_bound]
///   vandermonde:       v(i,j) = x_i^(j-1) over the nodes x_i = i, so the
///                      determinant is the product of all node differences
///                      (seed and bound unused)
///   singular-interior: positive entries in [1, entry_bound] with the
///                      central contiguous 2x2 minor forced to rank one, so
///                      condensation must hit a vanishing divisor; needs
///                      n >= 4 for a fully interior window
IntMatrix gen_matrix(MatrixKind kind, int n, long entry_bound, std::uint64_t seed);

/// Random matrix with entries uniform in [1, 2^bits]; positive entries keep
/// first-layer divisors away from zero, which is what benchmarking the
/// condensation path (rather than its repair machinery) wants.
IntMatrix gen_matrix_bits(int n, int bits, std::uint64_t seed);

}  // namespace dodgson
