#include "dodgson/gen.hpp"

#include <string>

namespace dodgson {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InternalError("empty rng range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Modulo bias is immaterial for test data; determinism is not.
    return lo + static_cast<std::int64_t>(next() % span);
}

Int Rng::bits(int bit_count) {
    if (bit_count < 1) throw DimensionError("bit count must be positive");
    Int acc = 0;
    for (int produced = 0; produced < bit_count; produced += 64) {
        acc <<= 64;
        acc += Int(next());
    }
    Int out;
    mpz_fdiv_r_2exp(out.get_mpz_t(), acc.get_mpz_t(), static_cast<mp_bitcnt_t>(bit_count));
    return out;
}

MatrixKind kind_from_name(std::string_view name) {
    if (name == "random") return MatrixKind::Random;
    if (name == "vandermonde") return MatrixKind::Vandermonde;
    if (name == "singular-interior") return MatrixKind::SingularInterior;
    throw ParseError("unknown matrix kind '" + std::string(name) + "'");
}

std::string_view kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Random: return "random";
        case MatrixKind::Vandermonde: return "vandermonde";
        case MatrixKind::SingularInterior: return "singular-interior";
    }
    throw InternalError("unreachable matrix kind");
}

namespace {

IntMatrix gen_random(int n, long bound, Rng& rng) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Int(rng.uniform(-bound, bound));
    return m;
}

IntMatrix gen_vandermonde(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        Int power = 1;
        for (int j = 0; j < n; ++j) {
            m(i, j) = power;
            power *= i + 1;
        }
    }
    return m;
}

IntMatrix gen_singular_interior(int n, long bound, Rng& rng) {
    if (n < 4)
        throw SizeGuardError("singular-interior needs n >= 4 for a fully interior 2x2 window");
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Int(rng.uniform(1, bound));

    // Rank-one central window [a b; ka kb]: its minor vanishes while every
    // entry stays positive, so the first divisor condensation cannot take is
    // exactly this 2x2 minor.
    const int h = (n - 2) / 2;
    Int a(rng.uniform(1, bound)), b(rng.uniform(1, bound)), k(rng.uniform(1, 3));
    m(h, h) = a;
    m(h, h + 1) = b;
    m(h + 1, h) = k * a;
    m(h + 1, h + 1) = k * b;
    return m;
}

}  // namespace

IntMatrix gen_matrix(MatrixKind kind, int n, long entry_bound, std::uint64_t seed) {
    if (n < 1) throw DimensionError("gen_matrix needs n >= 1");
    if (entry_bound < 1 && kind != MatrixKind::Vandermonde)
        throw DimensionError("entry bound must be positive");
    Rng rng(seed);
    switch (kind) {
        case MatrixKind::Random: return gen_random(n, entry_bound, rng);
        case MatrixKind::Vandermonde: return gen_vandermonde(n);
        case MatrixKind::SingularInterior: return gen_singular_interior(n, entry_bound, rng);
    }
    throw InternalError("unreachable matrix kind");
}

IntMatrix gen_matrix_bits(int n, int bits, std::uint64_t seed) {
    if (n < 1) throw DimensionError("gen_matrix_bits needs n >= 1");
    if (bits < 1) throw DimensionError("bit count must be positive");
    Rng rng(seed);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.bits(bits) + 1;
    return m;
}

}  // namespace dodgson
