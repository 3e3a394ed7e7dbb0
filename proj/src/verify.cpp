#include "dodgson/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "dodgson/det.hpp"
#include "dodgson/parallel.hpp"

namespace dodgson {

int default_formal_bound() {
    if (const char* env = std::getenv("DODGSON_ENUM_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 1) return static_cast<int>(v);
    }
    return 7;
}

FormalPoly class_weight_sum(int n, PairingClass cls) {
    ClassEnumerator e(n, cls);
    FormalPoly sum;
    e.for_each([&](const Pairing& p) {
        FormalWeight w = pairing_weight(p);
        sum.add_term(w.cells, Int(w.sign));
    });
    return sum;
}

FormalPoly class_weight_sum_parallel(int n, PairingClass cls, int threads) {
    const int nthreads = resolve_threads(threads);
    if (!openmp_enabled() || nthreads == 1) return class_weight_sum(n, cls);

    ClassEnumerator e(n, cls);
    const auto total = static_cast<std::int64_t>(e.size());
    FormalPoly sum;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
    {
        FormalPoly local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < total; ++i) {
            try {
                FormalWeight w = pairing_weight(e.at(static_cast<std::uint64_t>(i)));
                local.add_term(w.cells, Int(w.sign));
            } catch (...) {
                failed.store(true, std::memory_order_relaxed);
            }
        }
        // Partial sums commute, so merge order cannot change the result.
#pragma omp critical
        sum += local;
    }
#endif
    if (failed.load()) throw InternalError("weight enumeration failed in a worker thread");
    return sum;
}

namespace {

std::uint64_t count_bad(int n, PairingClass cls, int threads) {
    ClassEnumerator e(n, cls);
    const auto total = static_cast<std::int64_t>(e.size());
    const int nthreads = resolve_threads(threads);
    std::int64_t bad = 0;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads) reduction(+ : bad)
#endif
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            if (!classify(e.at(static_cast<std::uint64_t>(i))).good) ++bad;
        } catch (...) {
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (failed.load()) throw InternalError("classification failed in a worker thread");
    return static_cast<std::uint64_t>(bad);
}

}  // namespace

FormalReport verify_identity_formal(int n, const VerifyOptions& opts) {
    const int bound = opts.formal_bound > 0 ? opts.formal_bound : default_formal_bound();
    if (n < 2) throw SizeGuardError("identity verification needs n >= 2");
    if (n > bound)
        throw SizeGuardError("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                             std::to_string(bound));

    const bool serial = resolve_threads(opts.threads) == 1;
    auto weight_sum = [&](PairingClass cls) {
        return serial ? class_weight_sum(n, cls) : class_weight_sum_parallel(n, cls, opts.threads);
    };

    FormalPoly lhs_enum = weight_sum(PairingClass::A);
    FormalPoly rhs_enum = weight_sum(PairingClass::B) + weight_sum(PairingClass::C);

    // Both sides again, this time as Leibniz determinant polynomials. The
    // guard tracks n: the caller already passed the enumeration bound.
    const int guard = n;
    FormalPoly lhs_det = det_poly(IndexRange{1, n}, IndexRange{1, n}, guard) *
                         det_poly(IndexRange{2, n - 1}, IndexRange{2, n - 1}, guard);
    FormalPoly rhs_det = det_poly(IndexRange{1, n - 1}, IndexRange{1, n - 1}, guard) *
                             det_poly(IndexRange{2, n}, IndexRange{2, n}, guard) -
                         det_poly(IndexRange{1, n - 1}, IndexRange{2, n}, guard) *
                             det_poly(IndexRange{2, n}, IndexRange{1, n - 1}, guard);

    FormalReport report;
    report.n = n;
    report.count_a = ClassEnumerator(n, PairingClass::A).size();
    report.count_b = ClassEnumerator(n, PairingClass::B).size();
    report.count_c = ClassEnumerator(n, PairingClass::C).size();
    report.bad_b = count_bad(n, PairingClass::B, opts.threads);
    report.bad_c = count_bad(n, PairingClass::C, opts.threads);
    report.lhs_terms = lhs_enum.term_count();
    report.rhs_terms = rhs_enum.term_count();
    report.lhs_routes_agree = (lhs_enum == lhs_det);
    report.rhs_routes_agree = (rhs_enum == rhs_det);
    report.sides_equal = (lhs_enum == rhs_enum);
    report.pass = report.lhs_routes_agree && report.rhs_routes_agree && report.sides_equal;
    return report;
}

namespace {

Scalar class_weight_value(const Matrix& m, int n, PairingClass cls) {
    ClassEnumerator e(n, cls);
    Scalar sum;
    e.for_each([&](const Pairing& p) {
        FormalWeight w = pairing_weight(p);
        Scalar prod{w.sign};
        for (const Cell& cell : w.cells.cells()) prod *= m(cell.row - 1, cell.col - 1);
        sum += prod;
    });
    return sum;
}

}  // namespace

NumericReport verify_identity_numeric(const Matrix& m, const VerifyOptions& opts) {
    if (!m.square()) throw DimensionError("identity verification requires a square matrix");
    const int n = m.rows();
    if (n < 2) throw SizeGuardError("identity verification needs n >= 2");

    const int threads = opts.threads;
    NumericReport report;
    report.n = n;
    report.lhs = bareiss_det(m, threads) * minor_det(m, 1, 1, n - 2);
    report.rhs = minor_det(m, 0, 0, n - 1) * minor_det(m, 1, 1, n - 1) -
                 minor_det(m, 0, 1, n - 1) * minor_det(m, 1, 0, n - 1);
    report.pass = (report.lhs == report.rhs);

    if (n <= 5) {
        // Small enough to cross-check against the enumerated weight sums.
        report.enum_checked = true;
        Scalar lhs_enum = class_weight_value(m, n, PairingClass::A);
        Scalar rhs_enum = class_weight_value(m, n, PairingClass::B) +
                          class_weight_value(m, n, PairingClass::C);
        report.pass = report.pass && lhs_enum == report.lhs && rhs_enum == report.rhs;
    }
    return report;
}

}  // namespace dodgson
