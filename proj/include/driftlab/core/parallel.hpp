#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace driftlab {

/// Number of workers used by parallel kernels. 0/1 means serial.
/// Every parallel kernel in this project is paired with a serial reference
/// path and produces bitwise-identical results for any worker count: work
/// items are independent and reductions run over materialized partials in a
/// fixed pairwise order.
class Workers {
  public:
    static int get() { return count_; }
    static void set(int n) { count_ = n < 1 ? 1 : n; }

  private:
    inline static int count_ = default_count();
    static int default_count() {
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }
};

/// Serial reference loop: body(i) for i in [0, n).
template <typename Body>
void for_each_index_serial(std::size_t n, Body&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

/// OpenMP loop over independent work items. Each item must write only to its
/// own slots; under that contract the result equals the serial reference.
template <typename Body>
void for_each_index_parallel(std::size_t n, Body&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(Workers::get())
    for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
#else
    for_each_index_serial(n, body);
#endif
}

template <typename Body>
void for_each_index(std::size_t n, Body&& body) {
    if (Workers::get() <= 1 || n < 2) {
        for_each_index_serial(n, body);
    } else {
        for_each_index_parallel(n, body);
    }
}

/// Deterministic sum of a materialized array by pairwise (tree) reduction.
/// The reduction order depends only on the array length, never on the worker
/// count, so serial and parallel producers aggregate identically.
inline double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

/// Serial reference for term-wise reductions: sum_i term(i).
template <typename Term>
double sum_terms_serial(std::size_t n, Term&& term) {
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = term(i);
    return pairwise_sum(vals);
}

/// OpenMP variant; materializes the same term array, so the aggregate is
/// bitwise equal to the serial reference.
template <typename Term>
double sum_terms_parallel(std::size_t n, Term&& term) {
    std::vector<double> vals(n);
    for_each_index_parallel(n, [&](std::size_t i) { vals[i] = term(i); });
    return pairwise_sum(vals);
}

template <typename Term>
double sum_terms(std::size_t n, Term&& term) {
    if (Workers::get() <= 1 || n < 2) return sum_terms_serial(n, term);
    return sum_terms_parallel(n, term);
}

}  // namespace driftlab
