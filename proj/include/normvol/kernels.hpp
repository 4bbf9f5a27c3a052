#pragma once

// Data-parallel loops over grid nodes and quadrature cells.
//
// Every kernel writes per-index results into a buffer and reduces that
// buffer serially in index order, so the outcome is bit-identical for any
// thread count. The serial policy is the reference implementation the tests
// compare against.

#include <cmath>
#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace normvol {

enum class Exec { serial, parallel };

/// Default policy used by the library entry points.
Exec default_exec();
void set_default_exec(Exec exec);

/// Number of worker threads the parallel policy will use.
int parallel_threads();
/// Sets the worker count (no effect without OpenMP).
void set_parallel_threads(int threads);

namespace detail {

// Exceptions must not leave an OpenMP region. The one thrown at the lowest
// index is kept, which is the one the serial loop would have raised.
class FirstError {
public:
    void record(std::size_t index) {
#pragma omp critical(normvol_first_error)
        {
            if (!error_ || index < index_) {
                error_ = std::current_exception();
                index_ = index;
            }
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
    std::size_t index_ = 0;
};

}  // namespace detail

/// out[i] = f(i) for i in [0, n).
template <class F>
std::vector<double> map_indices(std::size_t n, F&& f, Exec exec = default_exec()) {
    std::vector<double> out(n);
    if (exec == Exec::parallel) {
        const long count = static_cast<long>(n);
        detail::FirstError error;
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < count; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
            } catch (...) {
                error.record(static_cast<std::size_t>(i));
            }
        }
        error.rethrow();
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    }
    return out;
}

/// Generic variant producing arbitrary value types.
template <class T, class F>
std::vector<T> map_indices_as(std::size_t n, F&& f, Exec exec = default_exec()) {
    std::vector<T> out(n);
    if (exec == Exec::parallel) {
        const long count = static_cast<long>(n);
        detail::FirstError error;
#pragma omp parallel for schedule(dynamic, 4)
        for (long i = 0; i < count; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
            } catch (...) {
                error.record(static_cast<std::size_t>(i));
            }
        }
        error.rethrow();
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    }
    return out;
}

/// Neumaier-compensated sum in index order.
inline double ordered_sum(std::span<const double> values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

/// sum_i f(i), evaluated with the given policy and reduced in index order.
template <class F>
double reduce_indices(std::size_t n, F&& f, Exec exec = default_exec()) {
    const auto terms = map_indices(n, std::forward<F>(f), exec);
    return ordered_sum(terms);
}

}  // namespace normvol
