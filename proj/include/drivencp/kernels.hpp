#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Grid kernels. Every parallel kernel has a serial twin kept as the
// reference the tests compare against.

namespace dcp {

std::vector<double> log_space(double lo, double hi, std::size_t n);
std::vector<double> lin_space(double lo, double hi, std::size_t n);

/// Failure of a pointwise evaluation; carries the grid index and abscissa.
/// When several points fail, the lowest index is reported.
class GridPointError : public std::runtime_error {
public:
  GridPointError(std::size_t index, double x, const std::string& what,
                 std::exception_ptr cause)
      : std::runtime_error(what), index_(index), x_(x), cause_(std::move(cause)) {}

  std::size_t index() const noexcept { return index_; }
  double abscissa() const noexcept { return x_; }
  const std::exception_ptr& cause() const noexcept { return cause_; }

private:
  std::size_t index_;
  double x_;
  std::exception_ptr cause_;
};

using PointFn = std::function<double(double)>;

std::vector<double> map_grid_serial(std::span<const double> xs, const PointFn& f);
std::vector<double> map_grid_parallel(std::span<const double> xs, const PointFn& f);

/// Trapezoid rule in ln(x) on n log-spaced nodes in [lo, hi]:
/// int f(x) dx = int f(x) x d(ln x).
double log_trapezoid_serial(const PointFn& f, double lo, double hi, std::size_t n);
double log_trapezoid_parallel(const PointFn& f, double lo, double hi, std::size_t n);

/// Thread cap from DRIVEN_CP_THREADS (0 when unset or invalid).
int env_thread_cap();
/// Applies env_thread_cap() to the OpenMP runtime if set.
void apply_thread_cap();
int max_threads();

} // namespace dcp
