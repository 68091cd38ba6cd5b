#include "drivencp/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <limits>

#include "drivencp/errors.hpp"

namespace dcp {

std::vector<double> log_space(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo) || n < 2)
    throw DomainError("log_space: need 0 < lo < hi and n >= 2");
  std::vector<double> out(n);
  const double llo = std::log(lo);
  const double step = (std::log(hi) - llo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(llo + step * static_cast<double>(i));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> lin_space(double lo, double hi, std::size_t n) {
  if (!(hi > lo) || n < 2) throw DomainError("lin_space: need lo < hi and n >= 2");
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

namespace {

std::string describe(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const std::exception& ex) {
    return ex.what();
  } catch (...) {
    return "unknown error";
  }
}

[[noreturn]] void raise_point(std::size_t i, double x, std::exception_ptr e) {
  const std::string what = describe(e); // before e is moved from
  throw GridPointError(i, x, what, std::move(e));
}

} // namespace

std::vector<double> map_grid_serial(std::span<const double> xs, const PointFn& f) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      out[i] = f(xs[i]);
    } catch (...) {
      raise_point(i, xs[i], std::current_exception());
    }
  }
  return out;
}

std::vector<double> map_grid_parallel(std::span<const double> xs, const PointFn& f) {
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  std::vector<double> out(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = f(xs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (std::size_t i = 0; i < errors.size(); ++i)
    if (errors[i]) raise_point(i, xs[i], errors[i]);
  return out;
}

namespace {

struct LogGrid {
  double llo;
  double h;
};

LogGrid log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo) || n < 2)
    throw DomainError("log_trapezoid: need 0 < lo < hi and n >= 2");
  const double llo = std::log(lo);
  return {llo, (std::log(hi) - llo) / static_cast<double>(n - 1)};
}

} // namespace

double log_trapezoid_serial(const PointFn& f, double lo, double hi, std::size_t n) {
  const auto g = log_grid(lo, hi, n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::exp(g.llo + g.h * static_cast<double>(i));
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    sum += w * f(x) * x;
  }
  return sum * g.h;
}

double log_trapezoid_parallel(const PointFn& f, double lo, double hi, std::size_t n) {
  const auto g = log_grid(lo, hi, n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const double x = std::exp(g.llo + g.h * static_cast<double>(i));
    const double w = (i == 0 || i + 1 == count) ? 0.5 : 1.0;
    sum += w * f(x) * x;
  }
  return sum * g.h;
}

int env_thread_cap() {
  const char* v = std::getenv("DRIVEN_CP_THREADS");
  if (v == nullptr) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n <= 0 || n > std::numeric_limits<int>::max()) return 0;
  return static_cast<int>(n);
}

void apply_thread_cap() {
  if (const int cap = env_thread_cap(); cap > 0) omp_set_num_threads(cap);
}

int max_threads() { return omp_get_max_threads(); }

} // namespace dcp
