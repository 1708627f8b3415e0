#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehmer {

/// Base class for every failure raised by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input lies outside an operation's admissible domain (divergent argument,
/// pole on the integration path, degenerate polynomial, branch violation...).
class domain_error : public error {
 public:
  using error::error;
};

/// Malformed argument (wrong range, inconsistent sizes).
class invalid_argument : public error {
 public:
  using error::error;
};

/// An iteration or summation failed to reach the requested tolerance.
class convergence_error : public error {
 public:
  using error::error;
};

/// Request exceeds a configured capacity (table rows, term caps).
class capacity_error : public error {
 public:
  using error::error;
};

/// Root solver gave up; carries the best iterates for diagnosis.
class solver_error : public convergence_error {
 public:
  solver_error(const std::string& msg, std::vector<std::complex<double>> iterates,
               double residual)
      : convergence_error(msg), best_iterates(std::move(iterates)), worst_residual(residual) {}

  std::vector<std::complex<double>> best_iterates;
  double worst_residual;
};

/// Constant-expression syntax or identifier problem; `position` is the
/// 0-based offset into the source text.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t pos) : error(msg), position(pos) {}

  std::size_t position;
};

}  // namespace lehmer
