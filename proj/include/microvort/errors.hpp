#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mv {

// Base class for all recoverable microvort errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inversion of -Laplacian (and everything built on it) is only solvable on
// the periodic box for mean-zero right-hand sides.
class MeanNotZeroError : public Error {
  public:
    explicit MeanNotZeroError(double mean, double scale)
        : Error("mean-zero precondition violated: |mean| = " + std::to_string(mean) +
                " exceeds tolerance for field scale " + std::to_string(scale)),
          mean_(mean) {}
    double mean() const { return mean_; }

  private:
    double mean_;
};

class GridMismatchError : public Error {
  public:
    explicit GridMismatchError(const std::string& context)
        : Error("grid mismatch in " + context) {}
};

// Raised when a fixed step size violates the advective CFL bound; carries the
// step size that would have been admissible.
class CflError : public Error {
  public:
    CflError(double dt, double dt_required)
        : Error("CFL violation: dt = " + std::to_string(dt) + " exceeds admissible dt = " +
                std::to_string(dt_required)),
          dt_required_(dt_required) {}
    double dt_required() const { return dt_required_; }

  private:
    double dt_required_;
};

// Raised when a field stops being finite; the stepper reports the last good time.
class NonFiniteError : public Error {
  public:
    explicit NonFiniteError(const std::string& what) : Error(what) {}
};

// Config parsing collects every violation before failing.
class ConfigError : public Error {
  public:
    explicit ConfigError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid config:";
        for (const auto& e : v) s += "\n  - " + e;
        return s;
    }
    std::vector<std::string> violations_;
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace mv
