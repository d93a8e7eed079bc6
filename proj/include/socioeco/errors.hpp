#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace socioeco {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input: parameters, weight matrices, scenario files.
struct InputError : Error {
    using Error::Error;
};

/// Numerical failure: singular systems, degenerate constants, integrator breakdown.
struct NumericError : Error {
    using Error::Error;
};

struct NonZeroDiagonal : InputError {
    explicit NonZeroDiagonal(int row_)
        : InputError("weight matrix has a non-zero diagonal entry in row " + std::to_string(row_)),
          row(row_) {}
    int row;
};

struct RowSumNotOne : InputError {
    RowSumNotOne(int row_, double deviation_)
        : InputError(format(row_, deviation_)), row(row_), deviation(deviation_) {}
    int row;
    double deviation;

private:
    static std::string format(int row, double dev) {
        std::ostringstream os;
        os << "weight row " << row << " does not sum to 1 (deviation " << dev << ")";
        return os.str();
    }
};

struct NegativeEntry : InputError {
    NegativeEntry(int row_, int col_)
        : InputError("weight matrix has a negative entry at (" + std::to_string(row_) + ", " +
                     std::to_string(col_) + ")"),
          row(row_), col(col_) {}
    int row;
    int col;
};

struct ParseError : InputError {
    using InputError::InputError;
};

/// Carries every violated invariant, not just the first one found.
struct ValidationError : InputError {
    explicit ValidationError(std::vector<std::string> issues_)
        : InputError(join(issues_)), issues(std::move(issues_)) {}
    explicit ValidationError(const std::string& issue)
        : InputError(issue), issues{issue} {}
    std::vector<std::string> issues;

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string msg = "validation failed:";
        for (const auto& i : issues) msg += "\n  - " + i;
        return msg;
    }
};

struct KernelDimensionError : NumericError {
    explicit KernelDimensionError(int dimension_)
        : NumericError("numerical kernel has dimension " + std::to_string(dimension_) +
                       ", expected 1 (weight graph not strongly connected?)"),
          dimension(dimension_) {}
    int dimension;
};

struct NonPositiveKernel : NumericError {
    NonPositiveKernel()
        : NumericError("kernel vector is not strictly positive; "
                       "the graph cannot support positive social orientations") {}
};

struct DegenerateRatio : NumericError {
    explicit DegenerateRatio(double ratio_)
        : NumericError("K2/K1 + 1 <= 0 (value " + std::to_string(ratio_ + 1.0) +
                       "); no admissible equilibrium"),
          ratio(ratio_) {}
    double ratio;
};

struct DegenerateSum : NumericError {
    explicit DegenerateSum(double sum_)
        : NumericError("K1 + K2 <= 0 (value " + std::to_string(sum_) +
                       "); shifted dynamics and Lyapunov weight undefined"),
          sum(sum_) {}
    double sum;
};

struct SingularBeyondKernel : NumericError {
    explicit SingularBeyondKernel(int rank_, int n_)
        : NumericError("steady-state system has rank " + std::to_string(rank_) + " < n-1 (n = " +
                       std::to_string(n_) + "); weights not strongly connected"),
          rank(rank_), n(n_) {}
    int rank;
    int n;
};

struct StepUnderflow : NumericError {
    explicit StepUnderflow(double t_)
        : NumericError("adaptive step fell below 1e-14 at t = " + std::to_string(t_)), t(t_) {}
    double t;
};

struct NonFiniteState : NumericError {
    explicit NonFiniteState(double t_)
        : NumericError("state became non-finite at t = " + std::to_string(t_)), t(t_) {}
    double t;
};

struct GridMismatch : NumericError {
    using NumericError::NumericError;
};

}  // namespace socioeco
