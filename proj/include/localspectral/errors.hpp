#pragma once

#include <stdexcept>
#include <string>

namespace lsp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad files, unknown node ids, length mismatches.
struct InputError : Error {
    using Error::Error;
};

/// Parameter outside its mathematical domain (gamma >= lambda2, kappa >= 1,
/// degenerate cuts and seeds, eigenvalue poles).
struct DomainError : Error {
    using Error::Error;
};

/// Iterative method failed to meet its tolerance contract.
struct SolverError : Error {
    SolverError(const std::string& what, double best_residual, int iterations)
        : Error(what), best_residual(best_residual), iterations(iterations) {}
    double best_residual;
    int iterations;
};

}  // namespace lsp
