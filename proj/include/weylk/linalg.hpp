#pragma once

#include <optional>
#include <vector>

#include "weylk/cocycle.hpp"

namespace weylk {

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational &at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational &at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Row combination c with c.A = 0 and c.b = contradiction != 0: an exact
/// witness that the system Ax = b has no solution.
struct InfeasibilityCertificate {
    std::vector<Rational> multipliers;
    Rational contradiction;
};

struct SolveResult {
    bool feasible = false;
    std::vector<Rational> particular;               // one solution, free variables 0
    std::vector<std::vector<Rational>> nullspace;   // basis of the homogeneous solutions
    std::optional<InfeasibilityCertificate> certificate;
};

/// Exact Gauss-Jordan elimination with first-nonzero (positional) pivoting,
/// so identical inputs always produce identical pivot sequences and output.
SolveResult solve(const RationalMatrix &A, const std::vector<Rational> &b);

/// Exact re-verification helpers.
bool certificate_verifies(const RationalMatrix &A, const std::vector<Rational> &b,
                          const InfeasibilityCertificate &cert);
bool solution_verifies(const RationalMatrix &A, const std::vector<Rational> &b,
                       const std::vector<Rational> &x);

/// Result of the finite coboundary test for a bilinear form on a monomial
/// set S.  Infeasible comes with a re-verified certificate and proves the
/// form is not a coboundary (globally: the equations are a subset of the
/// constraints any realizing functional must satisfy).  Feasible only means
/// this finite window produced no obstruction and is labeled inconclusive.
struct TrivialityOutcome {
    bool feasible = false;
    /// Candidate functional on the monomials spanned by the brackets
    /// (meaningful when feasible).
    std::map<Monomial, Rational, MonomialLess> candidate;
    std::optional<InfeasibilityCertificate> certificate;
    /// Equation r corresponds to the ordered pair equations[r] (u < v).
    std::vector<std::pair<Monomial, Monomial>> equations;
    /// Monomial carried by each unknown column.
    std::vector<Monomial> unknowns;
};

/// Builds the linear system f([u,v]) = form(u,v) over all ordered pairs
/// u < v from S and solves it exactly.  The returned outcome has been
/// re-verified: certificates recombine to 0 = nonzero, and candidate
/// functionals reproduce the form on every pair.
TrivialityOutcome triviality_test(const Signature &sig, const BilinearForm &form,
                                  std::vector<Monomial> S);

} // namespace weylk
