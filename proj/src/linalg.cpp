#include "weylk/linalg.hpp"

#include <algorithm>

namespace weylk {

SolveResult solve(const RationalMatrix &A, const std::vector<Rational> &b) {
    const std::size_t n = A.rows(), m = A.cols();
    if (b.size() != n)
        throw DimensionMismatch("solve: right-hand side has wrong length");

    RationalMatrix work = A;
    std::vector<Rational> rhs = b;
    // comb[r] tracks how work row r combines the original rows.
    std::vector<std::vector<Rational>> comb(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r)
        comb[r][r] = 1;

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < n; ++c) {
        std::size_t p = row;
        while (p < n && work.at(p, c) == 0)
            ++p;
        if (p == n)
            continue;
        if (p != row) {
            for (std::size_t k = 0; k < m; ++k)
                std::swap(work.at(p, k), work.at(row, k));
            std::swap(rhs[p], rhs[row]);
            std::swap(comb[p], comb[row]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || work.at(r, c) == 0)
                continue;
            Rational factor = work.at(r, c) / work.at(row, c);
            for (std::size_t k = c; k < m; ++k)
                work.at(r, k) -= factor * work.at(row, k);
            rhs[r] -= factor * rhs[row];
            for (std::size_t k = 0; k < n; ++k)
                comb[r][k] -= factor * comb[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }

    SolveResult res;
    for (std::size_t r = row; r < n; ++r) {
        if (rhs[r] != 0) {
            res.feasible = false;
            res.certificate = InfeasibilityCertificate{comb[r], rhs[r]};
            return res;
        }
    }

    res.feasible = true;
    res.particular.assign(m, Rational(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        res.particular[pivot_col[r]] = rhs[r] / work.at(r, pivot_col[r]);

    std::vector<bool> is_pivot(m, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    for (std::size_t cf = 0; cf < m; ++cf) {
        if (is_pivot[cf])
            continue;
        std::vector<Rational> v(m, Rational(0));
        v[cf] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -work.at(r, cf) / work.at(r, pivot_col[r]);
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

bool certificate_verifies(const RationalMatrix &A, const std::vector<Rational> &b,
                          const InfeasibilityCertificate &cert) {
    if (cert.multipliers.size() != A.rows() || b.size() != A.rows())
        return false;
    if (cert.contradiction == 0)
        return false;
    for (std::size_t c = 0; c < A.cols(); ++c) {
        Rational s = 0;
        for (std::size_t r = 0; r < A.rows(); ++r)
            s += cert.multipliers[r] * A.at(r, c);
        if (s != 0)
            return false;
    }
    Rational s = 0;
    for (std::size_t r = 0; r < A.rows(); ++r)
        s += cert.multipliers[r] * b[r];
    return s == cert.contradiction;
}

bool solution_verifies(const RationalMatrix &A, const std::vector<Rational> &b,
                       const std::vector<Rational> &x) {
    if (x.size() != A.cols() || b.size() != A.rows())
        return false;
    for (std::size_t r = 0; r < A.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < A.cols(); ++c)
            s += A.at(r, c) * x[c];
        if (s != b[r])
            return false;
    }
    return true;
}

TrivialityOutcome triviality_test(const Signature &sig, const BilinearForm &form,
                                  std::vector<Monomial> S) {
    std::sort(S.begin(), S.end(), MonomialLess{});
    S.erase(std::unique(S.begin(), S.end()), S.end());

    // Pass 1: brackets for all ordered pairs u < v, collecting the unknowns.
    std::map<Monomial, std::size_t, MonomialLess> column;
    std::vector<Element> brackets;
    std::vector<std::pair<Monomial, Monomial>> equations;
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t bdx = a + 1; bdx < S.size(); ++bdx) {
            Element br = bracket_monomials(sig, S[a], S[bdx]);
            for (const auto &[w, c] : br.terms())
                column.emplace(w, 0);
            brackets.push_back(std::move(br));
            equations.emplace_back(S[a], S[bdx]);
        }
    std::size_t idx = 0;
    for (auto &[w, col] : column)
        col = idx++;

    RationalMatrix A(brackets.size(), column.size());
    std::vector<Rational> rhs(brackets.size());
    for (std::size_t r = 0; r < brackets.size(); ++r) {
        for (const auto &[w, c] : brackets[r].terms())
            A.at(r, column.at(w)) = c;
        rhs[r] = form(equations[r].first, equations[r].second);
    }

    SolveResult sol = solve(A, rhs);

    TrivialityOutcome out;
    out.equations = std::move(equations);
    out.unknowns.resize(column.size());
    for (const auto &[w, col] : column)
        out.unknowns[col] = w;

    if (!sol.feasible) {
        if (!certificate_verifies(A, rhs, *sol.certificate))
            throw Error("triviality_test: certificate failed re-verification");
        out.feasible = false;
        out.certificate = std::move(sol.certificate);
        return out;
    }

    if (!solution_verifies(A, rhs, sol.particular))
        throw Error("triviality_test: solution failed re-verification");
    out.feasible = true;
    for (const auto &[w, col] : column)
        if (sol.particular[col] != 0)
            out.candidate.emplace(w, sol.particular[col]);
    return out;
}

} // namespace weylk
