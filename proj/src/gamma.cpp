#include "weylk/gamma.hpp"

namespace weylk {

namespace {

/// Row echelon rank by exact elimination, first-nonzero pivoting.
std::size_t rational_rank(std::vector<RatVec> rows) {
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            Rational factor = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

GammaLattice::GammaLattice(Signature sig, std::vector<RatVec> generators)
    : sig_(sig), gens_(std::move(generators)) {
    const std::size_t ell = static_cast<std::size_t>(sig_.ell());
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (gens_[k].size() != ell)
            throw DimensionMismatch("lattice generator " + std::to_string(k) +
                                    " has wrong length");
        for (std::int64_t p = 0; p < sig_.l1; ++p)
            if (gens_[k][static_cast<std::size_t>(p)] != 0)
                throw ZeroPrefixViolation("generator " + std::to_string(k) +
                                          " has a nonzero entry among the first l1 coordinates");
    }

    if (rational_rank(gens_) != gens_.size())
        throw DependentGenerators("lattice generators are linearly dependent");

    // Projection to the last ell - l1 coordinates must have full rank ell - l1.
    const std::size_t tail = ell - static_cast<std::size_t>(sig_.l1);
    std::vector<RatVec> proj;
    proj.reserve(gens_.size());
    for (const auto &g : gens_)
        proj.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(ell - tail), g.end());
    if (rational_rank(std::move(proj)) != tail)
        throw DegenerateLattice("generators do not span the last ell - l1 coordinates");
}

GammaElement GammaLattice::element(const IntVec &coeffs) const {
    if (coeffs.size() != rank())
        throw DimensionMismatch("GammaLattice::element: expected " + std::to_string(rank()) +
                                " coefficients");
    RatVec embed(static_cast<std::size_t>(sig_.ell()), Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (std::size_t q = 0; q < embed.size(); ++q)
            embed[q] += Rational(coeffs[k]) * gens_[k][q];
    return GammaElement(coeffs, std::move(embed));
}

std::optional<IntVec> GammaLattice::membership(const RatVec &vec) const {
    const std::size_t ell = static_cast<std::size_t>(sig_.ell());
    if (vec.size() != ell)
        throw DimensionMismatch("membership: vector has wrong length");

    // Solve the ell x m system (columns = generators) by exact elimination.
    const std::size_t m = rank();
    std::vector<RatVec> aug(ell, RatVec(m + 1, Rational(0)));
    for (std::size_t q = 0; q < ell; ++q) {
        for (std::size_t k = 0; k < m; ++k)
            aug[q][k] = gens_[k][q];
        aug[q][m] = vec[q];
    }

    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < m && row < ell; ++c) {
        std::size_t pivot = row;
        while (pivot < ell && aug[pivot][c] == 0)
            ++pivot;
        if (pivot == ell)
            continue;
        std::swap(aug[row], aug[pivot]);
        for (std::size_t r = 0; r < ell; ++r) {
            if (r == row || aug[r][c] == 0)
                continue;
            Rational factor = aug[r][c] / aug[row][c];
            for (std::size_t k = c; k <= m; ++k)
                aug[r][k] -= factor * aug[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    // Independence of the generators makes every column a pivot column when
    // a solution exists; leftover nonzero right-hand sides mean "not in the
    // rational span".
    for (std::size_t r = row; r < ell; ++r)
        if (aug[r][m] != 0)
            return std::nullopt;
    if (pivot_col.size() != m)
        return std::nullopt; // cannot happen for a validated lattice unless vec = 0 mismatch

    IntVec coeffs(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
        Rational value = aug[r][m] / aug[r][pivot_col[r]];
        if (denominator(value) != 1)
            return std::nullopt; // rational but non-integral combination
        Integer num = numerator(value);
        coeffs[pivot_col[r]] = static_cast<std::int64_t>(num);
    }
    return coeffs;
}

} // namespace weylk
