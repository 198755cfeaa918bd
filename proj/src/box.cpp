#include "weylk/box.hpp"

namespace weylk {

namespace {

struct Ranges {
    std::vector<std::pair<std::int64_t, std::int64_t>> spans; // inclusive
};

Ranges coordinate_ranges(const Box &box, const Signature &sig, std::size_t rank) {
    Ranges r;
    for (std::size_t k = 0; k < rank; ++k)
        r.spans.push_back({-box.gammaCoeffBound, box.gammaCoeffBound});
    for (std::int64_t p = 0; p < sig.ell(); ++p) {
        if (sig.j_zero_at(p))
            r.spans.push_back({0, 0});
        else if (sig.j_nonnegative_at(p))
            r.spans.push_back({0, box.jBound});
        else
            r.spans.push_back({-box.jBound, box.jBound});
    }
    for (std::int64_t p = 0; p < sig.ell(); ++p)
        r.spans.push_back({0, box.muBound});
    return r;
}

} // namespace

std::uint64_t box_size(const Box &box, const Signature &sig, std::size_t rank) {
    std::uint64_t total = 1;
    for (auto [lo, hi] : coordinate_ranges(box, sig, rank).spans)
        total *= static_cast<std::uint64_t>(hi - lo + 1);
    return total;
}

std::vector<Monomial> enumerate_box(const Box &box, const GammaLattice &lattice) {
    const Signature &sig = lattice.signature();
    const auto rank = lattice.rank();
    const auto ell = static_cast<std::size_t>(sig.ell());
    Ranges ranges = coordinate_ranges(box, sig, rank);

    std::vector<std::int64_t> cur;
    for (auto [lo, hi] : ranges.spans)
        cur.push_back(lo);

    std::vector<Monomial> out;
    out.reserve(box_size(box, sig, rank));
    while (true) {
        IntVec coeffs(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(rank));
        IntVec i(cur.begin() + static_cast<std::ptrdiff_t>(rank),
                 cur.begin() + static_cast<std::ptrdiff_t>(rank + ell));
        IntVec mu(cur.begin() + static_cast<std::ptrdiff_t>(rank + ell), cur.end());
        out.push_back(Monomial{lattice.element(coeffs), std::move(i), std::move(mu)});

        // odometer with the last coordinate fastest
        std::size_t k = cur.size();
        while (k > 0) {
            --k;
            if (cur[k] < ranges.spans[k].second) {
                ++cur[k];
                for (std::size_t j = k + 1; j < cur.size(); ++j)
                    cur[j] = ranges.spans[j].first;
                break;
            }
            if (k == 0)
                return out;
        }
    }
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(eng_() % span);
}

Rational Rng::rational(std::int64_t bound, std::int64_t den_bound, bool nonzero) {
    while (true) {
        std::int64_t num = uniform(-bound, bound);
        if (nonzero && num == 0)
            continue;
        std::int64_t den = uniform(1, den_bound);
        return Rational(num, den);
    }
}

Monomial random_monomial(const Box &box, const GammaLattice &lattice, Rng &rng) {
    const Signature &sig = lattice.signature();
    const auto ell = static_cast<std::size_t>(sig.ell());
    IntVec coeffs(lattice.rank(), 0);
    for (auto &c : coeffs)
        c = rng.uniform(-box.gammaCoeffBound, box.gammaCoeffBound);
    IntVec i(ell, 0), mu(ell, 0);
    for (std::size_t p = 0; p < ell; ++p) {
        auto sp = static_cast<std::int64_t>(p);
        if (sig.j_zero_at(sp))
            i[p] = 0;
        else if (sig.j_nonnegative_at(sp))
            i[p] = rng.uniform(0, box.jBound);
        else
            i[p] = rng.uniform(-box.jBound, box.jBound);
        mu[p] = rng.uniform(0, box.muBound);
    }
    return Monomial{lattice.element(coeffs), std::move(i), std::move(mu)};
}

Element random_element(const Box &box, const GammaLattice &lattice, Rng &rng, int max_terms) {
    Element e(lattice.signature());
    int terms = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m = random_monomial(box, lattice, rng);
        if (e.terms().contains(m))
            continue; // keep coefficients independent of draw order
        e.add_term(m, rng.rational(9, 9, true));
    }
    return e;
}

std::map<Monomial, Rational, MonomialLess>
random_functional_values(const Box &box, const GammaLattice &lattice, Rng &rng, int entries) {
    std::map<Monomial, Rational, MonomialLess> values;
    for (int t = 0; t < entries; ++t)
        values[random_monomial(box, lattice, rng)] = rng.rational(9, 9, true);
    return values;
}

} // namespace weylk
