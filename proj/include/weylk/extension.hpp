#pragma once

#include "weylk/cocycle.hpp"

namespace weylk {

/// An element of the one-dimensional central extension: a body in the
/// algebra plus the coefficient of the central generator c.
struct ExtendedElement {
    Element body;
    Rational central = 0;

    static ExtendedElement from(Element e) { return {std::move(e), Rational(0)}; }
    static ExtendedElement central_only(const Signature &sig, Rational c) {
        return {Element::zero(sig), std::move(c)};
    }

    bool is_zero() const { return body.is_zero() && central == 0; }

    friend bool operator==(const ExtendedElement &a, const ExtendedElement &b) {
        return a.central == b.central && a.body == b.body;
    }
};

/// Twisted bracket: body [a, b], central coordinate form(a, b).  The
/// central parts of the inputs contribute nothing ([c, anything] = 0).
ExtendedElement ext_bracket(const ExtendedElement &a, const ExtendedElement &b,
                            const BilinearForm &form);

/// Reports every basis triple whose cyclic ext_bracket sum is nonzero in
/// the body or in the central coordinate.  The body part is the plain
/// Jacobi identity; the central part is exactly the cocycle identity.
VerificationReport check_ext_jacobi(const Signature &sig, std::span<const Monomial> box,
                                    const BilinearForm &form, unsigned workers = 1);

/// One row of the Witt-restriction regression table, using L_m = t^{m+1} d.
struct VirasoroRow {
    std::int64_t m, n;
    Rational body_coeff; // coefficient of L_{m+n} in [L_m, L_n]
    Rational central;    // form(L_m, L_n)
};

/// Rows for |m|, |n| <= bound on signature (0,0,1,0) with the gamma = 0
/// cocycle.  Throws if a bracket ever leaves the span of single L's, which
/// the product structure rules out.
std::vector<VirasoroRow> virasoro_table(const Signature &sig, std::size_t rank,
                                        std::int64_t bound);

std::string virasoro_table_text(const std::vector<VirasoroRow> &rows);
nlohmann::json virasoro_table_json(const std::vector<VirasoroRow> &rows);

} // namespace weylk
