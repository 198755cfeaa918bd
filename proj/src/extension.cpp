#include "weylk/extension.hpp"

#include <array>

#include "weylk/parallel.hpp"

namespace weylk {

ExtendedElement ext_bracket(const ExtendedElement &a, const ExtendedElement &b,
                            const BilinearForm &form) {
    if (a.body.signature() != b.body.signature())
        throw DimensionMismatch("ext_bracket: signature mismatch");
    return {bracket(a.body, b.body), form(a.body, b.body)};
}

VerificationReport check_ext_jacobi(const Signature &sig, std::span<const Monomial> box,
                                    const BilinearForm &form, unsigned workers) {
    const std::size_t n = box.size();
    std::vector<ExtendedElement> lifted;
    lifted.reserve(n);
    for (const auto &m : box)
        lifted.push_back(ExtendedElement::from(Element::monomial(sig, m)));

    // All inner pair brackets up front; each triple then needs only the
    // three outer brackets.
    std::vector<ExtendedElement> inner(n * n, ExtendedElement::from(Element::zero(sig)));
    parallel_chunks(n, workers, [&](unsigned, std::size_t lo, std::size_t hi) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b)
                inner[a * n + b] = ext_bracket(lifted[a], lifted[b], form);
    });

    std::vector<VerificationReport> parts(workers == 0 ? 1 : workers);
    parallel_chunks(n, workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
        VerificationReport &rep = parts[w];
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    ++rep.checked;
                    ExtendedElement sum = ext_bracket(inner[a * n + b], lifted[c], form);
                    ExtendedElement t2 = ext_bracket(inner[b * n + c], lifted[a], form);
                    ExtendedElement t3 = ext_bracket(inner[c * n + a], lifted[b], form);
                    sum.body += t2.body;
                    sum.body += t3.body;
                    sum.central += t2.central + t3.central;
                    if (!sum.is_zero())
                        rep.add_failure(print_monomial(box[a]) + " , " + print_monomial(box[b]) +
                                            " , " + print_monomial(box[c]),
                                        "0",
                                        "body " + print_element(sum.body) + ", central " +
                                            rat_to_string(sum.central));
                }
    });

    VerificationReport rep;
    rep.suite = "extension-jacobi";
    for (auto &p : parts)
        rep.absorb(std::move(p));
    rep.sort_failures();
    return rep;
}

std::vector<VirasoroRow> virasoro_table(const Signature &sig, std::size_t rank,
                                        std::int64_t bound) {
    if (sig != Signature{0, 0, 1, 0})
        throw ConfigError("virasoro table requires signature (0,0,1,0)");
    const auto ell = static_cast<std::size_t>(sig.ell());
    GammaElement zero = GammaElement::zero(rank, ell);
    BilinearForm form = phi_gamma_form(sig, zero);

    auto L = [&](std::int64_t m) {
        return Monomial{zero, IntVec{m + 1}, IntVec{1}};
    };

    std::vector<VirasoroRow> rows;
    for (std::int64_t m = -bound; m <= bound; ++m)
        for (std::int64_t n = -bound; n <= bound; ++n) {
            Element br = bracket_monomials(sig, L(m), L(n));
            Monomial target = L(m + n);
            Rational coeff = 0;
            for (const auto &[w, c] : br.terms()) {
                if (w == target)
                    coeff = c;
                else
                    throw Error("virasoro table: bracket left the Witt span");
            }
            rows.push_back({m, n, coeff, form(L(m), L(n))});
        }
    return rows;
}

std::string virasoro_table_text(const std::vector<VirasoroRow> &rows) {
    std::string s = "    m     n   body  central\n";
    for (const auto &r : rows) {
        auto pad = [](std::string v, std::size_t w) {
            return v.size() >= w ? v : std::string(w - v.size(), ' ') + v;
        };
        s += pad(std::to_string(r.m), 5) + " " + pad(std::to_string(r.n), 5) + " " +
             pad(rat_to_string(r.body_coeff), 6) + " " + pad(rat_to_string(r.central), 8) + "\n";
    }
    return s;
}

nlohmann::json virasoro_table_json(const std::vector<VirasoroRow> &rows) {
    auto arr = nlohmann::json::array();
    for (const auto &r : rows)
        arr.push_back({{"m", r.m},
                       {"n", r.n},
                       {"body", rat_to_string(r.body_coeff)},
                       {"central", rat_to_string(r.central)}});
    return arr;
}

} // namespace weylk
