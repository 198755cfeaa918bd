#include "weylk/parser.hpp"

#include <cctype>
#include <limits>

namespace weylk {

namespace {

class Scanner {
public:
    Scanner(const std::string &text, const GammaLattice &lattice)
        : text_(text), lattice_(lattice), sig_(lattice.signature()) {}

    Element parse() {
        skip_ws();
        // Bare "0" is the zero element; the grammar has no empty sum.
        if (peek() == '0') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ == text_.size())
                return Element::zero(sig_);
            pos_ = save;
        }
        Element e = Element::zero(sig_);
        accumulate(e, 1);
        while (true) {
            skip_ws();
            if (pos_ == text_.size())
                return e;
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                accumulate(e, c == '+' ? 1 : -1);
            } else {
                fail("'+', '-' or end of input");
            }
        }
    }

private:
    void accumulate(Element &e, int sign) {
        skip_ws();
        Rational coeff = 1;
        if (peek() != 'm') {
            coeff = rational();
            skip_ws();
            expect('*');
        }
        Monomial m = mono();
        e.add_term(m, Rational(sign) * coeff);
    }

    Monomial mono() {
        skip_ws();
        expect('m');
        expect('[');
        RatVec alpha = rat_vec();
        expect(';');
        IntVec i = int_vec();
        expect(';');
        IntVec mu = int_vec();
        expect(']');

        const auto ell = static_cast<std::size_t>(sig_.ell());
        if (alpha.size() != ell)
            fail(std::to_string(ell) + " alpha coordinates, got " + std::to_string(alpha.size()));
        auto coeffs = lattice_.membership(alpha);
        if (!coeffs)
            throw NotInGamma("alpha vector is not an integer combination of the Gamma generators");
        validate_j_index(sig_, i);      // InvalidJIndex on violation
        validate_deriv_index(sig_, mu); // InvalidDerivIndex on violation
        return Monomial{lattice_.element(*coeffs), std::move(i), std::move(mu)};
    }

    RatVec rat_vec() {
        RatVec v;
        v.push_back(rational());
        while (true) {
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                v.push_back(rational());
            } else {
                return v;
            }
        }
    }

    IntVec int_vec() {
        IntVec v;
        v.push_back(integer());
        while (true) {
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                v.push_back(integer());
            } else {
                return v;
            }
        }
    }

    Rational rational() {
        Integer num = big_integer();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            std::size_t at = pos_;
            Integer den = big_integer();
            if (den <= 0) {
                pos_ = at;
                fail("positive denominator");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::int64_t integer() {
        std::size_t at = pos_;
        Integer v = big_integer();
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min()) {
            pos_ = at;
            fail("an index of machine-integer size");
        }
        return static_cast<std::int64_t>(v);
    }

    Integer big_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-')
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("digits");
        return Integer(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(std::string("'") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string &expected) { throw SyntaxError(pos_, expected); }

    const std::string &text_;
    const GammaLattice &lattice_;
    Signature sig_;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_element(const std::string &text, const GammaLattice &lattice) {
    return Scanner(text, lattice).parse();
}

} // namespace weylk
