#pragma once

#include "weylk/algebra.hpp"
#include "weylk/gamma.hpp"

namespace weylk {

/// Parses the element expression grammar
///
///   element  := term { ("+" | "-") term } ;
///   term     := [ rational "*" ] mono ;
///   mono     := "m[" vec ";" vec ";" vec "]" ;
///   vec      := scalar { "," scalar } ;
///   rational := integer [ "/" positive-integer ] ;
///
/// with insignificant whitespace.  The three vectors are the ambient alpha
/// coordinates (rationals), the i indices and the mu exponents.  The bare
/// input "0" denotes the zero element.  Every alpha vector must solve to
/// integer Gamma coordinates (NotInGamma otherwise); i and mu are checked
/// against the J-lattice and Z_+^ell (InvalidJIndex / InvalidDerivIndex).
Element parse_element(const std::string &text, const GammaLattice &lattice);

} // namespace weylk
