#pragma once

// Text syntax for elements and polynomials.
//
//   ZMod, Table     decimal, e.g. `5` (ZMod also accepts negatives, reduced mod n)
//   GaloisField     polynomial in the generator w, e.g. `w^2 + 2w + 1`
//   MatrixRing      row-major bracket list, e.g. `[[1,0],[0,1]]`
//   MonomialAlgebra sum of coefficient-scaled words, e.g. `1 + x0 + 2x0x1`;
//                   a word is the product of its letters, so `x1x0` is 0
//   polynomial      `deg:coeff` terms joined by `+`, e.g. `0:w + 2:1`; `0` is
//                   the zero polynomial; compound coefficients print in
//                   parentheses
//
// format_* output always parses back to the same value.

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/poly.hpp"
#include "hurwitz/ring.hpp"

namespace hurwitz {

std::string format_elem(const FiniteRing& ring, Elem a);
/// Throws InvalidArgument on malformed input.
Elem parse_elem(const FiniteRing& ring, std::string_view text);

std::string format_poly(const HPoly& f);
HPoly parse_poly(const RingPtr& ring, std::string_view text);

/// `{a, b, c}` in the given order.
std::string format_elems(const FiniteRing& ring, std::span<const Elem> xs);

/// Splits at separators that are not inside (), [] or {}; pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view text, char sep);
std::string_view trim(std::string_view s);

}  // namespace hurwitz
