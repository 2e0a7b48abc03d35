#pragma once

#include <string_view>

#include "srgeo/fourier/field.hpp"

namespace srgeo {

/// Parses a field literal at band limit N. Two forms are accepted:
///
///   dense:    "a0, a1, b1, a2, b2, ..."   meaning a0 + sum(a_n cos n + b_n sin n)
///   triples:  "(k, re, im) (k, re, im) ..." giving complex coefficients c_k
///             (negative k sets c_{|k|} = conj(re + i im))
///
/// Repeated triples for the same |k| accumulate. Throws InputError on
/// malformed text and DimensionError for modes beyond N.
FourierField parseFieldLiteral(std::string_view text, int bandLimit);

}  // namespace srgeo
