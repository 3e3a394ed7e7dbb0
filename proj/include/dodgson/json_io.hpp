#pragma once

#include <string>
#include <string_view>

#include "dodgson/bijection.hpp"
#include "dodgson/det.hpp"
#include "dodgson/formal.hpp"
#include "dodgson/pairing.hpp"

namespace dodgson {

/// FormalPoly as a JSON array of {"cells": [[row, col], ...],
/// "coeff": "<decimal>"} in canonical term order. Coefficients travel as
/// strings, so arbitrarily large values round-trip bit-exactly.
std::string poly_to_json(const FormalPoly& p);
FormalPoly poly_from_json(std::string_view text);  // ParseError

/// Pairing as {"n": .., "class": "A"|"B"|"C", "marriages": {"man": woman},
/// "affairs": {...}} with 1-based indices. Parsing validates against the
/// class shape and throws ValidationError with the violation list.
std::string pairing_to_json(const Pairing& p, int indent = -1);
Pairing pairing_from_json(std::string_view text);

/// Accepts either a pairing object or a chain-map trace, in which case the
/// trace's "output" pairing is taken. This is what makes traces pipeable
/// back into the map ops.
Pairing pairing_from_json_or_trace(std::string_view text);

std::string weight_to_json(const FormalWeight& w, int indent = -1);

/// Chain-map trace: input pairing, the chain walked, output pairing, and
/// both weights.
std::string trace_to_json(const Pairing& input, const Chain& chain, const Pairing& output,
                          const FormalWeight& weight_in, const FormalWeight& weight_out,
                          int indent = 2);

/// Condensation run with layers as arrays of decimal strings.
std::string condensation_trace_to_json(const CondensationTrace& trace, const Scalar& value,
                                       int indent = 2);

}  // namespace dodgson
