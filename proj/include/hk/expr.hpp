#pragma once

#include "hk/homotopy.hpp"

namespace hk::cli {

/// "A+B+C" with generator object names; "" or "0" is the zero object.
AddObject parse_object(const Category& c, std::string_view text);

/// Morphism expressions of the additive envelope:
///   sum     := ["-"] product (("+" | "-") product)*
///   product := [scalar "*"] factor ("." factor)*        g . f is the composite g∘f
///   factor  := "(" sum ")" | block | call | basis name
///   block   := "[" entry ("," entry)* (";" ...)* "]"    rows are target summands, "0" entries allowed
///   call    := id(X) | zero(X -> Y) | ev(x) | co(x) | braid(x, y) | tensor(f, g) | frobenius(p)
/// Basis names are those of a table presentation or "h<s>_<t>_<i>" (index i of hom(s, t)); the
/// diagram categories also know mu (MO), dot (EN) and iota (Seq).
Morphism parse_morphism(const Category& c, std::string_view text);

/// "X@k" concentrates an object in degree k; "d0|d1|...@k" is the complex with differentials
/// d0, d1, ... starting in degree k. "@k" defaults to degree 0.
Complex parse_complex(const Category& c, std::string_view text);

}  // namespace hk::cli
