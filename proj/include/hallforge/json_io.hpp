#pragma once

// JSON forms of algebras, Hall polynomials and Hall elements.

#include <json.hpp>

#include "hallforge/liecomp.hpp"

namespace hallforge {

using Json = nlohmann::ordered_json;

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
Json big_json(const BigInt& v);
Json rational_json(const Rational& v);

/// {"kind","name","field":{"p","r"},"labels","mult":[[[k,c],...],...],"unit","idempotents":[[label,index],...]}
/// mult lists the products b_i b_j row-major.
Json algebra_to_json(const Algebra& a);
/// Throws InvalidArgument on malformed input or a table failing validation.
AlgebraPtr algebra_from_json(const Json& j);

/// {"triple":[x,y,m],"points":[[q,G],...],"poly":[c0,...],"holdout":[[q,G,match],...],"case":...}
Json certificate_json(const HallPolynomial& g);
Json hall_element_json(HallAlgebra& h, const HallElement& x);
Json degen_json(const DegenElement& e);

}  // namespace hallforge
