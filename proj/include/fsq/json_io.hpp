#pragma once

// Canonical JSON forms of the library objects. Keys are sorted (nlohmann::json
// objects are ordered maps) and rationals are written as reduced "p/q" strings, so
// equal objects serialize to identical bytes.

#include <json.hpp>
#include <string>

#include "fsq/cst.hpp"

namespace fsq::io {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

/// {"m": m, "terms": [{"blade": [1-based indices], "re": "p/q", "im": "p/q"}]}
Json to_json(const Multivector<Rational>& a);
Json to_json(const Multivector<ComplexRational>& a);
/// Floating point elements use numbers for re/im.
Json to_json(const Multivector<double>& a);
Json to_json(const Multivector<ComplexDouble>& a);

Multivector<ComplexRational> complex_clifford_from_json(const Json& j);
/// Throws DomainError when an imaginary part is non-zero.
Multivector<Rational> clifford_from_json(const Json& j);

/// {"m": m, "terms": [{"exps": [e_0..e_m], "coeff": <element>}]}
Json to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);

/// {"terms": [{"n": n, "coeff": "p/q"}]}
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

/// {"m", "order", "exact", "coeffs": [<laurent>...]}
Json to_json(const AxialSeries& s);
AxialSeries axial_series_from_json(const Json& j);

/// {"re": "p/q", "im": "p/q", "pi_half_power": k, "value": [re, im]}
Json to_json(const PiScalar& s);

/// {"m", "scale", "sign_power", "A", "B"}; A and B list terms {"x0", "r", "rho_half", "coeff"}.
Json to_json(const AxialClosedForm& f);

/// {"identity", "anchor", "m", "k", "exact", "residual", "tolerance", "pass"}, plus
/// "elapsed_ms" when timings are requested.
Json to_json(const ReportEntry& e, bool timings = false);

Json to_json(const FueterResult& r);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

/// Writes the text to a file, surfacing I/O errors as std::runtime_error.
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace fsq::io
