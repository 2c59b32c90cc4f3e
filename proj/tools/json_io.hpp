#pragma once

/// @file json_io.hpp
/// JSON (de)serialization for the command line tool. Every exact scalar
/// crosses the boundary as a decimal string ("p/q" for non-integers);
/// counting reports additionally use plain JSON integers where the value
/// fits. Forms and polynomials are exchanged leading coefficient first.

#include <string>
#include <vector>

#include "json.hpp"
#include "qpencil/binary_form.hpp"
#include "qpencil/etale.hpp"
#include "qpencil/ideal.hpp"
#include "qpencil/pencil.hpp"
#include "qpencil/poly.hpp"

namespace qpencil::cli {

using Json = nlohmann::ordered_json;

/// Malformed input (unparseable flags, bad shapes): exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rat_str(const Rat& r);
std::string int_str(const Int& v);

/// JSON integer when the value fits in 64 bits, decimal string otherwise.
Json int_field(const Int& v);

/// Parses one scalar: a JSON integer, or a string holding a decimal
/// integer or "p/q". Floats are rejected.
Rat rat_from_json(const Json& v);

/// Parses a nonempty JSON array literal of scalars, leading first.
std::vector<Rat> coeffs_from_text(const std::string& text, const char* who);

QForm form_from_text(const std::string& text);
QPoly poly_from_text(const std::string& text);

Json coeffs_to_json(const std::vector<Rat>& leading_first);
Json form_to_json(const QForm& f);
Json poly_to_json(const QPoly& f);
Json mat_to_json(const QMat& m);
Json pencil_to_json(const QPencil& p);
QPencil pencil_from_json(const Json& doc);
Json ideal_to_json(const FractionalIdeal& ideal);
Json coords_to_json(const std::vector<Rat>& coords);

}  // namespace qpencil::cli
