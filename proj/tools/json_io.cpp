#include "json_io.hpp"

#include <cstdint>
#include <utility>

namespace qpencil::cli {

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string int_str(const Int& v) { return v.get_str(); }

Json int_field(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Rat rat_from_json(const Json& v) {
  if (v.is_number_integer()) {
    return Rat(Int(static_cast<long>(v.get<std::int64_t>())));
  }
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const domain_error& e) {
      throw usage_error(e.what());
    }
  }
  throw usage_error(
      "scalars must be JSON integers or decimal/fraction strings, got: " + v.dump());
}

std::vector<Rat> coeffs_from_text(const std::string& text, const char* who) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw usage_error(std::string(who) + ": expected a JSON array of coefficients, got: " + text);
  }
  if (!doc.is_array() || doc.empty()) {
    throw usage_error(std::string(who) + ": a nonempty coefficient array is required");
  }
  std::vector<Rat> out;
  out.reserve(doc.size());
  for (const auto& item : doc) out.push_back(rat_from_json(item));
  return out;
}

QForm form_from_text(const std::string& text) {
  std::vector<Rat> coeffs = coeffs_from_text(text, "form");
  if (coeffs.size() < 2) {
    throw usage_error("form: at least two coefficients (degree >= 1) are required");
  }
  const int n = static_cast<int>(coeffs.size()) - 1;
  return binary_form_make(n, std::move(coeffs));
}

QPoly poly_from_text(const std::string& text) {
  std::vector<Rat> leading_first = coeffs_from_text(text, "form");
  std::vector<Rat> ascending(leading_first.rbegin(), leading_first.rend());
  return QPoly(std::move(ascending));
}

Json coeffs_to_json(const std::vector<Rat>& leading_first) {
  Json out = Json::array();
  for (const auto& c : leading_first) out.push_back(rat_str(c));
  return out;
}

Json form_to_json(const QForm& f) {
  Json out;
  out["n"] = f.n;
  out["coeffs"] = coeffs_to_json(f.f);
  return out;
}

Json poly_to_json(const QPoly& f) {
  if (f.is_zero()) {
    Json out = Json::array();
    out.push_back("0");
    return out;
  }
  std::vector<Rat> leading_first(f.c.rbegin(), f.c.rend());
  return coeffs_to_json(leading_first);
}

Json mat_to_json(const QMat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_str(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json pencil_to_json(const QPencil& p) {
  Json out;
  out["A"] = mat_to_json(p.A);
  out["B"] = mat_to_json(p.B);
  return out;
}

namespace {

QMat mat_from_json(const Json& doc, const char* name) {
  if (!doc.is_array() || doc.empty()) {
    throw usage_error(std::string("pencil: ") + name + " must be a nonempty array of rows");
  }
  const std::size_t rows = doc.size();
  if (!doc[0].is_array() || doc[0].empty()) {
    throw usage_error(std::string("pencil: ") + name + " rows must be nonempty arrays");
  }
  const std::size_t cols = doc[0].size();
  QMat m(rows, cols, Rat(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!doc[i].is_array() || doc[i].size() != cols) {
      throw usage_error(std::string("pencil: ") + name + " rows must all have equal length");
    }
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat_from_json(doc[i][j]);
  }
  return m;
}

}  // namespace

QPencil pencil_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("A") || !doc.contains("B")) {
    throw usage_error("pencil: expected a JSON object with matrices \"A\" and \"B\"");
  }
  QMat a = mat_from_json(doc["A"], "A");
  QMat b = mat_from_json(doc["B"], "B");
  if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows) {
    throw usage_error("pencil: A and B must be square matrices of the same size");
  }
  return QPencil{std::move(a), std::move(b)};
}

Json ideal_to_json(const FractionalIdeal& ideal) {
  Json out;
  out["den"] = int_str(ideal.den);
  Json columns = Json::array();
  for (std::size_t j = 0; j < ideal.basis.cols; ++j) {
    Json col = Json::array();
    for (std::size_t i = 0; i < ideal.basis.rows; ++i) {
      col.push_back(int_str(ideal.basis.at(i, j)));
    }
    columns.push_back(std::move(col));
  }
  out["basis"] = columns;
  return out;
}

Json coords_to_json(const std::vector<Rat>& coords) {
  Json out = Json::array();
  for (const auto& c : coords) out.push_back(rat_str(c));
  return out;
}

}  // namespace qpencil::cli
