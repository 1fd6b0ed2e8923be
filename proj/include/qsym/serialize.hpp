// JSON and CSV views of the library's values. All maps are kept sorted, so
// serialization is deterministic and byte-stable across runs.
//
// Scalars: rationals as [num, den] (numbers when they fit in 64 bits,
// decimal strings beyond), polynomials as coefficient arrays with the
// constant term first, cyclotomic numbers as {"conductor", "coeffs"}.
#pragma once

#include <string>

#include <json.hpp>

#include "qsym/combinatorics.hpp"
#include "qsym/cyclotomic.hpp"
#include "qsym/matrix.hpp"
#include "qsym/polynomial.hpp"
#include "qsym/poset.hpp"
#include "qsym/qsym_element.hpp"

namespace qsym {

using nlohmann::json;

json to_json(const BigInt& n);
json to_json(const Rational& r);
json to_json(const QPolynomial& p);
json to_json(const CyclotomicNumber& c);
json to_json(const IndexSet& s);
json to_json(const Composition& c);
json to_json(const Permutation& p);

// Human-readable scalar for text and CSV output.
inline std::string scalar_str(const Rational& r) { return r.str(); }
inline std::string scalar_str(const QPolynomial& p) { return p.str("q"); }
inline std::string scalar_str(const CyclotomicNumber& c) { return c.str(); }

json poset_to_json(const LabelledWeightedPoset& p);
LabelledWeightedPoset poset_from_json(const json& j);
LabelledWeightedPoset poset_from_file(const std::string& path);

template <Ring R>
json qsym_to_json(const QSymElement<R>& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    terms.push_back(json{{"composition", to_json(alpha)}, {"coeff", to_json(c)}});
  }
  return json{{"basis", "M"}, {"degree", f.degree()}, {"terms", terms}};
}

template <Ring R>
json truncated_to_json(const TruncatedPolynomial<R>& f) {
  json terms = json::array();
  for (const auto& [exps, c] : f.terms()) {
    terms.push_back(json{{"exponents", exps}, {"coeff", to_json(c)}});
  }
  return json{{"vars", f.vars()}, {"terms", terms}};
}

template <Ring R>
json matrix_to_json(const ExactMatrix<R>& m) {
  json rows = json::array(), cols = json::array();
  for (const auto& s : m.row_sets()) rows.push_back(to_json(s));
  for (const auto& s : m.col_sets()) cols.push_back(to_json(s));
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

template <Ring R>
std::string matrix_to_csv(const ExactMatrix<R>& m) {
  // Set labels contain commas, so they are quoted; entries never do.
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  std::string out;
  if (!m.col_sets().empty()) {
    out += "set";
    for (const auto& s : m.col_sets()) out += "," + quoted(s.str());
    out += "\n";
  }
  for (int r = 0; r < m.rows(); ++r) {
    if (!m.row_sets().empty()) out += quoted(m.row_sets()[static_cast<size_t>(r)].str());
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0 || !m.row_sets().empty()) out += ",";
      out += scalar_str(m.at(r, c));
    }
    out += "\n";
  }
  return out;
}

}  // namespace qsym
