#include "qsym/serialize.hpp"

#include <fstream>

namespace qsym {

json to_json(const BigInt& n) {
  if (n.fits_int64()) return json(n.to_int64());
  return json(n.str());
}

json to_json(const Rational& r) { return json::array({to_json(r.numerator()), to_json(r.denominator())}); }

json to_json(const QPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return coeffs;
}

json to_json(const CyclotomicNumber& c) {
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(to_json(x));
  return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

json to_json(const IndexSet& s) { return json(s.members()); }

json to_json(const Composition& c) { return json(c.parts); }

json to_json(const Permutation& p) { return json(p.word); }

json poset_to_json(const LabelledWeightedPoset& p) {
  json covers = json::array();
  for (const auto& [u, v] : p.covers()) covers.push_back(json::array({u, v}));
  return json{{"n", p.size()}, {"covers", covers}, {"weights", p.weights()}};
}

LabelledWeightedPoset poset_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("poset: covers must be pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  std::vector<int> weights = j.at("weights").get<std::vector<int>>();
  return LabelledWeightedPoset(n, std::move(covers), std::move(weights));
}

LabelledWeightedPoset poset_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("poset: cannot open '" + path + "'");
  json j;
  in >> j;
  return poset_from_json(j);
}

}  // namespace qsym
