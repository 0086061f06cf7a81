#include "t2r/json_io.hpp"

#include <json.hpp>

namespace t2r {

namespace {

using nlohmann::json;

json word_to_json(const ColoredPermutation& g) {
  json w = json::array();
  for (const ColoredLetter& letter : g.word()) w.push_back({letter.color, letter.value});
  return w;
}

std::vector<ColoredLetter> word_from_json(const json& w) {
  if (!w.is_array()) throw UsageError("element json: word must be an array");
  std::vector<ColoredLetter> word;
  for (const auto& pair : w) {
    if (!pair.is_array() || pair.size() != 2)
      throw UsageError("element json: word entries must be [color,value] pairs");
    word.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return word;
}

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError(std::string(what) + ": malformed json");
  return j;
}

BigInt int_from_string(const std::string& s, const char* what) {
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + ": bad integer string '" + s + "'");
  }
}

}  // namespace

std::string element_to_json(const ColoredPermutation& g) {
  json j;
  j["p"] = g.p();
  j["n"] = g.n();
  j["word"] = word_to_json(g);
  return j.dump();
}

ColoredPermutation element_from_json(const std::string& text) {
  json j = parse(text, "element json");
  if (!j.contains("p") || !j.contains("n") || !j.contains("word"))
    throw UsageError("element json: need p, n, word");
  return ColoredPermutation(j["n"].get<int>(), j["p"].get<int>(), word_from_json(j["word"]));
}

std::string algebra_to_json(const AlgebraElement& x) {
  json j;
  j["p"] = x.p();
  j["n"] = x.n();
  json terms = json::array();
  for (const auto& [g, c] : x.terms()) {  // std::map iterates in canonical order
    json t;
    t["word"] = word_to_json(g);
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

AlgebraElement algebra_from_json(const std::string& text) {
  json j = parse(text, "algebra json");
  if (!j.contains("p") || !j.contains("n") || !j.contains("terms"))
    throw UsageError("algebra json: need p, n, terms");
  const int n = j["n"].get<int>();
  const int p = j["p"].get<int>();
  AlgebraElement x(n, p);
  for (const auto& t : j["terms"]) {
    if (!t.contains("word") || !t.contains("num") || !t.contains("den"))
      throw UsageError("algebra json: each term needs word, num, den");
    x.add(ColoredPermutation(n, p, word_from_json(t["word"])),
          make_rat(int_from_string(t["num"].get<std::string>(), "algebra json"),
                   int_from_string(t["den"].get<std::string>(), "algebra json")));
  }
  return x;
}

std::string spectrum_to_json(const SpectrumReport& rep) {
  json j;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["method"] = rep.method;
  json eigen = json::array();
  for (const auto& e : rep.eigenvalues) {
    json entry;
    entry["value"] = static_cast<long>(e.value.get_si());
    entry["i"] = e.i;
    entry["multiplicity"] = e.multiplicity.get_str();
    eigen.push_back(std::move(entry));
  }
  j["eigenvalues"] = std::move(eigen);
  if (!rep.factored.empty()) j["factored"] = rep.factored;
  if (!rep.char_poly_coeffs.empty()) {
    json coeffs = json::array();
    for (const BigInt& c : rep.char_poly_coeffs) coeffs.push_back(c.get_str());
    j["char_poly"] = std::move(coeffs);
  }
  return j.dump(2);
}

std::string tv_records_to_json(const std::vector<TVRecord>& records, int decimals) {
  json arr = json::array();
  for (const auto& r : records) {
    json j;
    j["k"] = r.k;
    j["c"] = double_to_decimal(r.c, decimals);
    if (r.tv_exact) {
      j["tv_exact_num"] = r.tv_exact->get_num().get_str();
      j["tv_exact_den"] = r.tv_exact->get_den().get_str();
    } else {
      j["tv_exact_num"] = double_to_decimal(r.tv_exact_est, decimals);
      j["tv_exact_den"] = "";
    }
    j["tv_upper"] = double_to_decimal(r.tv_upper, decimals);
    j["tv_limit"] = double_to_decimal(r.tv_limit, decimals);
    j["threshold_A"] = r.threshold_A;
    j["mode"] = r.mode;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace t2r
