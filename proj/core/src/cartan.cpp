#include "klr/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace klr {

CartanDatum::CartanDatum(std::vector<std::string> ids, std::vector<std::vector<int>> cartan,
                         std::vector<int> symmetrizer,
                         std::vector<std::pair<int, int>> orientation_overrides)
    : ids_(std::move(ids)), cartan_(std::move(cartan)), sym_(std::move(symmetrizer)) {
  RawDatum raw{ids_, cartan_, sym_, {}};
  auto issues = validate_datum(raw);
  if (!issues.empty()) {
    std::string msg;
    for (const auto& is : issues) msg += is.code + " (" + is.detail + "); ";
    throw err("InvalidDatum", msg);
  }
  for (auto [from, to] : orientation_overrides) {
    if (from == to || form(from, to) == 0)
      throw err("BadOrientation", "no edge between " + ids_[from] + " and " + ids_[to]);
    orient_[{std::min(from, to), std::max(from, to)}] = (from < to);
  }
}

int CartanDatum::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  throw err("UnknownIndex", id);
}

IndexClass CartanDatum::index_class(int i) const {
  if (i < 0 || i >= size()) throw err("UnknownIndex", std::to_string(i));
  if (cartan_[i][i] == 2) return IndexClass::Re;
  if (cartan_[i][i] == 0) return IndexClass::Iso;
  return IndexClass::Im;
}

bool CartanDatum::edge_oriented_from(int i, int j) const {
  if (i == j || form(i, j) == 0) throw err("BadOrientation", "not an edge");
  auto it = orient_.find({std::min(i, j), std::max(i, j)});
  const bool min_to_max = it == orient_.end() ? true : it->second;
  return (i < j) == min_to_max;
}

std::string CartanDatum::describe() const {
  std::ostringstream os;
  os << "indices:";
  for (int i = 0; i < size(); ++i) {
    os << " " << ids_[i] << "(a=" << a(i, i) << ",r=" << r(i) << ")";
  }
  return os.str();
}

RootWeight RootWeight::alpha(const CartanDatum& d, int i) {
  RootWeight w(d.size());
  w[i] = 1;
  return w;
}

int RootWeight::ht() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool RootWeight::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

RootWeight RootWeight::operator+(const RootWeight& o) const {
  RootWeight r = *this;
  for (int i = 0; i < size(); ++i) r[i] += o[i];
  return r;
}

RootWeight RootWeight::operator-(const RootWeight& o) const {
  RootWeight r = *this;
  for (int i = 0; i < size(); ++i) r[i] -= o[i];
  return r;
}

std::string RootWeight::to_string(const CartanDatum& d) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (c_[i] != 1) os << c_[i] << "*";
    os << d.id(i);
  }
  if (first) os << "0";
  return os.str();
}

DominantWeight::DominantWeight(std::vector<int> values) : v_(std::move(values)) {
  for (size_t i = 0; i < v_.size(); ++i)
    if (v_[i] < 0)
      throw err("NegativeWeight", "lambda entry " + std::to_string(i) + " = " + std::to_string(v_[i]));
}

std::vector<ValidationIssue> validate_datum(const RawDatum& raw) {
  std::vector<ValidationIssue> out;
  const size_t n = raw.ids.size();
  if (raw.cartan.size() != n) {
    out.push_back({"ShapeMismatch", "cartan matrix has " + std::to_string(raw.cartan.size()) +
                                        " rows for " + std::to_string(n) + " indices"});
    return out;
  }
  for (size_t i = 0; i < n; ++i)
    if (raw.cartan[i].size() != n) {
      out.push_back({"ShapeMismatch", "row " + std::to_string(i) + " is not square"});
      return out;
    }
  if (raw.symmetrizer.size() != n) {
    out.push_back({"ShapeMismatch", "symmetrizer size mismatch"});
    return out;
  }
  auto name = [&](size_t i) { return raw.ids[i]; };
  for (size_t i = 0; i < n; ++i) {
    const int aii = raw.cartan[i][i];
    if (aii % 2 != 0)
      out.push_back({"OddDiagonal", "a_{" + name(i) + name(i) + "} = " + std::to_string(aii)});
    else if (aii > 2)
      out.push_back({"PositiveDiagonal", "a_{" + name(i) + name(i) + "} = " + std::to_string(aii)});
    if (raw.symmetrizer[i] <= 0)
      out.push_back({"BadSymmetrizer", "r_" + name(i) + " = " + std::to_string(raw.symmetrizer[i])});
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (raw.cartan[i][j] > 0)
        out.push_back({"PositiveOffDiagonal",
                       "a_{" + name(i) + name(j) + "} = " + std::to_string(raw.cartan[i][j])});
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const long lhs = static_cast<long>(raw.symmetrizer[i]) * raw.cartan[i][j];
      const long rhs = static_cast<long>(raw.symmetrizer[j]) * raw.cartan[j][i];
      if (lhs != rhs)
        out.push_back({"NotSymmetrizable", "r_" + name(i) + "*a_{" + name(i) + name(j) + "} = " +
                                               std::to_string(lhs) + " != " + std::to_string(rhs)});
    }
  return out;
}

CartanDatum make_datum(const RawDatum& raw) {
  auto issues = validate_datum(raw);
  if (!issues.empty()) {
    std::string msg;
    for (const auto& is : issues) msg += is.code + " (" + is.detail + "); ";
    throw err("InvalidDatum", msg);
  }
  CartanDatum d(raw.ids, raw.cartan, raw.symmetrizer);
  std::vector<std::pair<int, int>> ov;
  for (const auto& [from, to] : raw.orientation) ov.emplace_back(d.index_of(from), d.index_of(to));
  return CartanDatum(raw.ids, raw.cartan, raw.symmetrizer, ov);
}

long root_form(const CartanDatum& d, const RootWeight& nu, const RootWeight& mu) {
  long s = 0;
  for (int i = 0; i < d.size(); ++i) {
    if (nu[i] == 0) continue;
    for (int j = 0; j < d.size(); ++j)
      s += static_cast<long>(nu[i]) * mu[j] * d.form(i, j);
  }
  return s;
}

long weight_pairing(const CartanDatum& d, const RootWeight& mu, int i) {
  if (i < 0 || i >= d.size()) throw err("UnknownIndex", std::to_string(i));
  long s = 0;
  for (int j = 0; j < d.size(); ++j) s += static_cast<long>(mu[j]) * d.a(i, j);
  return s;
}

long weight_pairing(const CartanDatum& d, const DominantWeight& lambda, const RootWeight& nu, int i) {
  if (i < 0 || i >= d.size()) throw err("UnknownIndex", std::to_string(i));
  return lambda[i] - weight_pairing(d, nu, i);
}

RawDatum parse_datum_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw err("BadDatumFile", e.what());
  }
  RawDatum raw;
  if (!j.contains("indices") || !j.contains("cartan"))
    throw err("BadDatumFile", "expected fields 'indices' and 'cartan'");
  for (const auto& ent : j["indices"]) {
    raw.ids.push_back(ent.at("id").get<std::string>());
    raw.symmetrizer.push_back(ent.at("r").get<int>());
  }
  for (const auto& row : j["cartan"]) raw.cartan.push_back(row.get<std::vector<int>>());
  if (j.contains("orientation"))
    for (const auto& e : j["orientation"])
      raw.orientation.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return raw;
}

std::string datum_to_json(const CartanDatum& d) {
  nlohmann::ordered_json j;
  j["indices"] = nlohmann::ordered_json::array();
  for (int i = 0; i < d.size(); ++i)
    j["indices"].push_back(nlohmann::ordered_json{{"id", d.id(i)}, {"r", d.r(i)}});
  j["cartan"] = nlohmann::ordered_json::array();
  for (int i = 0; i < d.size(); ++i) {
    std::vector<int> row;
    for (int k = 0; k < d.size(); ++k) row.push_back(d.a(i, k));
    j["cartan"].push_back(row);
  }
  return j.dump(2);
}

DominantWeight parse_weight_json(const CartanDatum& d, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw err("BadWeightFile", e.what());
  }
  std::vector<int> vals(d.size(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int idx = d.index_of(it.key());
    vals[idx] = it.value().get<int>();
    if (vals[idx] < 0) throw err("NegativeWeight", "lambda_" + it.key() + " < 0");
  }
  return DominantWeight(vals);
}

}  // namespace klr
