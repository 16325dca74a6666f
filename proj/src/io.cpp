#include "hombi/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hombi {

using nlohmann::json;

namespace {

Rational coeff_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("coefficient must be a rational string or an integer, got: " + j.dump());
}

int index_from_json(const json& j, int dim, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " index must be an integer, got: " + j.dump());
  const long v = j.get<long>();
  if (v < 0 || v >= dim)
    throw ParseError(std::string(what) + " index " + std::to_string(v) + " out of range [0," + std::to_string(dim) +
                     ")");
  return static_cast<int>(v);
}

void fill_mu_table(LinMap& mu, const json& entries, int d, const char* what) {
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4) throw ParseError(std::string(what) + " entry must be [i, j, k, coeff]");
    const int i = index_from_json(e[0], d, what), j = index_from_json(e[1], d, what),
              k = index_from_json(e[2], d, what);
    if (!seen.insert({i, j, k}).second)
      throw ParseError(std::string(what) + " has a duplicate entry (" + std::to_string(i) + "," + std::to_string(j) +
                       "," + std::to_string(k) + ")");
    mu.at(k, i * d + j) = coeff_from_json(e[3]);
  }
}

void fill_delta_table(LinMap& delta, const json& entries, int d, const char* what) {
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4) throw ParseError(std::string(what) + " entry must be [i, j, k, coeff]");
    const int i = index_from_json(e[0], d, what), j = index_from_json(e[1], d, what),
              k = index_from_json(e[2], d, what);
    if (!seen.insert({i, j, k}).second)
      throw ParseError(std::string(what) + " has a duplicate entry (" + std::to_string(i) + "," + std::to_string(j) +
                       "," + std::to_string(k) + ")");
    delta.at(j * d + k, i) = coeff_from_json(e[3]);
  }
}

void fill_matrix_table(LinMap& m, const json& entries, int d, const char* what) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3) throw ParseError(std::string(what) + " entry must be [i, j, coeff]");
    const int i = index_from_json(e[0], d, what), j = index_from_json(e[1], d, what);
    if (!seen.insert({i, j}).second)
      throw ParseError(std::string(what) + " has a duplicate entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ")");
    m.at(j, i) = coeff_from_json(e[2]);
  }
}

json mu_table_to_json(const LinMap& mu, int d) {
  json out = json::array();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!is_zero(mu.at(k, i * d + j))) out.push_back({i, j, k, to_string(mu.at(k, i * d + j))});
  return out;
}

json delta_table_to_json(const LinMap& delta, int d) {
  json out = json::array();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!is_zero(delta.at(j * d + k, i))) out.push_back({i, j, k, to_string(delta.at(j * d + k, i))});
  return out;
}

json matrix_table_to_json(const LinMap& m) {
  json out = json::array();
  for (int i = 0; i < m.cols(); ++i)
    for (int j = 0; j < m.rows(); ++j)
      if (!is_zero(m.at(j, i))) out.push_back({i, j, to_string(m.at(j, i))});
  return out;
}

}  // namespace

HomBialgebra bialgebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("bialgebra document must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("missing integer field 'dim'");
  const int d = j["dim"].get<int>();
  if (d < 1) throw ParseError("'dim' must be >= 1");
  HomBialgebra b;
  b.dim = d;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != d)
      throw ParseError("'basis' must list exactly dim labels");
    for (const auto& s : j["basis"]) b.basis_labels.push_back(s.get<std::string>());
  } else {
    for (int i = 0; i < d; ++i) b.basis_labels.push_back("e" + std::to_string(i));
  }
  b.mu = LinMap::hom(d, 1, 2);
  b.delta = LinMap::hom(d, 2, 1);
  b.alpha = LinMap::hom(d, 1, 1);
  b.eta = LinMap::hom(d, 1, 0);
  b.eps = LinMap::hom(d, 0, 1);
  if (j.contains("mu")) fill_mu_table(b.mu, j["mu"], d, "mu");
  if (j.contains("delta")) fill_delta_table(b.delta, j["delta"], d, "delta");
  if (j.contains("alpha")) fill_matrix_table(b.alpha, j["alpha"], d, "alpha");
  if (j.contains("eta")) {
    if (!j["eta"].is_array() || static_cast<int>(j["eta"].size()) != d)
      throw ParseError("'eta' must list exactly dim coefficients");
    for (int i = 0; i < d; ++i) b.eta.at(i, 0) = coeff_from_json(j["eta"][i]);
  }
  if (j.contains("eps")) {
    if (!j["eps"].is_array() || static_cast<int>(j["eps"].size()) != d)
      throw ParseError("'eps' must list exactly dim coefficients");
    for (int i = 0; i < d; ++i) b.eps.at(0, i) = coeff_from_json(j["eps"][i]);
  }
  return b;
}

json bialgebra_to_json(const HomBialgebra& b) {
  json j;
  j["dim"] = b.dim;
  j["basis"] = b.basis_labels;
  j["mu"] = mu_table_to_json(b.mu, b.dim);
  j["delta"] = delta_table_to_json(b.delta, b.dim);
  json eta = json::array(), eps = json::array();
  for (int i = 0; i < b.dim; ++i) {
    eta.push_back(to_string(b.eta.at(i, 0)));
    eps.push_back(to_string(b.eps.at(0, i)));
  }
  j["eta"] = eta;
  j["eps"] = eps;
  j["alpha"] = matrix_table_to_json(b.alpha);
  return j;
}

HomBialgebra bialgebra_spec_from_json(const json& j) {
  if (j.is_object() && j.contains("builder")) {
    const std::string name = j["builder"].get<std::string>();
    if (name == "taft") {
      if (!j.contains("lambda")) throw ParseError("taft builder needs 'lambda'");
      return build_taft(coeff_from_json(j["lambda"]));
    }
    if (name == "group") {
      if (!j.contains("n") || !j.contains("k")) throw ParseError("group builder needs 'n' and 'k'");
      return build_group_algebra(j["n"].get<int>(), j["k"].get<int>());
    }
    throw ParseError("unknown builder '" + name + "' (expected taft or group)");
  }
  return bialgebra_from_json(j);
}

TruncatedDeformation deformation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base")) throw ParseError("deformation document needs a 'base'");
  HomBialgebra base = bialgebra_spec_from_json(j["base"]);
  if (!j.contains("order") || !j["order"].is_number_integer()) throw ParseError("missing integer field 'order'");
  const int n = j["order"].get<int>();
  if (n < 1) throw ParseError("'order' must be >= 1");
  const int d = base.dim;
  std::vector<LinMap> mu_tail(n, LinMap::hom(d, 1, 2));
  std::vector<LinMap> delta_tail(n, LinMap::hom(d, 2, 1));
  if (j.contains("mu_terms")) {
    const auto& terms = j["mu_terms"];
    if (!terms.is_array() || static_cast<int>(terms.size()) > n)
      throw ParseError("'mu_terms' must list at most 'order' tables");
    for (size_t s = 0; s < terms.size(); ++s) fill_mu_table(mu_tail[s], terms[s], d, "mu_terms");
  }
  if (j.contains("delta_terms")) {
    const auto& terms = j["delta_terms"];
    if (!terms.is_array() || static_cast<int>(terms.size()) > n)
      throw ParseError("'delta_terms' must list at most 'order' tables");
    for (size_t s = 0; s < terms.size(); ++s) fill_delta_table(delta_tail[s], terms[s], d, "delta_terms");
  }
  try {
    return make_deformation(std::move(base), std::move(mu_tail), std::move(delta_tail));
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("invalid deformation: ") + e.what());
  }
}

json deformation_to_json(const TruncatedDeformation& def) {
  json j;
  j["base"] = bialgebra_to_json(def.base);
  j["order"] = def.order;
  json mu_terms = json::array(), delta_terms = json::array();
  for (int s = 1; s <= def.order; ++s) {
    mu_terms.push_back(mu_table_to_json(def.mu_terms[s], def.base.dim));
    delta_terms.push_back(delta_table_to_json(def.delta_terms[s], def.base.dim));
  }
  j["mu_terms"] = mu_terms;
  j["delta_terms"] = delta_terms;
  return j;
}

GaugeTransform gauge_from_json(const json& j, const HomBialgebra& base) {
  if (!j.is_object() || !j.contains("order")) throw ParseError("gauge document needs 'order'");
  const int n = j["order"].get<int>();
  if (n < 1) throw ParseError("gauge 'order' must be >= 1");
  std::vector<LinMap> tail(n, LinMap::hom(base.dim, 1, 1));
  if (j.contains("terms")) {
    const auto& terms = j["terms"];
    if (!terms.is_array() || static_cast<int>(terms.size()) > n)
      throw ParseError("'terms' must list at most 'order' tables");
    for (size_t s = 0; s < terms.size(); ++s) fill_matrix_table(tail[s], terms[s], base.dim, "gauge terms");
  }
  try {
    return make_gauge(base, std::move(tail));
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("invalid gauge: ") + e.what());
  }
}

json gauge_to_json(const GaugeTransform& g) {
  json j;
  j["order"] = g.order;
  json terms = json::array();
  for (int s = 1; s <= g.order; ++s) terms.push_back(matrix_table_to_json(g.terms[s]));
  j["terms"] = terms;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("JSON parse error in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

std::string tensor_label(long index, int arity, const std::vector<std::string>& labels) {
  const int d = static_cast<int>(labels.size());
  if (arity == 0) return "1";
  std::vector<int> digits(arity);
  for (int s = arity - 1; s >= 0; --s) {
    digits[s] = static_cast<int>(index % d);
    index /= d;
  }
  std::string out;
  for (int s = 0; s < arity; ++s) {
    if (s) out += "(x)";
    out += labels[digits[s]];
  }
  return out;
}

std::string format_combination(const LinMap& column, int col, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  const int arity = column.cod_arity() >= 0 ? column.cod_arity() : 1;
  for (int i = 0; i < column.rows(); ++i) {
    const Rational& c = column.at(i, col);
    if (is_zero(c)) continue;
    const std::string label = tensor_label(i, arity, labels);
    if (first) {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << to_string(c) << " ";
      first = false;
    } else {
      os << (sign(c) > 0 ? " + " : " - ");
      Rational a = abs(c);
      if (a != 1) os << to_string(a) << " ";
    }
    os << label;
  }
  if (first) os << "0";
  return os.str();
}

json sparse_matrix_to_json(const LinMap& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m.at(i, j))) out.push_back({i, j, to_string(m.at(i, j))});
  return out;
}

}  // namespace hombi
