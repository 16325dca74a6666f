#ifndef HOMBI_IO_HPP
#define HOMBI_IO_HPP

#include <string>

#include <json.hpp>

#include "hombi/deformation.hpp"

namespace hombi {

/// Structure-constant file schema. All coefficients are exact rational
/// literals ("p/q" or "p", also bare JSON integers); floats are rejected.
/// Sparse triples: mu [[i,j,k,c]] means mu(e_i x e_j) has coefficient c on
/// e_k; delta [[i,j,k,c]] means Delta(e_i) has coefficient c on e_j x e_k;
/// alpha [[i,j,c]] means alpha(e_i) has coefficient c on e_j. Indices are
/// 0-based; omitted entries are zero; duplicate index tuples are rejected.
HomBialgebra bialgebra_from_json(const nlohmann::json& j);
nlohmann::json bialgebra_to_json(const HomBialgebra& b);

/// Accepts either a structure-constant object or a named builder:
/// {"builder":"taft","lambda":"2"} or {"builder":"group","n":4,"k":3}.
HomBialgebra bialgebra_spec_from_json(const nlohmann::json& j);

/// {"base": <bialgebra or builder>, "order": N,
///  "mu_terms": [per-order sparse mu tables, orders 1..N],
///  "delta_terms": [per-order sparse delta tables]}
TruncatedDeformation deformation_from_json(const nlohmann::json& j);
nlohmann::json deformation_to_json(const TruncatedDeformation& def);

/// {"order": N, "terms": [per-order sparse matrix tables [[i,j,c]], 1..N]}
GaugeTransform gauge_from_json(const nlohmann::json& j, const HomBialgebra& base);
nlohmann::json gauge_to_json(const GaugeTransform& g);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// "3/2 e1 - e3" style rendering of a column vector in basis labels.
std::string format_combination(const LinMap& column, int col, const std::vector<std::string>& labels);
/// Tensor-basis label "e1(x)e2" for a B^{otimes n} index.
std::string tensor_label(long index, int arity, const std::vector<std::string>& labels);

nlohmann::json sparse_matrix_to_json(const LinMap& m);

}  // namespace hombi

#endif
