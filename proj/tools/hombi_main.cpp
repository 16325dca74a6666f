// hombi: exact-arithmetic calculator for Hom-bialgebra structure constants,
// their bicomplex cohomology, antipodes and truncated formal deformations.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hombi/convolution.hpp"
#include "hombi/io.hpp"

using nlohmann::json;
using namespace hombi;

namespace {

struct GlobalOpts {
  bool json_out = false;
  bool quiet = false;
};

struct BialgebraInput {
  std::string path;
  std::string builder;
  std::string lambda = "1";
  int n = 2, k = 1;

  HomBialgebra resolve() const {
    if (!builder.empty()) {
      json spec = {{"builder", builder}};
      if (builder == "taft") spec["lambda"] = lambda;
      if (builder == "group") {
        spec["n"] = n;
        spec["k"] = k;
      }
      return bialgebra_spec_from_json(spec);
    }
    if (path.empty()) throw ParseError("no input: give a file or --builder");
    return bialgebra_spec_from_json(load_json_file(path));
  }
};

void add_input_options(CLI::App* cmd, BialgebraInput& in, bool positional_required) {
  auto* pos = cmd->add_option("input", in.path, "structure-constant JSON file");
  if (positional_required) pos->check(CLI::ExistingFile);
  cmd->add_option("--builder", in.builder, "named builder: taft or group");
  cmd->add_option("--lambda", in.lambda, "taft builder parameter (rational)");
  cmd->add_option("--n", in.n, "group builder: cyclic order");
  cmd->add_option("--k", in.k, "group builder: endomorphism exponent");
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (!g.quiet) std::cout << text;
}

void write_or_print(const GlobalOpts& g, const std::string& out_path, const json& doc) {
  if (out_path.empty()) {
    if (!g.quiet) std::cout << doc.dump(2) << "\n";
  } else {
    write_json_file(out_path, doc);
    emit(g, "wrote " + out_path + "\n");
  }
}

int run_validate(const GlobalOpts& g, const BialgebraInput& in) {
  const HomBialgebra b = in.resolve();
  const AxiomReport rep = validate(b);
  if (g.json_out) {
    json j;
    j["all_pass"] = rep.all_pass();
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"axiom", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    j["checks"] = checks;
    emit(g, j.dump(2) + "\n");
  } else {
    emit(g, rep.summary());
    emit(g, rep.all_pass() ? "all axioms hold\n" : "axiom failure\n");
  }
  return rep.all_pass() ? 0 : 1;
}

json cochain_vector_to_json(const CochainVector& v) {
  json comps = json::array();
  for (const auto& c : v.components)
    comps.push_back({{"p", c.p}, {"q", c.q}, {"entries", sparse_matrix_to_json(c.map)}});
  return {{"n", v.n}, {"components", comps}};
}

int run_cohomology(const GlobalOpts& g, const BialgebraInput& in, int n, bool representatives) {
  const HomBialgebra b = in.resolve();
  GsComplex gs(b);
  const CohomologyReport rep = gs.cohomology(n);
  if (g.json_out) {
    json j = {{"n", n},
              {"dim_ambient", rep.dim_ambient},
              {"dim_Z", rep.dim_Z},
              {"dim_B", rep.dim_B},
              {"dim_H", rep.dim_H}};
    if (representatives) {
      json reps = json::array();
      for (const auto& v : rep.representatives) reps.push_back(cochain_vector_to_json(v));
      j["representatives"] = reps;
    }
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "dim C^" << n << " = " << rep.dim_ambient << " (alpha-commuting), dim Z^" << n << " = " << rep.dim_Z
       << ", dim B^" << n << " = " << rep.dim_B << ", dim H^" << n << " = " << rep.dim_H << "\n";
    if (representatives) {
      int idx = 0;
      for (const auto& v : rep.representatives) {
        os << "representative " << ++idx << ":\n";
        for (const auto& c : v.components)
          os << "  (p,q)=(" << c.p << "," << c.q << "): " << sparse_matrix_to_json(c.map).dump() << "\n";
      }
    }
    emit(g, os.str());
  }
  return 0;
}

int run_antipode(const GlobalOpts& g, const BialgebraInput& in) {
  const HomBialgebra b = in.resolve();
  const AntipodeResult res = antipode_solve_full(b);
  if (g.json_out) {
    json j;
    j["exists"] = res.antipode.has_value();
    j["solution_space_dim"] = res.solution_space_dim;
    if (res.antipode) j["antipode"] = sparse_matrix_to_json(*res.antipode);
    emit(g, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  if (!res.antipode) {
    os << "no antipode\n";
  } else {
    for (int i = 0; i < b.dim; ++i)
      os << "S(" << b.basis_labels[i] << ") = " << format_combination(*res.antipode, i, b.basis_labels) << "\n";
    if (res.solution_space_dim > 0)
      os << "warning: antipode is not unique (solution space has dimension " << res.solution_space_dim << ")\n";
    else
      os << "antipode is unique\n";
  }
  emit(g, os.str());
  return 0;
}

int run_dual(const GlobalOpts& g, const BialgebraInput& in, const std::string& out) {
  write_or_print(g, out, bialgebra_to_json(dual(in.resolve())));
  return 0;
}

int run_tensor(const GlobalOpts& g, const std::string& p1, const std::string& p2, const std::string& out) {
  const HomBialgebra b1 = bialgebra_spec_from_json(load_json_file(p1));
  const HomBialgebra b2 = bialgebra_spec_from_json(load_json_file(p2));
  write_or_print(g, out, bialgebra_to_json(tensor_product(b1, b2)));
  return 0;
}

LinMap beta_from_options(const HomBialgebra& base, const std::string& beta_path, bool beta_alpha) {
  if (beta_alpha) return base.alpha;
  if (beta_path.empty()) throw ParseError("give --beta <matrix file> or --beta-alpha");
  const json j = load_json_file(beta_path);
  LinMap beta = LinMap::hom(base.dim, 1, 1);
  if (!j.is_array()) throw ParseError("beta file must be a sparse matrix table [[i,j,coeff]]");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw ParseError("beta entry must be [i, j, coeff]");
    const int i = e[0].get<int>(), jj = e[1].get<int>();
    if (i < 0 || i >= base.dim || jj < 0 || jj >= base.dim) throw ParseError("beta index out of range");
    beta.at(jj, i) = parse_rational(e[2].is_string() ? e[2].get<std::string>() : e[2].dump());
  }
  return beta;
}

int run_twist(const GlobalOpts& g, const BialgebraInput& in, const std::string& beta_path, bool beta_alpha,
              const std::string& out) {
  const HomBialgebra b = in.resolve();
  write_or_print(g, out, bialgebra_to_json(yau_twist(b, beta_from_options(b, beta_path, beta_alpha))));
  return 0;
}

int run_deform_residuals(const GlobalOpts& g, const TruncatedDeformation& def) {
  const ResidualReport rep = residuals(def);
  std::ostringstream os;
  json j = json::array();
  for (const auto& r : rep.per_order) {
    if (g.json_out) {
      j.push_back({{"order", r.order},
                   {"assoc_zero", r.assoc.is_zero()},
                   {"coassoc_zero", r.coassoc.is_zero()},
                   {"compat_zero", r.compat.is_zero()}});
    } else {
      os << "order " << r.order << ": assoc " << (r.assoc.is_zero() ? "ok" : "NONZERO") << ", coassoc "
         << (r.coassoc.is_zero() ? "ok" : "NONZERO") << ", compat " << (r.compat.is_zero() ? "ok" : "NONZERO")
         << "\n";
    }
  }
  emit(g, g.json_out ? j.dump(2) + "\n" : os.str());
  return rep.all_ok() ? 0 : 1;
}

int run_deform_obstruction(const GlobalOpts& g, const TruncatedDeformation& def, int order) {
  const Obstruction obs = obstruction(def, order);
  if (g.json_out) {
    json j;
    j["order"] = obs.order;
    j["obstruction"] = cochain_vector_to_json(obs.cochain);
    j["extendable"] = obs.witness.has_value();
    if (obs.witness) j["witness"] = cochain_vector_to_json(*obs.witness);
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "order-" << obs.order << " obstruction components:\n";
    for (const auto& c : obs.cochain.components)
      os << "  (p,q)=(" << c.p << "," << c.q << "): " << sparse_matrix_to_json(c.map).dump() << "\n";
    if (obs.witness) {
      os << "extendable: yes; witness (Delta_" << order << ", mu_" << order << "):\n";
      for (const auto& c : obs.witness->components)
        os << "  (p,q)=(" << c.p << "," << c.q << "): " << sparse_matrix_to_json(c.map).dump() << "\n";
    } else {
      os << "extendable: no (obstruction is not a coboundary)\n";
    }
    emit(g, os.str());
  }
  return obs.witness ? 0 : 1;
}

int run_deform_normalize(const GlobalOpts& g, const TruncatedDeformation& def, const std::string& out_def,
                         const std::string& out_gauge) {
  auto [norm, gauge] = normalize_unit(def);
  if (!out_def.empty() || !out_gauge.empty()) {
    if (!out_def.empty()) write_json_file(out_def, deformation_to_json(norm));
    if (!out_gauge.empty()) write_json_file(out_gauge, gauge_to_json(gauge));
    emit(g, "normalized deformation and gauge written\n");
  } else {
    json j = {{"deformation", deformation_to_json(norm)}, {"gauge", gauge_to_json(gauge)}};
    emit(g, j.dump(2) + "\n");
  }
  bool ok = true;
  for (const auto& st : check_unit_counit(norm)) ok = ok && st.ok();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hom-bialgebra engine: axioms, cohomology, antipodes, deformations"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand
  GlobalOpts g;
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_flag("--quiet", g.quiet, "suppress output, use exit code only");

  BialgebraInput val_in;
  auto* c_val = app.add_subcommand("validate", "check all defining identities of a structure-constant file");
  add_input_options(c_val, val_in, false);

  BialgebraInput coh_in;
  std::vector<std::string> coh_args;
  bool coh_reps = false;
  auto* c_coh = app.add_subcommand("cohomology", "dimensions of Z^n, B^n, H^n and representatives");
  c_coh->add_option("--builder", coh_in.builder, "named builder: taft or group");
  c_coh->add_option("--lambda", coh_in.lambda, "taft builder parameter (rational)");
  c_coh->add_option("--n", coh_in.n, "group builder: cyclic order");
  c_coh->add_option("--k", coh_in.k, "group builder: endomorphism exponent");
  c_coh->add_option("args", coh_args, "[input.json] n")->expected(1, 2);
  c_coh->add_flag("--representatives", coh_reps, "print chosen representatives");

  BialgebraInput ant_in;
  auto* c_ant = app.add_subcommand("antipode", "solve the antipode system");
  add_input_options(c_ant, ant_in, false);

  BialgebraInput dual_in;
  std::string dual_out;
  auto* c_dual = app.add_subcommand("dual", "dual Hom-bialgebra under the dual basis");
  add_input_options(c_dual, dual_in, false);
  c_dual->add_option("-o,--output", dual_out, "output file");

  std::string tensor_a, tensor_b, tensor_out;
  auto* c_tensor = app.add_subcommand("tensor", "tensor product of two Hom-bialgebras");
  c_tensor->add_option("first", tensor_a)->required()->check(CLI::ExistingFile);
  c_tensor->add_option("second", tensor_b)->required()->check(CLI::ExistingFile);
  c_tensor->add_option("-o,--output", tensor_out, "output file");

  BialgebraInput twist_in;
  std::string twist_beta, twist_out;
  bool twist_beta_alpha = false;
  auto* c_twist = app.add_subcommand("twist", "Yau twist by a Hom-bialgebra morphism");
  add_input_options(c_twist, twist_in, false);
  c_twist->add_option("--beta", twist_beta, "sparse matrix file for beta");
  c_twist->add_flag("--beta-alpha", twist_beta_alpha, "use the structure twist alpha as beta");
  c_twist->add_option("-o,--output", twist_out, "output file");

  std::string def_path;
  auto* c_def = app.add_subcommand("deform", "operations on truncated formal deformations");
  c_def->add_option("input", def_path, "deformation JSON file")->required()->check(CLI::ExistingFile);
  c_def->require_subcommand(1);
  auto* c_res = c_def->add_subcommand("residuals", "deformation-equation residuals per order");
  int obs_order = 1;
  auto* c_obs = c_def->add_subcommand("obstruction", "order-s obstruction and extension witness");
  c_obs->add_option("--order", obs_order, "order s")->required();
  std::string phi_path, gauge_out;
  auto* c_gauge = c_def->add_subcommand("gauge", "apply a formal automorphism");
  c_gauge->add_option("--phi", phi_path, "gauge JSON file")->required()->check(CLI::ExistingFile);
  c_gauge->add_option("-o,--output", gauge_out, "output deformation file");
  std::string norm_out_def, norm_out_gauge;
  auto* c_norm = c_def->add_subcommand("normalize-unit", "gauge to a unital and counital deformation");
  c_norm->add_option("--out-deformation", norm_out_def, "output deformation file");
  c_norm->add_option("--out-gauge", norm_out_gauge, "output gauge file");
  std::string dtwist_beta, dtwist_out;
  bool dtwist_beta_alpha = false;
  auto* c_dtwist = c_def->add_subcommand("twist", "term-wise Yau twist of the deformation");
  c_dtwist->add_option("--beta", dtwist_beta, "sparse matrix file for beta");
  c_dtwist->add_flag("--beta-alpha", dtwist_beta_alpha, "use the structure twist alpha as beta");
  c_dtwist->add_option("-o,--output", dtwist_out, "output deformation file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_val->parsed()) return run_validate(g, val_in);
    if (c_coh->parsed()) {
      int coh_n = 0;
      if (coh_args.size() == 2) {
        coh_in.path = coh_args[0];
        coh_n = std::stoi(coh_args[1]);
      } else if (coh_args.size() == 1 && !coh_in.builder.empty()) {
        coh_n = std::stoi(coh_args[0]);
      } else {
        throw ParseError("usage: cohomology <input.json> <n>  or  cohomology --builder ... <n>");
      }
      if (coh_n < 1) throw ParseError("total degree must be >= 1");
      return run_cohomology(g, coh_in, coh_n, coh_reps);
    }
    if (c_ant->parsed()) return run_antipode(g, ant_in);
    if (c_dual->parsed()) return run_dual(g, dual_in, dual_out);
    if (c_tensor->parsed()) return run_tensor(g, tensor_a, tensor_b, tensor_out);
    if (c_twist->parsed()) return run_twist(g, twist_in, twist_beta, twist_beta_alpha, twist_out);
    if (c_def->parsed()) {
      const TruncatedDeformation def = deformation_from_json(load_json_file(def_path));
      if (c_res->parsed()) return run_deform_residuals(g, def);
      if (c_obs->parsed()) return run_deform_obstruction(g, def, obs_order);
      if (c_gauge->parsed()) {
        const GaugeTransform phi = gauge_from_json(load_json_file(phi_path), def.base);
        write_or_print(g, gauge_out, deformation_to_json(apply_gauge(def, phi)));
        return 0;
      }
      if (c_norm->parsed()) return run_deform_normalize(g, def, norm_out_def, norm_out_gauge);
      if (c_dtwist->parsed()) {
        const LinMap beta = beta_from_options(def.base, dtwist_beta, dtwist_beta_alpha);
        write_or_print(g, dtwist_out, deformation_to_json(twist_deformation(def, beta)));
        return 0;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
