// Verification runner and inspection CLI for the exceptional-algebra
// toolkit. Subcommands:
//   verify         run named check suites and report pass/fail
//   dump-catalog   the 17-orbit catalog as a structured document
//   dump-operator  a named constant operator as a matrix document
//   dump-algebra   a Lie algebra basis
//   rho            the parabolic rho-coefficient of a Cartan matrix document

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "exjordan/verify.hpp"

namespace {

using namespace exj;

nlohmann::json catalog_document() {
  nlohmann::json j;
  j["orbits"] = nlohmann::json::array();
  for (const auto& d : catalog()) {
    nlohmann::json o;
    o["id"] = d.id;
    o["shape"] = d.shape.name();
    o["isotropic_class"] = d.isotropic_class;
    // classification flags of the defining line or two-space
    ThetaSubspace defining = d.shape.family == OrbitFamily::two_two_two
                                 ? d.v_a1
                                 : orbit_line(d.shape.line);
    IsotropicClass cls = classify_isotropic(defining);
    o["class_flags"] = {{"traceless", cls.traceless}};
    if (cls.dim == 2) {
      o["class_flags"]["left_null"] = cls.left_null;
      o["class_flags"]["right_null"] = cls.right_null;
    }
    o["g2_stabilizer_kind"] = g2_stabilizer_kind_name(d.g2_stabilizer_kind);
    o["representative"] = subspace_to_json(d.rep, jordan_basis_names());
    o["profile_flag1"] = d.profile1;
    o["profile_flag2"] = d.profile2;
    j["orbits"].push_back(o);
  }
  return j;
}

std::vector<Rat> parse_rat_list(const std::string& s, size_t want) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rat_from_string(tok));
  if (out.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) +
                                " comma-separated rationals, got " +
                                std::to_string(out.size()));
  return out;
}

Octonion parse_octonion(const std::string& s) {
  auto v = parse_rat_list(s, 8);
  return Octonion::from_row(v);
}

// Operator specs:
//   identity
//   heis:<x>:<y>:<z>              each an 8-tuple p/q,p/q,...
//   phi:<gamma>:<v>               each a 27-tuple
//   phi-prime:<gamma>:<v>
//   sl3:<9 entries row-major>     embedded into GL(J)
Mat parse_operator(const std::string& spec) {
  if (spec == "identity") return Mat::identity(27);
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw std::invalid_argument("empty operator spec");
  if (parts[0] == "heis" && parts.size() == 4) {
    return heis_operator(HeisenbergElement(parse_octonion(parts[1]),
                                           parse_octonion(parts[2]),
                                           parse_octonion(parts[3])));
  }
  if ((parts[0] == "phi" || parts[0] == "phi-prime") && parts.size() == 3) {
    JordanElement g = JordanElement::from_row(parse_rat_list(parts[1], 27));
    JordanElement v = JordanElement::from_row(parse_rat_list(parts[2], 27));
    return parts[0] == "phi" ? phi(g, v) : phi_prime(g, v);
  }
  if (parts[0] == "sl3" && parts.size() == 2) {
    auto e = parse_rat_list(parts[1], 9);
    Mat g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.at(i, j) = e[size_t(3 * i + j)];
    return g2_embed(sl3_action(g));
  }
  throw std::invalid_argument("unrecognized operator spec '" + spec + "'");
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(out_path, j);
}

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact split-octonion / exceptional Jordan algebra verification toolkit"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a check suite");
  std::string suite = "all";
  uint64_t seed = 0;
  int samples = 100;
  std::string format = "text";
  uint64_t prime = 10007;
  std::string out_path;
  verify->add_option("--suite", suite, "octonion|jordan|e6|orbits|liealg|rootdata|all");
  verify->add_option("--seed", seed, "random seed (reports are deterministic per seed)");
  verify->add_option("--samples", samples, "sample count for randomized property checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--prime", prime, "prime for modular cross-checks");
  verify->add_option("--out", out_path, "write the report to a file");

  // dump-catalog
  auto* dump_cat = app.add_subcommand("dump-catalog", "dump the 17-orbit catalog");
  std::string cat_out;
  dump_cat->add_option("--out", cat_out, "output file");

  // dump-operator
  auto* dump_op = app.add_subcommand("dump-operator", "dump a named constant operator");
  std::string op_spec, op_out;
  dump_op->add_option("spec", op_spec,
                      "identity | heis:<x>:<y>:<z> | phi:<g>:<v> | phi-prime:<g>:<v> | sl3:<g>")
      ->required();
  dump_op->add_option("--out", op_out, "output file");

  // dump-algebra
  auto* dump_alg = app.add_subcommand("dump-algebra", "dump a Lie algebra basis");
  std::string alg_kind, alg_out;
  dump_alg->add_option("kind", alg_kind, "g2_derivations|e6|n_radical")
      ->required()
      ->check(CLI::IsMember({"g2_derivations", "e6", "n_radical"}));
  dump_alg->add_option("--out", alg_out, "output file");
  bool with_table = false;
  dump_alg->add_flag("--stabilizer-table", with_table,
                     "include the 17-row orbit stabilizer dimension table");

  // rho
  auto* rho_cmd = app.add_subcommand("rho", "rho coefficient of a maximal parabolic");
  std::string cartan_file, rho_type;
  int rho_selected = -1;
  rho_cmd->add_option("cartan", cartan_file,
                      "Cartan matrix document (matrix + labels + selected)");
  rho_cmd->add_option("--type", rho_type, "bundled type (A1..A5, G2, D4, E6)");
  rho_cmd->add_option("--root", rho_selected, "selected simple root, 1-based");
  std::string rho_out;
  rho_cmd->add_option("--out", rho_out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (!is_prime(prime) || prime >= (uint64_t(1) << 31))
        throw std::invalid_argument("--prime must be a prime below 2^31");
      CheckContext ctx;
      ctx.seed = seed;
      ctx.samples = samples;
      ctx.prime = prime;
      SuiteReport report = run_suite(suite, ctx);
      if (format == "json") {
        emit(report_to_json(report), out_path);
      } else {
        std::string text = report_to_text(report);
        if (out_path.empty()) {
          std::cout << text;
        } else {
          std::ofstream f(out_path);
          f << text;
        }
      }
      return report.all_pass() ? 0 : 1;
    }
    if (*dump_cat) {
      emit(catalog_document(), cat_out);
      return 0;
    }
    if (*dump_op) {
      emit(mat_to_json(parse_operator(op_spec)), op_out);
      return 0;
    }
    if (*dump_alg) {
      AlgebraKind kind = alg_kind == "g2_derivations" ? AlgebraKind::g2_derivations
                         : alg_kind == "e6"           ? AlgebraKind::e6
                                                      : AlgebraKind::n_radical;
      const auto& alg = algebra_basis(kind);
      nlohmann::json j;
      j["kind"] = alg_kind;
      j["ambient"] = alg.ambient;
      j["dim"] = alg.dim();
      j["basis"] = nlohmann::json::array();
      for (const auto& b : alg.basis) j["basis"].push_back(mat_to_json(b));
      if (with_table) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& d : catalog()) {
          auto st = stabilizer_subalgebra(d.rep, lie_h_basis());
          nlohmann::json row;
          row["orbit"] = d.id;
          row["shape"] = d.shape.name();
          row["stabilizer_dim"] = st.dim;
          row["orbit_dim"] = 38 - st.dim;
          t.push_back(row);
        }
        j["stabilizer_table"] = t;
      }
      emit(j, alg_out);
      return 0;
    }
    if (*rho_cmd) {
      RootDatum rd;
      if (!rho_type.empty()) {
        rd = bundled_root_datum(rho_type, rho_selected > 0 ? rho_selected - 1 : 0);
      } else if (!cartan_file.empty()) {
        auto j = load_json(cartan_file);
        rd.cartan = mat_from_json(j.at("cartan"));
        if (j.contains("labels"))
          rd.labels = j.at("labels").get<std::vector<std::string>>();
        else
          for (int i = 0; i < rd.cartan.rows(); ++i)
            rd.labels.push_back("alpha" + std::to_string(i + 1));
        if (j.at("selected").is_number()) {
          rd.selected = j.at("selected").get<int>();
        } else {
          std::string sel = j.at("selected").get<std::string>();
          auto it = std::find(rd.labels.begin(), rd.labels.end(), sel);
          if (it == rd.labels.end())
            throw std::invalid_argument("selected label '" + sel + "' not found");
          rd.selected = int(it - rd.labels.begin());
        }
      } else {
        throw std::invalid_argument("rho: give a Cartan file or --type");
      }
      auto r = rho_coefficient(rd);
      nlohmann::json j;
      j["selected"] = rd.labels[size_t(rd.selected)];
      j["c"] = rat_to_string(r.c);
      j["modular_exponent"] = rat_to_string(r.c * 2);
      j["levi_cartan_inverse"] = mat_to_json(r.c_alpha_inv);
      j["coroot_coefficients"] = mat_to_json(r.v_alpha);
      emit(j, rho_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
