#include "verlinde/cli.hpp"

#include "verlinde/errors.hpp"
#include "verlinde/group_spec.hpp"
#include "verlinde/modular.hpp"
#include "verlinde/nsc.hpp"
#include "verlinde/repro.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace verlinde {

namespace {

using nlohmann::json;

Int env_basis_cap() {
  if (const char* v = std::getenv("VERLINDE_BASIS_CAP")) {
    const long long n = std::atoll(v);
    if (n < 1) throw invalid_input("VERLINDE_BASIS_CAP must be a positive integer");
    return n;
  }
  return kDefaultBasisCap;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (Eigen::Index i = 0; i < w.labels.size(); ++i) a.push_back(w.labels[i]);
  return a;
}

json weights_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const Weight& w : ws) a.push_back(weight_json(w));
  return a;
}

json fusion_element_json(const FusionElement& e) {
  json terms = json::array();
  for (const auto& [w, n] : e.terms) terms.push_back({{"weight", weight_json(w)}, {"coeff", n}});
  return {{"level", e.level}, {"terms", terms}};
}

// Weight labels from "1,0,2"; with spin=true a single entry may be a
// half-integer spin like "3/2" or "1.5" that doubles to the Dynkin label.
Weight parse_weight_arg(const std::string& text, int rank, bool spin) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != rank)
    throw invalid_input("weight '" + text + "' has " + std::to_string(parts.size()) +
                        " labels, expected " + std::to_string(rank));
  IntVector labels(rank);
  for (int i = 0; i < rank; ++i) {
    const std::string& p = parts[i];
    try {
      if (spin) {
        long long num = 0, den = 1;
        if (auto slash = p.find('/'); slash != std::string::npos) {
          num = std::stoll(p.substr(0, slash));
          den = std::stoll(p.substr(slash + 1));
        } else if (p.find('.') != std::string::npos) {
          const double j = std::stod(p);
          num = std::llround(2 * j);
          den = 2;
          if (std::abs(2 * j - static_cast<double>(num)) > 1e-9)
            throw invalid_input("spin '" + p + "' is not a half-integer");
        } else {
          num = std::stoll(p);
        }
        const Rational label = Rational(2) * Rational(num, den);
        labels[i] = to_int64_exact(label);
      } else {
        std::size_t used = 0;
        labels[i] = std::stoll(p, &used);
        if (used != p.size()) throw invalid_input("");
      }
    } catch (const std::exception&) {
      throw invalid_input("bad weight label '" + p + "' in '" + text + "'");
    }
  }
  return Weight(labels);
}

std::string double_str(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct Request {
  std::string command;
  std::string group;
  bool has_level = false;
  Int level = 0;
  std::string format = "json";
  double tolerance = 1e-8;
};

void emit(const Request& req, const json& payload, const std::string& table,
          std::ostream& out) {
  if (req.format == "table") {
    out << table;
    return;
  }
  json envelope = {{"command", req.command},
                   {"group", req.group.empty() ? json(nullptr) : json(req.group)},
                   {"level", req.has_level ? json(req.level) : json(nullptr)},
                   {"payload", payload},
                   {"tool_version", kToolVersion}};
  out << envelope.dump(2) << "\n";
}

std::string classify_weight_str(const GroupSpec& spec, const Weight& w, bool spins) {
  if (!spins || spec.type.rank != 1) return w.str();
  const Int l = w.labels[0];
  return l % 2 == 0 ? std::to_string(l / 2) : std::to_string(l) + "/2";
}

int char_index_arg(const std::vector<CenterCharacter>& chis, Int idx) {
  if (idx < 0 || idx >= static_cast<Int>(chis.size()))
    throw invalid_input("--char must be in [0, " + std::to_string(chis.size() - 1) + "]");
  return static_cast<int>(idx);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Verlinde fusion rings of compact simple Lie groups"};
  app.require_subcommand(1);

  Request req;
  std::string group_arg, lhs_arg, rhs_arg, weight_arg;
  Int level_arg = -1, char_arg = -1;
  bool spin = false;

  auto add_common = [&](CLI::App* sub, bool with_level) {
    sub->add_option("--group", group_arg, "group spec, e.g. A2 or A1/Z2")->required();
    if (with_level) sub->add_option("--level", level_arg, "level k")->required();
    sub->add_option("--format", req.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--tolerance", req.tolerance, "numeric tolerance for modular checks");
    return sub;
  };

  auto* weights_cmd = add_common(app.add_subcommand("weights", "level-k dominant weights"), true);
  auto* tensor_cmd = add_common(app.add_subcommand("tensor", "tensor-product decomposition"), false);
  tensor_cmd->add_option("--lhs", lhs_arg)->required();
  tensor_cmd->add_option("--rhs", rhs_arg)->required();
  tensor_cmd->add_flag("--spin", spin, "labels are half-integer spins (rank 1)");
  auto* fuse_cmd = add_common(app.add_subcommand("fuse", "fusion product of two weights"), true);
  fuse_cmd->add_option("--lhs", lhs_arg)->required();
  fuse_cmd->add_option("--rhs", rhs_arg)->required();
  fuse_cmd->add_flag("--spin", spin, "labels are half-integer spins (rank 1)");
  auto* table_cmd = add_common(app.add_subcommand("table", "full fusion table"), true);
  auto* smatrix_cmd = add_common(app.add_subcommand("smatrix", "Kac-Peterson modular data"), true);
  auto* orbits_cmd = add_common(app.add_subcommand("orbits", "center orbits by character"), true);
  orbits_cmd->add_option("--char", char_arg, "character index");
  auto* levels_cmd = add_common(app.add_subcommand("levels", "basic/multiplicative/fundamental"), false);
  auto* classify_cmd = add_common(app.add_subcommand("classify", "irreducibles of one sector"), true);
  classify_cmd->add_option("--char", char_arg, "character index")->required();
  classify_cmd->add_flag("--spin", spin, "render rank-1 orbits as spins in table format");
  auto* invariant_cmd = add_common(app.add_subcommand("invariant", "simple-current modular invariant"), true);
  auto* brane_cmd = add_common(app.add_subcommand("brane", "quantized conjugacy-class brane"), true);
  brane_cmd->add_option("--weight", weight_arg)->required();
  brane_cmd->add_flag("--spin", spin, "labels are half-integer spins (rank 1)");
  auto* repro_cmd = app.add_subcommand("repro", "run the reference reproduction suite");
  repro_cmd->add_option("--format", req.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::vector<const char*> argv;
  argv.push_back("verlinde");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Int basis_cap = env_basis_cap();

    if (repro_cmd->parsed()) {
      req.command = "repro";
      const auto checks = run_repro();
      bool all = true;
      json jchecks = json::array();
      std::ostringstream table;
      for (const auto& c : checks) {
        all = all && c.pass;
        jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        table << (c.pass ? "PASS  " : "FAIL  ") << c.name
              << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
      }
      table << (all ? "all checks passed\n" : "some checks FAILED\n");
      emit(req, {{"checks", jchecks}, {"all_pass", all}}, table.str(), out);
      return all ? 0 : 1;
    }

    const GroupSpec spec = parse_group_spec(group_arg);
    req.group = spec.str();
    req.has_level = level_arg >= 0;
    req.level = level_arg;
    if (req.has_level && level_arg < 0) throw invalid_input("negative level");

    if (weights_cmd->parsed()) {
      req.command = "weights";
      const RootDatum d(spec.type);
      const auto basis = enumerate_level_weights(d, level_arg);
      if (static_cast<Int>(basis.size()) > basis_cap)
        throw resource_limit("basis larger than VERLINDE_BASIS_CAP");
      std::ostringstream table;
      for (const auto& w : basis) table << w.str() << "\n";
      emit(req, {{"count", basis.size()}, {"weights", weights_json(basis)}}, table.str(), out);
      return 0;
    }

    if (tensor_cmd->parsed()) {
      req.command = "tensor";
      const RootDatum d(spec.type);
      const Weight lhs = parse_weight_arg(lhs_arg, d.rank(), spin);
      const Weight rhs = parse_weight_arg(rhs_arg, d.rank(), spin);
      const auto td = tensor_decompose(d, lhs, rhs);
      json comps = json::array();
      std::ostringstream table;
      for (const auto& [w, m] : td.components) {
        comps.push_back({{"weight", weight_json(w)}, {"mult", m}});
        table << w.str() << "  x" << m << "\n";
      }
      emit(req,
           {{"lhs", weight_json(lhs)}, {"rhs", weight_json(rhs)}, {"components", comps}},
           table.str(), out);
      return 0;
    }

    if (fuse_cmd->parsed()) {
      req.command = "fuse";
      const RootDatum d(spec.type);
      const Weight lhs = parse_weight_arg(lhs_arg, d.rank(), spin);
      const Weight rhs = parse_weight_arg(rhs_arg, d.rank(), spin);
      const FusionElement e = fuse(d, level_arg, lhs, rhs);
      std::ostringstream table;
      for (const auto& [w, n] : e.terms) table << w.str() << "  x" << n << "\n";
      emit(req, fusion_element_json(e), table.str(), out);
      return 0;
    }

    if (table_cmd->parsed()) {
      req.command = "table";
      const RootDatum d(spec.type);
      const FusionTable t = fusion_table(d, level_arg, basis_cap);
      json entries = json::array();
      std::ostringstream table;
      for (const auto& [i, j, l, n] : t.entries) {
        entries.push_back({i, j, l, n});
        table << t.basis[static_cast<std::size_t>(i)].str() << " * "
              << t.basis[static_cast<std::size_t>(j)].str() << " -> "
              << t.basis[static_cast<std::size_t>(l)].str() << "  x" << n << "\n";
      }
      emit(req,
           {{"group", spec.str()},
            {"level", t.level},
            {"basis", weights_json(t.basis)},
            {"N", entries}},
           table.str(), out);
      return 0;
    }

    if (smatrix_cmd->parsed()) {
      req.command = "smatrix";
      const RootDatum d(spec.type);
      const ModularData md = modular_data(d, level_arg, kDefaultWeylCap, basis_cap);
      const auto n = static_cast<Eigen::Index>(md.basis.size());
      json sre = json::array(), sim = json::array(), tphase = json::array();
      for (Eigen::Index i = 0; i < n; ++i) {
        json rre = json::array(), rim = json::array();
        for (Eigen::Index j = 0; j < n; ++j) {
          rre.push_back(md.S(i, j).real());
          rim.push_back(md.S(i, j).imag());
        }
        sre.push_back(rre);
        sim.push_back(rim);
        tphase.push_back(md.t_turns[static_cast<std::size_t>(i)].str());
      }
      std::ostringstream table;
      table << "c = " << md.c.str() << "\n";
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j)
          table << double_str(md.S(i, j).real()) << (md.S(i, j).imag() >= 0 ? "+" : "")
                << double_str(md.S(i, j).imag()) << "i  ";
        table << "\n";
      }
      emit(req,
           {{"basis", weights_json(md.basis)},
            {"S_re", sre},
            {"S_im", sim},
            {"T_phase", tphase},
            {"c", md.c.str()}},
           table.str(), out);
      return 0;
    }

    if (levels_cmd->parsed()) {
      req.command = "levels";
      const CenterDatum cd = build_center(spec);
      json fundamental;
      std::string ftext = "unknown";
      try {
        const Int f = fundamental_level(cd);
        fundamental = f;
        ftext = std::to_string(f);
      } catch (const unsupported_request&) {
        fundamental = nullptr;
      }
      std::ostringstream table;
      table << "basic " << basic_level(cd) << "\nmultiplicative " << multiplicative_level(cd)
            << "\nfundamental " << ftext << "\n";
      emit(req,
           {{"basic", basic_level(cd)},
            {"multiplicative", multiplicative_level(cd)},
            {"fundamental", fundamental}},
           table.str(), out);
      return 0;
    }

    if (orbits_cmd->parsed()) {
      req.command = "orbits";
      const CenterDatum cd = build_center(spec);
      const auto partition = partition_by_character(cd, level_arg);
      const auto chis = dual_group(cd);
      auto orbit_json = [&](const Orbit& o) {
        return json{{"representative", weight_json(o.representative)},
                    {"members", weights_json(o.members)},
                    {"stabilizer_order", o.stabilizer.size()}};
      };
      std::ostringstream table;
      json payload;
      if (char_arg >= 0) {
        const auto& chi = chis[static_cast<std::size_t>(char_index_arg(chis, char_arg))];
        payload = json::array();
        if (auto it = partition.find(chi); it != partition.end()) {
          for (const Orbit& o : it->second) {
            payload.push_back(orbit_json(o));
            table << o.representative.str() << " orbit " << o.members.size() << " stab "
                  << o.stabilizer.size() << "\n";
          }
        }
      } else {
        json sectors = json::array();
        for (std::size_t ci = 0; ci < chis.size(); ++ci) {
          json jorbits = json::array();
          if (auto it = partition.find(chis[ci]); it != partition.end()) {
            table << "char " << ci << ":\n";
            for (const Orbit& o : it->second) {
              jorbits.push_back(orbit_json(o));
              table << "  " << o.representative.str() << " orbit " << o.members.size()
                    << " stab " << o.stabilizer.size() << "\n";
            }
          }
          sectors.push_back({{"char", ci}, {"orbits", jorbits}});
        }
        payload = json{{"sectors", sectors}};
      }
      emit(req, payload, table.str(), out);
      return 0;
    }

    if (classify_cmd->parsed()) {
      req.command = "classify";
      const CenterDatum cd = build_center(spec);
      const auto chis = dual_group(cd);
      const auto& chi = chis[static_cast<std::size_t>(char_index_arg(chis, char_arg))];
      const auto irreps = classify_irreps(cd, level_arg, chi);
      json payload = json::array();
      std::ostringstream table;
      for (const auto& label : irreps) {
        const FusionElement vir = virasoro_character(cd, label);
        json jvir = json::array();
        for (const auto& [w, n] : vir.terms) jvir.push_back({weight_json(w), n});
        payload.push_back({{"orbit", weights_json(label.orbit.members)},
                           {"stabilizer_order", label.orbit.stabilizer.size()},
                           {"rho", label.rho_index},
                           {"virasoro", jvir}});
        table << "{";
        for (std::size_t i = 0; i < label.orbit.members.size(); ++i)
          table << (i ? " " : "")
                << classify_weight_str(spec, label.orbit.members[i], spin);
        table << "} stab " << label.orbit.stabilizer.size() << " rho " << label.rho_index
              << "\n";
      }
      emit(req, payload, table.str(), out);
      return 0;
    }

    if (invariant_cmd->parsed()) {
      req.command = "invariant";
      const CenterDatum cd = build_center(spec);
      const ModularInvariant mi = modular_invariant(cd, level_arg);
      const ModularData md = modular_data(cd.ambient(), level_arg, kDefaultWeylCap, basis_cap);
      Eigen::MatrixXcd t = md.T();
      Eigen::MatrixXcd m(mi.m.rows(), mi.m.cols());
      for (Eigen::Index i = 0; i < mi.m.rows(); ++i)
        for (Eigen::Index j = 0; j < mi.m.cols(); ++j) m(i, j) = static_cast<double>(mi.m(i, j));
      const bool cs = (m * md.S - md.S * m).cwiseAbs().maxCoeff() < req.tolerance;
      const bool ct = (m * t - t * m).cwiseAbs().maxCoeff() < req.tolerance;
      json rows = json::array();
      std::ostringstream table;
      for (Eigen::Index i = 0; i < mi.m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < mi.m.cols(); ++j) {
          row.push_back(mi.m(i, j));
          table << mi.m(i, j) << " ";
        }
        rows.push_back(row);
        table << "\n";
      }
      table << "commutes_S " << (cs ? "true" : "false") << " commutes_T "
            << (ct ? "true" : "false") << "\n";
      emit(req,
           {{"basis", weights_json(mi.basis)},
            {"M", rows},
            {"commutes_S", cs},
            {"commutes_T", ct}},
           table.str(), out);
      return 0;
    }

    if (brane_cmd->parsed()) {
      req.command = "brane";
      const RootDatum d(spec.type);
      const Weight w = parse_weight_arg(weight_arg, d.rank(), spin);
      const FusionElement e = brane_quantize(d, level_arg, w);
      std::ostringstream table;
      for (const auto& [ww, n] : e.terms) table << ww.str() << "  x" << n << "\n";
      emit(req, fusion_element_json(e), table.str(), out);
      return 0;
    }

    err << "error: no subcommand\n";
    return 2;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_request& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const resource_limit& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace verlinde
