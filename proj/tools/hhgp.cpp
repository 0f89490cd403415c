// hhgp: Hochschild cohomology of generalised flag varieties G/P.
//
// Computes the associated graded of exterior powers of the tangent bundle,
// applies Borel--Weil--Bott summand by summand, and assembles
// vanishing / non-vanishing reports for the Hochschild--Kostant--Rosenberg
// decomposition.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hhgp/render.hpp"

namespace {

using namespace hhgp;

struct VarietyArgs {
  std::string type;
  std::string nodes;
};

ParabolicData parse_variety(const VarietyArgs& v) {
  for (char c : v.type) {
    if (c == 'x' || c == 'X' || c == '*' || c == '+') {
      throw std::invalid_argument(
          "semisimple input '" + v.type +
          "' is not supported: a product G1/P1 x G2/P2 has Hochschild cohomology given by "
          "the Kunneth formula from the simple factors; run each factor separately");
    }
  }
  auto ct = CartanType::parse(v.type);
  if (!ct) throw std::invalid_argument("cannot parse Cartan type '" + v.type + "'");
  ct->validate();
  std::set<int> crossed;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw std::invalid_argument("bad node list '" + v.nodes + "'");
    crossed.insert(std::stoi(cur));
    cur.clear();
  };
  for (char c : v.nodes) {
    if (c == ',') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw std::invalid_argument("bad node list '" + v.nodes + "'");
    }
  }
  flush();
  auto rs = std::make_shared<const RootSystem>(*ct);
  return build_parabolic(rs, crossed);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string msg = "unsupported format '" + format + "' for this command (allowed:";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw CLI::ValidationError(msg + ")");
}

std::string file_stem(const ScanResult& r) {
  return r.type.name() + "_" + std::to_string(r.node);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hochschild-Kostant-Rosenberg decompositions for generalised flag varieties G/P"};
  app.require_subcommand(1);

  std::string format = "text";
  std::size_t dp_limit = ResourceLimits{}.max_dp_states;
  app.add_option("--dp-limit", dp_limit, "max weight-DP states before giving up")
      ->envname("HHGP_DP_LIMIT");

  VarietyArgs variety;
  int p_arg = 0;
  std::optional<int> p_cap;
  int max_rank = 4;
  int workers = static_cast<int>(std::min<unsigned>(8, std::thread::hardware_concurrency()));
  if (workers < 1) workers = 1;
  std::string out_dir;
  std::optional<int> kostant_degree;
  std::optional<int> kostant_twist;
  bool kostant_restricted = false;

  auto add_variety = [&](CLI::App* cmd) {
    cmd->add_option("type", variety.type, "Cartan type, e.g. B3")->required();
    cmd->add_option("nodes", variety.nodes, "crossed nodes, e.g. 2 or 1,3")->required();
    cmd->add_option("--format", format, "output format");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "dimension, index and class flags");
  add_variety(c_classify);

  CLI::App* c_table =
      app.add_subcommand("gr-table", "associated graded of an exterior tangent power");
  add_variety(c_table);
  c_table->add_option("p", p_arg, "exterior power")->required();

  CLI::App* c_hkr = app.add_subcommand("hkr", "full HKR vanishing report");
  add_variety(c_hkr);
  c_hkr->add_option("--p-cap", p_cap, "only compute exterior powers up to this p")
      ->envname("HHGP_P_CAP");

  CLI::App* c_graph = app.add_subcommand("coset-graph", "parabolic Bruhat graph of W^P");
  add_variety(c_graph);

  CLI::App* c_kostant =
      app.add_subcommand("kostant", "Lie-algebra cohomology classes of the nilradical");
  add_variety(c_kostant);
  c_kostant->add_option("--degree", kostant_degree, "restrict to one cohomological degree");
  c_kostant->add_option("--twist", kostant_twist,
                        "list twisted pieces w.0 + (index+j)*xi for this j (needs --degree)");
  c_kostant->add_flag("--restricted", kostant_restricted, "drop rho-singular twisted pieces");

  CLI::App* c_bott = app.add_subcommand("bott-witness", "Bott vanishing failure witness");
  add_variety(c_bott);

  CLI::App* c_scan = app.add_subcommand("scan", "verdicts for all maximal parabolics");
  c_scan->add_option("--max-rank", max_rank, "largest rank to scan")->envname("HHGP_MAX_RANK");
  c_scan->add_option("--workers", workers, "worker threads")->envname("HHGP_WORKERS");
  c_scan->add_option("--p-cap", p_cap, "cap on exterior powers per variety")
      ->envname("HHGP_P_CAP");
  c_scan->add_option("--out-dir", out_dir, "write one JSON report per variety here");
  c_scan->add_option("--format", format, "output format");

  try {
    app.parse(argc, argv);
    ResourceLimits limits;
    limits.max_dp_states = dp_limit;

    if (*c_classify) {
      check_format(format, {"text", "json"});
      ParabolicData par = parse_variety(variety);
      Classification cls = classify(par);
      NilradicalStructure ns = nilradical_structure(par);
      if (format == "json")
        std::cout << classification_json(par, cls, ns).dump(2) << "\n";
      else
        std::cout << render_classification_text(par, cls, ns);
    } else if (*c_table) {
      check_format(format, {"text", "csv", "json"});
      ParabolicData par = parse_variety(variety);
      FreudenthalCache cache(par);
      GrTable t = gr_table(par, p_arg, cache, limits);
      if (format == "json")
        std::cout << gr_table_json(t).dump(2) << "\n";
      else if (format == "csv")
        std::cout << render_gr_table_csv(t);
      else
        std::cout << render_gr_table_text(t);
    } else if (*c_hkr) {
      check_format(format, {"text", "json"});
      ParabolicData par = parse_variety(variety);
      HKRReport rep = hkr_report(par, p_cap, limits);
      if (format == "json")
        std::cout << hkr_report_json(rep).dump(2) << "\n";
      else
        std::cout << render_hkr_text(rep);
    } else if (*c_graph) {
      check_format(format, {"dot", "json"});
      ParabolicData par = parse_variety(variety);
      CosetSystem cs = minimal_coset_reps(*par.rs, par.crossed);
      BruhatGraph g = bruhat_graph(*par.rs, cs);
      if (format == "json")
        std::cout << bruhat_json(g).dump(2) << "\n";
      else
        std::cout << render_bruhat_dot(g, par.name());
    } else if (*c_kostant) {
      check_format(format, {"text", "json"});
      ParabolicData par = parse_variety(variety);
      CosetSystem cs = minimal_coset_reps(*par.rs, par.crossed);
      if (kostant_twist) {
        if (!kostant_degree)
          throw CLI::ValidationError("--twist requires --degree");
        auto pieces =
            kostant_sum(par, cs, *kostant_degree, *kostant_twist, kostant_restricted);
        if (format == "json")
          std::cout << kostant_sum_json(pieces).dump(2) << "\n";
        else
          std::cout << render_kostant_sum_text(pieces);
      } else {
        std::vector<KostantClass> classes;
        int lo = kostant_degree.value_or(0);
        int hi = kostant_degree.value_or(par.dimension);
        for (int i = lo; i <= hi; ++i) {
          auto part = kostant_cohomology(par, cs, i);
          classes.insert(classes.end(), part.begin(), part.end());
        }
        if (format == "json")
          std::cout << kostant_json(par, classes).dump(2) << "\n";
        else
          std::cout << render_kostant_text(par, classes);
      }
    } else if (*c_bott) {
      check_format(format, {"text", "json"});
      ParabolicData par = parse_variety(variety);
      auto witness = bott_vanishing_witness(par);
      if (format == "json") {
        json j{{"schema_version", 1}, {"kind", "bott_witness"}};
        j["witness"] = witness ? json{{"p", witness->p},
                                      {"q", witness->q},
                                      {"representation", json(witness->rep)}}
                               : json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else if (witness) {
        int omega_power = par.dimension - witness->p;
        std::cout << "Bott vanishing fails for " << par.name() << ": H^" << witness->q
                  << "(X, Omega^" << omega_power
                  << " tensor omega^-1) = " << "V" << format_weight(witness->rep)
                  << " is nonzero\n";
      } else {
        std::cout << "no Bott vanishing failure witnessed for " << par.name()
                  << " (no definite higher cohomology on the first page)\n";
      }
    } else if (*c_scan) {
      check_format(format, {"text", "csv", "json"});
      auto results = scan(max_rank, workers, p_cap, limits);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& r : results) {
          std::ofstream f(std::filesystem::path(out_dir) / (file_stem(r) + ".json"));
          f << hkr_report_json(r.report).dump(2) << "\n";
        }
      }
      if (format == "json")
        std::cout << scan_json(results).dump(2) << "\n";
      else if (format == "csv")
        std::cout << render_scan_csv(results);
      else
        std::cout << render_scan_text(results);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
