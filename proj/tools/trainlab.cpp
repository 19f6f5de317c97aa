// trainlab: command-line front end over the library.
//
// Exit status: 0 success, 1 domain error ({"error": ...} on stdout), 2 usage.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "trainlab/json_io.hpp"

using namespace trainlab;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config, element, lhs, rhs, rep, out;
  std::string alpha = "0", beta = "0", gamma = "0";
  std::string format = "json";
  std::vector<int> window;
  std::optional<int> N;
  std::uint64_t seed = 7;
  int cases = 100;
  std::vector<int> dims;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
  f << text << '\n';
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2)); }

void require_json(const Options& o) {
  if (o.format != "json") throw Usage("--format dot is not available for this verb");
}

PairConfig load_config(const Options& o) { return config_from_json(load_json(o.config)); }

std::vector<int> dims_of(const PairConfig& cfg, const Options& o) {
  return o.dims.empty() ? config_dims(load_json(o.config), cfg) : o.dims;
}

// Morphism from a morphism file, or from an element file and alpha/beta.
Morphism morphism_input(const PairConfig& cfg, const Options& o, const std::string& path) {
  if (!path.empty()) return morphism_from_json(cfg, load_json(path));
  if (o.element.empty()) throw Usage("need --lhs or --element");
  const auto g = element_from_json(load_json(o.element));
  check_element(cfg, g);
  return coset_of(cfg, g, parse_multi_index(o.alpha, cfg.p()), parse_multi_index(o.beta, cfg.p()));
}

RepParams rep_input(const PairConfig& cfg, const Options& o) {
  if (!o.rep.empty()) return rep_from_json(cfg, load_json(o.rep));
  return random_rep(cfg, dims_of(cfg, o), o.seed);
}

void run(const std::string& verb, const Options& o) {
  const auto cfg = load_config(o);
  const int p = cfg.p();
  if (verb == "canon") {
    if (o.element.empty()) throw Usage("canon needs --element");
    const auto m = morphism_input(cfg, o, "");
    emit(o, o.format == "dot" ? dot_export(m) : to_json(m).dump(2));
  } else if (verb == "identity") {
    const auto m = identity_morphism(cfg, parse_multi_index(o.alpha, p));
    emit(o, o.format == "dot" ? dot_export(m) : to_json(m).dump(2));
  } else if (verb == "mul") {
    if (o.lhs.empty() || o.rhs.empty()) throw Usage("mul needs --lhs and --rhs");
    const auto lj = load_json(o.lhs), rj = load_json(o.rhs);
    Morphism m;
    if (lj.contains("cycles") && rj.contains("cycles")) {
      // group elements: forcing apart with theta at level N
      const auto g = element_from_json(lj), h = element_from_json(rj);
      check_element(cfg, g);
      check_element(cfg, h);
      const auto a = parse_multi_index(o.alpha, p), b = parse_multi_index(o.beta, p),
                 c = parse_multi_index(o.gamma, p);
      m = force_apart_product(cfg, g, h, a, b, c, o.N.value_or(stabilization_bound(g, h, b)));
    } else {
      m = glue_product(cfg, morphism_from_json(cfg, lj), morphism_from_json(cfg, rj));
    }
    emit(o, o.format == "dot" ? dot_export(m) : to_json(m).dump(2));
  } else if (verb == "invol") {
    const auto m = involution(cfg, morphism_input(cfg, o, o.lhs));
    emit(o, o.format == "dot" ? dot_export(m) : to_json(m).dump(2));
  } else if (verb == "surface") {
    const auto s = surface_view(cfg, morphism_input(cfg, o, o.lhs));
    emit(o, o.format == "dot" ? dot_export(s) : to_json(s).dump(2));
  } else if (verb == "belyi") {
    require_json(o);
    emit(o, to_json(belyi_data(cfg, morphism_input(cfg, o, o.lhs))));
  } else if (verb == "spherical") {
    require_json(o);
    const auto rp = rep_input(cfg, o);
    const auto m = morphism_input(cfg, o, o.lhs);
    auto out = to_json(spherical_components(cfg, rp, m));
    if (o.lhs.empty()) {
      const auto g = element_from_json(load_json(o.element));
      const auto w = o.window.empty() ? support_window(cfg, g, MultiIndex::zeros(p)) : MultiIndex{o.window};
      out["oracle"] = to_json(spherical_oracle(cfg, rp, g, w));
    }
    emit(o, out);
  } else if (verb == "repcheck") {
    require_json(o);
    const auto rp = rep_input(cfg, o);
    validate_rep(cfg, rp);
    json out{{"ok", true}, {"rep", to_json(rp)}};
    if (!o.element.empty()) {
      const auto g = element_from_json(load_json(o.element));
      check_element(cfg, g);
      out["rho_bar"] = to_json(rho_bar(cfg, rp, g, parse_multi_index(o.alpha, p), parse_multi_index(o.beta, p)));
    }
    emit(o, out);
  } else if (verb == "suite") {
    require_json(o);
    SuiteOptions opt;
    opt.cases = o.cases;
    opt.seed = o.seed;
    opt.dims = dims_of(cfg, o);
    const auto rp = rep_input(cfg, o);
    json out{{"config", to_json(cfg)}, {"cases", o.cases}, {"seed", o.seed}};
    out.update(to_json(run_suite(cfg, rp, opt)));
    emit(o, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double cosets of infinite symmetric groups: trains, diagrams and spherical functions"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"canon", "canonical diagram of an element for --alpha -> --beta"},
      {"mul", "product of two morphisms (or two elements, forced apart)"},
      {"invol", "involution of a morphism"},
      {"identity", "identity morphism of --alpha"},
      {"spherical", "spherical function value of a closed morphism"},
      {"surface", "polygonal surface of a plain-kind morphism"},
      {"belyi", "Belyi data for Z = (1,1,1)"},
      {"repcheck", "validate representation data, optionally print rho_bar"},
      {"suite", "run every property check"},
  };
  for (const auto& [name, help] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", o.config, "configuration JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--element", o.element, "group element JSON");
    sub->add_option("--lhs", o.lhs, "left factor / input morphism JSON");
    sub->add_option("--rhs", o.rhs, "right factor JSON");
    sub->add_option("--alpha", o.alpha, "source multi-index, e.g. 1,0 (\"0\" = zeros)");
    sub->add_option("--beta", o.beta, "middle / target multi-index");
    sub->add_option("--gamma", o.gamma, "target multi-index of a product");
    sub->add_option("--rep", o.rep, "representation JSON (default: random, seeded)");
    sub->add_option("--dims", o.dims, "dimensions per color for random representations (default: config \"dims\", else 2)");
    sub->add_option("--window", o.window, "dense window per smell");
    sub->add_option("--N", o.N, "forcing level for element products");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--cases", o.cases, "cases per check")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--out", o.out, "write here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    run(app.get_subcommands().front()->get_name(), o);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    const std::string name(error_name(e.code()));
    std::cout << json{{"error", name}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
