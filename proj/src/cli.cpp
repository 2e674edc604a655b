#include "tailmatch/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tailmatch/bridge.hpp"
#include "tailmatch/errors.hpp"
#include "tailmatch/formulas.hpp"
#include "tailmatch/hypergraph.hpp"
#include "tailmatch/lp.hpp"
#include "tailmatch/numeric.hpp"
#include "tailmatch/search.hpp"
#include "tailmatch/serialize.hpp"

namespace tailmatch {

namespace {

enum class Format { kJson, kCsv, kPlain };

struct RunConfig {
  std::uint64_t seed = 0;
  std::string format = "json";
  bool format_given = false;
  std::uint64_t max_enum = 0;  // 0: module defaults
  unsigned threads = 0;
};

void put(Json& j, const std::string& key, const Rational& value) {
  j[key] = value.str();
  j[key + "_decimal"] = value.decimal(12);
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

void emit(std::ostream& out, const Json& result, Format format) {
  switch (format) {
    case Format::kJson:
      out << result.dump() << '\n';
      return;
    case Format::kPlain:
      for (const auto& [key, value] : result.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
      return;
    case Format::kCsv: {
      out << "# seed=" << result.value("seed", std::uint64_t{0}) << '\n';
      if (result.contains("rows") && result["rows"].is_array()) {
        const auto& rows = result["rows"];
        if (rows.empty()) return;
        bool first = true;
        for (const auto& [key, value] : rows.front().items()) {
          out << (first ? "" : ",") << key;
          first = false;
        }
        out << '\n';
        for (const auto& row : rows) {
          first = true;
          for (const auto& [key, value] : row.items()) {
            out << (first ? "" : ",") << csv_cell(value);
            first = false;
          }
          out << '\n';
        }
        return;
      }
      bool first = true;
      for (const auto& [key, value] : result.items()) {
        out << (first ? "" : ",") << key;
        first = false;
      }
      out << '\n';
      first = true;
      for (const auto& [key, value] : result.items()) {
        out << (first ? "" : ",") << csv_cell(value);
        first = false;
      }
      out << '\n';
      return;
    }
  }
}

std::uint64_t enum_cap(const RunConfig& cfg, std::uint64_t fallback) {
  return cfg.max_enum ? cfg.max_enum : fallback;
}

DiscreteDistribution load_distribution(const std::string& inline_json, const std::string& path) {
  if (!inline_json.empty() && !path.empty()) {
    throw ParseError("give either --dist or --dist-file, not both");
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open distribution file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_distribution(buffer.str());
  }
  if (inline_json.empty()) throw ParseError("a distribution is required (--dist or --dist-file)");
  return parse_distribution(inline_json);
}

std::vector<std::uint32_t> parse_n_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0 || v > 0xffffffffUL) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw ParseError("malformed --n-list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("--n-list is empty");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tail-probability and fractional-matching workbench", "tailmatch"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("TAILMATCH_MAX_ENUM")) {
    try {
      cfg.max_enum = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: TAILMATCH_MAX_ENUM must be a positive integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--seed", cfg.seed, "Random seed, echoed in every output");
  auto* format_opt = app.add_option("--format", cfg.format, "Output format")
                         ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--max-enum", cfg.max_enum, "Override enumeration caps and search budget");
  app.add_option("--threads", cfg.threads, "Worker threads (0: hardware concurrency)");

  // Every subcommand fills `result`; rationals stay strings until dispatch.
  std::string k_s, x_s, eps_s = "1/1000000000", which, file, dist, dist_file, threshold_s = "1";
  std::string family, n_list_s, out_prefix;
  std::uint32_t k = 0, n32 = 0, s32 = 0, points = 200;
  std::uint64_t n64 = 0, m = 0, n_den = 0, max_support = 0, trials = 100;
  std::function<Json()> action;

  auto rational_arg = [](const std::string& text) { return Rational::parse(text); };

  auto* mk = app.add_subcommand("mk", "Conjectured extremal tail m_k(x)");
  mk->add_option("--k", k)->required();
  mk->add_option("--x", x_s)->required();
  mk->callback([&] {
    action = [&] {
      const Rational x = rational_arg(x_s);
      const auto r = conjectured_m(k, x);
      Json j;
      put(j, "value", r.value);
      j["regime"] = to_string(r.regime);
      j["formula"] = r.formula_used;
      j["k"] = k;
      j["x"] = x.str();
      return j;
    };
  });

  auto* samuels = app.add_subcommand("samuels", "Samuels' conjectured value s_k(x)");
  samuels->add_option("--k", k)->required();
  samuels->add_option("--x", x_s)->required();
  samuels->callback([&] {
    action = [&] {
      const Rational x = rational_arg(x_s);
      const auto r = samuels_s(k, x);
      Json j;
      put(j, "value", r.value);
      j["argmin_t"] = r.argmin_t;
      if (Rational(k) * x < Rational(1)) {
        Json terms = Json::array();
        for (std::uint32_t t = 0; t < k; ++t) terms.push_back(samuels_term(k, x, t).str());
        j["terms"] = terms;
      }
      j["k"] = k;
      j["x"] = x.str();
      return j;
    };
  });

  auto* roots = app.add_subcommand("roots", "Bracket the crossover points x0(k) or x1(k)");
  roots->add_option("--which", which)->required()->check(CLI::IsMember({"x0", "x1"}));
  roots->add_option("--k", k)->required();
  roots->add_option("--eps", eps_s, "Maximum bracket width");
  roots->callback([&] {
    action = [&] {
      const Rational eps = rational_arg(eps_s);
      const RootInterval r = which == "x0" ? x0(k, eps) : x1(k, eps);
      Json j;
      j["which"] = which;
      j["k"] = k;
      put(j, "lo", r.lo);
      put(j, "hi", r.hi);
      put(j, "width", r.width());
      j["midpoint_decimal"] = r.midpoint().decimal(12);
      return j;
    };
  });

  auto* erdos = app.add_subcommand("erdos-bound", "Erdos matching bound for nu = s");
  erdos->add_option("--n", n64)->required();
  erdos->add_option("--k", k)->required();
  erdos->add_option("--s", s32)->required();
  erdos->callback([&] {
    action = [&] {
      const BigInt bound = erdos_bound(n64, k, s32);
      Json j;
      j["bound"] = bound.get_str();
      j["cover_side"] = BigInt(binomial(n64, k) - binomial(n64 - s32, k)).get_str();
      j["clique_side"] = binomial(std::uint64_t{k} * s32 + k - 1, k).get_str();
      j["n"] = n64;
      j["k"] = k;
      j["s"] = s32;
      return j;
    };
  });

  auto* nu = app.add_subcommand("nu", "Matching number of a hypergraph file");
  nu->add_option("--file", file)->required();
  nu->callback([&] {
    action = [&] {
      const auto h = read_hypergraph_file(file);
      return Json{{"nu", matching_number(h)}, {"n", h.n()}, {"k", h.k()}, {"edges", h.edge_count()}};
    };
  });

  auto* nu_star = app.add_subcommand("nu-star", "Fractional matching number with witness");
  nu_star->add_option("--file", file)->required();
  nu_star->callback([&] {
    action = [&] {
      const auto h = read_hypergraph_file(file);
      const auto sol = fractional_matching(h);
      Json j;
      put(j, "nu_star", sol.value);
      j["witness"] = to_json(sol.witness);
      return j;
    };
  });

  auto* duality = app.add_subcommand("duality", "Solve both LPs and certify nu* = tau*");
  duality->add_option("--file", file)->required();
  duality->callback([&] {
    action = [&] {
      const auto h = read_hypergraph_file(file);
      const auto r = verify_duality(h);
      Json j;
      j["nu_star"] = r.nu_star.str();
      j["tau_star"] = r.tau_star.str();
      j["equal"] = r.equal;
      j["nu_star_decimal"] = r.nu_star.decimal(12);
      j["matching_feasible"] = r.matching_feasible;
      j["cover_feasible"] = r.cover_feasible;
      j["matching_witness"] = to_json(r.matching);
      j["cover_witness"] = to_json(r.cover);
      return j;
    };
  });

  auto* tail = app.add_subcommand("tail", "Exact tail of an i.i.d. sum");
  tail->add_option("--dist", dist, "Distribution JSON [[\"v\",\"p\"],...]");
  tail->add_option("--dist-file", dist_file);
  tail->add_option("--k", k)->required();
  tail->add_option("--threshold", threshold_s);
  tail->callback([&] {
    action = [&] {
      const auto d = load_distribution(dist, dist_file);
      const Rational threshold = rational_arg(threshold_s);
      Json j;
      put(j, "tail", iid_tail(d, k, threshold));
      put(j, "mean", d.mean());
      j["k"] = k;
      j["threshold"] = threshold.str();
      j["dist"] = to_json(d);
      return j;
    };
  });

  auto* bridge = app.add_subcommand("bridge-check", "Build the distribution hypergraph and check the tail identity");
  bridge->add_option("--dist", dist);
  bridge->add_option("--dist-file", dist_file);
  bridge->add_option("--k", k)->required();
  bridge->add_option("--n", n64, "Replication factor")->required();
  bridge->add_option("--out", out_prefix, "Write <out>.hg and <out>.json");
  bridge->callback([&] {
    action = [&] {
      const auto d = load_distribution(dist, dist_file);
      const auto b = dist_to_hypergraph(d, k, n64, enum_cap(cfg, kDefaultBridgeEnumCap));
      const auto id = tail_identity_check(b, k);
      if (!out_prefix.empty()) {
        std::ofstream hg(out_prefix + ".hg");
        std::ofstream side(out_prefix + ".json");
        if (!hg || !side) throw PreconditionError("cannot write '" + out_prefix + ".*'");
        write_hypergraph(hg, b.hypergraph);
        side << sidecar_json(b).dump(2) << '\n';
      }
      Json j;
      j["r"] = b.r;
      j["n"] = b.n;
      j["vertices"] = b.hypergraph.n();
      j["edges"] = b.hypergraph.edge_count();
      put(j, "lhs", id.lhs);
      put(j, "rhs", id.rhs);
      j["N_n"] = id.repeated.get_str();
      j["method"] = id.method == RepeatCountMethod::kPatternCount ? "pattern" : "complement";
      j["equal"] = id.lhs == id.rhs;
      put(j, "weight_total", b.weight_total());
      return j;
    };
  });

  auto* probe = app.add_subcommand("density-probe", "Edge densities of cov/clique families against their limits");
  probe->add_option("--family", family)->required()->check(CLI::IsMember({"cov", "clique"}));
  probe->add_option("--k", k)->required();
  probe->add_option("--x", x_s)->required();
  probe->add_option("--n-list", n_list_s, "Comma separated vertex counts")->required();
  probe->callback([&] {
    action = [&] {
      const Rational x = rational_arg(x_s);
      const auto rows = density_convergence_probe(parse_family(family), k, x,
                                                  parse_n_list(n_list_s),
                                                  enum_cap(cfg, kDefaultBridgeEnumCap));
      Json table = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        row["parameter"] = r.parameter;
        row["edges"] = r.edges.get_str();
        put(row, "density", r.density);
        put(row, "limit", r.limit);
        put(row, "gap", r.gap);
        row["cover_size"] = r.cover_size.str();
        row["cover_ok"] = r.cover_ok;
        table.push_back(row);
      }
      return Json{{"family", family}, {"k", k}, {"x", x.str()}, {"rows", table}};
    };
  });

  auto* search = app.add_subcommand("search-mk", "Exhaustive grid search for the largest i.i.d. tail");
  search->add_option("--k", k)->required();
  search->add_option("--x", x_s)->required();
  search->add_option("--m", m, "Value grid denominator")->required();
  search->add_option("--n-den", n_den, "Probability grid denominator")->required();
  search->add_option("--max-support", max_support)->required();
  search->callback([&] {
    action = [&] {
      const Rational x = rational_arg(x_s);
      const auto r = grid_search_mk(k, x, GridSpec{m, n_den, max_support},
                                    enum_cap(cfg, kDefaultSearchBudget), cfg.threads);
      return to_json(r);
    };
  });

  auto* hunt = app.add_subcommand("hunt", "Randomized search for hypergraphs beating the Erdos bound");
  hunt->add_option("--k", k)->required();
  hunt->add_option("--s", s32)->required();
  hunt->add_option("--n", n32)->required();
  hunt->add_option("--trials", trials);
  hunt->callback([&] {
    action = [&] {
      const auto r = counterexample_hunt(k, s32, n32, trials, cfg.seed, cfg.threads);
      Json edges = Json::array();
      for (const auto& e : r.best.edges()) edges.push_back(e);
      Json j;
      j["k"] = r.k;
      j["s"] = r.s;
      j["n"] = r.n;
      j["trials"] = r.trials;
      j["max_edges"] = r.max_edges;
      j["bound"] = r.bound.get_str();
      j["exceeded"] = r.exceeded;
      j["best_trial"] = r.best_trial;
      j["best_edges"] = edges;
      return j;
    };
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of m_k and s_k over x = j/(points k)");
  sweep_cmd->add_option("--k", k)->required();
  sweep_cmd->add_option("--points", points);
  sweep_cmd->callback([&] {
    action = [&] {
      Json table = Json::array();
      for (const auto& row : sweep(k, points)) {
        Json r;
        r["x_num"] = row.x.numerator().get_str();
        r["x_den"] = row.x.denominator().get_str();
        r["m_value_num"] = row.m.value.numerator().get_str();
        r["m_value_den"] = row.m.value.denominator().get_str();
        r["regime"] = to_string(row.m.regime);
        r["s_value_num"] = row.s.value.numerator().get_str();
        r["s_value_den"] = row.s.value.denominator().get_str();
        r["argmin_t"] = row.s.argmin_t;
        table.push_back(r);
      }
      return Json{{"k", k}, {"points", points}, {"rows", table}};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format_given = format_opt->count() > 0;

  Format format = Format::kJson;
  if (cfg.format == "csv") format = Format::kCsv;
  if (cfg.format == "plain") format = Format::kPlain;
  if (!cfg.format_given && sweep_cmd->parsed()) format = Format::kCsv;

  try {
    Json body = action();
    Json result = Json{{"command", app.get_subcommands().front()->get_name()}};
    for (auto& [key, value] : body.items()) result[key] = value;
    result["seed"] = cfg.seed;
    emit(out, result, format);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace tailmatch
