// outrank: command-line front end for the PROMETHEE ranking engine.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "outrank/outrank.hpp"
#include "outrank/service.hpp"

namespace {

using namespace outrank;
namespace bb = outrank::basketball;

struct RankOptions {
  std::string csv;
  std::string config;
  std::string profile;
  std::string scenario;
  std::string weights;
  std::string function;
  std::string residual;
  std::optional<double> alpha;
  std::optional<double> beta;
};

void add_rank_options(CLI::App* cmd, RankOptions& o) {
  cmd->add_option("csv", o.csv, "box-score CSV")->required();
  cmd->add_option("--config", o.config, "key = value settings file");
  cmd->add_option("--profile", o.profile, "PG, SG, F, PF, C or all");
  cmd->add_option("--scenario", o.scenario, "1 (equal weights) or 2 (boosted)");
  cmd->add_option("--weights", o.weights, "explicit weights, e.g. EPts=0.4,ASTM=0.4");
  cmd->add_option("--function", o.function, "preference function (Usual .. Gaussian)");
  cmd->add_option("--residual", o.residual, "scenario 2 residual rule: balanced or literal");
  cmd->add_option("--alpha", o.alpha, "indifference quantile level in percent");
  cmd->add_option("--beta", o.beta, "preference quantile level in percent");
}

RankRequest build_request(const RankOptions& o) {
  RankRequest req;
  if (!o.config.empty()) apply_config(KeyValueConfig::parse(csv::read_file(o.config)), req);
  if (!o.profile.empty()) req.profile = parse_profile(o.profile);
  if (!o.scenario.empty()) req.scenario = parse_scenario(o.scenario);
  if (!o.weights.empty()) req.weights = parse_weight_list(o.weights);
  if (!o.function.empty()) req.function_kind = parse_function(o.function);
  if (!o.residual.empty()) {
    KeyValueConfig cfg = KeyValueConfig::parse("residual = " + o.residual);
    apply_config(cfg, req);
  }
  if (o.alpha) req.alpha = *o.alpha;
  if (o.beta) req.beta = *o.beta;
  return req;
}

void print_warnings(const RankResponse& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_indices(const std::string& path, bool all, bool json) {
  const auto dataset = csv::load_boxscore_csv(path);
  const auto players = all ? dataset : bb::eligibility_filter(dataset);
  if (json) {
    std::cout << players_json(players).dump(2) << '\n';
    return 0;
  }
  std::cout << "player_id,position";
  for (auto id : bb::kAllIndices) std::cout << ',' << id;
  std::cout << '\n';
  for (const auto& l : players) {
    if (!(l.Min > 0)) continue;
    const auto v = bb::compute_indices(l);
    std::cout << csv::quote_if_needed(l.player_id) << ',' << bb::code(l.position);
    for (auto id : bb::kAllIndices) std::cout << ',' << format_export(bb::index_value(v, id));
    std::cout << '\n';
  }
  return 0;
}

int cmd_tune(const RankOptions& o, bool json) {
  const auto req = build_request(o);
  req.validate();
  const auto players = select_players(csv::load_boxscore_csv(o.csv), req.profile);
  const auto perf = index_matrix(players);
  const TuningConfig tuning{req.alpha, req.beta};
  Json out{{"schema_version", kSchemaVersion}, {"profile", profile_name(req.profile)},
           {"alpha", req.alpha}, {"beta", req.beta}};
  Json thresholds = Json::object();
  std::string text = "criterion\tq\tp\n";
  for (std::size_t k = 0; k < perf.criteria().size(); ++k) {
    const auto t = tune_thresholds(perf.values().column(k), tuning);
    thresholds[perf.criteria()[k]] = to_json(t);
    text += perf.criteria()[k] + '\t' + format_export(t.q) + '\t' + format_export(t.p) + '\n';
  }
  out["thresholds"] = std::move(thresholds);
  if (json) std::cout << out.dump(2) << '\n';
  else std::cout << text;
  return 0;
}

int cmd_rank(const RankOptions& o, const std::string& format) {
  const auto resp = run_rank(csv::load_boxscore_csv(o.csv), build_request(o));
  print_warnings(resp);
  if (format == "json") std::cout << to_json(resp).dump(2) << '\n';
  else std::cout << to_table(resp, format == "fixed");
  return 0;
}

int cmd_graph(const RankOptions& o, const std::string& out_path, std::optional<std::size_t> top) {
  const auto resp = run_rank(csv::load_boxscore_csv(o.csv), build_request(o));
  print_warnings(resp);
  DotOptions opts;
  opts.max_depth = top;
  const std::string dot = to_dot(resp.relation, resp.flows, opts);
  if (out_path.empty() || out_path == "-") {
    std::cout << dot;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
    f << dot;
  }
  return 0;
}

std::vector<double> index_column(const std::vector<bb::BoxScoreLine>& players, std::string_view id) {
  std::vector<double> out;
  for (const auto& l : players) out.push_back(bb::index_value(bb::compute_indices(l), id));
  return out;
}

int cmd_stats_anova(const std::vector<bb::BoxScoreLine>& players) {
  const auto groups = bb::group_by_position(players);
  std::cout << "index\tTotal";
  for (auto p : bb::kPositions) std::cout << '\t' << bb::code(p);
  std::cout << "\tp_value\n";
  for (auto id : bb::kAllIndices) {
    std::cout << id << '\t' << format_export(stats::mean(index_column(players, id)));
    std::vector<std::vector<double>> samples;
    for (auto p : bb::kPositions) {
      const auto col = index_column(groups.at(p), id);
      std::cout << '\t' << (col.empty() ? std::string("-") : format_export(stats::mean(col)));
      if (!col.empty()) samples.push_back(col);
    }
    std::string p_value = "n/a";
    try {
      p_value = format_export(stats::anova_oneway(samples).p_value);
    } catch (const Error&) {
    }
    std::cout << '\t' << p_value << '\n';
  }
  return 0;
}

int cmd_stats_corr(const std::vector<bb::BoxScoreLine>& players) {
  const auto groups = bb::group_by_position(players);
  for (auto p : bb::kPositions) {
    const auto& g = groups.at(p);
    if (g.size() < 3) {
      std::cout << "# " << bb::code(p) << " (n=" << g.size() << ", too few players)\n";
      continue;
    }
    std::cout << "# " << bb::code(p) << " (n=" << g.size() << ", * = significant at 5%)\n";
    for (auto id : bb::kAllIndices) std::cout << '\t' << id;
    std::cout << '\n';
    for (auto a : bb::kAllIndices) {
      std::cout << a;
      const auto x = index_column(g, a);
      for (auto b : bb::kAllIndices) {
        std::string cell = "-";
        try {
          const double r = stats::pearson_correlation(x, index_column(g, b));
          cell = format_export(r);
          if (a != b && stats::correlation_significant(r, g.size())) cell += '*';
        } catch (const Error&) {
        }
        std::cout << '\t' << cell;
      }
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_serve(const std::string& path, const std::string& bind) {
  const auto addr = parse_bind_address(bind);
  RankService service(csv::load_boxscore_csv(path));
  httplib::Server server;
  service.mount(server);
  std::cerr << "listening on " << addr.host << ':' << addr.port << '\n';
  if (!server.listen(addr.host, addr.port)) {
    throw Error(ErrorKind::InvalidInput, "cannot bind " + bind);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PROMETHEE I/II outranking of box-score data"};
  app.require_subcommand(1);

  std::string indices_csv;
  bool indices_all = false;
  bool indices_json = false;
  auto* indices = app.add_subcommand("indices", "per-player efficiency indices");
  indices->add_option("csv", indices_csv, "box-score CSV")->required();
  indices->add_flag("--all", indices_all, "include ineligible players");
  indices->add_flag("--json", indices_json, "JSON output");

  RankOptions tune_opts;
  bool tune_json = false;
  auto* tune = app.add_subcommand("tune", "quantile-based thresholds");
  add_rank_options(tune, tune_opts);
  tune->add_flag("--json", tune_json, "JSON output");

  RankOptions rank_opts;
  std::string format = "json";
  auto* rank = app.add_subcommand("rank", "PROMETHEE I/II ranking");
  add_rank_options(rank, rank_opts);
  rank->add_option("--format", format, "json, table or fixed")
      ->check(CLI::IsMember({"json", "table", "fixed"}));

  RankOptions graph_opts;
  std::string graph_out;
  std::optional<std::size_t> graph_top;
  auto* graph = app.add_subcommand("graph", "outranking graph in DOT");
  add_rank_options(graph, graph_opts);
  graph->add_option("--out", graph_out, "output file (default stdout)");
  graph->add_option("--top", graph_top, "keep only the first N layers");

  std::string stats_csv;
  std::string stats_kind;
  auto* stats_cmd = app.add_subcommand("stats", "ANOVA by position or correlation matrices");
  stats_cmd->add_option("csv", stats_csv, "box-score CSV")->required();
  stats_cmd->add_option("kind", stats_kind, "anova or corr")
      ->required()
      ->check(CLI::IsMember({"anova", "corr"}));

  std::string serve_csv;
  std::string bind = "127.0.0.1:8080";
  auto* serve = app.add_subcommand("serve", "HTTP API");
  serve->add_option("csv", serve_csv, "box-score CSV")->required();
  serve->add_option("--bind", bind, "host:port");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*indices) return cmd_indices(indices_csv, indices_all, indices_json);
    if (*tune) return cmd_tune(tune_opts, tune_json);
    if (*rank) return cmd_rank(rank_opts, format);
    if (*graph) return cmd_graph(graph_opts, graph_out, graph_top);
    if (*stats_cmd) {
      const auto players = bb::eligibility_filter(csv::load_boxscore_csv(stats_csv));
      return stats_kind == "anova" ? cmd_stats_anova(players) : cmd_stats_corr(players);
    }
    if (*serve) return cmd_serve(serve_csv, bind);
  } catch (const RequestError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
