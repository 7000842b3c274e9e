/*
Copyright 2026 the hoct authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "hoct/bench.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "hoct/gen.hpp"
#include "hoct/tester.hpp"

namespace hoct {

namespace {

using nlohmann::json;

struct ExperimentSpec {
  std::string name;
  json generator;
  std::int64_t k = 1;
  double eps = 0.5;
  double psi = 0.5;
  ParamMode mode = ParamMode::practical;
  PracticalScale scale;
  int trials = 1;
  std::uint64_t seed = 0;
};

ExperimentSpec parse_experiment(const json& e, std::size_t index) {
  auto context = "experiments[" + std::to_string(index) + "]";
  if (!e.is_object()) throw std::invalid_argument(context + " not an object");
  ExperimentSpec spec;
  spec.name = e.value("name", "exp" + std::to_string(index));
  if (!e.contains("generator"))
    throw std::invalid_argument(context + ": missing generator");
  spec.generator = e.at("generator");
  if (!spec.generator.is_object() || !spec.generator.contains("model"))
    throw std::invalid_argument(context + ": generator needs a model");
  spec.k = e.value("k", std::int64_t{1});
  spec.eps = e.value("eps", 0.5);
  spec.psi = e.value("psi", 0.5);
  std::string mode = e.value("mode", "practical");
  if (mode == "paper")
    spec.mode = ParamMode::paper;
  else if (mode == "practical")
    spec.mode = ParamMode::practical;
  else
    throw std::invalid_argument(context + ": unknown mode " + mode);
  if (e.contains("scale")) {
    const auto& s = e.at("scale");
    spec.scale.s = s.value("s", spec.scale.s);
    spec.scale.l = s.value("l", spec.scale.l);
    spec.scale.m = s.value("m", spec.scale.m);
  }
  spec.trials = e.value("trials", 1);
  if (spec.trials < 1)
    throw std::invalid_argument(context + ": trials must be >= 1");
  spec.seed = e.value("seed", std::uint64_t{0});
  return spec;
}

Graph make_instance(const json& gen, std::uint64_t seed,
                    std::string* model_name) {
  std::string model = gen.at("model").get<std::string>();
  *model_name = model;
  if (model == "file") {
    return Graph::load_edge_list_file(gen.at("path").get<std::string>(),
                                      gen.value("n", std::int64_t{-1}));
  }
  std::int64_t n = gen.at("n").get<std::int64_t>();
  std::int64_t k = gen.value("k", std::int64_t{1});
  GenOptions opt;
  opt.degree_target = gen.value("degree_target", opt.degree_target);
  opt.dmax_cap = gen.value("dmax_cap", opt.dmax_cap);
  if (model == "clusterable") {
    IntraModel intra =
        intra_model_from_string(gen.value("intra", std::string("tri_regular")));
    std::int64_t cross = gen.value("cross_edges", std::int64_t{0});
    return gen_clusterable(n, k, intra, cross, seed, opt);
  }
  if (model == "far_extra_components")
    return gen_far(n, k, FarModel::extra_components, seed, opt);
  if (model == "far_shattered")
    return gen_far(n, k, FarModel::shattered, seed, opt);
  throw std::invalid_argument("unknown generator model: " + model);
}

}  // namespace

const char* experiment_csv_header() {
  return "experiment,model,n,k,trial,seed,verdict,phase_reached,"
         "components_vertex,components_edge,neighbor_queries,degree_queries,"
         "total_queries,s,l,m";
}

std::string run_experiments(const std::string& config_json, int threads,
                            std::string* runtime_log) {
  json config = json::parse(config_json);
  if (!config.is_object() || !config.contains("experiments") ||
      !config.at("experiments").is_array())
    throw std::invalid_argument("config needs an 'experiments' array");

  std::vector<ExperimentSpec> specs;
  for (std::size_t i = 0; i < config.at("experiments").size(); ++i)
    specs.push_back(parse_experiment(config.at("experiments")[i], i));

  std::ostringstream csv, log;
  csv << experiment_csv_header() << '\n';
  for (const auto& spec : specs) {
    std::int64_t accepts = 0;
    std::uint64_t total_queries = 0;
    double wall_total = 0;
    for (int trial = 0; trial < spec.trials; ++trial) {
      std::uint64_t instance_seed =
          Rng::substream(spec.seed, 2 * trial).next_u64();
      std::uint64_t tester_seed =
          Rng::substream(spec.seed, 2 * trial + 1).next_u64();
      std::string model;
      Graph g = make_instance(spec.generator, instance_seed, &model);
      TesterParams params = compute_params(g.n(), spec.k, spec.eps, spec.psi,
                                           spec.mode, spec.scale);
      TestReport report =
          triangle_k_cluster_tester(g, params, tester_seed, threads);
      bool accepted = report.verdict == TestVerdict::accept;
      accepts += accepted ? 1 : 0;
      total_queries += report.ledger.total();
      wall_total += report.wall_ms;
      csv << spec.name << ',' << model << ',' << g.n() << ',' << spec.k << ','
          << trial << ',' << spec.seed << ','
          << (accepted ? "accept" : "reject") << ','
          << static_cast<int>(report.phase_reached) << ','
          << report.components_vertex << ',' << report.components_edge << ','
          << report.ledger.neighbor_queries << ','
          << report.ledger.degree_queries << ',' << report.ledger.total()
          << ',' << params.s << ',' << params.l << ',' << params.m << '\n';
    }
    csv << "# summary," << spec.name << ",accepts=" << accepts << "/"
        << spec.trials
        << ",mean_total_queries=" << total_queries / spec.trials << '\n';
    log << spec.name << ": wall_ms_total=" << wall_total << '\n';
  }
  if (runtime_log) *runtime_log = log.str();
  return csv.str();
}

}  // namespace hoct
