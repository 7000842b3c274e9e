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
#include "hoct/hoct.h"

#include <cstring>
#include <json.hpp>
#include <sstream>
#include <string>

#include "hoct/bench.hpp"
#include "hoct/checks.hpp"
#include "hoct/complex.hpp"
#include "hoct/gen.hpp"
#include "hoct/graph.hpp"
#include "hoct/tester.hpp"
#include "hoct/walks.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const hoct::Graph* unwrap(const hoct_graph* g) {
  return reinterpret_cast<const hoct::Graph*>(g);
}
hoct_graph* wrap(hoct::Graph* g) { return reinterpret_cast<hoct_graph*>(g); }

/// Maps C++ exceptions onto status codes; the active message lands in
/// hoct_last_error().
template <typename Fn>
hoct_status guarded(Fn&& fn) {
  try {
    fn();
    return HOCT_OK;
  } catch (const hoct::CapExceeded& e) {
    g_last_error = e.what();
    return HOCT_ERR_CAP_EXCEEDED;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return HOCT_ERR_OVERFLOW;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HOCT_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return HOCT_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return HOCT_ERR_INVALID_ARGUMENT;
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return HOCT_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return HOCT_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HOCT_ERR_INTERNAL;
  }
}

hoct_status require(bool cond, const char* message) {
  if (cond) return HOCT_OK;
  g_last_error = message;
  return HOCT_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* hoct_status_name(hoct_status s) {
  switch (s) {
    case HOCT_OK: return "ok";
    case HOCT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HOCT_ERR_IO: return "io error";
    case HOCT_ERR_CAP_EXCEEDED: return "enumeration cap exceeded";
    case HOCT_ERR_OVERFLOW: return "overflow";
    case HOCT_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* hoct_last_error(void) { return g_last_error.c_str(); }

const char* hoct_version(void) { return "0.1.0"; }

hoct_status hoct_graph_load_file(const char* path, long long n_override,
                                 hoct_graph** out) {
  if (hoct_status s = require(path && out, "null argument")) return s;
  return guarded([&] {
    *out = wrap(new hoct::Graph(
        hoct::Graph::load_edge_list_file(path, n_override)));
  });
}

hoct_status hoct_graph_from_text(const char* text, long long n_override,
                                 hoct_graph** out) {
  if (hoct_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = wrap(new hoct::Graph(
        hoct::Graph::from_edge_list_text(text, n_override)));
  });
}

hoct_status hoct_graph_save_file(const hoct_graph* g, const char* path) {
  if (hoct_status s = require(g && path, "null argument")) return s;
  return guarded([&] { unwrap(g)->save_edge_list_file(path); });
}

void hoct_graph_free(hoct_graph* g) {
  delete reinterpret_cast<hoct::Graph*>(g);
}

long long hoct_graph_vertex_count(const hoct_graph* g) {
  return g ? unwrap(g)->n() : -1;
}
long long hoct_graph_edge_count(const hoct_graph* g) {
  return g ? unwrap(g)->m() : -1;
}
long long hoct_graph_max_degree(const hoct_graph* g) {
  return g ? unwrap(g)->dmax() : -1;
}

hoct_status hoct_graph_neighbor(const hoct_graph* g, long long v, long long i,
                                long long* out) {
  if (hoct_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    hoct::QueryLedger ledger;
    *out = unwrap(g)->neighbor(static_cast<hoct::VertexId>(v), i, ledger);
  });
}

hoct_status hoct_graph_degree(const hoct_graph* g, long long v,
                              long long* out) {
  if (hoct_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    hoct::QueryLedger ledger;
    *out = unwrap(g)->degree(static_cast<hoct::VertexId>(v), ledger);
  });
}

hoct_status hoct_gen_clusterable(long long n, long long k,
                                 const char* intra_model,
                                 long long cross_edges,
                                 unsigned long long seed, hoct_graph** out) {
  if (hoct_status s = require(out != nullptr, "null output")) return s;
  return guarded([&] {
    hoct::IntraModel intra =
        intra_model ? hoct::intra_model_from_string(intra_model)
                    : hoct::IntraModel::tri_regular;
    *out = wrap(new hoct::Graph(
        hoct::gen_clusterable(n, k, intra, cross_edges, seed)));
  });
}

hoct_status hoct_gen_far(long long n, long long k, const char* model,
                         unsigned long long seed, hoct_graph** out) {
  if (hoct_status s = require(out != nullptr, "null output")) return s;
  return guarded([&] {
    hoct::FarModel m = model ? hoct::far_model_from_string(model)
                             : hoct::FarModel::extra_components;
    *out = wrap(new hoct::Graph(hoct::gen_far(n, k, m, seed)));
  });
}

void hoct_test_options_init(hoct_test_options* opt) {
  if (!opt) return;
  *opt = hoct_test_options{};
  opt->k = 1;
  opt->eps = 0.5;
  opt->psi = 0.5;
  opt->practical = 1;
  opt->scale_s = -1;
  opt->scale_l = -1;
  opt->scale_m = -1;
  opt->c31 = opt->c42 = opt->c43 = 1.0;
  opt->threads = 1;
}

hoct_status hoct_test_run(const hoct_graph* g, const hoct_test_options* opt,
                          hoct_test_report* report) {
  if (hoct_status s = require(g && opt && report, "null argument")) return s;
  return guarded([&] {
    hoct::PracticalScale scale;
    if (opt->scale_s > 0) scale.s = opt->scale_s;
    if (opt->scale_l > 0) scale.l = opt->scale_l;
    if (opt->scale_m > 0) scale.m = opt->scale_m;
    hoct::TesterParams params = hoct::compute_params(
        unwrap(g)->n(), opt->k, opt->eps, opt->psi,
        opt->practical ? hoct::ParamMode::practical : hoct::ParamMode::paper,
        scale, opt->c31 > 0 ? opt->c31 : 1.0, opt->c42 > 0 ? opt->c42 : 1.0,
        opt->c43 > 0 ? opt->c43 : 1.0);
    params.literal_component_rule = opt->literal_alg3 != 0;
    hoct::TestReport rep = hoct::triangle_k_cluster_tester(
        *unwrap(g), params, opt->seed, std::max(1, opt->threads));
    *report = hoct_test_report{};
    report->accepted = rep.verdict == hoct::TestVerdict::accept ? 1 : 0;
    report->phase_reached = static_cast<int>(rep.phase_reached);
    report->components_vertex = rep.components_vertex;
    report->components_edge = rep.components_edge;
    report->neighbor_queries = rep.ledger.neighbor_queries;
    report->degree_queries = rep.ledger.degree_queries;
    report->total_queries = rep.ledger.total();
    report->stopped_walks = rep.stopped_walks;
    report->s = rep.params.s;
    report->l = rep.params.l;
    report->m = rep.params.m;
    report->theta = rep.params.theta;
    report->delta = rep.params.delta;
    report->wall_ms = rep.wall_ms;
  });
}

hoct_status hoct_test_report_format(const hoct_test_report* report,
                                    char** out) {
  if (hoct_status s = require(report && out, "null argument")) return s;
  return guarded([&] {
    std::ostringstream text;
    text << "verdict=" << (report->accepted ? "accept" : "reject")
         << "\nphase_reached=" << report->phase_reached
         << "\ncomponents_vertex_phase=" << report->components_vertex
         << "\ncomponents_edge_phase=" << report->components_edge
         << "\nneighbor_queries=" << report->neighbor_queries
         << "\ndegree_queries=" << report->degree_queries
         << "\ntotal_queries=" << report->total_queries
         << "\nstopped_walks=" << report->stopped_walks << "\ns=" << report->s
         << " l=" << report->l << " m=" << report->m
         << " theta=" << report->theta << " delta=" << report->delta << "\n";
    *out = dup_string(text.str());
  });
}

namespace {

hoct::Rational rational_from_json(const json& v) {
  if (v.is_number_integer())
    return hoct::Rational(v.get<std::int64_t>());
  if (v.is_number_float()) {
    // decimal with up to 9 fractional digits, exact
    double d = v.get<double>();
    std::int64_t den = 1000000000LL;
    return hoct::Rational(static_cast<std::int64_t>(d * den), den);
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return hoct::Rational(std::stoll(s));
    return hoct::Rational(std::stoll(s.substr(0, slash)),
                          std::stoll(s.substr(slash + 1)));
  }
  throw std::invalid_argument("expected number or \"p/q\" string");
}

std::vector<hoct::VertexId> vertex_list_from_json(const json& v) {
  std::vector<hoct::VertexId> out;
  if (v.is_string()) {
    std::istringstream in(v.get<std::string>());
    long long x;
    while (in >> x) out.push_back(static_cast<hoct::VertexId>(x));
  } else if (v.is_array()) {
    for (const auto& x : v) out.push_back(x.get<hoct::VertexId>());
  } else {
    throw std::invalid_argument("expected vertex list");
  }
  return out;
}

std::string run_oracle_check(const hoct::Graph* g, const std::string& check,
                             const json& args, bool* pass) {
  using namespace hoct;
  *pass = false;
  if (check == "theorem1") {
    auto res = checks::theorem1_sweep(args.value("max_n", 7),
                                      args.value("threads", 1));
    *pass = res.pass;
    return res.details;
  }
  if (check == "lemma2") {
    auto res = checks::lemma2_sweep(args.value("max_n", 7),
                                    args.value("threads", 1));
    *pass = res.pass;
    return res.details;
  }
  if (check == "lemma3") {
    auto res = checks::lemma3_random(args.value("instances", 200),
                                     args.value("max_n", 10),
                                     args.value("seed", std::uint64_t{1}));
    *pass = res.pass;
    return res.details;
  }
  if (check == "lemma10") {
    auto res = checks::lemma10_grid(args.value("step", 1e-3));
    *pass = res.pass;
    return res.details;
  }
  if (check == "walk-equivalence") {
    auto res = checks::walk_equivalence(
        args.value("exhaustive_max_n", 5), args.value("random_per_size", 300),
        args.value("seed", std::uint64_t{1}));
    *pass = res.pass;
    return res.details;
  }
  if (check == "mixing") {
    std::string which = args.value("which", g ? "alpha" : "lemma4");
    if (which == "lemma4") {
      auto res = checks::lemma4_random(args.value("graphs", 50),
                                       args.value("t_max", 50),
                                       args.value("seed", std::uint64_t{1}));
      *pass = res.pass;
      return res.details;
    }
    if (which == "lemma9") {
      auto res = checks::lemma9_expanders(args.value("seed", std::uint64_t{1}));
      *pass = res.pass;
      return res.details;
    }
    if (!g) throw std::invalid_argument("mixing alpha needs a graph");
    ComplexView x = ComplexView::raise(*g, args.value("d", 2));
    int i = args.value("i", 0);
    double alpha =
        spectral_mixing_rate(induced_i_graph(x, i), args.value("lazy", false));
    *pass = true;
    return "alpha_" + std::to_string(i) + " = " + std::to_string(alpha);
  }
  if (!g) throw std::invalid_argument("check '" + check + "' needs a graph");
  if (check == "colorful") {
    ComplexView x = ComplexView::raise(*g, args.value("d", 2));
    int cap = args.value("cap", kDefaultEnumCap);
    ColorfulVerdict v =
        is_colorful_expander(x, rational_from_json(args.at("eps")), cap);
    *pass = v.is_expander;
    std::ostringstream out;
    out << (v.is_expander ? "colorful expander" : "not a colorful expander");
    if (v.eps_star) out << "; eps* = " << v.eps_star->to_string();
    if (v.witness) {
      out << "; witness dim " << v.witness->dim << " faces {";
      for (std::size_t i = 0; i < v.witness->faces.size(); ++i)
        out << (i ? " " : "") << v.witness->faces[i];
      out << "}";
    }
    return out.str();
  }
  if (check == "conductance") {
    bool classic = args.value("classic", false);
    std::vector<VertexId> s_set = vertex_list_from_json(args.at("S"));
    std::vector<VertexId> c_set;
    if (args.contains("C")) {
      c_set = vertex_list_from_json(args.at("C"));
    } else {
      for (VertexId v = 0; v < g->n(); ++v) c_set.push_back(v);
    }
    std::ostringstream out;
    if (classic) {
      Rational phi = classic_conductance(*g, s_set, c_set);
      out << "Phi = " << phi.to_string();
    } else {
      int d = args.value("d", 2);
      ComplexView x = ComplexView::raise(*g, d);
      Cochain s_c, c_c;
      s_c.dim = c_c.dim = 0;
      for (VertexId v : s_set) s_c.faces.push_back(v);
      for (VertexId v : c_set) c_c.faces.push_back(v);
      Rational psi = normalized_external_conductance(x, s_c, c_c);
      out << "Psi = " << psi.to_string();
    }
    *pass = true;
    return out.str();
  }
  if (check == "verify-cluster") {
    int d = args.value("d", 2);
    double psi_in = args.at("psi_in").get<double>();
    double psi_out = args.at("psi_out").get<double>();
    auto parts = parse_partition(args.at("partition").get<std::string>());
    ClusterReport rep = verify_cluster(*g, parts, d, psi_in, psi_out,
                                       args.value("cap", kDefaultEnumCap));
    *pass = rep.ok;
    return rep.to_text();
  }
  throw std::invalid_argument("unknown oracle check: " + check);
}

}  // namespace

hoct_status hoct_oracle_check(const hoct_graph* g, const char* check,
                              const char* args_json, char** report_out,
                              int* pass_out) {
  if (hoct_status s = require(check && report_out && pass_out,
                              "null argument"))
    return s;
  return guarded([&] {
    json args = json::object();
    if (args_json && *args_json) args = json::parse(args_json);
    bool pass = false;
    std::string report = run_oracle_check(g ? unwrap(g) : nullptr, check,
                                          args, &pass);
    *report_out = dup_string(report);
    *pass_out = pass ? 1 : 0;
  });
}

hoct_status hoct_bench_run(const char* config_json, int threads,
                           char** csv_out) {
  if (hoct_status s = require(config_json && csv_out, "null argument"))
    return s;
  return guarded([&] {
    *csv_out = dup_string(
        hoct::run_experiments(config_json, std::max(1, threads)));
  });
}

void hoct_string_free(char* s) { std::free(s); }

}  // extern "C"
