#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "tnq/acceptance.hpp"
#include "tnq/bounds.hpp"
#include "tnq/counting.hpp"
#include "tnq/dynkin.hpp"
#include "tnq/error.hpp"
#include "tnq/forms.hpp"
#include "tnq/graph_alg.hpp"
#include "tnq/mukai.hpp"
#include "tnq/multiplicative.hpp"
#include "tnq/report.hpp"
#include "tnq/simples.hpp"
#include "tnq/strata.hpp"
#include "tnq/util.hpp"

namespace {

using tnq::cli::json;

struct OutputSink {
  std::string out_path;
  std::string manifest_path;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  json params;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void add_input(const std::string& path) {
    inputs.emplace_back(path, tnq::cli::file_fnv_hash(path));
  }

  void emit(const std::string& text) {
    if (out_path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(out_path);
      if (!out) throw tnq::Error("io", "cannot write " + out_path);
      out << text << "\n";
    }
    if (!manifest_path.empty()) {
      tnq::cli::RunManifest man;
      man.command = command;
      man.inputs = inputs;
      man.parameters = params;
      if (!out_path.empty()) man.outputs.emplace_back(out_path, tnq::cli::file_fnv_hash(out_path));
      man.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::ofstream mout(manifest_path);
      if (!mout) throw tnq::Error("io", "cannot write " + manifest_path);
      mout << man.to_json().dump(2) << "\n";
    }
  }

  void emit(const json& j) { emit(j.dump(2)); }
};

tnq::mukai::MukaiVector parse_vector(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw tnq::Error("schema", "vector must look like (r,(c1,...),a): " + raw);
  s = s.substr(1, s.size() - 2);
  auto comma1 = s.find(',');
  auto open = s.find('(');
  auto close = s.find(')');
  if (comma1 == std::string::npos || open == std::string::npos || close == std::string::npos ||
      close + 1 >= s.size())
    throw tnq::Error("schema", "vector must look like (r,(c1,...),a): " + raw);
  tnq::mukai::MukaiVector v;
  v.r = std::stoll(s.substr(0, comma1));
  std::string mid = s.substr(open + 1, close - open - 1);
  if (!mid.empty()) {
    std::stringstream ss(mid);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.c.push_back(std::stoll(tok));
  }
  v.a = std::stoll(s.substr(close + 2));
  return v;
}

std::vector<tnq::mukai::MukaiVector> parse_vectors(const std::string& raw) {
  std::vector<tnq::mukai::MukaiVector> out;
  std::stringstream ss(raw);
  std::string tok;
  while (std::getline(ss, tok, ';'))
    if (!tok.empty()) out.push_back(parse_vector(tok));
  if (out.empty()) throw tnq::Error("schema", "no vectors given");
  return out;
}

std::vector<std::uint32_t> parse_alpha(const tnq::Quiver& q, const std::string& text) {
  tnq::DimVector d = tnq::DimVector::parse(q, text);
  std::vector<std::uint32_t> out;
  for (tnq::Int x : d.v) out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

json quiver_report(const tnq::Quiver& q, const tnq::DimVector& d, tnq::ExceptionPolicy policy) {
  json payload;
  payload["quiver_hash"] = q.canonical_hash();
  payload["dim"] = d.to_json(q);
  auto tn = tnq::is_totally_negative(q);
  payload["totally_negative"] = tn.totally_negative;
  if (tn.witness) {
    auto [i, j] = *tn.witness;
    payload["witness"] = json::array(
        {q.vertex_ids[static_cast<size_t>(i)], q.vertex_ids[static_cast<size_t>(j)]});
  }
  payload["property_P"] = tnq::has_property_p(q, d, policy);
  payload["fundamental_domain"] = tnq::fundamental_domain_contains(q, d);
  switch (tnq::simple_module_exists(q, d, policy)) {
    case tnq::Tri::yes:
      payload["simple_exists"] = "yes";
      break;
    case tnq::Tri::no:
      payload["simple_exists"] = "no";
      break;
    case tnq::Tri::unknown:
      payload["simple_exists"] = "unknown";
      break;
  }
  bool connected = tnq::is_connected(q);
  payload["connected"] = connected;
  if (connected) {
    json blist = json::array();
    for (int a : tnq::bridges(q)) {
      auto [s, t] = q.arrows[static_cast<size_t>(a)];
      blist.push_back(json::array(
          {q.vertex_ids[static_cast<size_t>(s)], q.vertex_ids[static_cast<size_t>(t)]}));
    }
    payload["bridges"] = blist;
    payload["two_edge_connected"] = blist.empty();
    payload["b_invariant"] = tnq::b_invariant(q);
    payload["two_connected_via_decompositions"] = tnq::two_connected_via_decompositions(q);
  }
  if (auto delta = tnq::extended_dynkin_root(q))
    payload["extended_dynkin_root"] = delta->to_json(q);
  else
    payload["extended_dynkin_root"] = nullptr;
  return payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial and arithmetic checks for quiver moment maps"};
  app.require_subcommand(1);

  std::string quiver_path, dim_text, type_path, out_path, manifest_path, cache_path;
  std::string policy_text = "two-vertex";
  std::string oracle_text = "strict";
  std::string method_text = "kernel";
  std::string emit_text = "json";
  std::string level = "desk";
  std::string alpha_text, order_text, gram_text, vectors_text, loop_lemma_text;
  std::uint32_t qprime = 2, nmax = 1;
  int threads = 1;
  long ledger_m = 0;
  int check_gloop = 0;
  unsigned long long budget = 1ull << 26;
  std::size_t cap = tnq::kDefaultTypeCap;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the JSON report to this path");
    sub->add_option("--manifest", manifest_path, "write a run manifest to this path");
  };

  auto* c_check = app.add_subcommand("check", "per-quiver predicates for a dimension vector");
  c_check->add_option("quiver", quiver_path, "quiver JSON file")->required();
  c_check->add_option("--dim", dim_text, "dimension vector (v1=2,v2=1 or positional 2,1)")
      ->required();
  c_check->add_option("--policy", policy_text, "exception reading: two-vertex | any-pair");
  add_common(c_check);

  auto* c_types = app.add_subcommand("types", "enumerate semisimple types");
  c_types->add_option("quiver", quiver_path)->required();
  c_types->add_option("--dim", dim_text)->required();
  c_types->add_option("--oracle", oracle_text, "strict | permissive");
  c_types->add_option("--cap", cap, "enumeration cap");
  add_common(c_types);

  auto* c_aux = app.add_subcommand("aux", "auxiliary quiver of a semisimple type");
  c_aux->add_option("quiver", quiver_path)->required();
  c_aux->add_option("--type", type_path, "semisimple type JSON file")->required();
  add_common(c_aux);

  auto* c_bounds = app.add_subcommand("bounds", "dimension bounds and ledgers");
  c_bounds->add_option("quiver", quiver_path)->required();
  c_bounds->add_option("--dim", dim_text)->required();
  c_bounds->add_option("--loop-lemma", loop_lemma_text, "also check the one-vertex bound: g,d");
  c_bounds->add_option("--ledger", ledger_m, "also verify the jet ledger up to this m");
  add_common(c_bounds);

  auto* c_count = app.add_subcommand("count", "moment fiber counts over F_q[t]/(t^n)");
  c_count->add_option("quiver", quiver_path)->required();
  c_count->add_option("--dim", dim_text)->required();
  c_count->add_option("--q", qprime, "prime residue field size")->required();
  c_count->add_option("--n", nmax, "count for n = 1..N")->required();
  c_count->add_option("--method", method_text, "kernel | brute");
  c_count->add_option("--threads", threads, "worker threads for the enumeration");
  c_count->add_option("--budget", budget, "max enumeration points");
  c_count->add_option("--cache", cache_path, "count cache file");
  c_count->add_option("--emit", emit_text, "json | csv");
  add_common(c_count);

  auto* c_mpa = app.add_subcommand("mpa-count", "multiplicative relation counts (brute force)");
  c_mpa->add_option("quiver", quiver_path)->required();
  c_mpa->add_option("--dim", dim_text)->required();
  c_mpa->add_option("--q", qprime)->required();
  c_mpa->add_option("--n", nmax)->required();
  c_mpa->add_option("--alpha", alpha_text, "per-vertex scalars, v1=1,v2=2 or positional")
      ->required();
  c_mpa->add_option("--order", order_text, "arrow order as a comma permutation of 0..#arrows-1");
  c_mpa->add_option("--budget", budget);
  add_common(c_mpa);

  auto* c_ext = app.add_subcommand("extquiver", "Ext-quiver of Mukai vectors");
  c_ext->add_option("--gram", gram_text, "Gram matrix as JSON, e.g. [[0]]")->required();
  c_ext->add_option("--vectors", vectors_text, "vectors (r,(c1,...),a);(...)")->required();
  c_ext->add_option("--check-gloop", check_gloop, "cross-check against the g-loop quiver");
  add_common(c_ext);

  auto* c_suite = app.add_subcommand("suite", "run the verification catalog");
  c_suite->add_option("--level", level, "catalog level (desk)");
  c_suite->add_option("--threads", threads);
  c_suite->add_option("--budget", budget);
  c_suite->add_option("--cache", cache_path);
  add_common(c_suite);

  CLI11_PARSE(app, argc, argv);

  try {
    std::unique_ptr<tnq::count::Cache> cache;
    if (!cache_path.empty()) cache = std::make_unique<tnq::count::Cache>(cache_path);

    OutputSink sink;
    sink.out_path = out_path;
    sink.manifest_path = manifest_path;

    if (*c_check) {
      tnq::Quiver q = tnq::Quiver::from_file(quiver_path);
      tnq::DimVector d = tnq::DimVector::parse(q, dim_text);
      tnq::ExceptionPolicy policy = policy_text == "any-pair"
                                        ? tnq::ExceptionPolicy::AnyJoinedPair
                                        : tnq::ExceptionPolicy::TwoVertexSupport;
      sink.command = "check";
      sink.add_input(quiver_path);
      sink.params = {{"dim", dim_text}, {"policy", policy_text}};
      json rep = tnq::cli::report_envelope("check", sink.params);
      rep["result"] = quiver_report(q, d, policy);
      sink.emit(rep);
      return 0;
    }

    if (*c_types) {
      tnq::Quiver q = tnq::Quiver::from_file(quiver_path);
      tnq::DimVector d = tnq::DimVector::parse(q, dim_text);
      tnq::OraclePolicy pol = oracle_text == "permissive" ? tnq::OraclePolicy::Permissive
                                                          : tnq::OraclePolicy::Strict;
      sink.command = "types";
      sink.add_input(quiver_path);
      sink.params = {{"dim", dim_text}, {"oracle", oracle_text}};
      json rep = tnq::cli::report_envelope("types", sink.params);
      rep["quiver_hash"] = q.canonical_hash();
      auto types = tnq::enumerate_semisimple_types(q, d, pol, cap);
      rep["count"] = types.size();
      rep["types"] = json::array();
      for (const auto& t : types) rep["types"].push_back(t.to_json(q));
      sink.emit(rep);
      return 0;
    }

    if (*c_aux) {
      tnq::Quiver q = tnq::Quiver::from_file(quiver_path);
      std::ifstream tin(type_path);
      if (!tin) throw tnq::Error("io", "cannot open " + type_path);
      json tj;
      tin >> tj;
      tnq::SemisimpleType tau = tnq::SemisimpleType::from_json(q, tj);
      sink.command = "aux";
      sink.add_input(quiver_path);
      sink.add_input(type_path);
      sink.params = {{"type", type_path}};
      auto [aq, ad] = tnq::aux_quiver(q, tau);
      json rep = tnq::cli::report_envelope("aux", sink.params);
      rep["quiver_hash"] = q.canonical_hash();
      rep["aux_quiver"] = aq.to_json();
      rep["aux_dim"] = ad.to_json(aq);
      sink.emit(rep);
      return 0;
    }

    if (*c_bounds) {
      tnq::Quiver q = tnq::Quiver::from_file(quiver_path);
      tnq::DimVector d = tnq::DimVector::parse(q, dim_text);
      sink.command = "bounds";
      sink.add_input(quiver_path);
      sink.params = {{"dim", dim_text}};
      json rep = tnq::cli::report_envelope("bounds", sink.params);
      rep["quiver_hash"] = q.canonical_hash();
      bool all_ok = true;
      rep["dims"] = {{"dim_x", tnq::bounds::dim_x(q, d).get_str()},
                     {"dim_m", tnq::bounds::dim_m(q, d).get_str()},
                     {"dim_r_double", tnq::bounds::dim_r_double(q, d).get_str()},
                     {"property_P", tnq::bounds::dims_valid(q, d)}};
      try {
        rep["bound_report"] = tnq::bounds::check_totneg_lemma(q, d).to_json(q);
        all_ok = all_ok && rep["bound_report"]["verdict"].get<bool>() &&
                 rep["bound_report"]["remainder_ok"].get<bool>();
      } catch (const tnq::Error& e) {
        rep["bound_report"] = {{"error", e.code()}, {"message", e.what()}};
        if (loop_lemma_text.empty() && ledger_m == 0) throw;
      }
      if (!loop_lemma_text.empty()) {
        auto comma = loop_lemma_text.find(',');
        if (comma == std::string::npos)
          throw tnq::Error("schema", "--loop-lemma expects g,d");
        tnq::Int g = std::stoll(loop_lemma_text.substr(0, comma));
        tnq::Int dd = std::stoll(loop_lemma_text.substr(comma + 1));
        auto lrep = tnq::bounds::check_loop_lemma(g, dd);
        json rows = json::array();
        for (const auto& row : lrep.rows) {
          json r;
          r["composition"] = row.composition;
          r["margin"] = row.margin.get_str();
          rows.push_back(r);
        }
        rep["loop_lemma"] = {{"g", g},
                             {"d", dd},
                             {"all_margins_nonneg", lrep.all_margins_nonneg},
                             {"rows", rows}};
        all_ok = all_ok && lrep.all_margins_nonneg;
      }
      if (ledger_m > 0) {
        auto led = tnq::bounds::mustata_ledger(q, d, ledger_m);
        json rows = json::array();
        for (const auto& row : led.rows) {
          json r;
          r["m"] = row.m;
          r["identity_equal"] = row.identity_equal;
          r["step_ok"] = row.step_ok;
          rows.push_back(r);
        }
        rep["ledger"] = {{"all_ok", led.all_ok}, {"rows", rows}};
        all_ok = all_ok && led.all_ok;
      }
      sink.emit(rep);
      return all_ok ? 0 : 1;
    }

    if (*c_count) {
      tnq::Quiver q = tnq::Quiver::from_file(quiver_path);
      tnq::DimVector d = tnq::DimVector::parse(q, dim_text);
      tnq::count::Options co;
      co.method =
          method_text == "brute" ? tnq::count::Method::Brute : tnq::count::Method::Kernel;
      co.threads = threads;
      co.budget = budget;
      co.cache = cache.get();
      sink.command = "count";
      sink.add_input(quiver_path);
      sink.params = {{"dim", dim_text}, {"q", qprime},      {"n", nmax},
                     {"method", method_text}, {"threads", threads}, {"budget", budget}};
      auto seq = tnq::count::normalized_sequence(q, d, qprime, nmax, co);
      if (emit_text == "csv") {
        std::ostringstream csv;
        csv << "n,count,normalized_num,normalized_den";
        for (const auto& e : seq)
          csv << "\n"
              << e.n << "," << e.count.get_str() << "," << e.normalized.get_num().get_str() << ","
              << e.normalized.get_den().get_str();
        sink.emit(csv.str());
      } else {
        json rep = tnq::cli::report_envelope("count", sink.params);
        rep["quiver_hash"] = q.canonical_hash();
        rep["dim_x"] = tnq::bounds::dim_x(q, d).get_str();
        rep["property_P"] = tnq::bounds::dims_valid(q, d);
        rep["sequence"] = json::array();
        for (const auto& e : seq) {
          json row;
          row["n"] = e.n;
          row["count"] = e.count.get_str();
          row["normalized"] = tnq::cli::rational_json(e.normalized);
          row["difference"] = tnq::cli::rational_json(e.difference);
          rep["sequence"].push_back(row);
        }
        sink.emit(rep);
      }
      return 0;
    }

    if (*c_mpa) {
      tnq::Quiver q = tnq::Quiver::from_file(quiver_path);
      tnq::DimVector d = tnq::DimVector::parse(q, dim_text);
      auto alpha = parse_alpha(q, alpha_text);
      std::vector<int> order;
      std::vector<int>* order_ptr = nullptr;
      if (!order_text.empty()) {
        std::stringstream ss(order_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok));
        order_ptr = &order;
      }
      sink.command = "mpa-count";
      sink.add_input(quiver_path);
      sink.params = {{"dim", dim_text}, {"q", qprime}, {"n", nmax}, {"alpha", alpha_text}};
      mpz_class c = tnq::count::count_multiplicative_fiber(q, d, qprime, alpha, nmax, order_ptr,
                                                           budget);
      json rep = tnq::cli::report_envelope("mpa-count", sink.params);
      rep["quiver_hash"] = q.canonical_hash();
      rep["count"] = c.get_str();
      sink.emit(rep);
      return 0;
    }

    if (*c_ext) {
      json gram_json = json::parse(gram_text);
      tnq::mukai::NSLattice lat;
      lat.rank = static_cast<int>(gram_json.size());
      for (const auto& row : gram_json) {
        std::vector<tnq::Int> r;
        for (const auto& x : row) r.push_back(x.get<tnq::Int>());
        lat.gram.push_back(std::move(r));
      }
      auto vs = parse_vectors(vectors_text);
      sink.command = "extquiver";
      sink.params = {{"gram", gram_text}, {"vectors", vectors_text}};
      auto ext = tnq::mukai::ext_quiver_from_mukai(vs, lat);
      json rep = tnq::cli::report_envelope("extquiver", sink.params);
      rep["pairings"] = ext.pairings;
      rep["double_quiver"] = ext.doubled.to_json();
      rep["underlying_quiver"] = ext.underlying.to_json();
      rep["totally_negative"] = ext.totally_negative;
      bool ok = true;
      if (check_gloop >= 2) {
        // vectors must be integer multiples of one primitive vector
        std::vector<tnq::Int> m;
        tnq::mukai::MukaiVector v0 = vs.front();
        tnq::Int content = std::abs(v0.r);
        for (tnq::Int x : v0.c) content = std::gcd(content, std::abs(x));
        content = std::gcd(content, std::abs(v0.a));
        if (content == 0) throw tnq::Error("schema", "zero vector cannot seed the cross-check");
        v0.r /= content;
        for (auto& x : v0.c) x /= content;
        v0.a /= content;
        for (const auto& v : vs) {
          tnq::Int mi = 0;
          bool consistent = true;
          auto ratio = [&](tnq::Int num, tnq::Int den) {
            if (den == 0) {
              if (num != 0) consistent = false;
              return;
            }
            if (num % den != 0) {
              consistent = false;
              return;
            }
            tnq::Int r2 = num / den;
            if (mi == 0)
              mi = r2;
            else if (mi != r2)
              consistent = false;
          };
          ratio(v.r, v0.r);
          for (size_t i = 0; i < v.c.size(); ++i) ratio(v.c[i], v0.c[i]);
          ratio(v.a, v0.a);
          if (!consistent || mi <= 0)
            throw tnq::Error("schema", "vectors are not positive multiples of one primitive");
          m.push_back(mi);
        }
        tnq::Int vv = tnq::mukai::mukai_pairing(v0, v0, lat);
        if (vv != 2 * static_cast<tnq::Int>(check_gloop) - 2)
          throw tnq::Error("schema", "v0.v0 must equal 2g-2 for the requested g");
        std::vector<tnq::Int> e(m.size(), 1);
        ok = tnq::mukai::cross_check_gloop(check_gloop, m, e);
        rep["gloop_crosscheck"] = {{"g", check_gloop}, {"multiplicities", m}, {"equal", ok}};
      }
      sink.emit(rep);
      return ok ? 0 : 1;
    }

    if (*c_suite) {
      tnq::accept::Options opts;
      opts.level = level;
      opts.threads = threads;
      opts.budget = budget;
      opts.cache = cache.get();
      sink.command = "suite";
      sink.params = {{"level", level}, {"threads", threads}, {"budget", budget}};
      auto results = tnq::accept::run(opts);
      bool all = true;
      json rows = json::array();
      for (const auto& r : results) {
        all = all && r.pass;
        std::ostringstream line;
        line << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " — " << r.name
             << " (" << r.detail << ") [" << r.seconds << "s]";
        std::cout << line.str() << "\n";
        json row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        row["timing"] = {{"seconds", r.seconds}};
        rows.push_back(row);
      }
      if (!out_path.empty() || !manifest_path.empty()) {
        json rep = tnq::cli::report_envelope("suite", sink.params);
        rep["criteria"] = rows;
        rep["all_pass"] = all;
        sink.emit(rep);
      }
      std::cout << (all ? "all criteria passed" : "FAILURES present") << "\n";
      return all ? 0 : 1;
    }
  } catch (const tnq::Error& e) {
    json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = {{"code", "internal"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
