// decyc: command-line front end. Every mathematical answer is wrapped in a
// certificate envelope and re-verified before it is printed.

#include "decyc/decyc.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace decyc;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kPrecondition = 3, kBudget = 4 };

struct Common {
  bool json = false;
  std::uint64_t seed = 1;
  std::int64_t budget = 0;  // 0 = default (or DECYC_BUDGET)
  std::string format = "auto";
};

std::int64_t resolve_budget(const Common& c, std::int64_t fallback) {
  if (c.budget > 0) return c.budget;
  if (const char* env = std::getenv("DECYC_BUDGET")) {
    try {
      long long b = std::stoll(env);
      if (b > 0) return b;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("DECYC_BUDGET", "must be a positive integer");
  }
  return fallback;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// A file path, or one of the named graphs / F1 / F2 (case-insensitive).
CubicGraph load_graph(const std::string& arg, const Common& c) {
  std::string key = lower(arg);
  for (const auto& name : named_graphs())
    if (lower(name) == key) return named(name);
  if (key == "f1") return F1();
  if (key == "f2") return F2();
  GraphFormat f = GraphFormat::EdgeList;
  if (c.format == "graph6") f = GraphFormat::Graph6;
  else if (c.format == "auto" && (key.ends_with(".g6") || key.ends_with(".graph6"))) f = GraphFormat::Graph6;
  return parse_graph(arg, f);
}

GenusOptions genus_options(const Common& c) {
  GenusOptions o;
  o.search.seed = c.seed;
  o.partition_budget = resolve_budget(c, o.partition_budget);
  return o;
}

PartitionOptions partition_options(const Common& c) {
  PartitionOptions o;
  o.genus = genus_options(c);
  o.budget = resolve_budget(c, o.budget);
  return o;
}

int emit(const Json& env, const Common& c, const std::string& text) {
  auto v = verify_certificate(env);
  if (!v.pass) {
    std::cerr << "internal error: certificate failed self-check: " << v.reason << "\n";
    return kInternal;
  }
  if (c.json) std::cout << env.dump(2) << "\n";
  else std::cout << text;
  return kOk;
}

std::string ids(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string partition_text(const DecyclingPartition& p) {
  return "class " + std::string(to_string(p.cls.type)) + (p.cls.coherent ? " (coherent)" : "") + "\nJ: " +
         ids(p.J.to_vector()) + "\nA: " + ids(p.A.to_vector()) + "\ne_J " + std::to_string(p.cls.e_J) +
         ", components of A " + std::to_string(p.cls.components_A) + "\n";
}

Json embeddability_parts(const EmbeddabilityClass& cls) {
  Json parts = Json::array();
  if (cls.xuong) parts.push_back(xuong_json(*cls.xuong));
  if (cls.witness) parts.push_back(nebesky_json(*cls.witness));
  return parts;
}

int cmd_analyze(const std::string& input, const Common& c) {
  auto g = load_graph(input, c);
  auto b = betti(g);
  std::string zeta = "unknown (cap exceeded)";
  Json zj = nullptr;
  try {
    auto z = cyclic_connectivity(g);
    zeta = std::to_string(z.zeta) + (z.saturated ? " (saturated)" : "");
    zj = z.zeta;
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
  }
  std::string odd4 = "unknown";
  Json oj = nullptr;
  try {
    bool ok = is_odd_cyclically_k_connected(g, 4).connected;
    odd4 = ok ? "yes" : "no";
    oj = ok;
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
  }
  auto cls = classify_upper_embeddable(g, genus_options(c));
  Json result = {{"kind", "bundle"},
                 {"n", g.order()},
                 {"betti", b.value},
                 {"zeta", zj},
                 {"odd_cyclically_4_connected", oj},
                 {"face", std::string(to_string(cls.face))},
                 {"ample", std::string(to_string(cls.ample))},
                 {"parts", embeddability_parts(cls)}};
  std::string text = "n " + std::to_string(g.order()) + "\nbetti " + std::to_string(b.value) + "\nzeta " + zeta +
                     "\nodd-cyclically 4-connected " + odd4 + "\nembeddability " + std::string(to_string(cls.face)) +
                     "\n";
  int rc = emit(make_envelope(g, "analyze", result), c, text);
  return rc == kOk && cls.face == FaceClass::Unknown ? kBudget : rc;
}

int cmd_genus(const std::string& input, const Common& c) {
  auto g = load_graph(input, c);
  auto opt = genus_options(c);
  auto cls = classify_upper_embeddable(g, opt);
  Json result = {{"kind", "bundle"}, {"face", std::string(to_string(cls.face))}, {"parts", embeddability_parts(cls)}};
  std::string text = "embeddability " + std::string(to_string(cls.face)) + "\n";
  if (cls.xi) {
    int gm = (betti(g).value - *cls.xi) / 2;
    result["xi"] = *cls.xi;
    result["max_genus"] = gm;
    text += "deficiency " + std::to_string(*cls.xi) + "\nmaximum genus " + std::to_string(gm) + "\n";
  }
  if (cls.face == FaceClass::TwoFace) {
    auto amp = classify_amply(g, opt);
    result["ample"] = std::string(to_string(amp.verdict));
    if (amp.heavy) result["parts"].push_back(xuong_json(*amp.heavy));
    if (amp.proof) result["ample_proof"] = {{"method", amp.proof->method}, {"examined", amp.proof->examined}};
    text += "ampleness " + std::string(to_string(amp.verdict)) + "\n";
  }
  int rc = emit(make_envelope(g, "genus", result), c, text);
  return rc == kOk && cls.face == FaceClass::Unknown ? kBudget : rc;
}

int cmd_partition(const std::string& input, bool coherent, const std::string& dot_path, const Common& c) {
  auto g = load_graph(input, c);
  auto opt = partition_options(c);
  auto out = coherent ? find_coherent_partition(g, opt) : find_stable_partition(g, opt);
  std::string what = coherent ? "coherent" : "stable";
  Json result;
  std::string text;
  switch (out.status) {
    case SearchStatus::Found:
      result = partition_json(*out.partition);
      text = partition_text(*out.partition);
      break;
    case SearchStatus::NoneExists:
      if (out.proof) {
        result = exhaustion_json(what, *out.proof);
        text = "no " + what + " partition exists (exhaustion: " + out.proof->method + ", " +
               std::to_string(out.proof->examined) + " nodes, complete)\n";
      } else {
        result = {{"kind", "bundle"}, {"parts", Json::array({nebesky_json(*out.witness)})}};
        text = "no " + what + " partition exists (graph is not upper-embeddable; Nebesky witness)\n";
      }
      break;
    case SearchStatus::Unknown:
      result = {{"kind", "unknown"}, {"query", what}};
      text = "unknown: search budget exhausted\n";
      break;
  }
  result["route"] = out.route;
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    require(static_cast<bool>(f), Errc::InvalidArgument, "cannot write '" + dot_path + "'");
    f << export_dot(g, out.partition ? &*out.partition : nullptr);
  }
  int rc = emit(make_envelope(g, "partition", result), c, text);
  return rc == kOk && out.status == SearchStatus::Unknown ? kBudget : rc;
}

int cmd_decompose(const std::string& input, const std::string& order, const Common& c) {
  auto g = load_graph(input, c);
  DecompositionOptions opt;
  opt.seed = c.seed;
  opt.order = order == "last" ? SplitOrder::Last : order == "random" ? SplitOrder::Random : SplitOrder::First;
  auto t = canonical_decomposition(g, opt);
  std::string text = std::to_string(t.factor_nodes.size()) + " factor(s), " + std::to_string(t.odd_factor_count()) +
                     " cyclically odd\n";
  for (std::size_t i = 0; i < t.factor_nodes.size(); ++i) {
    const auto& f = t.nodes[t.factor_nodes[i]].graph;
    text += "  factor n=" + std::to_string(f.order()) + " betti=" + std::to_string(betti(f).value) + " code " +
            t.codes[i].hex() + "\n";
  }
  return emit(make_envelope(g, "decompose", decomposition_json(t)), c, text);
}

int cmd_generate(const std::string& what, const std::string& out_format, const Common& c) {
  CubicGraph g;
  std::string key = lower(what);
  if (key.rfind("ring:", 0) == 0) {
    g = ring_of_diamonds(std::stoi(key.substr(5)));
  } else if (key.rfind("random:", 0) == 0) {
    g = random_cubic(std::stoi(key.substr(7)), c.seed);
  } else if (key.ends_with(".json")) {
    auto j = Json::parse(read_file(what));
    GeneratorRecipe r;
    r.base = j.value("base", "K4");
    r.random_n = j.value("random_n", 0);
    r.seed = j.value("seed", std::uint64_t{0});
    for (const auto& op : j.value("ops", Json::array())) {
      auto name = op.at("op").get<std::string>();
      if (name == "inflate") r.ops.push_back(InflateOp{op.at("v").get<int>()});
      else if (name == "diamond") r.ops.push_back(DiamondOp{op.at("e").get<int>()});
      else if (name == "string") r.ops.push_back(StringOp{op.at("e").get<int>(), op.at("k").get<int>()});
      else if (name == "loop") r.ops.push_back(SubdivideLoopOp{op.at("e").get<int>()});
      else fail(Errc::ParseError, "unknown recipe op '" + name + "'");
    }
    g = replay(r);
  } else {
    g = load_graph(what, c);
  }
  std::cout << (out_format == "graph6" ? to_graph6(g) + "\n" : to_edgelist(g));
  return kOk;
}

int cmd_certify(const std::string& path) {
  auto env = Json::parse(read_file(path));
  auto v = verify_certificate(env);
  std::cout << (v.pass ? "pass" : "fail: " + v.reason) << "\n";
  return v.pass ? kOk : kPrecondition;
}

int cmd_experiment(int n, int samples, int workers, const Common& c) {
  ExperimentOptions opt;
  opt.n = n;
  opt.samples = samples;
  opt.seed = c.seed;
  opt.workers = workers;
  opt.partition = partition_options(c);
  auto r = run_experiment(opt);
  const auto& k = r.counts;
  Json result = {{"kind", "report"},
                 {"n", r.n},
                 {"samples", k.samples},
                 {"seeds", {r.first_seed, r.last_seed}},
                 {"connected", k.connected},
                 {"classified", k.classified},
                 {"upper_embeddable", k.upper_embeddable},
                 {"stable_found", k.stable_found},
                 {"coherent_found", k.coherent_found},
                 {"coherent_none", k.coherent_none},
                 {"coherent_unknown", k.coherent_unknown},
                 {"upper_fraction", r.upper_fraction()},
                 {"coherent_fraction", r.coherent_fraction()},
                 {"monotone", k.monotone()},
                 {"runtime_ms", {{"total", r.total_ms}, {"max_sample", r.max_sample_ms}}}};
  Json env = {{"schema", "decyc.experiment/1"}, {"operation", "experiment"}, {"result", result}};
  if (c.json) {
    std::cout << env.dump(2) << "\n";
  } else {
    std::cout << "n " << r.n << ", samples " << k.samples << ", seeds " << r.first_seed << ".." << r.last_seed << "\n"
              << "connected " << k.connected << "\nclassified " << k.classified << "\nupper-embeddable "
              << k.upper_embeddable << "\nstable found " << k.stable_found << "\ncoherent found " << k.coherent_found
              << "\ncoherent none " << k.coherent_none << "\ncoherent unknown " << k.coherent_unknown << "\n";
  }
  return k.monotone() ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decycling partitions and maximum genus of cubic graphs"};
  app.require_subcommand(1);
  Common c;
  app.add_flag("--json", c.json, "Print the certificate envelope as JSON");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--budget", c.budget, "Search budget (backtracking nodes)")->check(CLI::PositiveNumber);
  app.add_option("--format", c.format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

  std::string input, order = "first", out_format = "edgelist", dot_path;
  bool coherent = false, stable = false;
  int n = 12, samples = 100, workers = 0;

  auto* analyze = app.add_subcommand("analyze", "Betti number, cyclic connectivity, embeddability");
  analyze->add_option("graph", input, "Graph file or name")->required();
  auto* genus = app.add_subcommand("genus", "Deficiency, maximum genus, ampleness");
  genus->add_option("graph", input)->required();
  auto* partition = app.add_subcommand("partition", "Stable or coherent decycling partition");
  partition->add_option("graph", input)->required();
  auto* coh = partition->add_flag("--coherent", coherent);
  partition->add_flag("--stable", stable)->excludes(coh);
  partition->add_option("--dot", dot_path, "Also write the graph with the partition as DOT");
  auto* decompose = app.add_subcommand("decompose", "Canonical decomposition at nontrivial 3-cuts");
  decompose->add_option("graph", input)->required();
  decompose->add_option("--order", order)->check(CLI::IsMember({"first", "last", "random"}));
  auto* generate = app.add_subcommand("generate", "Emit a named, random or recipe graph");
  generate->add_option("what", input, "name, F1, F2, ring:k, random:n or recipe.json")->required();
  generate->add_option("--out", out_format)->check(CLI::IsMember({"edgelist", "graph6"}));
  auto* certify = app.add_subcommand("certify", "Verify a certificate envelope");
  certify->add_option("envelope", input)->required();
  auto* experiment = app.add_subcommand("experiment", "Random cubic graph statistics");
  experiment->add_option("--n", n);
  experiment->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  experiment->add_option("--workers", workers)->check(CLI::NonNegativeNumber);

  for (auto* sub : {analyze, genus, partition, decompose, generate, certify, experiment}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(input, c);
    if (*genus) return cmd_genus(input, c);
    if (*partition) return cmd_partition(input, coherent, dot_path, c);
    if (*decompose) return cmd_decompose(input, order, c);
    if (*generate) return cmd_generate(input, out_format, c);
    if (*certify) return cmd_certify(input);
    if (*experiment) return cmd_experiment(n, samples, workers, c);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::UnknownName:
      case Errc::Malformed:
      case Errc::InvalidArgument: return kUsage;
      case Errc::BudgetExhausted: return kBudget;
      default: return kPrecondition;
    }
  } catch (const Json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
