#include "netlap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

namespace netlap::cli {

using json = nlohmann::ordered_json;

SignedGraph load_graph(const RunConfig& cfg, std::istream& in) {
  if (cfg.input && cfg.family) throw UsageError("--input and --generate are mutually exclusive");
  if (cfg.input) {
    std::stringstream buf;
    if (*cfg.input == "-") {
      buf << in.rdbuf();
    } else {
      std::ifstream file(*cfg.input);
      if (!file) throw UsageError("cannot open '" + *cfg.input + "'");
      buf << file.rdbuf();
    }
    return parse_edge_list(buf.str());
  }
  if (cfg.family) {
    const Family family = parse_family(*cfg.family);
    if (family == Family::Random && !cfg.seed_given) throw UsageError("--generate random needs an explicit --seed");
    return generate(family, cfg.params);
  }
  throw UsageError("one of --input or --generate is required");
}

Orientation resolve_orientation(const RunConfig& cfg, const SignedGraph& g) {
  if (!cfg.orientation) return Orientation::canonical(g.edge_count());
  Orientation o = Orientation::parse(*cfg.orientation);
  if (o.size() != g.edge_count()) {
    throw UsageError("orientation string has " + std::to_string(o.size()) + " characters for " +
                     std::to_string(g.edge_count()) + " edges");
  }
  return o;
}

std::vector<int> resolve_anchors(const RunConfig& cfg, const SignedGraph& g) {
  if (cfg.anchor < 1 || cfg.anchor > g.vertex_count()) {
    throw UsageError("anchor " + std::to_string(cfg.anchor) + " outside 1.." + std::to_string(g.vertex_count()));
  }
  std::vector<int> anchors{cfg.anchor - 1};
  if (cfg.all_anchors) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v != cfg.anchor - 1) anchors.push_back(v);
    }
  }
  return anchors;
}

// ---------------------------------------------------------------------------
// verify

namespace {

std::string label(int anchor) { return "(" + std::to_string(anchor + 1) + ")"; }

RationalVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  RationalVector x(n);
  for (auto& v : x) {
    v = mpq_class(num(rng), den(rng));
    v.canonicalize();
  }
  return x;
}

SignedGraph edge_subgraph(const SignedGraph& g, const std::vector<std::size_t>& edges) {
  std::vector<Edge> kept;
  for (std::size_t idx : edges) kept.push_back(g.edge(idx));
  return SignedGraph(g.vertex_count(), std::move(kept));
}

void verify_census(Report& r, const SignedGraph& g, const Orientation& o, const VerifyOptions& opts,
                   std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const TreeCounts counts = enumerate_spanning_trees(g, opts.budget);
  const TreeMinors minors = tree_balance_via_minor(g);
  const std::string tally = "t+=" + std::to_string(counts.t_plus) + " t-=" + std::to_string(counts.t_minus);

  for (int a : opts.anchors) {
    const mpz_class expect_net = mpz_class(std::to_string(counts.t_plus)) - mpz_class(std::to_string(counts.t_minus));
    const mpz_class expect_plain = mpz_class(std::to_string(counts.t_plus)) + mpz_class(std::to_string(counts.t_minus));
    r.add("matrix tree det L±" + label(a) + " = t+ - t-", minors.net[a] == expect_net,
          "det=" + minors.net[a].get_str() + " " + tally);
    r.add("matrix tree det L_|G|" + label(a) + " = t+ + t-", minors.plain[a] == expect_plain,
          "det=" + minors.plain[a].get_str() + " " + tally);
  }
  r.add("tree minors independent of anchor", minors.anchor_independent());
  r.add("corollary recovers tree counts", tree_counts_via_corollary(g) == counts, tally);

  const TreeCounts negated = enumerate_spanning_trees(negate(g), opts.budget);
  const bool swaps = (n - 1) % 2 == 1;
  const TreeCounts expect_neg = swaps ? TreeCounts{counts.t_minus, counts.t_plus} : counts;
  r.add("negation duality of tree counts", negated == expect_neg);

  for (int a : opts.anchors) {
    const TUCensus census = enumerate_rooted_tu(g, a, opts.budget);
    const GaussianInt minor = rooted_tu_via_minor(g, a);
    r.add("rooted TU det Q±" + label(a) + " = sum_even - sum_odd", minor == GaussianInt(census.difference()),
          "det=" + minor.str() + " sums=" + census.sum_even.get_str() + "/" + census.sum_odd.get_str());

    const CauchyBinetExpansion cb = cauchy_binet_expansion(g, a, o, opts.budget);
    r.add("Cauchy-Binet terms for det L±" + label(a), cb.consistent(),
          "minor=" + cb.minor.str() + " sum=" + cb.term_sum.str());

    bool m_ok = true;
    bool n_ok = true;
    std::string witness;
    for_each_subset(g.edge_count(), n - 1, opts.budget, [&](const std::vector<std::size_t>& s) {
      const MinorCheck mc = incidence_minor_oracle(g, a, s);
      const MinorCheck nc = incidence_minor_oracle(g, a, s, &o);
      if (!mc.consistent() && m_ok) {
        m_ok = false;
        witness = "det=" + mc.det.str() + " predicted square " + mc.predicted_square.str();
      }
      n_ok = n_ok && nc.consistent();
    });
    r.add("incidence minors M±" + label(a) + ";S] match component structure", m_ok, witness);
    r.add("incidence minors N±" + label(a) + ";S] vanish off spanning trees", n_ok);
  }

  bool trees_ok = true;
  std::size_t trees_checked = 0;
  for_each_subset(g.edge_count(), n - 1, opts.budget, [&](const std::vector<std::size_t>& s) {
    if (classify_spanning_subgraph(g, SubgraphMask{s}).components.size() != 1) return;
    const SignedGraph tree = edge_subgraph(g, s);
    const Orientation random_o = Orientation::random(tree.edge_count(), rng);
    std::vector<Orientation::Source> restricted;
    for (std::size_t idx : s) restricted.push_back(o.source(idx));
    const Orientation inherited(std::move(restricted));
    for (int j = 0; j < tree.vertex_count(); ++j) {
      trees_ok = trees_ok && tree_minor_oracle(tree, j, inherited).consistent() &&
                 tree_minor_oracle(tree, j, random_o).consistent();
    }
    ++trees_checked;
  });
  r.add("spanning tree minors are ±1 / ±i (" + std::to_string(trees_checked) + " trees)", trees_ok);
}

}  // namespace

Report verify_suite(const SignedGraph& g, const Orientation& o, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Report r;

  r.append(verify_factorizations(build_bundle(g, o)));
  bool random_ok = true;
  for (std::size_t k = 0; k < opts.random_orientations; ++k) {
    random_ok = random_ok && verify_factorizations(build_bundle(g, Orientation::random(g.edge_count(), rng))).ok();
  }
  r.add("factorizations under " + std::to_string(opts.random_orientations) + " random orientations", random_ok);

  r.append(verify_negation_relations(g));
  r.append(verify_rank_relations(g, o));
  r.append(kernel_balance_check(g));

  bool ql = true;
  bool qq = true;
  for (std::size_t k = 0; k < opts.random_vectors; ++k) {
    const RationalVector x = random_vector(n, rng);
    ql = ql && quadratic_form_L(g, x).agree();
    qq = qq && quadratic_form_Q(g, x).agree();
  }
  r.add("quadratic form x^T L± x = edge sum", ql);
  r.add("quadratic form x^T Q± x = edge sum", qq);
  if (n > 0) r.add("det L± = 0", det(net_laplacian(g)).is_zero());

  const FullTUCensus full = enumerate_full_tu(g, opts.budget);
  const GaussianInt dq = det_q_via_matrix(g);
  r.add("det Q± = full TU sum_even - sum_odd", dq == GaussianInt(full.difference()),
        "det=" + dq.str() + " sums=" + full.sum_even.get_str() + "/" + full.sum_odd.get_str());
  bool full_minors = true;
  for_each_subset(g.edge_count(), n, opts.budget, [&](const std::vector<std::size_t>& s) {
    full_minors = full_minors && incidence_minor_oracle(g, std::nullopt, s).consistent();
  });
  r.add("n-edge incidence minors M±[S] match component structure", full_minors);

  if (!g.is_connected() || n < 2) {
    const std::string reason = n < 2 ? "needs at least 2 vertices" : "graph is disconnected";
    for (const char* name : {"matrix tree identities", "corollary tree counts", "rooted TU identities",
                             "Cauchy-Binet terms", "rooted incidence minors", "spanning tree minors"}) {
      r.skip(name, reason);
    }
    return r;
  }
  verify_census(r, g, o, opts, rng);
  return r;
}

// ---------------------------------------------------------------------------
// census

CensusReport build_census(const SignedGraph& g, const std::vector<int>& anchors, std::uint64_t budget) {
  if (g.vertex_count() < 2) throw CensusError(CensusError::Kind::InvalidArgument, "census needs at least 2 vertices");
  CensusReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.counts = enumerate_spanning_trees(g, budget);
  const TreeMinors minors = tree_balance_via_minor(g);
  const mpz_class tp(std::to_string(rep.counts.t_plus));
  const mpz_class tm(std::to_string(rep.counts.t_minus));

  for (int a : anchors) {
    AnchorCensus ac;
    ac.anchor = a;
    ac.det_net_minor = minors.net[a];
    ac.det_plain_minor = minors.plain[a];
    ac.det_q_minor = rooted_tu_via_minor(g, a).re();
    ac.rooted = enumerate_rooted_tu(g, a, budget);
    rep.checks.add("det L±" + label(a) + " = t+ - t-", ac.det_net_minor == tp - tm);
    rep.checks.add("det L_|G|" + label(a) + " = t+ + t-", ac.det_plain_minor == tp + tm);
    rep.checks.add("det Q±" + label(a) + " = rooted sum_even - sum_odd", ac.det_q_minor == ac.rooted.difference());
    rep.anchors.push_back(std::move(ac));
  }
  rep.checks.add("corollary recovers tree counts", tree_counts_via_corollary(g) == rep.counts);
  if (anchors.size() > 1) rep.checks.add("tree minors independent of anchor", minors.anchor_independent());

  rep.det_q = det_q_via_matrix(g).re();
  rep.full = enumerate_full_tu(g, budget);
  rep.checks.add("det Q± = full sum_even - sum_odd", rep.det_q == rep.full.difference());
  return rep;
}

std::string render_census(const CensusReport& rep, Format format) {
  const AnchorCensus& primary = rep.anchors.front();
  std::vector<std::pair<std::string, std::string>> fields{
      {"n", std::to_string(rep.n)},
      {"m", std::to_string(rep.m)},
      {"anchor", std::to_string(primary.anchor + 1)},
      {"t_plus", std::to_string(rep.counts.t_plus)},
      {"t_minus", std::to_string(rep.counts.t_minus)},
      {"det_net_minor", primary.det_net_minor.get_str()},
      {"det_plain_minor", primary.det_plain_minor.get_str()},
      {"det_q_minor", primary.det_q_minor.get_str()},
      {"det_q", rep.det_q.get_str()},
  };
  std::vector<std::pair<std::string, std::string>> sums{
      {"rooted_even", primary.rooted.sum_even.get_str()},
      {"rooted_odd", primary.rooted.sum_odd.get_str()},
      {"full_even", rep.full.sum_even.get_str()},
      {"full_odd", rep.full.sum_odd.get_str()},
  };

  if (format == Format::Json) {
    json j;
    for (const auto& [k, v] : fields) j[k] = v;
    j["sums"] = json::object();
    for (const auto& [k, v] : sums) j["sums"][k] = v;
    if (rep.anchors.size() > 1) {
      j["anchors"] = json::array();
      for (const AnchorCensus& ac : rep.anchors) {
        j["anchors"].push_back({{"anchor", std::to_string(ac.anchor + 1)},
                                {"det_net_minor", ac.det_net_minor.get_str()},
                                {"det_plain_minor", ac.det_plain_minor.get_str()},
                                {"det_q_minor", ac.det_q_minor.get_str()},
                                {"rooted_even", ac.rooted.sum_even.get_str()},
                                {"rooted_odd", ac.rooted.sum_odd.get_str()}});
      }
    }
    j["checks"] = json::array();
    for (const Check& c : rep.checks.checks()) j["checks"].push_back({{"name", c.name}, {"pass", c.passed()}});
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
  for (const auto& [k, v] : sums) out << "sums." << k << ": " << v << '\n';
  if (rep.anchors.size() > 1) {
    for (const AnchorCensus& ac : rep.anchors) {
      out << "anchor " << ac.anchor + 1 << ": det_net_minor=" << ac.det_net_minor.get_str()
          << " det_plain_minor=" << ac.det_plain_minor.get_str() << " det_q_minor=" << ac.det_q_minor.get_str()
          << " rooted_even=" << ac.rooted.sum_even.get_str() << " rooted_odd=" << ac.rooted.sum_odd.get_str()
          << '\n';
    }
  }
  out << rep.checks.str();
  return out.str();
}

namespace {

const std::vector<std::pair<std::string, const GMatrix MatrixBundle::*>>& bundle_fields() {
  static const std::vector<std::pair<std::string, const GMatrix MatrixBundle::*>> fields{
      {"A", &MatrixBundle::adjacency},
      {"D", &MatrixBundle::degree},
      {"D±", &MatrixBundle::net_degree},
      {"L = D - A", &MatrixBundle::laplacian},
      {"Q = D + A", &MatrixBundle::signless_laplacian},
      {"L± = D± - A", &MatrixBundle::net_laplacian},
      {"Q± = D± + A", &MatrixBundle::signless_net_laplacian},
      {"M±", &MatrixBundle::net_incidence},
      {"N±", &MatrixBundle::oriented_net_incidence},
  };
  return fields;
}

std::string render_matrices_json(const MatrixBundle& bundle) {
  json j;
  for (const auto& [name, member] : bundle_fields()) {
    const GMatrix& mat = bundle.*member;
    json rows = json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c).str());
      rows.push_back(std::move(row));
    }
    j[name] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_matrices(const MatrixBundle& bundle) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, member] : bundle_fields()) {
    if (!first) out << '\n';
    first = false;
    out << name << '\n' << (bundle.*member).str();
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// argv

namespace {

void add_common_options(CLI::App* sub, RunConfig& cfg, std::string& format) {
  sub->add_option("--input", cfg.input, "Edge-list file, '-' for stdin");
  sub->add_option("--generate", cfg.family, "Generator family: path, cycle, complete, paw, extended_paw, random");
  sub->add_option("--n", cfg.params.n, "Vertex count for generated graphs");
  sub->add_option("--p", cfg.params.p, "Edge probability (random)");
  sub->add_option("--q", cfg.params.q, "Negative-sign probability (random)");
  sub->add_option_function<std::uint64_t>(
      "--seed",
      [&cfg](const std::uint64_t& s) {
        cfg.params.seed = s;
        cfg.seed_given = true;
      },
      "Random seed");
  sub->add_option("--signs", cfg.params.signs, "Per-edge signs, e.g. +-+ (path, cycle, complete)");
  sub->add_option("--anchor", cfg.anchor, "Deleted vertex i (1-based)");
  sub->add_flag("--all-anchors", cfg.all_anchors, "Run every anchor and check anchor independence");
  sub->add_option("--orientation", cfg.orientation, "One '<' or '>' per edge; default all '<'");
  sub->add_option("--budget", cfg.budget, "Maximum number of enumerated edge subsets")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

int execute(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const SignedGraph g = load_graph(cfg, in);
  const Orientation o = resolve_orientation(cfg, g);

  if (cfg.command == "matrices") {
    const MatrixBundle bundle = build_bundle(g, o);
    out << (cfg.format == Format::Json ? render_matrices_json(bundle) : render_matrices(bundle));
    return 0;
  }
  if (cfg.command == "dot") {
    out << (cfg.orientation ? emit_oriented_dot(g, o) : emit_dot(g));
    return 0;
  }
  if (cfg.command == "census") {
    const CensusReport rep = build_census(g, resolve_anchors(cfg, g), cfg.budget);
    out << render_census(rep, cfg.format);
    return rep.checks.ok() ? 0 : 1;
  }
  // verify
  VerifyOptions opts;
  opts.anchors = g.vertex_count() > 0 ? resolve_anchors(cfg, g) : std::vector<int>{};
  opts.budget = cfg.budget;
  opts.seed = cfg.params.seed;
  const Report report = verify_suite(g, o, opts);
  if (cfg.format == Format::Json) {
    json j;
    j["pass"] = report.ok();
    j["checks"] = json::array();
    for (const Check& c : report.checks()) {
      const char* status = c.status == CheckStatus::Pass ? "pass" : c.status == CheckStatus::Fail ? "fail" : "skip";
      j["checks"].push_back({{"name", c.name}, {"pass", c.passed()}, {"status", status}, {"detail", c.detail}});
    }
    out << j.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const Check& c : report.checks()) {
      (c.status == CheckStatus::Pass ? passed : c.status == CheckStatus::Fail ? failed : skipped) += 1;
    }
    out << report.str() << report.checks().size() << " checks: " << passed << " passed, " << failed << " failed, "
        << skipped << " skipped\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Net Laplacian matrices and spanning-subgraph census for signed graphs", "netlap"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  const std::vector<std::pair<const char*, const char*>> commands{
      {"matrices", "Print A, D, D±, L, Q, L±, Q±, M± and N±"},
      {"census", "Spanning tree and TU-subgraph census with matrix-side determinants"},
      {"verify", "Run every identity check; nonzero exit if any fails"},
      {"dot", "Graphviz rendering"},
  };
  for (const auto& [name, help] : commands) add_common_options(app.add_subcommand(name, help), cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::Json : Format::Text;

  try {
    return execute(cfg, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const CensusError& e) {
    err << "census error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace netlap::cli
