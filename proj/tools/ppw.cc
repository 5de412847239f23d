// ppw: possible and necessary winners over partial-order ballots.
//
// Exit status: 0 when a query answers true (or a command succeeds), 1 when it
// answers false, 2 on any error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppw/dispatch.h"
#include "ppw/errors.h"
#include "ppw/instances.h"
#include "ppw/mcgarvey.h"
#include "ppw/oracle.h"
#include "ppw/profile.h"
#include "ppw/reductions.h"
#include "ppw/rules.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

int candidate_index(const ppw::PosetProfile& p, const std::string& label) {
  int c = p.index_of(label);
  if (c < 0) throw ppw::ParseError("unknown candidate '" + label + "'");
  return c;
}

void print_witness(const ppw::LinearProfile& w, const ppw::PosetProfile& p) {
  std::cout << "witness:\n";
  for (const auto& v : w.votes)
    std::cout << "vote-linear: " << ppw::format_linear(v, p.labels()) << "\n";
}

struct QueryArgs {
  std::string profile;
  std::string rule = "borda";
  std::string query = "pw";
  std::string candidate;
  std::uint64_t budget = ppw::kDefaultOracleBudget;
  bool naive = false;
};

void add_query_flags(CLI::App* cmd, QueryArgs& a) {
  cmd->add_option("profile", a.profile, "profile file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--rule,-r", a.rule, "rule, e.g. borda, k-approval:2, tree:balanced")->capture_default_str();
  cmd->add_option("--query,-q", a.query, "pw, nw, pcw or ncw")->capture_default_str();
  cmd->add_option("--candidate,-c", a.candidate, "candidate label")->required();
  cmd->add_option("--budget", a.budget, "oracle search-node budget")->capture_default_str();
}

int run_query_cmd(const QueryArgs& a) {
  ppw::PosetProfile p = ppw::load_profile(a.profile);
  ppw::RuleSpec rule = ppw::parse_rule(a.rule, p.labels());
  ppw::QueryKind kind = ppw::parse_query(a.query);
  int c = candidate_index(p, a.candidate);
  ppw::OracleOptions opt;
  opt.budget = a.budget;

  ppw::Solver planned = ppw::solver_for(rule, kind);
  if (planned == ppw::Solver::kOracle)
    std::cout << "solver: oracle (exponential)\n";
  ppw::QueryAnswer r = ppw::run_query(p, rule, c, kind, opt);
  if (planned != ppw::Solver::kOracle) {
    if (r.solver == ppw::Solver::kOracle)
      std::cout << "solver: oracle (exponential), fallback from "
                << ppw::solver_tag(planned) << "\n";
    else
      std::cout << "solver: " << ppw::solver_tag(r.solver) << "\n";
  }
  std::cout << "rule: " << rule.name() << "\n"
            << "query: " << ppw::query_name(kind) << "\n"
            << "candidate: " << p.label(c) << "\n"
            << "answer: " << (r.answer ? "true" : "false") << "\n";
  if (r.rival) std::cout << "rival: " << p.label(*r.rival) << "\n";
  if (r.rival2) std::cout << "rival2: " << p.label(*r.rival2) << "\n";
  if (r.k) std::cout << "k: " << *r.k << "\n";
  if (r.certificate) {
    const auto& cert = *r.certificate;
    std::cout << "flow: rival " << p.label(cert.rival) << ", l1 " << cert.l1
              << ", l2 " << cert.l2 << "\n";
    std::cout << "tops:";
    for (int a2 : cert.tops) std::cout << " " << p.label(a2);
    std::cout << "\n";
  }
  if (r.solver == ppw::Solver::kOracle) std::cout << "nodes: " << r.nodes << "\n";
  if (r.witness) print_witness(*r.witness, p);
  return r.answer ? kTrue : kFalse;
}

int run_oracle_cmd(const QueryArgs& a) {
  ppw::PosetProfile p = ppw::load_profile(a.profile);
  ppw::RuleSpec rule = ppw::parse_rule(a.rule, p.labels());
  ppw::QueryKind kind = ppw::parse_query(a.query);
  int c = candidate_index(p, a.candidate);
  ppw::OracleOptions opt;
  opt.budget = a.budget;
  std::cout << "solver: oracle (exponential)" << (a.naive ? ", naive product" : "") << "\n";
  ppw::OracleResult r = a.naive ? ppw::oracle_query_naive(p, rule, c, kind, opt)
                                : ppw::oracle_query(p, rule, c, kind, opt);
  std::cout << "rule: " << rule.name() << "\n"
            << "query: " << ppw::query_name(kind) << "\n"
            << "candidate: " << p.label(c) << "\n"
            << "answer: " << (r.answer ? "true" : "false") << "\n"
            << "nodes: " << r.nodes << "\n";
  if (r.combinations == ppw::kUnlimited)
    std::cout << "extensions: overflow\n";
  else
    std::cout << "extensions: " << r.combinations << "\n";
  if (r.witness) print_witness(*r.witness, p);
  return r.answer ? kTrue : kFalse;
}

struct GenArgs {
  std::string construction;
  std::string instance;
  std::string kind = "pw";
  std::string rule = "borda";
  int k = 2;
  std::string tree;
  bool compact_filler = false;
  int max_alternatives = 1024;
  std::string out;
  std::string manifest;
};

json x3c_json(const ppw::X3CInstance& inst) {
  json sets = json::array();
  for (const auto& s : inst.sets) sets.push_back({s[0], s[1], s[2]});
  return {{"q", inst.q}, {"sets", sets}};
}

int run_gen_cmd(const GenArgs& a) {
  ppw::QueryKind kind = ppw::parse_query(a.kind);
  std::ifstream in(a.instance);
  if (!in) throw ppw::Error("cannot open " + a.instance);

  ppw::ReductionOutput r;
  const std::string& name = a.construction;
  if (name == "approval") {
    r = ppw::gen_kapproval_pw(ppw::parse_dimacs(in), a.k, kind);
  } else {
    ppw::X3CInstance inst = ppw::parse_x3c(in);
    if (name == "scoring") {
      r = ppw::gen_scoring_pw(inst, ppw::parse_rule(a.rule), kind);
    } else if (name == "copeland") {
      r = ppw::gen_copeland(inst, kind);
    } else if (name == "bucklin") {
      r = ppw::gen_bucklin(inst, kind);
    } else if (name == "maximin") {
      r = ppw::gen_maximin(inst, kind);
    } else if (name == "ranked-pairs") {
      r = ppw::gen_ranked_pairs(inst, kind);
    } else if (name == "voting-tree") {
      std::optional<ppw::TreeShape> shape;
      if (!a.tree.empty()) {
        // Leaves are relabelled by the construction; any labels will do.
        std::ifstream tin(a.tree);
        if (!tin) throw ppw::Error("cannot open " + a.tree);
        std::stringstream buf;
        buf << tin.rdbuf();
        std::string text = buf.str();
        std::vector<std::string> labels;
        std::string tok;
        for (char ch : text) {
          if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!tok.empty()) labels.push_back(tok), tok.clear();
          } else {
            tok += ch;
          }
        }
        if (!tok.empty()) labels.push_back(tok);
        shape = ppw::TreeShape::parse(text, labels);
      }
      r = ppw::gen_voting_tree(inst, kind, shape);
    } else if (name == "runoff") {
      ppw::RunoffOptions opt;
      opt.full_filler = !a.compact_filler;
      opt.max_alternatives = a.max_alternatives;
      ppw::RunoffShape shape = ppw::runoff_shape(inst, kind, opt);
      try {
        r = ppw::gen_runoff(inst, kind, opt);
      } catch (const ppw::MaterializationTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "shape: " << shape.alternatives << " alternatives, "
                  << shape.filler << " filler\n";
        return kError;
      }
    } else {
      throw ppw::Error("unknown construction '" + name + "'");
    }
  }

  const ppw::PosetProfile& p = r.profile;
  std::string text = ppw::format_profile(p);
  std::string rule_text = r.rule.name();
  std::string out_path = a.out;
  if (r.rule.kind == ppw::RuleKind::kVotingTree && r.rule.has_tree) {
    if (out_path.empty()) throw ppw::Error("voting-tree output needs --out for its tree file");
    std::string tree_path = out_path + ".tree";
    std::ofstream(tree_path) << r.rule.tree.format(p.labels()) << "\n";
    rule_text = "tree:@" + tree_path;
  }

  json roles = json::object();
  for (const auto& [role, alts] : r.roles) {
    json labels = json::array();
    for (int x : alts) labels.push_back(p.label(x));
    roles[role] = labels;
  }
  json m = {
      {"construction", r.construction},
      {"rule", rule_text},
      {"query", ppw::query_name(r.query)},
      {"candidate", p.label(r.candidate)},
      {"answer_when_solvable", r.expected_answer(true)},
      {"alternatives", p.m()},
      {"ballots", p.n()},
      {"encoding_ballots", r.p1_count},
      {"pair_bound", r.pair_bound},
      {"max_undetermined_pairs", ppw::max_undetermined_pairs(p)},
      {"roles", roles},
  };
  if (r.x3c) m["encoded_instance"] = x3c_json(*r.x3c);

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ppw::Error("cannot write " + out_path);
    f << text;
  }
  std::string manifest_path = a.manifest;
  if (manifest_path.empty() && !out_path.empty()) manifest_path = out_path + ".json";
  if (manifest_path.empty()) {
    std::cerr << m.dump(2) << "\n";
  } else {
    std::ofstream f(manifest_path);
    if (!f) throw ppw::Error("cannot write " + manifest_path);
    f << m.dump(2) << "\n";
  }
  return kTrue;
}

// {"alternatives": [...], "targets": [[a, b, F(a,b)], ...], "base": "path"}
int run_mcgarvey_cmd(const std::string& path, const std::string& out) {
  std::ifstream in(path);
  if (!in) throw ppw::Error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ppw::ParseError(std::string("targets file: ") + e.what());
  }
  ppw::LinearProfile base;
  std::vector<std::string> labels;
  if (j.contains("base")) {
    ppw::PosetProfile bp = ppw::load_profile(j["base"].get<std::string>());
    base = bp.as_linear();
    labels = bp.labels();
  } else {
    labels = j.at("alternatives").get<std::vector<std::string>>();
    base.m = static_cast<int>(labels.size());
  }
  ppw::PosetProfile lp(base.m, labels);
  ppw::TargetDiffs F(base.m);
  for (const auto& e : j.at("targets")) {
    int a = candidate_index(lp, e.at(0).get<std::string>());
    int b = candidate_index(lp, e.at(1).get<std::string>());
    F.set(a, b, e.at(2).get<int>());
  }
  ppw::LinearProfile extra = ppw::synthesize_diffs(base, F);
  ppw::PosetProfile p = ppw::PosetProfile::from_linear(extra, labels);
  std::string text = ppw::format_profile(p);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out) << text;
  }
  std::cerr << "votes: " << extra.n() << " (bound "
            << ppw::mcgarvey_size_bound(base, F) << ")\n";
  return kTrue;
}

int run_validate_cmd(const std::string& path) {
  ppw::PosetProfile p = ppw::load_profile(path);
  int linear = 0;
  for (const auto& o : p.ballots()) linear += o.is_linear();
  std::cout << "ok: " << p.m() << " alternatives, " << p.n() << " ballots, "
            << linear << " linear, max undetermined pairs "
            << ppw::max_undetermined_pairs(p) << "\n";
  ppw::PosetProfile again = ppw::parse_profile_text(ppw::format_profile(p));
  if (again.ballots() != p.ballots() || again.labels() != p.labels())
    throw ppw::Error("profile does not survive a format round trip");
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Possible and necessary winners for partial-order ballots"};
  app.require_subcommand(1);

  QueryArgs qa;
  auto* query = app.add_subcommand("query", "answer a query with the best available solver");
  add_query_flags(query, qa);

  QueryArgs oa;
  auto* oracle = app.add_subcommand("oracle", "answer a query by exhaustive search");
  add_query_flags(oracle, oa);
  oracle->add_flag("--naive", oa.naive, "plain product enumeration");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "emit a hardness construction");
  gen->add_option("construction", ga.construction)
      ->required()
      ->check(CLI::IsMember(ppw::construction_names()));
  gen->add_option("instance", ga.instance, "X3C file, or DIMACS for approval")
      ->required()
      ->check(CLI::ExistingFile);
  gen->add_option("--kind", ga.kind, "query the construction targets")->capture_default_str();
  gen->add_option("--rule", ga.rule, "scoring rule for the scoring construction")
      ->capture_default_str();
  gen->add_option("--k", ga.k, "k for the approval construction")->capture_default_str();
  gen->add_option("--tree", ga.tree, "tree shape file for the voting-tree construction");
  gen->add_flag("--compact-filler", ga.compact_filler,
                "runoff: one filler alternative per adjusting vote");
  gen->add_option("--max-alternatives", ga.max_alternatives)->capture_default_str();
  gen->add_option("--out,-o", ga.out, "profile output path (stdout when absent)");
  gen->add_option("--manifest", ga.manifest, "manifest path (default <out>.json)");

  std::string targets, mc_out;
  auto* mcgarvey = app.add_subcommand("mcgarvey", "synthesize votes with given pairwise differences");
  mcgarvey->add_option("targets", targets, "targets JSON file")->required()->check(CLI::ExistingFile);
  mcgarvey->add_option("--out,-o", mc_out);

  std::string vpath;
  auto* validate = app.add_subcommand("validate", "parse and check a profile file");
  validate->add_option("profile", vpath)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  try {
    if (*query) return run_query_cmd(qa);
    if (*oracle) return run_oracle_cmd(oa);
    if (*gen) return run_gen_cmd(ga);
    if (*mcgarvey) return run_mcgarvey_cmd(targets, mc_out);
    if (*validate) return run_validate_cmd(vpath);
  } catch (const ppw::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
