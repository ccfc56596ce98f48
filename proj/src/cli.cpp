#include "hekise/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>

#include "hekise/canon.hpp"
#include "hekise/confluence.hpp"
#include "hekise/enumerate.hpp"
#include "hekise/error.hpp"
#include "hekise/graph.hpp"
#include "hekise/oracle.hpp"
#include "hekise/rewrite.hpp"
#include "hekise/word.hpp"

namespace hekise::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Plain, Json };
enum class StrategyFlag { Leftmost, Random };

// Options common to the graph-based subcommands.
struct CliConfig {
  std::string graph_path;
  OrderPolicy order = OrderPolicy::LabelLexicographic;
  Format format = Format::Plain;
  std::vector<std::string> words;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_elements;
  std::optional<std::size_t> max_len;
  std::size_t max_states = kDefaultOracleStates;
  StrategyFlag strategy = StrategyFlag::Leftmost;
  bool trace = false;
  bool all = false;
  std::string output_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_max_elements() {
  char const* env = std::getenv("HEKISE_MAX_ELEMENTS");
  if (env == nullptr || *env == '\0') {
    return kDefaultMaxElements;
  }
  char* end = nullptr;
  unsigned long long const value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) {
    throw UsageError(std::string("HEKISE_MAX_ELEMENTS must be a positive integer, got '") +
                     env + "'");
  }
  return static_cast<std::size_t>(value);
}

void add_common(CLI::App* cmd, CliConfig& cfg, bool graph_option = true) {
  if (graph_option) {
    cmd->add_option("-g,--graph", cfg.graph_path, "Graph file")->required();
  }
  std::map<std::string, OrderPolicy> const orders{
      {"lex", OrderPolicy::LabelLexicographic}, {"decl", OrderPolicy::DeclarationOrder}};
  cmd->add_option("--order", cfg.order, "Vertex order: lex (by label) or decl (declaration)")
      ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
  std::map<std::string, Format> const formats{{"plain", Format::Plain}, {"json", Format::Json}};
  cmd->add_option("--format", cfg.format, "Output format: plain or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_words(CLI::App* cmd, CliConfig& cfg, std::size_t count) {
  cmd->add_option("-w,--word", cfg.words, "Word, e.g. `cab` or `c a b`")
      ->required()
      ->expected(static_cast<int>(count));
}

std::vector<Word> parse_words(CliConfig const& cfg, OrientedGraph const& g) {
  std::vector<Word> out;
  for (auto const& text : cfg.words) {
    out.push_back(parse_word(text, g));
  }
  return out;
}

std::vector<std::string> trace_lines(RewriteTrace const& trace, OrientedGraph const& g) {
  std::vector<std::string> lines;
  for (auto const& step : trace.steps) {
    lines.push_back(format_step(step, g));
  }
  return lines;
}

int cmd_validate(CliConfig const& cfg, std::ostream& out) {
  try {
    auto const g = load_graph(cfg.graph_path, cfg.order);
    bool const acyclic = is_acyclic(g);
    if (cfg.format == Format::Json) {
      out << json{{"graph", cfg.graph_path},
                  {"valid", true},
                  {"vertices", g.size()},
                  {"arrows", g.arrow_count()},
                  {"acyclic", acyclic}}
                 .dump()
          << "\n";
    } else {
      out << "valid: " << g.size() << " vertices, " << g.arrow_count() << " arrows, "
          << (acyclic ? "acyclic (finite monoid)" : "has a directed cycle (infinite monoid)")
          << "\n";
    }
    return kExitOk;
  } catch (Error const& e) {
    if (cfg.format == Format::Json) {
      out << json{{"graph", cfg.graph_path},
                  {"valid", false},
                  {"error", std::string(error_kind_name(e.kind()))},
                  {"message", e.what()}}
                 .dump()
          << "\n";
    } else {
      out << "invalid: " << e.what() << "\n";
    }
    return kExitDomain;
  }
}

int cmd_normalize(CliConfig const& cfg, std::ostream& out) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  auto const w = parse_words(cfg, g).front();
  auto const strategy = cfg.strategy == StrategyFlag::Random
                            ? Strategy::random_seeded(cfg.seed)
                            : Strategy::leftmost_right_first();
  auto const result = normalize(w, g, strategy);
  auto const lines = trace_lines(result.trace, g);

  std::vector<std::string> all;
  if (cfg.all) {
    auto forms = all_normal_forms(w, g);
    std::vector<Word> sorted(forms.begin(), forms.end());
    std::sort(sorted.begin(), sorted.end(), LexLess{&g});
    for (auto const& f : sorted) {
      all.push_back(format_word(f, g));
    }
  }

  if (cfg.format == Format::Json) {
    json j{{"graph", cfg.graph_path},
           {"input", format_word(w, g)},
           {"normal_form", format_word(result.word, g)},
           {"length", result.word.size()},
           {"trace", lines}};
    if (cfg.all) {
      j["all"] = all;
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (cfg.trace) {
    for (auto const& line : lines) {
      out << line << "\n";
    }
  }
  if (cfg.all) {
    for (auto const& line : all) {
      out << line << "\n";
    }
  } else {
    out << format_word(result.word, g) << "\n";
  }
  return kExitOk;
}

int cmd_canon(CliConfig const& cfg, std::ostream& out) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  auto const w = parse_words(cfg, g).front();
  auto const form = canonicalize(w, g);
  if (cfg.format == Format::Json) {
    auto const normal = normalize(w, g);
    out << json{{"graph", cfg.graph_path},
                {"input", format_word(w, g)},
                {"canonical", format_word(form.word(), g)},
                {"length", form.size()},
                {"trace", trace_lines(normal.trace, g)}}
               .dump()
        << "\n";
  } else {
    out << format_word(form.word(), g) << "\n";
  }
  return kExitOk;
}

int cmd_eq(CliConfig const& cfg, std::ostream& out) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  auto const words = parse_words(cfg, g);
  auto const lhs = canonicalize(words[0], g);
  auto const rhs = canonicalize(words[1], g);
  bool const equal = lhs == rhs;
  if (cfg.format == Format::Json) {
    out << json{{"graph", cfg.graph_path},
                {"inputs", {format_word(words[0], g), format_word(words[1], g)}},
                {"canonical", {format_word(lhs.word(), g), format_word(rhs.word(), g)}},
                {"equal", equal}}
               .dump()
        << "\n";
  } else {
    out << format_word(lhs.word(), g) << "\n" << format_word(rhs.word(), g) << "\n";
  }
  return equal ? kExitOk : kExitDomain;
}

std::size_t element_budget(CliConfig const& cfg) {
  return cfg.max_elements ? *cfg.max_elements : default_max_elements();
}

int cmd_count(CliConfig const& cfg, std::ostream& out) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  std::size_t const budget = element_budget(cfg);
  auto const census = enumerate_elements(g, budget);
  if (cfg.format == Format::Json) {
    json histogram = json::object();
    for (auto const& [len, count] : census.by_length) {
      histogram[std::to_string(len)] = count;
    }
    out << json{{"graph", cfg.graph_path},
                {"count", census.elements.size()},
                {"complete", census.complete},
                {"by_length", histogram}}
               .dump()
        << "\n";
  } else if (census.complete) {
    out << census.elements.size() << "\n";
  } else {
    out << ">= " << budget << " (truncated)\n";
  }
  return kExitOk;
}

int cmd_enumerate(CliConfig const& cfg, std::ostream& out, std::ostream& err) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  auto const census = enumerate_elements(g, element_budget(cfg));
  if (cfg.format == Format::Json) {
    std::vector<std::string> elements;
    for (auto const& x : census.elements) {
      elements.push_back(format_word(x.word(), g));
    }
    out << json{{"graph", cfg.graph_path},
                {"elements", elements},
                {"complete", census.complete}}
               .dump()
        << "\n";
  } else {
    for (auto const& x : census.elements) {
      out << format_word(x.word(), g) << "\n";
    }
  }
  if (!census.complete) {
    err << "note: truncated at " << census.elements.size() << " elements\n";
  }
  return kExitOk;
}

int cmd_cayley(CliConfig const& cfg, std::ostream& out) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  auto const census = enumerate_elements(g, element_budget(cfg));
  auto const dot = cayley_dot(census, g);
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file || !(file << dot)) {
    throw Error(ErrorKind::InvalidArgument, "cannot write " + cfg.output_path);
  }
  if (cfg.format == Format::Json) {
    out << json{{"graph", cfg.graph_path},
                {"output", cfg.output_path},
                {"nodes", census.elements.size()},
                {"edges", census.elements.size() * g.size()}}
               .dump()
        << "\n";
  } else {
    out << "wrote " << cfg.output_path << ": " << census.elements.size() << " nodes, "
        << census.elements.size() * g.size() << " edges\n";
  }
  return kExitOk;
}

int cmd_oracle_eq(CliConfig const& cfg, std::ostream& out) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  auto const words = parse_words(cfg, g);
  std::size_t const max_len =
      cfg.max_len ? *cfg.max_len
                  : std::max(words[0].size(), words[1].size()) + kOracleExtraLength;
  auto const verdict = oracle_equal(words[0], words[1], g, max_len, cfg.max_states);
  if (cfg.format == Format::Json) {
    out << json{{"graph", cfg.graph_path},
                {"inputs", {format_word(words[0], g), format_word(words[1], g)}},
                {"max_len", max_len},
                {"verdict", std::string(verdict_name(verdict))}}
               .dump()
        << "\n";
  } else {
    out << verdict_name(verdict) << "\n";
  }
  return kExitOk;
}

int cmd_selfcheck(CliConfig const& cfg, std::ostream& out) {
  auto const g = load_graph(cfg.graph_path, cfg.order);
  std::size_t const max_len = cfg.max_len.value_or(6);
  auto const report = check_all_words(g, max_len);
  if (cfg.format == Format::Json) {
    json j{{"graph", cfg.graph_path},
           {"max_len", max_len},
           {"words", report.words_checked},
           {"alpha_pairs", report.stats.alpha_pairs},
           {"beta_pairs", report.stats.beta_pairs},
           {"passed", report.passed()}};
    if (report.failure) {
      j["counterexample"] = format_word(report.failure->word, g);
      j["failure"] = describe(*report.failure, g);
    }
    out << j.dump() << "\n";
  } else if (report.passed()) {
    out << "pass: " << report.words_checked << " words up to length " << max_len << ", "
        << report.stats.alpha_pairs << " alpha divergences, " << report.stats.beta_pairs
        << " beta divergences\n";
  } else {
    out << "fail: " << describe(*report.failure, g) << "\n";
  }
  return report.passed() ? kExitOk : kExitDomain;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical forms in Hecke-Kiselman monoids of simple oriented graphs",
               "hekise"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* validate = app.add_subcommand("validate", "Check a graph file");
  validate->add_option("graph-file", cfg.graph_path, "Graph file")->required();
  add_common(validate, cfg, false);

  auto* normalize_cmd = app.add_subcommand("normalize", "Reduce a word to a normal form");
  add_common(normalize_cmd, cfg);
  add_words(normalize_cmd, cfg, 1);
  normalize_cmd->add_flag("--trace", cfg.trace, "Print each cancellation");
  normalize_cmd->add_flag("--all", cfg.all, "Print every reachable normal form");
  std::map<std::string, StrategyFlag> const strategies{{"leftmost", StrategyFlag::Leftmost},
                                                       {"random", StrategyFlag::Random}};
  normalize_cmd->add_option("--strategy", cfg.strategy, "leftmost (default) or random")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  normalize_cmd->add_option("--seed", cfg.seed, "Seed for --strategy random");

  auto* canon = app.add_subcommand("canon", "Print the canonical form of a word");
  add_common(canon, cfg);
  add_words(canon, cfg, 1);

  auto* eq = app.add_subcommand("eq", "Decide equality of two words in the monoid");
  add_common(eq, cfg);
  add_words(eq, cfg, 2);

  auto* count = app.add_subcommand("count", "Count monoid elements");
  add_common(count, cfg);
  count->add_option("--max", cfg.max_elements, "Element budget")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List monoid elements");
  add_common(enumerate, cfg);
  enumerate->add_option("--max", cfg.max_elements, "Element budget")
      ->check(CLI::PositiveNumber);

  auto* cayley = app.add_subcommand("cayley", "Write the left Cayley graph as DOT");
  add_common(cayley, cfg);
  cayley->add_option("-o,--output", cfg.output_path, "Output .dot file")->required();
  cayley->add_option("--max", cfg.max_elements, "Element budget")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle-eq", "Brute-force equality from the relations");
  add_common(oracle, cfg);
  add_words(oracle, cfg, 2);
  oracle->add_option("--max-len", cfg.max_len, "Longest word explored")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--max-states", cfg.max_states, "State budget")
      ->check(CLI::PositiveNumber);

  auto* selfcheck = app.add_subcommand("selfcheck", "Exhaustive local-confluence check");
  add_common(selfcheck, cfg);
  selfcheck->add_option("--max-len", cfg.max_len, "Longest word checked (default 6)")
      ->check(CLI::NonNegativeNumber);

  std::vector<char const*> argv{"hekise"};
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (normalize_cmd->parsed()) return cmd_normalize(cfg, out);
    if (canon->parsed()) return cmd_canon(cfg, out);
    if (eq->parsed()) return cmd_eq(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (cayley->parsed()) return cmd_cayley(cfg, out);
    if (oracle->parsed()) return cmd_oracle_eq(cfg, out);
    if (selfcheck->parsed()) return cmd_selfcheck(cfg, out);
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace hekise::cli
