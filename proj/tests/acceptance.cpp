// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails or overruns its time limit.
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hekise/canon.hpp"
#include "hekise/cli.hpp"
#include "hekise/confluence.hpp"
#include "hekise/enumerate.hpp"
#include "hekise/error.hpp"
#include "hekise/oracle.hpp"
#include "hekise/rewrite.hpp"
#include "testkit/testkit.hpp"

namespace {

using namespace hekise;
namespace tk = hekise::testkit;
using Clock = std::chrono::steady_clock;

// Failure message, or nullopt on success.
using Check = std::optional<std::string>;

struct Outcome {
  Check failure;
  std::string summary;
};

class Gate {
 public:
  void run(int number, char const* title, double limit_seconds,
           std::function<Outcome()> const& body) {
    auto const start = Clock::now();
    Outcome outcome;
    try {
      outcome = body();
    } catch (std::exception const& e) {
      outcome.failure = std::string("exception: ") + e.what();
    }
    double const seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!outcome.failure && limit_seconds > 0 && seconds >= limit_seconds) {
      outcome.failure = "exceeded the time limit";
    }
    std::string limit = limit_seconds > 0 ? ", limit " + fmt_seconds(limit_seconds) : "";
    std::printf("%s criterion %d: %s [%s%s] %s\n", outcome.failure ? "FAIL" : "PASS", number,
                title, fmt_seconds(seconds).c_str(), limit.c_str(),
                outcome.failure ? outcome.failure->c_str() : outcome.summary.c_str());
    std::fflush(stdout);
    failures_ += outcome.failure ? 1 : 0;
  }

  int failures() const noexcept { return failures_; }

 private:
  static std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
  }
  int failures_ = 0;
};

OrientedGraph worked_example_graph() { return build_graph({"a", "b", "c"}, {{"a", "c"}}); }

std::string str(OrientedGraph const& g, Word const& w) { return format_word(w, g); }

// ---------------------------------------------------------------------------
// 1. Worked example.

Check worked_example() {
  auto const g = worked_example_graph();
  auto const cab = parse_word("cab", g);
  auto const bca = parse_word("bca", g);
  auto const cba = parse_word("cba", g);

  auto const canon = canonicalize(cab, g).word();
  if (canon != bca) {
    return "canonicalize(cab) = " + str(g, canon);
  }
  std::set<std::string> cls;
  for (auto const& w : commutation_class(cab, g, 100)) {
    cls.insert(str(g, w));
  }
  if (cls != std::set<std::string>{"bca", "cab", "cba"}) {
    return "commutation class of cab has " + std::to_string(cls.size()) + " members";
  }
  // Search every path of single commutations that never goes lexicographically up.
  std::set<Word> seen{cab};
  std::vector<Word> stack{cab};
  while (!stack.empty()) {
    Word const u = stack.back();
    stack.pop_back();
    for (std::size_t c : elementary_commutation_sites(u, g)) {
      Word const v = u.swapped(c);
      if (!lex_less(u, v, g) && seen.insert(v).second) {
        stack.push_back(v);
      }
    }
  }
  if (seen.contains(bca)) {
    return std::string("bca reachable from cab by non-increasing commutations");
  }
  if (!lex_less(cab, cba, g)) {
    return std::string("cba is not above cab");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 2. Normal-form claims and local confluence.

Check normal_form_claims(Word const& w, OrientedGraph const& g) {
  auto const nfs = all_normal_forms(w, g);
  auto const& first = *nfs.begin();
  for (auto const& u : nfs) {
    if (!commutation_equivalent(u, first, g)) {
      return "(a) " + str(g, w) + ": " + str(g, u) + " !~ " + str(g, first);
    }
    if (u.size() != first.size()) {
      return "(b) " + str(g, w) + ": " + str(g, u) + ", " + str(g, first);
    }
  }
  return std::nullopt;
}

Outcome normal_form_and_confluence_claims() {
  std::size_t exhaustive_words = 0, divergences = 0;
  for (auto const& g : tk::all_simple_oriented_graphs(3)) {
    auto const report = check_all_words(g, 7);
    if (!report.passed()) {
      return {describe(*report.failure, g) + " on " + format_graph(g), {}};
    }
    divergences += report.stats.alpha_pairs + report.stats.beta_pairs;
    WordSpace const space(g, 7);
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (auto f = normal_form_claims(space.at(i), g)) {
        return {*f, {}};
      }
    }
    exhaustive_words += space.size();
  }

  tk::Rng rng(tk::kSeed);
  std::size_t closure_words = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto const g = tk::random_graph(6, rng);
    auto const w = tk::random_word(g, 12, rng);
    if (auto f = normal_form_claims(w, g)) {
      return {*f, {}};
    }
    ReductionExplorer explorer(g);
    WordCheckStats stats;
    if (auto f = explorer.check_closure(w, stats)) {
      return {describe(*f, g), {}};
    }
    closure_words += explorer.reachable(w).size();
    divergences += stats.alpha_pairs + stats.beta_pairs;
  }
  return {std::nullopt, std::to_string(exhaustive_words) + " exhaustive words, 1000 random words (" +
                            std::to_string(closure_words) + " with descendants), " +
                            std::to_string(divergences) + " divergences joined"};
}

// ---------------------------------------------------------------------------
// 3. Canonical forms against the relation oracle.

Check oracle_agreement(OrientedGraph const& g, std::size_t max_len, std::size_t horizon,
                       tk::Rng& rng, std::size_t samples) {
  OraclePartition const partition(g, horizon);
  WordSpace const space(g, max_len);
  std::map<Word, std::size_t> class_of_canon;
  std::map<std::size_t, Word> canon_of_class;
  std::map<Word, std::vector<Word>> members;
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto const w = space.at(i);
    auto const c = canonicalize(w, g).word();
    auto const k = partition.class_of(w);
    auto const [it, fresh] = class_of_canon.emplace(c, k);
    if (it->second != k) {
      return "canon equal, oracle split: " + str(g, w) + " vs " + str(g, members[c].front());
    }
    auto const [jt, fresh2] = canon_of_class.emplace(k, c);
    if (jt->second != c) {
      return "oracle equal, canon differs: " + str(g, w) + " -> " + str(g, c) + " vs " +
             str(g, jt->second);
    }
    members[c].push_back(w);
  }

  // Direct bidirectional searches on sampled pairs, half of them equal.
  std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const u = space.at(pick(rng));
    Word v = space.at(pick(rng));
    auto const cu = canonicalize(u, g).word();
    if (s % 2 == 0) {
      auto const& same = members[cu];
      v = same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
    }
    bool const equal = cu == canonicalize(v, g).word();
    auto const verdict = oracle_equal(u, v, g);
    if (verdict == OracleVerdict::Inconclusive ||
        (verdict == OracleVerdict::Equal) != equal) {
      return "oracle_equal(" + str(g, u) + ", " + str(g, v) + ") = " +
             std::string(verdict_name(verdict)) + ", canon says " + (equal ? "equal" : "distinct");
    }
  }
  return std::nullopt;
}

Outcome oracle_equivalence() {
  tk::Rng rng(tk::kSeed + 3);
  std::size_t graphs = 0;
  for (auto const& g : tk::all_simple_oriented_graphs(3)) {
    if (auto f = oracle_agreement(g, 6, 10, rng, 200)) {
      return {*f + " on " + format_graph(g), {}};
    }
    ++graphs;
  }
  return {std::nullopt, std::to_string(graphs) +
                            " graphs, all pairs of the 1093 words of length <= 6, oracle horizon "
                            "10, 200 direct searches per graph"};
}

// ---------------------------------------------------------------------------
// 4. Unique normal forms on Γn.

Check gamma_uniqueness() {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const g = make_gamma_n(n);
    WordSpace const space(g, 7);
    for (std::size_t i = 0; i < space.size(); ++i) {
      auto const w = space.at(i);
      auto const nfs = all_normal_forms(w, g);
      if (nfs.size() != 1) {
        return "Γ" + std::to_string(n) + ": " + str(g, w) + " has " +
               std::to_string(nfs.size()) + " normal forms";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 5. Finite enumerations.

// Census of Γn against the number of oracle classes that contain a word of
// length <= `short_len`, the oracle running to `horizon`.
Check census_matches_oracle(OrientedGraph const& g, std::size_t short_len, std::size_t horizon,
                            std::string& summary) {
  auto const census = enumerate_elements(g);
  if (!census.complete) {
    return std::string("census incomplete");
  }
  OraclePartition const partition(g, horizon, 50'000'000);
  std::size_t short_classes = 0;
  for (auto const& c : partition.classes()) {
    short_classes += c.representative.size() <= short_len ? 1 : 0;
  }
  summary = std::to_string(census.elements.size()) + " elements, " +
            std::to_string(short_classes) + " oracle classes with a word of length <= " +
            std::to_string(short_len) + " (horizon " + std::to_string(horizon) + ")";
  if (short_classes != census.elements.size()) {
    return summary;
  }
  return std::nullopt;
}

std::size_t longest(MonoidCensus const& census) {
  return census.by_length.empty() ? 0 : census.by_length.rbegin()->first;
}

Outcome finite_enumerations() {
  auto const path = build_graph({"a", "b"}, {{"a", "b"}});
  auto const census = enumerate_elements(path);
  std::set<std::string> words;
  for (auto const& x : census.elements) {
    words.insert(str(path, x.word()));
  }
  if (!census.complete || words != std::set<std::string>{"\xce\xb5", "a", "b", "ab", "ba"}) {
    return {"A2 census has " + std::to_string(words.size()) + " elements", {}};
  }
  auto const g3 = make_gamma_n(3);
  std::size_t const l = 2 * longest(enumerate_elements(g3));
  std::string summary;
  if (auto f = census_matches_oracle(g3, l, l + kOracleExtraLength, summary)) {
    return {"Γ3: " + *f, {}};
  }
  return {std::nullopt, "A2: 5 elements; Γ3: " + summary};
}

// ---------------------------------------------------------------------------
// 6. Powers of the 3-cycle.

Check cycle_witnesses() {
  auto const g = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  std::vector<VertexId> const cycle{*g.find("a"), *g.find("b"), *g.find("c")};
  auto const witnesses = cycle_power_witnesses(g, cycle, 10);
  Word power;
  std::set<Word> distinct;
  for (std::size_t k = 1; k <= 10; ++k) {
    power = power + Word(std::vector<VertexId>(cycle.begin(), cycle.end()));
    if (!is_normal_form(power, g)) {
      return "(abc)^" + std::to_string(k) + " is not normal";
    }
    auto const& w = witnesses[k - 1].word();
    if (w.size() != 3 * k || canonicalize(power, g).word() != w) {
      return "witness " + std::to_string(k) + " is " + str(g, w);
    }
    distinct.insert(w);
  }
  if (distinct.size() != 10) {
    return std::string("canonical forms coincide");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 7. Property battery.

struct Property {
  char const* name;
  std::function<Check()> body;
};

std::vector<OrientedGraph> graphs_up_to(std::size_t n) {
  std::vector<OrientedGraph> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& g : tk::all_simple_oriented_graphs(k)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

// All 3-vertex graphs and one 4-vertex graph per isomorphism class.
std::vector<OrientedGraph> small_graph_family() {
  auto out = tk::all_simple_oriented_graphs(3);
  for (auto& g : tk::oriented_graphs_up_to_isomorphism(4)) {
    out.push_back(std::move(g));
  }
  return out;
}

std::set<VertexId> initial_letters(Word const& w, OrientedGraph const& g) {
  std::set<VertexId> out;
  for (std::size_t j : initial_letter_positions(w, g)) {
    out.insert(w[j]);
  }
  return out;
}

// A random word reached from w by up to `steps` relation moves.
Word relation_walk(Word w, OrientedGraph const& g, std::size_t max_len, int steps,
                   tk::Rng& rng) {
  for (int s = 0; s < steps; ++s) {
    std::vector<Word> next;
    for (auto& m : relation_moves(w, g)) {
      if (m.result.size() <= max_len) {
        next.push_back(std::move(m.result));
      }
    }
    if (next.empty()) {
      break;
    }
    w = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
  }
  return w;
}

std::vector<Property> properties() {
  std::vector<Property> ps;

  // graph
  ps.push_back({"arrow/reverse/disconnected trichotomy", [] () -> Check {
    for (auto const& g : graphs_up_to(4)) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
          auto const a = vertex_at(i), b = vertex_at(j);
          if (i != j && int(g.has_arrow(a, b)) + int(g.has_arrow(b, a)) +
                                int(g.disconnected(a, b)) != 1) {
            return format_graph(g);
          }
        }
      }
    }
    return std::nullopt;
  }});
  ps.push_back({"Γn acyclic, cycles cyclic", [] () -> Check {
    for (std::size_t n = 1; n <= 16; ++n) {
      if (!is_acyclic(make_gamma_n(n))) return "Γ" + std::to_string(n);
      if (n >= 3 && is_acyclic(make_cycle_n(n))) return "C" + std::to_string(n);
    }
    return std::nullopt;
  }});
  ps.push_back({"build_graph accepts exactly the simple graphs", [] () -> Check {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, char('a' + i));
      for (std::uint32_t mask = 0; mask < (1u << (n * n)); ++mask) {
        std::vector<LabelArrow> arrows;
        bool simple = true;
        for (std::size_t k = 0; k < n * n; ++k) {
          if ((mask >> k & 1u) == 0) continue;
          std::size_t const i = k / n, j = k % n;
          arrows.emplace_back(labels[i], labels[j]);
          simple = simple && i != j && (mask >> (j * n + i) & 1u) == 0;
        }
        bool accepted = true;
        try {
          build_graph(labels, arrows);
        } catch (Error const&) {
          accepted = false;
        }
        if (accepted != simple) return "mask " + std::to_string(mask);
      }
    }
    return std::nullopt;
  }});

  // word
  ps.push_back({"commutation key = breadth-first class (length <= 8)", [] () -> Check {
    for (auto const& g : small_graph_family()) {
      std::map<CommutationKey, std::vector<Word>> groups;
      for (auto& w : tk::all_words(g, 8)) {
        groups[commutation_key(w, g)].push_back(std::move(w));
      }
      for (auto const& [key, words] : groups) {
        auto const cls = commutation_class(words.front(), g, 1'000'000);
        if (cls.size() != words.size() ||
            !std::all_of(words.begin(), words.end(), [&](Word const& w) { return cls.contains(w); })) {
          return str(g, words.front()) + " on " + format_graph(g);
        }
        if (!commutation_equivalent(words.front(), words.back(), g)) {
          return str(g, words.front());
        }
      }
    }
    return std::nullopt;
  }});
  ps.push_back({"~ is an equivalence preserving length and support", [] () -> Check {
    tk::Rng rng(tk::kSeed + 70);
    for (int t = 0; t < 2000; ++t) {
      auto const g = tk::random_graph(5, rng);
      auto const u = tk::random_word(g, 8, rng);
      auto const cls = commutation_class(u, g, 1'000'000);
      std::vector<Word> const members(cls.begin(), cls.end());
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      auto const& v = members[pick(rng)];
      auto w = members[pick(rng)];
      if (t % 3 == 0) {
        std::vector<VertexId> letters(u.begin(), u.end());
        std::shuffle(letters.begin(), letters.end(), rng);
        w = Word(letters);
      }
      bool const uv = commutation_equivalent(u, v, g), vu = commutation_equivalent(v, u, g);
      bool const vw = commutation_equivalent(v, w, g), uw = commutation_equivalent(u, w, g);
      if (!commutation_equivalent(u, u, g) || !uv || uv != vu || (uv && vw && !uw)) {
        return str(g, u) + ", " + str(g, v) + ", " + str(g, w);
      }
      if (v.size() != u.size() || support(v) != support(u)) return str(g, v);
    }
    return std::nullopt;
  }});
  ps.push_back({"initial letters are ~-invariant; iota = least first letter", [] () -> Check {
    tk::Rng rng(tk::kSeed + 71);
    for (int t = 0; t < 2000; ++t) {
      auto const g = tk::random_graph(5, rng);
      auto const w = tk::random_word(g, 8, rng);
      if (w.empty()) continue;
      auto const letters = initial_letters(w, g);
      std::optional<VertexId> least;
      for (auto const& v : commutation_class(w, g, 1'000'000)) {
        if (initial_letters(v, g) != letters) return str(g, w) + " vs " + str(g, v);
        if (!least || g.rank(v[0]) < g.rank(*least)) least = v[0];
      }
      if (iota(w, g) != *least) return str(g, w);
    }
    return std::nullopt;
  }});

  // rewrite
  ps.push_back({"cancellation removes one letter and keeps the support", [] () -> Check {
    tk::Rng rng(tk::kSeed + 72);
    for (int t = 0; t < 2000; ++t) {
      auto const g = tk::random_graph(5, rng);
      auto const w = tk::random_word(g, 12, rng);
      for (auto const& site : cancellation_sites(w, g)) {
        auto const r = apply_cancellation(w, site, g);
        if (r.size() + 1 != w.size() || support(r) != support(w)) return str(g, w);
      }
    }
    return std::nullopt;
  }});
  ps.push_back({"normalize stops within length - 1 steps", [] () -> Check {
    tk::Rng rng(tk::kSeed + 73);
    for (int t = 0; t < 2000; ++t) {
      auto const g = tk::random_graph(6, rng);
      auto const w = tk::random_word(g, 16, rng);
      auto const r = normalize(w, g, Strategy::random_seeded(rng()));
      if (!is_normal_form(r.word, g) || r.trace.steps.size() + 1 > std::max<std::size_t>(w.size(), 1)) {
        return str(g, w);
      }
    }
    return std::nullopt;
  }});
  ps.push_back({"claims 1-3, alpha, beta exhaustively (length <= 8)", [] () -> Check {
    for (auto const& g : small_graph_family()) {
      auto const report = check_all_words(g, 8);
      if (!report.passed()) return describe(*report.failure, g) + " on " + format_graph(g);
    }
    return std::nullopt;
  }});
  ps.push_back({"aua = au and aua = ua cancellation rules", [] () -> Check {
    tk::Rng rng(tk::kSeed + 74);
    for (int t = 0; t < 2000; ++t) {
      auto const g = tk::random_graph(6, rng);
      auto const a = vertex_at(std::uniform_int_distribution<std::size_t>(0, 5)(rng));
      bool const right = t % 2 == 0;
      std::vector<VertexId> allowed;
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto const x = vertex_at(i);
        if (x == a || (right ? !g.has_arrow(x, a) : !g.has_arrow(a, x))) allowed.push_back(x);
      }
      Word u;
      std::uniform_int_distribution<std::size_t> len(0, 8), pick(0, allowed.size() - 1);
      for (std::size_t k = len(rng); k > 0; --k) u.push_back(allowed[pick(rng)]);
      auto const lhs = normalize(Word{a} + u + Word{a}, g).word;
      auto const rhs = normalize(right ? Word{a} + u : u + Word{a}, g).word;
      if (!commutation_equivalent(lhs, rhs, g)) return str(g, Word{a} + u + Word{a});
    }
    return std::nullopt;
  }});

  // canon
  ps.push_back({"canonicalize is idempotent and relation-invariant", [] () -> Check {
    tk::Rng rng(tk::kSeed + 75);
    for (int t = 0; t < 1000; ++t) {
      auto const g = tk::random_graph(5, rng);
      auto const w = tk::random_word(g, 10, rng);
      auto const c = canonicalize(w, g);
      if (canonicalize(c.word(), g) != c) return str(g, w);
      for (auto const& m : relation_moves(w, g)) {
        if (canonicalize(m.result, g) != c) return str(g, w) + " -> " + str(g, m.result);
      }
    }
    return std::nullopt;
  }});
  ps.push_back({"canonical form independent of the rewriting strategy", [] () -> Check {
    tk::Rng rng(tk::kSeed + 76);
    for (int t = 0; t < 1000; ++t) {
      auto const g = tk::random_graph(6, rng);
      auto const w = tk::random_word(g, 14, rng);
      auto const seeded = normalize(w, g, Strategy::random_seeded(rng())).word;
      if (min_normal_form(seeded, g) != canonicalize(w, g).word()) return str(g, w);
    }
    return std::nullopt;
  }});
  ps.push_back({"min_normal_form is the tidy least member of its class", [] () -> Check {
    for (auto const& g : tk::all_simple_oriented_graphs(3)) {
      for (auto const& w : tk::all_words(g, 8)) {
        if (!is_normal_form(w, g)) continue;
        auto const m = min_normal_form(w, g);
        if (!is_normal_form(m, g) || !is_tidy(m, g) ||
            m != tk::lex_min(commutation_class(w, g, 1'000'000), g)) {
          return str(g, w) + " on " + format_graph(g);
        }
      }
    }
    tk::Rng rng(tk::kSeed + 77);
    for (int t = 0; t < 2000; ++t) {
      auto const g = tk::random_graph(5, rng);
      auto const w = normalize(tk::random_word(g, 14, rng), g).word;
      if (w.size() > 8) continue;
      if (min_normal_form(w, g) != tk::lex_min(commutation_class(w, g, 1'000'000), g)) {
        return str(g, w);
      }
    }
    return std::nullopt;
  }});
  ps.push_back({"unique normal forms on Γ2, Γ3, Γ4", gamma_uniqueness});
  ps.push_back({"multiply is associative with a two-sided identity", [] () -> Check {
    tk::Rng rng(tk::kSeed + 78);
    for (int t = 0; t < 1000; ++t) {
      auto const g = tk::random_graph(5, rng);
      auto const x = canonicalize(tk::random_word(g, 8, rng), g);
      auto const y = canonicalize(tk::random_word(g, 8, rng), g);
      auto const z = canonicalize(tk::random_word(g, 8, rng), g);
      if (multiply(g, multiply(g, x, y), z) != multiply(g, x, multiply(g, y, z))) {
        return str(g, x.word()) + " " + str(g, y.word()) + " " + str(g, z.word());
      }
      auto const e = identity(g);
      if (multiply(g, e, x) != x || multiply(g, x, e) != x) return str(g, x.word());
    }
    return std::nullopt;
  }});
  ps.push_back({"no lexicographically decreasing path from cab to bca", worked_example});

  // enumerate
  ps.push_back({"census complete iff graph acyclic (<= 4 vertices)", [] () -> Check {
    for (auto const& g : graphs_up_to(4)) {
      if (enumerate_elements(g, 2000).complete != is_acyclic(g)) return format_graph(g);
    }
    return std::nullopt;
  }});
  ps.push_back({"census independent of generator order and search order", [] () -> Check {
    for (auto const& g : graphs_up_to(4)) {
      if (!is_acyclic(g)) continue;
      auto const census = enumerate_elements(g);
      // Depth-first closure, generators in reverse order.
      std::set<Word> seen{Word{}};
      std::vector<CanonicalForm> stack{identity(g)};
      while (!stack.empty()) {
        auto const x = stack.back();
        stack.pop_back();
        for (std::size_t i = g.size(); i-- > 0;) {
          auto const y = multiply(g, x, canonicalize(Word{vertex_at(i)}, g));
          if (seen.insert(y.word()).second) stack.push_back(y);
        }
      }
      std::set<Word> listed;
      for (auto const& x : census.elements) listed.insert(x.word());
      if (listed != seen) return format_graph(g);
    }
    return std::nullopt;
  }});
  ps.push_back({"census elements are tidy normal forms", [] () -> Check {
    for (auto const& g : graphs_up_to(4)) {
      if (!is_acyclic(g)) continue;
      for (auto const& x : enumerate_elements(g).elements) {
        if (!is_normal_form(x.word(), g) || !is_tidy(x.word(), g)) return str(g, x.word());
      }
    }
    return std::nullopt;
  }});
  ps.push_back({"Γn census size = oracle class count (n <= 4)", [] () -> Check {
    std::string summary;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const g = make_gamma_n(n);
      std::size_t const l = 2 * longest(enumerate_elements(g));
      if (auto f = census_matches_oracle(g, l, l + kOracleExtraLength, summary)) {
        return "Γ" + std::to_string(n) + ": " + *f;
      }
    }
    // Γ4: 4^(2·6 + 4) words is out of reach; every element still has a word
    // of length <= 6.
    auto const g4 = make_gamma_n(4);
    std::size_t const l = longest(enumerate_elements(g4));
    if (auto f = census_matches_oracle(g4, l, l + kOracleExtraLength, summary)) {
      return "Γ4: " + *f;
    }
    return std::nullopt;
  }});

  // oracle
  ps.push_back({"oracle_equal agrees with equal_in_monoid", [] () -> Check {
    tk::Rng rng(tk::kSeed + 79);
    for (auto const& g : tk::oriented_graphs_up_to_isomorphism(3)) {
      if (auto f = oracle_agreement(g, 6, 10, rng, 300)) return *f + " on " + format_graph(g);
    }
    return std::nullopt;
  }});
  ps.push_back({"oracle_equal is symmetric and transitive", [] () -> Check {
    tk::Rng rng(tk::kSeed + 80);
    for (int t = 0; t < 300; ++t) {
      auto const g = tk::random_graph(3 + t % 2, rng);
      auto const u = tk::random_word(g, 4, rng);
      auto const v = relation_walk(u, g, 5, 6, rng);
      auto const w = t % 3 == 0 ? tk::random_word(g, 5, rng) : relation_walk(v, g, 5, 6, rng);
      auto const uv = oracle_equal(u, v, g), vu = oracle_equal(v, u, g);
      auto const vw = oracle_equal(v, w, g), uw = oracle_equal(u, w, g);
      if (uv != vu) return "asymmetric at " + str(g, u) + ", " + str(g, v);
      if (uv == OracleVerdict::Equal && vw == OracleVerdict::Equal && uw != OracleVerdict::Equal) {
        return "intransitive at " + str(g, u) + ", " + str(g, v) + ", " + str(g, w);
      }
      if (uv != OracleVerdict::Equal) return "walk left the class at " + str(g, u);
    }
    return std::nullopt;
  }});
  ps.push_back({"every word is oracle-equal to its canonical form", [] () -> Check {
    tk::Rng rng(tk::kSeed + 81);
    for (int t = 0; t < 500; ++t) {
      auto const g = tk::random_graph(4, rng);
      auto const w = tk::random_word(g, 6, rng);
      if (oracle_equal(w, canonicalize(w, g).word(), g) != OracleVerdict::Equal) return str(g, w);
    }
    return std::nullopt;
  }});

  // cli
  ps.push_back({"CLI JSON round-trips and exit codes are stable", [] () -> Check {
    namespace fs = std::filesystem;
    auto const dir = fs::temp_directory_path() / ("hekise_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    struct Cleanup {
      fs::path dir;
      ~Cleanup() {
        std::error_code ec;
        fs::remove_all(dir, ec);
      }
    } cleanup{dir};
    tk::Rng rng(tk::kSeed + 82);
    auto call = [](std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int const code = cli::run(args, out, err);
      return std::pair{code, out.str()};
    };
    for (int t = 0; t < 40; ++t) {
      auto const g = tk::random_graph(5, rng);
      auto const path = (dir / ("g" + std::to_string(t) + ".hk")).string();
      std::ofstream(path) << format_graph(g);
      auto const w = str(g, tk::random_word(g, 10, rng));
      auto const [code, out] = call({"canon", "-g", path, "-w", w, "--format", "json"});
      if (code != 0) return "canon exit " + std::to_string(code);
      auto const canonical = nlohmann::json::parse(out)["canonical"].get<std::string>();
      auto const again = call({"canon", "-g", path, "-w", canonical, "--format", "json"});
      if (nlohmann::json::parse(again.second)["canonical"] != canonical) return w;

      std::vector<std::vector<std::string>> const commands{
          {"normalize", "-g", path, "-w", w, "--strategy", "random", "--seed", "5"},
          {"eq", "-g", path, "-w", w, "-w", canonical},
          {"eq", "-g", path, "-w", w, "-w", w + str(g, Word{vertex_at(0)})},
          {"validate", path},
          {"canon", "-g", path}};
      for (auto const& args : commands) {
        auto const first = call(args);
        for (int rep = 0; rep < 3; ++rep) {
          if (call(args) != first) return "unstable: " + args.front();
        }
      }
    }
    return std::nullopt;
  }});
  return ps;
}

Outcome property_battery() {
  std::size_t passed = 0;
  std::vector<std::string> failed;
  auto const ps = properties();
  for (auto const& p : ps) {
    Check f;
    try {
      f = p.body();
    } catch (std::exception const& e) {
      f = std::string("exception: ") + e.what();
    }
    if (f) {
      failed.push_back(std::string(p.name) + ": " + *f);
    } else {
      ++passed;
    }
  }
  std::string const summary = std::to_string(passed) + "/" + std::to_string(ps.size()) +
                              " properties hold (seed " + std::to_string(tk::kSeed) + ")";
  if (failed.empty()) {
    return {std::nullopt, summary};
  }
  std::string detail = summary;
  for (auto const& f : failed) {
    detail += "; " + f;
  }
  return {detail, {}};
}

Outcome wrap(Check c) { return {std::move(c), {}}; }

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "worked example on a -> c", 1.0, [] { return wrap(worked_example()); });
  gate.run(2, "normal-form claims and local confluence", 300.0, normal_form_and_confluence_claims);
  gate.run(3, "canonical equality agrees with the relation oracle", 600.0, oracle_equivalence);
  gate.run(4, "unique normal forms on Γ2, Γ3, Γ4 (length <= 7)", 0.0,
           [] { return wrap(gamma_uniqueness()); });
  gate.run(5, "finite enumerations", 120.0, finite_enumerations);
  gate.run(6, "powers of the 3-cycle", 1.0, [] { return wrap(cycle_witnesses()); });
  gate.run(7, "invariant property battery", 0.0, property_battery);
  std::printf("%d criteria failed\n", gate.failures());
  return gate.failures() == 0 ? 0 : 1;
}
