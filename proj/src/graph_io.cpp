#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hekise/error.hpp"
#include "hekise/graph.hpp"

namespace hekise {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\f\v";
  auto const first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

[[noreturn]] void bad_line(std::size_t line_no, std::string_view why) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line_no) + ": " + std::string(why));
}

std::string single_token(std::string_view s, std::size_t line_no) {
  auto tokens = split_ws(trim(s));
  if (tokens.size() != 1) {
    bad_line(line_no, "expected exactly one label on each side of '->'");
  }
  return std::string(tokens.front());
}

}  // namespace

OrientedGraph parse_graph(std::string_view text, OrderPolicy policy) {
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  std::vector<LabelArrow> arrows;

  auto declare_implicit = [&](std::string const& s) {
    if (seen.insert(s).second) {
      labels.push_back(s);
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto const hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }

    if (auto const arrow = line.find("->"); arrow != std::string_view::npos) {
      auto from = single_token(line.substr(0, arrow), line_no);
      auto to = single_token(line.substr(arrow + 2), line_no);
      declare_implicit(from);
      declare_implicit(to);
      arrows.emplace_back(std::move(from), std::move(to));
      continue;
    }

    auto tokens = split_ws(line);
    if (tokens.size() != 2 || tokens[0] != "vertex") {
      bad_line(line_no, "expected `vertex <label>` or `<label> -> <label>`");
    }
    // Explicit redeclaration is reported by build_graph as DuplicateLabel.
    std::string label(tokens[1]);
    seen.insert(label);
    labels.push_back(std::move(label));
  }

  return build_graph(std::move(labels), arrows, policy);
}

OrientedGraph load_graph(std::filesystem::path const& path, OrderPolicy policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), policy);
}

std::string format_graph(OrientedGraph const& g) {
  std::string out;
  for (auto const& s : g.labels()) {
    out += "vertex " + s + "\n";
  }
  for (auto const& [a, b] : g.arrows()) {
    out += g.label(a) + " -> " + g.label(b) + "\n";
  }
  return out;
}

}  // namespace hekise
