#include "hekise/word.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hekise/error.hpp"

namespace hekise {

Word Word::without(std::size_t pos) const {
  std::vector<VertexId> out;
  out.reserve(letters_.size() - 1);
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, letters_.end());
  return Word(std::move(out));
}

Word Word::swapped(std::size_t pos) const {
  Word out = *this;
  std::swap(out.letters_[pos], out.letters_[pos + 1]);
  return out;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  auto const first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<VertexId>(first, first + static_cast<std::ptrdiff_t>(count)));
}

Word operator+(Word const& lhs, Word const& rhs) {
  std::vector<VertexId> out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.letters_.begin(), lhs.letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  // FNV-1a over the letter ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (VertexId v : w) {
    h ^= static_cast<std::uint64_t>(index_of(v)) + 1;
    h *= 1099511628211ULL;
  }
  h ^= w.size();
  return static_cast<std::size_t>(h);
}

bool LexLess::operator()(Word const& u, Word const& v) const noexcept {
  return std::lexicographical_compare(
      u.begin(), u.end(), v.begin(), v.end(),
      [g = graph](VertexId a, VertexId b) { return g->rank(a) < g->rank(b); });
}

bool lex_less(Word const& u, Word const& v, OrientedGraph const& g) noexcept {
  return LexLess{&g}(u, v);
}

namespace {

constexpr std::string_view kEpsilon = "\xce\xb5";

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
}

VertexId lookup(std::string_view label, OrientedGraph const& g) {
  auto v = g.find(label);
  if (!v) {
    throw Error(ErrorKind::UnknownLetter, std::string(label));
  }
  return *v;
}

}  // namespace

Word parse_word(std::string_view text, OrientedGraph const& g) {
  auto const first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  if (text == kEpsilon) {
    return {};
  }

  Word out;
  if (std::any_of(text.begin(), text.end(), is_separator)) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_separator(text[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !is_separator(text[j])) {
        ++j;
      }
      if (j > i) {
        out.push_back(lookup(text.substr(i, j - i), g));
      }
      i = j;
    }
    return out;
  }

  if (auto v = g.find(text)) {
    out.push_back(*v);
    return out;
  }
  if (!g.single_char_labels()) {
    throw Error(ErrorKind::UnknownLetter, std::string(text));
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    out.push_back(lookup(text.substr(i, 1), g));
  }
  return out;
}

std::string format_word(Word const& w, OrientedGraph const& g) {
  if (w.empty()) {
    return std::string(kEpsilon);
  }
  std::string out;
  bool const compact = g.single_char_labels();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) {
      out += ' ';
    }
    out += g.label(w[i]);
  }
  return out;
}

Support support(Word const& w) {
  Support s(w.begin(), w.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<std::size_t> elementary_commutation_sites(Word const& w,
                                                      OrientedGraph const& g) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (g.commutes(w[i], w[i + 1])) {
      sites.push_back(i);
    }
  }
  return sites;
}

std::set<Word> commutation_class(Word const& w, OrientedGraph const& g,
                                 std::size_t budget) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i : elementary_commutation_sites(current, g)) {
      Word next = current.swapped(i);
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          throw Error(ErrorKind::BudgetExceeded, std::to_string(budget));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

CommutationKey commutation_key(Word const& w, OrientedGraph const& g) {
  std::size_t const n = g.size();
  CommutationKey key(n, 0);
  for (VertexId v : w) {
    ++key[index_of(v)];
  }
  constexpr auto kSeparator = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t a = 0; a < n; ++a) {
    if (key[a] == 0) {
      continue;
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      if (key[b] == 0 || g.commutes(vertex_at(a), vertex_at(b))) {
        continue;
      }
      key.push_back(kSeparator);
      for (VertexId v : w) {
        if (index_of(v) == a || index_of(v) == b) {
          key.push_back(static_cast<std::uint32_t>(index_of(v)));
        }
      }
    }
  }
  return key;
}

bool commutation_equivalent(Word const& u, Word const& v, OrientedGraph const& g) {
  if (u.size() != v.size()) {
    return false;
  }
  return commutation_key(u, g) == commutation_key(v, g);
}

std::vector<std::size_t> initial_letter_positions(Word const& w,
                                                  OrientedGraph const& g) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    bool initial = true;
    for (std::size_t i = 0; i < j && initial; ++i) {
      initial = g.commutes(w[i], w[j]);
    }
    if (initial) {
      out.push_back(j);
    }
  }
  return out;
}

VertexId iota(Word const& w, OrientedGraph const& g) {
  if (w.empty()) {
    throw Error(ErrorKind::EmptyWord, "iota");
  }
  VertexId best = w[0];
  for (std::size_t j : initial_letter_positions(w, g)) {
    if (g.rank(w[j]) < g.rank(best)) {
      best = w[j];
    }
  }
  return best;
}

bool is_tidy(Word const& w, OrientedGraph const& g) {
  // w is tidy iff every suffix w[i..] starts with its own least initial letter.
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!g.commutes(w[i], w[j])) {
        continue;
      }
      bool initial = true;
      for (std::size_t k = i + 1; k < j && initial; ++k) {
        initial = g.commutes(w[k], w[j]);
      }
      if (initial && g.rank(w[j]) < g.rank(w[i])) {
        return false;
      }
    }
  }
  return true;
}

WordSpace::WordSpace(OrientedGraph const& g, std::size_t max_len, std::size_t limit)
    : order_(g.ordered_vertices().begin(), g.ordered_vertices().end()), max_len_(max_len) {
  rank_.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    rank_[i] = g.rank(vertex_at(i));
  }
  std::size_t const n = g.size();
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t k = 0; k <= max_len; ++k) {
    offsets_.push_back(total);
    if (layer > limit - total) {
      throw Error(ErrorKind::StateBudgetExceeded,
                  "more than " + std::to_string(limit) + " words up to length " +
                      std::to_string(k));
    }
    total += layer;
    if (n == 0) {
      layer = 0;
    } else if (layer > limit / n) {
      layer = limit;  // saturate; the next length trips the check above
    } else {
      layer *= n;
    }
  }
  offsets_.push_back(total);
}

Word WordSpace::at(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorKind::InvalidArgument, "word index out of range");
  }
  auto const it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  std::size_t const len = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  std::size_t value = index - offsets_[len];
  std::size_t const n = order_.size();
  std::vector<VertexId> letters(len);
  for (std::size_t k = len; k-- > 0;) {
    letters[k] = order_[value % n];
    value /= n;
  }
  return Word(std::move(letters));
}

std::size_t WordSpace::index(Word const& w) const {
  if (w.size() > max_len_) {
    throw Error(ErrorKind::InvalidArgument, "word longer than the enumerated space");
  }
  std::size_t value = 0;
  for (VertexId v : w) {
    value = value * order_.size() + rank_[index_of(v)];
  }
  return offsets_[w.size()] + value;
}

}  // namespace hekise
