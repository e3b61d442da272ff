#include "omod/io.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace omod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Reflexive-transitive closure of the declared cover edges; detects cycles.
std::vector<Mask> close_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<Mask> up(n, 0);
  for (int i = 0; i < n; ++i) up[i] = bit(i);
  for (auto [lo, hi] : covers) up[lo] |= bit(hi);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask next = up[i];
      for_each_bit(up[i], [&](int j) { next |= up[j]; });
      if (next != up[i]) {
        up[i] = next;
        changed = true;
      }
    }
  }
  return up;
}

}  // namespace

JoinSemilattice parse_structure(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> covers;
  std::vector<int> cover_lines;
  bool saw_elements = false;
  bool saw_covers = false;
  int elements_line = 0;

  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.rfind("elements:", 0) == 0) {
      if (saw_elements)
        throw ParseError(ParseError::Kind::BadSyntax, line_no, "duplicate 'elements:' directive");
      saw_elements = true;
      elements_line = line_no;
      for (auto& name : split_ws(line.substr(9))) {
        if (name == "<")
          throw ParseError(ParseError::Kind::BadSyntax, line_no, "'<' is not a valid element name");
        if (index.count(name))
          throw ParseError(ParseError::Kind::DuplicateElement, line_no,
                           "duplicate element '" + name + "'");
        index.emplace(name, static_cast<int>(names.size()));
        names.push_back(name);
      }
      continue;
    }
    if (line == "covers:") {
      if (!saw_elements)
        throw ParseError(ParseError::Kind::BadSyntax, line_no, "'covers:' before 'elements:'");
      if (saw_covers)
        throw ParseError(ParseError::Kind::BadSyntax, line_no, "duplicate 'covers:' directive");
      saw_covers = true;
      continue;
    }

    auto toks = split_ws(line);
    if (toks.size() == 3 && toks[1] == "<") {
      if (!saw_covers)
        throw ParseError(ParseError::Kind::BadSyntax, line_no, "cover line outside 'covers:' section");
      for (int k : {0, 2})
        if (!index.count(toks[static_cast<std::size_t>(k)]))
          throw ParseError(ParseError::Kind::UnknownElement, line_no,
                           "unknown element '" + toks[static_cast<std::size_t>(k)] + "' in cover");
      int lo = index.at(toks[0]);
      int hi = index.at(toks[2]);
      if (lo == hi)
        throw ParseError(ParseError::Kind::CycleDetected, line_no,
                         "element '" + toks[0] + "' cannot cover itself");
      covers.emplace_back(lo, hi);
      cover_lines.push_back(line_no);
      continue;
    }
    if (!line.empty() && line.back() == ':')
      throw ParseError(ParseError::Kind::UnknownDirective, line_no,
                       "unknown directive '" + std::string(line) + "'");
    throw ParseError(ParseError::Kind::BadSyntax, line_no,
                     "expected '<name> < <name>', got '" + std::string(line) + "'");
  }

  if (!saw_elements)
    throw ParseError(ParseError::Kind::EmptyStructure, 0, "missing 'elements:' directive");
  if (names.empty())
    throw ParseError(ParseError::Kind::EmptyStructure, elements_line, "structure has no elements");
  if (static_cast<int>(names.size()) > kMaxElements)
    throw SizeLimitExceeded("structure exceeds " + std::to_string(kMaxElements) + " elements");

  auto up = close_covers(static_cast<int>(names.size()), covers);
  for (std::size_t k = 0; k < covers.size(); ++k) {
    auto [lo, hi] = covers[k];
    if ((up[hi] & bit(lo)) != 0)
      throw ParseError(ParseError::Kind::CycleDetected, cover_lines[k],
                       "cycle through '" + names[lo] + "' and '" + names[hi] + "'");
  }
  return JoinSemilattice::from_poset(Poset(std::move(names), std::move(up)));
}

std::string write_structure(const JoinSemilattice& s) {
  const Poset& p = s.poset();
  std::string out = "elements:";
  for (int i = 0; i < p.size(); ++i) out += " " + p.name(i);
  out += "\ncovers:\n";
  for (auto [lo, hi] : p.covers()) out += p.name(lo) + " < " + p.name(hi) + "\n";
  return out;
}

std::string position_name(int i) {
  if (i < 10) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

JoinSemilattice from_canonical(std::string_view bits) {
  const auto len = bits.size();
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(len))));
  if (n < 1 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != len)
    throw ParseError(ParseError::Kind::BadSyntax, 0, "canonical string length is not a square");
  if (n > kMaxElements)
    throw SizeLimitExceeded("canonical string exceeds " + std::to_string(kMaxElements) +
                            " elements");
  std::vector<std::string> names(static_cast<std::size_t>(n));
  std::vector<Mask> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    names[static_cast<std::size_t>(i)] = position_name(i);
    for (int j = 0; j < n; ++j) {
      char c = bits[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)];
      if (c != '0' && c != '1')
        throw ParseError(ParseError::Kind::BadSyntax, 0, "canonical string must be 0/1");
      if (c == '1') up[static_cast<std::size_t>(i)] |= bit(j);
    }
  }
  return JoinSemilattice::from_poset(Poset(std::move(names), std::move(up)));
}

std::string to_dot(const JoinSemilattice& s, ElementSet highlight) {
  const Poset& p = s.poset();
  if ((highlight.bits & ~p.all()) != 0)
    throw IndexOutOfRange("highlight set contains an index outside the structure");
  auto quote = [](const std::string& name) {
    std::string q = "\"";
    for (char c : name) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int i = 0; i < p.size(); ++i) {
    out += "  " + quote(p.name(i));
    if (highlight.contains(i)) out += " [style=filled, fillcolor=lightgrey]";
    out += ";\n";
  }
  for (auto [lo, hi] : p.covers())
    out += "  " + quote(p.name(lo)) + " -> " + quote(p.name(hi)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace omod
