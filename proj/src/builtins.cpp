#include "omod/builtins.hpp"

#include <charconv>

#include "omod/io.hpp"

namespace omod {

namespace {

int parse_k(std::string_view base, std::string_view arg) {
  int k = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
  if (ec != std::errc{} || ptr != arg.data() + arg.size())
    throw BadParameter(std::string(base) + ": parameter '" + std::string(arg) +
                       "' is not a number");
  if (k < 1) throw BadParameter(std::string(base) + ": parameter must be at least 1");
  if (k > kMaxElements - 1)
    throw BadParameter(std::string(base) + ": parameter too large");
  return k;
}

}  // namespace

JoinSemilattice builtin(std::string_view name) {
  std::string_view base = name;
  std::string_view arg;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    arg = name.substr(colon + 1);
  }

  std::string text;
  if (name == "m2") {
    text =
        "elements: a c top b\n"
        "covers:\n"
        "a < c\nc < top\nb < top\n";
  } else if (name == "m4") {
    text =
        "elements: v a c top b\n"
        "covers:\n"
        "v < a\na < c\nc < top\nv < b\nb < top\n";
  } else if (name == "m3") {
    text =
        "elements: bot a b c top\n"
        "covers:\n"
        "bot < a\nbot < b\nbot < c\na < top\nb < top\nc < top\n";
  } else if (base == "chain") {
    int k = parse_k(base, arg);
    text = "elements:";
    for (int i = 1; i <= k; ++i) text += " c" + std::to_string(i);
    text += "\ncovers:\n";
    for (int i = 1; i < k; ++i)
      text += "c" + std::to_string(i) + " < c" + std::to_string(i + 1) + "\n";
  } else if (base == "antichain-top") {
    int k = parse_k(base, arg);
    text = "elements:";
    for (int i = 1; i <= k; ++i) text += " a" + std::to_string(i);
    text += " top\ncovers:\n";
    for (int i = 1; i <= k; ++i) text += "a" + std::to_string(i) + " < top\n";
  } else {
    throw UnknownBuiltin("unknown builtin '" + std::string(name) + "'");
  }
  return parse_structure(text);
}

}  // namespace omod
