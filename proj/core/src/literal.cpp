#include "skewhecke/literal.hpp"

#include <stdexcept>

namespace skh {

namespace {

bool wrapped(std::string_view t, char open, char close) {
  if (t.size() < 2 || t.front() != open || t.back() != close) return false;
  int depth = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '(' || t[i] == '[' || t[i] == '{') ++depth;
    if (t[i] == ')' || t[i] == ']' || t[i] == '}') --depth;
    if (depth == 0 && i + 1 < t.size()) return false;
  }
  return true;
}

// "(left, right)" split at the last top-level comma.
std::pair<std::string, std::string> parse_pair(std::string_view text) {
  std::string t = trim(text);
  if (!wrapped(t, '(', ')')) throw std::invalid_argument("expected (label, value) but got '" + t + "'");
  auto parts = split_top_level(std::string_view(t).substr(1, t.size() - 2));
  if (parts.size() < 2) throw std::invalid_argument("missing comma in '" + t + "'");
  std::string right = trim(parts.back());
  std::string left;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) left += (i ? "," : "") + parts[i];
  return {trim(left), right};
}

std::vector<std::string> list_items(std::string_view text) {
  std::string t = trim(text);
  if (!wrapped(t, '[', ']')) throw std::invalid_argument("expected [...] but got '" + t + "'");
  std::string inner = trim(std::string_view(t).substr(1, t.size() - 2));
  if (inner.empty()) return {};
  return split_top_level(inner);
}

}  // namespace

std::string trim(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(b, e - b + 1));
}

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
    if (c == separator && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
  return out;
}

Element parse_element(const AlgebraPtr& algebra, std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty element literal");
  if (t.front() != '[') return Element::scalar(algebra, algebra->field().parse_scalar(t));
  Element out(algebra);
  for (const auto& item : list_items(t)) {
    auto [label, coeff] = parse_pair(item);
    out.add_term(algebra->parse_label(label), algebra->field().parse_scalar(coeff));
  }
  return out;
}

HeckeElement parse_hecke(const ContextPtr& ctx, std::string_view text) {
  const auto& g = *ctx->group();
  const auto& cs = ctx->cosets();
  std::vector<Element> values(cs.orbit_count(), Element(ctx->algebra()));
  std::vector<bool> seen(cs.orbit_count(), false);
  for (const auto& item : list_items(text)) {
    auto [name, value] = parse_pair(item);
    auto x = g.find(name);
    if (!x) throw std::invalid_argument("unknown group element '" + name + "'");
    int c = cs.coset_of(*x);
    int o = cs.orbit_of(c);
    if (seen[o]) throw std::invalid_argument("double coset of '" + name + "' given twice");
    seen[o] = true;
    values[o] = ctx->action()->apply(g.inverse(cs.transversal(c)), parse_element(ctx->algebra(), value));
  }
  return hecke_from_values(ctx, std::move(values));
}

}  // namespace skh
