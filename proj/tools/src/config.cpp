#include "skewhecke_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "skewhecke/literal.hpp"
#include "skewhecke/standard_contexts.hpp"

namespace skh::cli {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out += c;
  }
  return out;
}

std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : trim(s)) {
    if (c == ' ' || c == '\t') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  return v;
}

// "name(args)" -> {name, args}; no parentheses -> {spec, ""}.
std::pair<std::string, std::string> call(std::string_view spec) {
  auto open = spec.find('(');
  if (open == std::string_view::npos) return {std::string(spec), {}};
  if (spec.back() != ')') throw std::invalid_argument("unbalanced spec '" + std::string(spec) + "'");
  return {std::string(spec.substr(0, open)), std::string(spec.substr(open + 1, spec.size() - open - 2))};
}

}  // namespace

JobConfig parse_config(std::string_view text) {
  JobConfig c;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(std::string_view(t).substr(1, t.size() - 2));
      if (section != "context" && section != "cocycle" && section != "run") throw ConfigError(line, "unknown section [" + section + "]");
      if (section == "cocycle") {
        c.cocycle.emplace();
        c.lines["cocycle"] = line;
      }
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    if (section.empty()) throw ConfigError(line, "key '" + key + "' outside a section");
    if (section == "run") {
      if (key != "command") throw ConfigError(line, "unknown key '" + key + "' in [run]");
      c.commands.push_back(collapse_spaces(value));
      continue;
    }
    if (section == "cocycle") {
      if (key == "kind") {
        if (value != "trivial" && value != "inner" && value != "coboundary" && value != "values") {
          throw ConfigError(line, "unknown cocycle kind '" + value + "'");
        }
        c.cocycle->kind = value;
      } else if (key == "unit") {
        c.cocycle->unit = collapse_spaces(value);
      } else if (key.starts_with("chi(") && key.back() == ')') {
        c.cocycle->values.emplace_back(strip_spaces(std::string_view(key).substr(4, key.size() - 5)), collapse_spaces(value));
      } else {
        throw ConfigError(line, "unknown key '" + key + "' in [cocycle]");
      }
      continue;
    }
    if (!c.lines.emplace(key, line).second) throw ConfigError(line, "duplicate key '" + key + "'");
    if (key == "field") {
      try {
        c.field = Field::parse(value).to_string();
      } catch (const std::exception& e) {
        throw ConfigError(line, e.what());
      }
    } else if (key == "group") {
      c.group = strip_spaces(value);
    } else if (key == "subgroup") {
      c.subgroup = strip_spaces(value);
    } else if (key == "algebra") {
      c.algebra = strip_spaces(value);
    } else if (key == "action") {
      c.action = strip_spaces(value);
    } else if (key == "degree_cap") {
      try {
        c.degree_cap = parse_int(value);
      } catch (const std::exception& e) {
        throw ConfigError(line, e.what());
      }
    } else {
      throw ConfigError(line, "unknown key '" + key + "' in [context]");
    }
  }
  if (c.group.empty()) throw ConfigError(line, "missing key 'group' in [context]");
  return c;
}

JobConfig read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string print_config(const JobConfig& c) {
  std::ostringstream out;
  out << "[context]\n";
  out << "field = " << c.field << "\n";
  out << "group = " << c.group << "\n";
  out << "subgroup = " << c.subgroup << "\n";
  out << "algebra = " << c.algebra << "\n";
  out << "action = " << c.action << "\n";
  if (c.degree_cap) out << "degree_cap = " << *c.degree_cap << "\n";
  if (c.cocycle) {
    out << "\n[cocycle]\n";
    out << "kind = " << c.cocycle->kind << "\n";
    if (!c.cocycle->unit.empty()) out << "unit = " << c.cocycle->unit << "\n";
    for (const auto& [g, v] : c.cocycle->values) out << "chi(" << g << ") = " << v << "\n";
  }
  if (!c.commands.empty()) {
    out << "\n[run]\n";
    for (const auto& cmd : c.commands) out << "command = " << cmd << "\n";
  }
  return out.str();
}

namespace {

struct GroupParse {
  GroupPtr group;
  // Set for power(L, k): the base and exponent.
  GroupPtr power_base;
  int power_exponent = 0;
};

GroupParse parse_group_full(std::string_view spec) {
  auto [name, args] = call(spec);
  auto parts = args.empty() ? std::vector<std::string>{} : split_top_level(args);
  auto want = [&](std::size_t n) {
    if (parts.size() != n) throw std::invalid_argument(name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (name == "symmetric") {
    want(1);
    return {symmetric_group(parse_int(parts[0])), nullptr, 0};
  }
  if (name == "cyclic") {
    want(1);
    return {cyclic_group(parse_int(parts[0])), nullptr, 0};
  }
  if (name == "dihedral") {
    want(1);
    return {dihedral_group(parse_int(parts[0])), nullptr, 0};
  }
  if (name == "power") {
    want(2);
    auto base = parse_group_full(parts[0]).group;
    int k = parse_int(parts[1]);
    return {power_group(base, k), base, k};
  }
  if (name == "direct") {
    want(2);
    return {direct_product(parse_group_full(parts[0]).group, parse_group_full(parts[1]).group).group, nullptr, 0};
  }
  if (name == "wreath") {
    want(2);
    auto base = parse_group_full(parts[0]).group;
    int k = parse_int(parts[1]);
    auto sk = symmetric_group(k);
    return {semidirect_product(power_group(base, k), sk, permute_factors_action(*base, k, *sk)).group, nullptr, 0};
  }
  if (name == "semidirect") {
    // semidirect(power(L,k), symmetric(k), permute_factors)
    want(3);
    auto normal = parse_group_full(parts[0]);
    auto complement = parse_group_full(parts[1]).group;
    if (parts[2] != "permute_factors") throw std::invalid_argument("unknown semidirect action '" + parts[2] + "'");
    if (!normal.power_base || complement->permutation_degree() != static_cast<std::size_t>(normal.power_exponent)) {
      throw std::invalid_argument("permute_factors needs power(L,k) and a permutation group of degree k");
    }
    auto table = permute_factors_action(*normal.power_base, normal.power_exponent, *complement);
    return {semidirect_product(normal.group, complement, table).group, nullptr, 0};
  }
  if (name == "table") {
    std::vector<std::vector<int>> rows;
    for (const auto& row : split_top_level(args, ';')) {
      rows.emplace_back();
      for (const auto& x : split_top_level(row, ',')) rows.back().push_back(parse_int(x));
    }
    return {Group::from_table(rows), nullptr, 0};
  }
  throw std::invalid_argument("unknown group '" + name + "'");
}

}  // namespace

GroupPtr parse_group(std::string_view spec) { return parse_group_full(strip_spaces(spec)).group; }

Subgroup parse_subgroup(const GroupPtr& group, std::string_view text) {
  std::string spec = strip_spaces(text);
  if (spec == "whole") return whole_group(group);
  if (spec == "trivial") return trivial_subgroup(group);
  if (spec.starts_with("generators[") && spec.back() == ']') {
    std::vector<int> gens;
    std::string inner = spec.substr(11, spec.size() - 12);
    if (!inner.empty()) {
      for (const auto& n : split_top_level(inner)) {
        auto g = group->find(n);
        if (!g) throw std::invalid_argument("no element named '" + n + "'");
        gens.push_back(*g);
      }
    }
    return subgroup_from_generators(group, gens);
  }
  throw std::invalid_argument("unknown subgroup '" + spec + "'");
}

namespace {

int line_of(const JobConfig& c, std::string_view key) {
  auto it = c.lines.find(std::string(key));
  return it == c.lines.end() ? 0 : it->second;
}

template <class F>
auto at_key(const JobConfig& c, std::string_view key, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(line_of(c, key), std::string(key) + ": " + e.what());
  }
}

}  // namespace

Job build_job(const JobConfig& config, std::optional<int> degree_cap_override) {
  Job job;
  job.config = config;
  Field field = at_key(config, "field", [&] { return Field::parse(config.field); });
  GroupParse g = at_key(config, "group", [&] { return parse_group_full(config.group); });
  Subgroup h = at_key(config, "subgroup", [&] { return parse_subgroup(g.group, config.subgroup); });
  const int cap = degree_cap_override.value_or(config.degree_cap.value_or(2));

  GroupParse algebra_group{};
  std::optional<Subgroup> algebra_subgroup;
  AlgebraPtr algebra = at_key(config, "algebra", [&]() -> AlgebraPtr {
    auto [name, args] = call(config.algebra);
    if (name == "ground") return make_ground(field);
    if (name == "functions") return make_functions(field, g.group);
    if (name == "polynomial") return polynomial_for_cap(field, parse_int(args), cap);
    if (name == "matrix") return make_matrix(field, parse_int(args));
    if (name == "group_algebra") {
      if (args.empty()) return make_group_algebra(field, g.group);
      if (args.starts_with("generators[")) {
        algebra_subgroup = parse_subgroup(g.group, args);
        return make_group_algebra(field, subgroup_as_group(*algebra_subgroup).group);
      }
      algebra_group = parse_group_full(args);
      return make_group_algebra(field, algebra_group.group);
    }
    throw std::invalid_argument("unknown algebra '" + name + "'");
  });

  ActionPtr action = at_key(config, "action", [&]() -> ActionPtr {
    const auto& a = config.action;
    if (a == "trivial") return trivial_action(g.group, algebra);
    if (a == "permute_variables") return permute_variables(g.group, algebra);
    if (a == "left_translation") return left_translation(g.group, algebra);
    if (a == "conjugation") {
      if (algebra_subgroup) {
        if (!is_normal(*algebra_subgroup)) throw std::invalid_argument("conjugation needs a normal subgroup");
        auto n = subgroup_as_group(*algebra_subgroup);
        return automorphism_action(g.group, algebra, conjugation_action(*g.group, n), "conjugation on N");
      }
      return conjugation_action(g.group, algebra);
    }
    if (a == "permute_factors") {
      if (!algebra_group.power_base) throw std::invalid_argument("permute_factors needs group_algebra(power(L,k))");
      if (!g.group->has_permutations() || g.group->permutation_degree() != static_cast<std::size_t>(algebra_group.power_exponent) ||
          g.group->order() != symmetric_group(algebra_group.power_exponent)->order()) {
        throw std::invalid_argument("permute_factors needs G = symmetric(k)");
      }
      auto table = permute_factors_action(*algebra_group.power_base, algebra_group.power_exponent, *g.group);
      return automorphism_action(g.group, algebra, table, "permute factors");
    }
    throw std::invalid_argument("unknown action '" + a + "'");
  });

  HeckeContext::Options options;
  options.degree_cap = cap;
  job.ctx = at_key(config, "action", [&] { return HeckeContext::make(action, h, options); });

  if (config.cocycle) {
    const auto& spec = *config.cocycle;
    job.cocycle = at_key(config, "cocycle", [&]() -> Cocycle {
      const auto& alpha = *job.ctx->action();
      if (spec.kind == "trivial") return trivial_cocycle(alpha);
      if (spec.kind == "inner") return inner_cocycle(alpha);
      if (spec.kind == "coboundary") return coboundary_from_unit(alpha, parse_element(algebra, spec.unit));
      Cocycle chi(g.group->order(), Element::unit(algebra));
      for (const auto& [name, literal] : spec.values) {
        auto x = g.group->find(name);
        if (!x) throw std::invalid_argument("no element named '" + name + "'");
        chi[*x] = parse_element(algebra, literal);
      }
      return chi;
    });
  }
  return job;
}

}  // namespace skh::cli
