#include "skewhecke/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace skh {

namespace {

int count_cycles(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
  }
  return cycles;
}

int count_inversions(const Permutation& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inv;
    }
  }
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

// Identity first, then by number of transpositions needed, inversion count,
// and cycle notation.
void sort_permutations(std::vector<Permutation>& perms) {
  auto key = [](const Permutation& p) {
    int n = static_cast<int>(p.size());
    return std::make_tuple(n - count_cycles(p), count_inversions(p), cycle_notation(p));
  };
  std::sort(perms.begin(), perms.end(), [&](const Permutation& a, const Permutation& b) { return key(a) < key(b); });
}

}  // namespace

std::string cycle_notation(const Permutation& p) {
  const bool commas = p.size() > 9;
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      if (!first && commas) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "id" || compact == "()" || compact.empty()) return p;
  std::size_t pos = 0;
  // Cycles are composed right-to-left, matching group multiplication.
  std::vector<std::vector<int>> cycles;
  while (pos < compact.size()) {
    if (compact[pos] != '(') throw std::invalid_argument("bad cycle notation '" + std::string(text) + "'");
    auto close = compact.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated cycle in '" + std::string(text) + "'");
    std::string body = compact.substr(pos + 1, close - pos - 1);
    std::vector<int> points;
    if (body.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= body.size()) {
        auto comma = body.find(',', start);
        std::string token = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        points.push_back(std::stoi(token) - 1);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw std::invalid_argument("bad cycle notation '" + std::string(text) + "'");
        }
        points.push_back(c - '1');
      }
    }
    for (int q : points) {
      if (q < 0 || static_cast<std::size_t>(q) >= n) {
        throw std::invalid_argument("cycle point out of range in '" + std::string(text) + "'");
      }
    }
    cycles.push_back(std::move(points));
    pos = close + 1;
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c(n);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t i = 0; i < it->size(); ++i) c[(*it)[i]] = (*it)[(i + 1) % it->size()];
    p = compose(c, p);
  }
  return p;
}

GroupPtr Group::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  auto g = std::shared_ptr<Group>(new Group());
  g->order_ = n;
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw std::invalid_argument("group table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("group table entry out of range");
      g->table_[a * n + b] = v;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g->multiply(0, static_cast<int>(a)) != static_cast<int>(a) ||
        g->multiply(static_cast<int>(a), 0) != static_cast<int>(a)) {
      throw std::invalid_argument("element 0 is not a two-sided identity (fails at " + std::to_string(a) + ")");
    }
  }
  g->inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g->multiply(static_cast<int>(a), static_cast<int>(b)) == 0 &&
          g->multiply(static_cast<int>(b), static_cast<int>(a)) == 0) {
        g->inverse_[a] = static_cast<int>(b);
        break;
      }
    }
    if (g->inverse_[a] < 0) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int ab = g->multiply(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (g->multiply(ab, static_cast<int>(c)) !=
            g->multiply(static_cast<int>(a), g->multiply(static_cast<int>(b), static_cast<int>(c)))) {
          throw std::invalid_argument("group table is not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back(std::to_string(a));
  }
  if (names.size() != n) throw std::invalid_argument("group names do not match order");
  g->names_ = std::move(names);
  g->label_ = label.empty() ? "group(" + std::to_string(n) + ")" : std::move(label);
  return g;
}

GroupPtr Group::from_permutations(std::vector<Permutation> elements, std::string label) {
  if (elements.empty()) throw std::invalid_argument("no permutations");
  const std::size_t degree = elements.front().size();
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto id_it = std::find(elements.begin(), elements.end(), id);
  if (id_it == elements.end()) throw std::invalid_argument("permutation list lacks the identity");
  std::iter_swap(elements.begin(), id_it);
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate permutation");
    }
  }
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = index.find(compose(elements[a], elements[b]));
      if (it == index.end()) throw std::invalid_argument("permutations are not closed under composition");
      table[a][b] = it->second;
    }
  }
  std::vector<std::string> names;
  for (const auto& p : elements) names.push_back(cycle_notation(p));
  auto base = from_table(std::move(table), std::move(names), std::move(label));
  auto g = std::const_pointer_cast<Group>(base);
  g->permutations_ = std::move(elements);
  return g;
}

bool Group::abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (multiply(static_cast<int>(a), static_cast<int>(b)) != multiply(static_cast<int>(b), static_cast<int>(a))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<int> Group::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  if (!permutations_.empty()) {
    try {
      Permutation p = parse_cycles(name, permutation_degree());
      for (std::size_t i = 0; i < permutations_.size(); ++i) {
        if (permutations_[i] == p) return static_cast<int>(i);
      }
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

GroupPtr symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric(n) needs n >= 1");
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  sort_permutations(all);
  return Group::from_permutations(std::move(all), "S" + std::to_string(n));
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic(n) needs n >= 1");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return Group::from_table(std::move(table), {}, "C" + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral(n) needs n >= 3");
  const auto size = static_cast<std::size_t>(n);
  Permutation rotation(size);
  Permutation reflection(size);
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  std::vector<Permutation> all;
  Permutation r(size);
  std::iota(r.begin(), r.end(), 0);
  for (int k = 0; k < n; ++k) {
    all.push_back(r);
    all.push_back(compose(r, reflection));
    r = compose(rotation, r);
  }
  sort_permutations(all);
  return Group::from_permutations(std::move(all), "D" + std::to_string(n));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements) : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (int g : elements_) {
    if (g < 0 || static_cast<std::size_t>(g) >= parent_->order()) throw std::invalid_argument("subgroup element out of range");
  }
  if (elements_.empty() || elements_.front() != 0) throw std::invalid_argument("subgroup must contain the identity");
  for (int a : elements_) {
    if (!contains(parent_->inverse(a))) throw std::invalid_argument("subgroup not closed under inverses");
    for (int b : elements_) {
      if (!contains(parent_->multiply(a, b))) {
        throw std::invalid_argument("subgroup not closed: " + parent_->name(a) + " * " + parent_->name(b));
      }
    }
  }
}

bool Subgroup::contains(int g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

Subgroup subgroup_from_generators(const GroupPtr& group, std::span<const int> generators) {
  std::vector<bool> in(group->order(), false);
  std::vector<int> members{0};
  in[0] = true;
  for (int s : generators) {
    if (s < 0 || static_cast<std::size_t>(s) >= group->order()) throw std::invalid_argument("generator out of range");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : generators) {
      int next = group->multiply(members[i], s);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

Subgroup whole_group(const GroupPtr& group) {
  std::vector<int> all(group->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& group) { return Subgroup(group, {0}); }

bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer) {
  if (inner.parent() != outer.parent()) return false;
  return std::includes(outer.elements().begin(), outer.elements().end(), inner.elements().begin(),
                       inner.elements().end());
}

bool is_normal(const Subgroup& subgroup) {
  const auto& g = *subgroup.parent();
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (int h : subgroup.elements()) {
      if (!subgroup.contains(g.conjugate(static_cast<int>(s), h))) return false;
    }
  }
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& subgroup, int s) {
  std::vector<int> out;
  for (int h : subgroup.elements()) out.push_back(subgroup.parent()->conjugate(s, h));
  return Subgroup(subgroup.parent(), std::move(out));
}

QuotientGroup quotient_group(const Subgroup& normal) {
  if (!is_normal(normal)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  const auto& g = *normal.parent();
  QuotientGroup q;
  q.projection.assign(g.order(), -1);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q.projection[x] >= 0) continue;
    int idx = static_cast<int>(q.lift.size());
    q.lift.push_back(static_cast<int>(x));
    for (int n : normal.elements()) q.projection[g.multiply(static_cast<int>(x), n)] = idx;
  }
  std::vector<std::vector<int>> table(q.lift.size(), std::vector<int>(q.lift.size()));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < q.lift.size(); ++a) {
    names.push_back("[" + g.name(q.lift[a]) + "]");
    for (std::size_t b = 0; b < q.lift.size(); ++b) table[a][b] = q.projection[g.multiply(q.lift[a], q.lift[b])];
  }
  q.group = Group::from_table(std::move(table), std::move(names), g.label() + "/N");
  return q;
}

Subgroup image_in_quotient(const QuotientGroup& q, const Subgroup& subgroup) {
  std::vector<int> out;
  for (int h : subgroup.elements()) out.push_back(q.projection[h]);
  return Subgroup(q.group, std::move(out));
}

std::optional<int> SubgroupAsGroup::from_parent(int g) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), g);
  if (it == to_parent.end() || *it != g) return std::nullopt;
  return static_cast<int>(it - to_parent.begin());
}

SubgroupAsGroup subgroup_as_group(const Subgroup& subgroup) {
  const auto& g = *subgroup.parent();
  SubgroupAsGroup out;
  out.to_parent = subgroup.elements();
  if (g.has_permutations()) {
    std::vector<Permutation> perms;
    for (int x : out.to_parent) perms.push_back(g.permutation(x));
    out.group = Group::from_permutations(std::move(perms), g.label() + "_sub" + std::to_string(subgroup.order()));
    // from_permutations keeps the given order (identity already first).
    return out;
  }
  std::vector<std::vector<int>> table(out.to_parent.size(), std::vector<int>(out.to_parent.size()));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < out.to_parent.size(); ++a) {
    names.push_back(g.name(out.to_parent[a]));
    for (std::size_t b = 0; b < out.to_parent.size(); ++b) {
      table[a][b] = *out.from_parent(g.multiply(out.to_parent[a], out.to_parent[b]));
    }
  }
  out.group = Group::from_table(std::move(table), std::move(names), g.label() + "_sub" + std::to_string(subgroup.order()));
  return out;
}

Subgroup pull_back(const SubgroupAsGroup& embedded, const Subgroup& subgroup) {
  std::vector<int> out;
  for (int h : subgroup.elements()) {
    auto idx = embedded.from_parent(h);
    if (!idx) throw std::invalid_argument("pull_back: subgroup does not lie in the embedded group");
    out.push_back(*idx);
  }
  return Subgroup(embedded.group, std::move(out));
}

void check_automorphism_action(const Group& normal, const Group& complement, const AutomorphismTable& action) {
  if (action.size() != complement.order()) throw std::invalid_argument("automorphism table has wrong size");
  for (std::size_t k = 0; k < complement.order(); ++k) {
    const auto& theta = action[k];
    if (theta.size() != normal.order()) throw std::invalid_argument("automorphism table row has wrong size");
    std::vector<bool> hit(normal.order(), false);
    for (int v : theta) {
      if (v < 0 || static_cast<std::size_t>(v) >= normal.order() || hit[v]) {
        throw std::invalid_argument("theta_" + complement.name(static_cast<int>(k)) + " is not a bijection");
      }
      hit[v] = true;
    }
    for (std::size_t a = 0; a < normal.order(); ++a) {
      for (std::size_t b = 0; b < normal.order(); ++b) {
        if (theta[normal.multiply(static_cast<int>(a), static_cast<int>(b))] != normal.multiply(theta[a], theta[b])) {
          throw std::invalid_argument("theta_" + complement.name(static_cast<int>(k)) +
                                      " is not multiplicative at (" + normal.name(static_cast<int>(a)) + ", " +
                                      normal.name(static_cast<int>(b)) + ")");
        }
      }
    }
  }
  for (std::size_t n = 0; n < normal.order(); ++n) {
    if (action[0][n] != static_cast<int>(n)) throw std::invalid_argument("theta_1 is not the identity");
  }
  for (std::size_t k = 0; k < complement.order(); ++k) {
    for (std::size_t l = 0; l < complement.order(); ++l) {
      int kl = complement.multiply(static_cast<int>(k), static_cast<int>(l));
      for (std::size_t n = 0; n < normal.order(); ++n) {
        if (action[k][action[l][n]] != action[kl][n]) {
          throw std::invalid_argument("action is not a homomorphism at (" + complement.name(static_cast<int>(k)) +
                                      ", " + complement.name(static_cast<int>(l)) + ")");
        }
      }
    }
  }
}

SemidirectProduct semidirect_product(const GroupPtr& normal, const GroupPtr& complement, const AutomorphismTable& action) {
  check_automorphism_action(*normal, *complement, action);
  const int nn = static_cast<int>(normal->order());
  const int nk = static_cast<int>(complement->order());
  const auto total = static_cast<std::size_t>(nn * nk);
  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  std::vector<std::string> names(total);
  for (int k = 0; k < nk; ++k) {
    for (int n = 0; n < nn; ++n) {
      int x = k * nn + n;
      names[x] = "(" + normal->name(n) + "," + complement->name(k) + ")";
      for (int k2 = 0; k2 < nk; ++k2) {
        for (int n2 = 0; n2 < nn; ++n2) {
          int n_out = normal->multiply(n, action[k][n2]);
          int k_out = complement->multiply(k, k2);
          table[x][k2 * nn + n2] = k_out * nn + n_out;
        }
      }
    }
  }
  SemidirectProduct out;
  out.group = Group::from_table(std::move(table), std::move(names), normal->label() + "x|" + complement->label());
  for (int n = 0; n < nn; ++n) out.embed_normal.push_back(n);
  for (int k = 0; k < nk; ++k) out.embed_complement.push_back(k * nn);
  for (int x = 0; x < nn * nk; ++x) out.projection.push_back(x / nn);
  return out;
}

DirectProduct direct_product(const GroupPtr& left, const GroupPtr& right) {
  const int na = static_cast<int>(left->order());
  const int nb = static_cast<int>(right->order());
  const auto total = static_cast<std::size_t>(na * nb);
  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  std::vector<std::string> names(total);
  DirectProduct out;
  out.right_order = static_cast<std::size_t>(nb);
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) {
      int x = a * nb + b;
      names[x] = "(" + left->name(a) + "," + right->name(b) + ")";
      out.first.push_back(a);
      out.second.push_back(b);
      for (int a2 = 0; a2 < na; ++a2) {
        for (int b2 = 0; b2 < nb; ++b2) table[x][a2 * nb + b2] = left->multiply(a, a2) * nb + right->multiply(b, b2);
      }
    }
  }
  out.group = Group::from_table(std::move(table), std::move(names), left->label() + "x" + right->label());
  return out;
}

GroupPtr power_group(const GroupPtr& base, int k) {
  if (k < 1) throw std::invalid_argument("power_group needs k >= 1");
  const int n = static_cast<int>(base->order());
  int total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  auto digits = [&](int x) {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      d[i] = x % n;
      x /= n;
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int x = 0;
    for (int v : d) x = x * n + v;
    return x;
  };
  std::vector<std::vector<int>> table(static_cast<std::size_t>(total), std::vector<int>(static_cast<std::size_t>(total)));
  std::vector<std::string> names;
  for (int x = 0; x < total; ++x) {
    auto dx = digits(x);
    std::string name = "(";
    for (int i = 0; i < k; ++i) name += (i ? "," : "") + base->name(dx[i]);
    names.push_back(name + ")");
    for (int y = 0; y < total; ++y) {
      auto dy = digits(y);
      std::vector<int> dz(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) dz[i] = base->multiply(dx[i], dy[i]);
      table[x][y] = index(dz);
    }
  }
  return Group::from_table(std::move(table), std::move(names), base->label() + "^" + std::to_string(k));
}

AutomorphismTable permute_factors_action(const Group& base, int k, const Group& symmetric) {
  if (!symmetric.has_permutations() || symmetric.permutation_degree() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("permute_factors needs a permutation group of degree " + std::to_string(k));
  }
  const int n = static_cast<int>(base.order());
  int total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  AutomorphismTable action(symmetric.order(), std::vector<int>(static_cast<std::size_t>(total)));
  for (std::size_t s = 0; s < symmetric.order(); ++s) {
    const auto& sigma = symmetric.permutation(static_cast<int>(s));
    for (int x = 0; x < total; ++x) {
      std::vector<int> d(static_cast<std::size_t>(k));
      int rest = x;
      for (int i = k - 1; i >= 0; --i) {
        d[i] = rest % n;
        rest /= n;
      }
      // θ_σ(g)_{σ(i)} = g_i
      std::vector<int> out(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) out[sigma[i]] = d[i];
      int y = 0;
      for (int v : out) y = y * n + v;
      action[s][x] = y;
    }
  }
  return action;
}

AutomorphismTable conjugation_action(const Group& group, const SubgroupAsGroup& normal) {
  AutomorphismTable action(group.order(), std::vector<int>(normal.group->order()));
  for (std::size_t s = 0; s < group.order(); ++s) {
    for (std::size_t n = 0; n < normal.group->order(); ++n) {
      auto image = normal.from_parent(group.conjugate(static_cast<int>(s), normal.to_parent[n]));
      if (!image) throw std::invalid_argument("conjugation_action: subgroup is not normal");
      action[s][n] = *image;
    }
  }
  return action;
}

std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::size_t n = a.order();
  auto element_order = [](const Group& g, int x) {
    int k = 1;
    for (int y = x; y != 0; y = g.multiply(y, x)) ++k;
    return k;
  };
  // Greedy generating set of a.
  std::vector<int> gens;
  std::vector<bool> covered(n, false);
  covered[0] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (covered[x]) continue;
    gens.push_back(static_cast<int>(x));
    auto sub = subgroup_from_generators(std::shared_ptr<const Group>(&a, [](const Group*) {}), gens);
    for (int y : sub.elements()) covered[y] = true;
  }
  std::vector<int> images(gens.size(), 0);
  auto extend = [&]() -> std::optional<std::vector<int>> {
    std::vector<int> map(n, -1);
    map[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int y = a.multiply(x, gens[i]);
        int fy = b.multiply(map[x], images[i]);
        if (map[y] < 0) {
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (int v : map) {
      if (v < 0 || hit[v]) return std::nullopt;
      hit[v] = true;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (map[a.multiply(static_cast<int>(x), static_cast<int>(y))] != b.multiply(map[x], map[y])) return std::nullopt;
      }
    }
    return map;
  };
  std::function<std::optional<std::vector<int>>(std::size_t)> search = [&](std::size_t i) -> std::optional<std::vector<int>> {
    if (i == gens.size()) return extend();
    int want = element_order(a, gens[i]);
    for (std::size_t y = 0; y < n; ++y) {
      if (element_order(b, static_cast<int>(y)) != want) continue;
      images[i] = static_cast<int>(y);
      if (auto found = search(i + 1)) return found;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace skh
