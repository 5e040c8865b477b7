#include "skewhecke/matrix_model.hpp"

#include <stdexcept>

namespace skh {

HeckeMatrix& HeckeMatrix::operator+=(const HeckeMatrix& other) {
  if (n != other.n) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += other.entries[i];
  return *this;
}

std::string HeckeMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < n; ++r) {
    out += "[";
    for (std::size_t c = 0; c < n; ++c) out += (c ? ", " : "") + at(r, c).to_string();
    out += "]\n";
  }
  return out;
}

HeckeMatrix zero_matrix(const ContextPtr& ctx) {
  const std::size_t n = ctx->cosets().size();
  return HeckeMatrix{ctx, n, std::vector<Element>(n * n, Element(ctx->algebra()))};
}

HeckeMatrix to_matrix(const HeckeElement& phi) {
  const ContextPtr& ctx = phi.context();
  const auto& cs = ctx->cosets();
  const auto& g = *ctx->group();
  auto values = hecke_expand(phi);
  HeckeMatrix m = zero_matrix(ctx);
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      int k = cs.representative(static_cast<int>(c));
      int coset = cs.coset_of(g.multiply(g.inverse(k), cs.representative(static_cast<int>(r))));
      m.at(r, c) = ctx->action()->apply(k, values[coset]);
    }
  }
  return m;
}

std::optional<std::string> matrix_invariance_violation(const HeckeMatrix& m) {
  const auto& ctx = *m.ctx;
  const auto& cs = ctx.cosets();
  const auto& g = *ctx.group();
  for (int s : generators_of(whole_group(ctx.group()))) {
    int inv = g.inverse(s);
    for (std::size_t r = 0; r < m.n; ++r) {
      for (std::size_t c = 0; c < m.n; ++c) {
        Element moved = ctx.action()->apply(s, m.at(cs.act(inv, static_cast<int>(r)), cs.act(inv, static_cast<int>(c))));
        if (moved != m.at(r, c)) {
          return "s=" + g.name(s) + ", gH=" + g.name(cs.representative(static_cast<int>(r))) +
                 "H, kH=" + g.name(cs.representative(static_cast<int>(c))) + "H";
        }
      }
    }
  }
  return std::nullopt;
}

HeckeElement from_matrix(const HeckeMatrix& m) {
  if (m.n != m.ctx->cosets().size()) throw std::invalid_argument("matrix size does not match the coset count");
  if (auto bad = matrix_invariance_violation(m)) throw std::invalid_argument("matrix is not G-invariant at " + *bad);
  std::vector<Element> column;
  for (std::size_t r = 0; r < m.n; ++r) column.push_back(m.at(r, 0));
  return hecke_from_expanded(m.ctx, column);
}

HeckeMatrix matrix_product(const HeckeMatrix& x, const HeckeMatrix& y) {
  HeckeMatrix out = zero_matrix(x.ctx);
  for (std::size_t s = 0; s < x.n; ++s) {
    for (std::size_t k = 0; k < x.n; ++k) {
      Element acc(x.ctx->algebra());
      for (std::size_t g = 0; g < x.n; ++g) {
        if (x.at(g, k).is_zero() || y.at(s, g).is_zero()) continue;
        acc += x.at(g, k) * y.at(s, g);
      }
      out.at(s, k) = std::move(acc);
    }
  }
  return out;
}

Report matrix_multiplicativity_check(const HeckeElement& phi, const HeckeElement& psi) {
  Report report("matrix multiplicativity");
  HeckeMatrix lhs = to_matrix(convolve(phi, psi));
  HeckeMatrix rhs = matrix_product(to_matrix(phi), to_matrix(psi));
  std::string witness;
  for (std::size_t r = 0; r < lhs.n && witness.empty(); ++r) {
    for (std::size_t c = 0; c < lhs.n; ++c) {
      if (lhs.at(r, c) != rhs.at(r, c)) {
        witness = "entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + lhs.at(r, c).to_string() +
                  " vs " + rhs.at(r, c).to_string();
        break;
      }
    }
  }
  report.add("T(phi*psi) = T(phi) T(psi)", witness.empty(), witness);
  return report;
}

std::size_t invariant_matrix_dimension(const ContextPtr& ctx, int degree) {
  const auto& cs = ctx->cosets();
  const auto& a = ctx->algebra();
  const Field& field = ctx->field();
  const auto labels = a->basis_of_degree(degree);
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  const std::size_t n = cs.size();
  const std::size_t l = labels.size();
  const std::size_t cols = n * n * l;
  auto pos = [&](std::size_t r, std::size_t c, std::size_t j) { return (r * n + c) * l + j; };
  std::vector<Vector> rows;
  for (int s : generators_of(whole_group(ctx->group()))) {
    std::vector<Vector> block(cols, zero_vector(field, cols));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t r2 = static_cast<std::size_t>(cs.act(s, static_cast<int>(r)));
        std::size_t c2 = static_cast<std::size_t>(cs.act(s, static_cast<int>(c)));
        for (std::size_t j = 0; j < l; ++j) {
          std::size_t in = pos(r, c, j);
          auto image = ctx->action()->apply_label(s, labels[j]);
          for (const auto& [label, coeff] : image.terms()) {
            block[pos(r2, c2, index.at(label))][in] += coeff;
          }
          block[in][in] -= field.one();
        }
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  if (rows.empty()) return cols;
  return cols - rank(rows, cols, field);
}

SparseVector matrix_coordinates(const HeckeMatrix& m) {
  SparseVector out;
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      for (const auto& [label, coeff] : m.at(r, c).terms()) {
        Coord key{static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)};
        key.insert(key.end(), label.begin(), label.end());
        add_to(out, key, coeff);
      }
    }
  }
  return out;
}

HeckeMatrix relativise(const ContextPtr& ctx, const Element& a) {
  if (auto h = fixed_violation(*ctx->action(), ctx->subgroup(), a)) {
    throw InvarianceError("relativise: element is not fixed by h = " + ctx->group()->name(*h), *h);
  }
  HeckeMatrix m = zero_matrix(ctx);
  for (std::size_t c = 0; c < m.n; ++c) m.at(c, c) = ctx->action()->apply(ctx->cosets().representative(static_cast<int>(c)), a);
  return m;
}

Element to_corner(const SkewPtr& skew, const HeckeElement& phi) {
  const ContextPtr& ctx = phi.context();
  if (skew->action() != ctx->action()) throw std::invalid_argument("to_corner: skew group algebra of another action");
  Scalar order = ctx->field().from_int(static_cast<std::int64_t>(ctx->subgroup().order()));
  if (order.is_zero()) {
    throw ModelUnavailable("corner-ring model unavailable: |H| = " + std::to_string(ctx->subgroup().order()) +
                           " is not a unit in " + ctx->field().to_string());
  }
  Scalar inv = order.inverse();
  auto values = hecke_expand(phi);
  Element out(skew);
  for (std::size_t g = 0; g < ctx->group()->order(); ++g) {
    out += skew_element(skew, values[ctx->cosets().coset_of(static_cast<int>(g))], static_cast<int>(g)) * inv;
  }
  return out;
}

HeckeElement from_corner(const ContextPtr& ctx, const SkewPtr& skew, const Element& x) {
  const auto& cs = ctx->cosets();
  Scalar order = ctx->field().from_int(static_cast<std::int64_t>(ctx->subgroup().order()));
  if (order.is_zero()) throw ModelUnavailable("corner-ring model unavailable");
  std::vector<Element> by_group(ctx->group()->order(), Element(ctx->algebra()));
  for (const auto& [label, c] : x.terms()) {
    auto [a, g] = skew->split(label);
    by_group[g].add_term(a, c * order);
  }
  std::vector<Element> values;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto& members = cs.coset(static_cast<int>(c));
    for (int g : members) {
      if (by_group[g] != by_group[members.front()]) {
        throw std::invalid_argument("element is not in the corner: coefficients differ within coset of " +
                                    ctx->group()->name(members.front()));
      }
    }
    values.push_back(by_group[members.front()]);
  }
  HeckeElement phi = hecke_from_expanded(ctx, values);
  if (to_corner(skew, phi) != x) throw std::invalid_argument("element is not in the corner");
  return phi;
}

bool stone_applicable(const HeckeContext& ctx) {
  const auto* fun = dynamic_cast<const FunctionAlgebra*>(ctx.algebra().get());
  if (!fun || fun->group()->order() != ctx.group()->order()) return false;
  const auto& g = *ctx.group();
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (std::size_t k = 0; k < g.order(); ++k) {
      Element img = ctx.action()->apply_label(static_cast<int>(s), Label{static_cast<std::int32_t>(k)});
      if (img != Element::basis(ctx.algebra(), Label{g.multiply(static_cast<int>(s), static_cast<int>(k))})) return false;
    }
  }
  return true;
}

ScalarMatrix stone_map(const HeckeElement& phi) {
  if (!stone_applicable(*phi.context())) throw std::invalid_argument("stone map needs functions on G with left translation");
  HeckeMatrix m = to_matrix(phi);
  const Field& field = phi.context()->field();
  ScalarMatrix out(m.n, std::vector<Scalar>(m.n, field.zero()));
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) out[c][r] = m.at(r, c).coefficient(Label{0});
  }
  return out;
}

ScalarMatrix scalar_matrix_product(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  const Scalar zero = n ? a[0][0] - a[0][0] : Scalar();
  ScalarMatrix out(n, std::vector<Scalar>(n, zero));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

HeckeElement stone_inverse(const ContextPtr& ctx, const ScalarMatrix& m) {
  const std::size_t n = ctx->cosets().size();
  const std::size_t dim = ctx->dimension();
  const Field& field = ctx->field();
  std::vector<Vector> rows(n * n, zero_vector(field, dim));
  for (std::size_t i = 0; i < dim; ++i) {
    ScalarMatrix img = stone_map(module_basis_element(ctx, i));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) rows[r * n + c][i] = img[r][c];
    }
  }
  Vector rhs;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rhs.push_back(m[r][c]);
  }
  auto x = solve(rows, dim, rhs, field);
  if (!x) throw std::invalid_argument("matrix is outside the image of the stone map");
  return from_module_coordinates(ctx, *x);
}

Report stone_report(const ContextPtr& ctx) {
  Report report("stone map");
  const std::size_t n = ctx->cosets().size();
  const Field& field = ctx->field();
  report.add("dimension = |G/H|^2", ctx->dimension() == n * n,
             "dim " + std::to_string(ctx->dimension()) + ", n = " + std::to_string(n));
  ScalarMatrix identity(n, std::vector<Scalar>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = field.one();
  report.add("unit maps to identity", stone_map(hecke_identity(ctx)) == identity);

  std::vector<HeckeElement> basis;
  std::vector<ScalarMatrix> images;
  for (std::size_t i = 0; i < ctx->dimension(); ++i) {
    basis.push_back(module_basis_element(ctx, i));
    images.push_back(stone_map(basis.back()));
  }
  std::string witness;
  for (std::size_t i = 0; i < basis.size() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (stone_map(convolve(basis[i], basis[j])) != scalar_matrix_product(images[i], images[j])) {
        witness = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        break;
      }
    }
  }
  report.add("multiplicative on basis pairs", witness.empty(), witness);

  std::vector<Vector> flat;
  for (const auto& img : images) {
    Vector v;
    for (const auto& row : img) v.insert(v.end(), row.begin(), row.end());
    flat.push_back(std::move(v));
  }
  std::size_t r = rank(flat, n * n, field);
  report.add("bijective onto M_n", r == n * n && basis.size() == n * n, "rank " + std::to_string(r));

  witness.clear();
  if (r == n * n) {
    std::vector<HeckeElement> units;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ScalarMatrix e(n, std::vector<Scalar>(n, field.zero()));
        e[i][j] = field.one();
        units.push_back(stone_inverse(ctx, e));
      }
    }
    HeckeElement sum = hecke_zero(ctx);
    for (std::size_t i = 0; i < n; ++i) sum += units[i * n + i];
    if (sum != hecke_identity(ctx)) witness = "sum of E_ii is not the unit";
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      for (std::size_t j = 0; j < n && witness.empty(); ++j) {
        for (std::size_t k = 0; k < n && witness.empty(); ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            HeckeElement prod = convolve(units[i * n + j], units[k * n + l]);
            HeckeElement expected = j == k ? units[i * n + l] : hecke_zero(ctx);
            if (prod != expected) {
              witness = "E" + std::to_string(i + 1) + std::to_string(j + 1) + " E" + std::to_string(k + 1) +
                        std::to_string(l + 1);
              break;
            }
          }
        }
      }
    }
  } else {
    witness = "no matrix units without bijectivity";
  }
  report.add("matrix-unit relations", witness.empty(), witness);
  report.note("stone target is M_n with n = |G/H| = " + std::to_string(n));
  return report;
}

}  // namespace skh
