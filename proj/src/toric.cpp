#include "edgepoly/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "edgepoly/errors.hpp"

namespace edgepoly {

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] += other.exps_[v];
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw ContractError("monomial division is not exact");
  Monomial out = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] -= divisor.exps_[v];
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t v = 0; v < a.exps_.size(); ++v)
    out.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t v = 0; v < a.exps_.size(); ++v)
    out.exps_[v] = std::min(a.exps_[v], b.exps_[v]);
  return out;
}

MonomialOrder::MonomialOrder(const Graph& g, std::vector<Vertex> internal_label)
    : internal_label_(std::move(internal_label)) {
  if (internal_label_.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw ContractError("relabeling has the wrong length");
  }
  // Ascending key: non-loops before loops; non-loops by (i asc, j desc),
  // loops by i asc.
  const auto key = [&](std::size_t var) {
    const Edge& e = g.edge(var);
    Vertex a = internal_label_[e.i - 1];
    Vertex b = internal_label_[e.j - 1];
    if (a > b) std::swap(a, b);
    return e.is_loop() ? std::tuple(1, a, 0) : std::tuple(0, a, -b);
  };
  descending_.resize(g.num_edges());
  std::iota(descending_.begin(), descending_.end(), std::size_t{0});
  std::sort(descending_.begin(), descending_.end(),
            [&](std::size_t x, std::size_t y) { return key(x) > key(y); });
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (std::size_t var : descending_) {
    if (a[var] != b[var]) return a[var] <=> b[var];
  }
  return std::strong_ordering::equal;
}

std::vector<Vertex> standard_labeling(const Graph& g, const Classification& c) {
  std::vector<Vertex> order;  // user vertices listed in internal order
  const auto append = [&](const VertexSet& s) { order.insert(order.end(), s.begin(), s.end()); };
  if (const auto* a = std::get_if<SimpleAlpha>(&c)) {
    append(a->v1);
    append(a->v2);
  } else if (const auto* b = std::get_if<SimpleBeta>(&c)) {
    order.push_back(b->loop_vertex);
    append(b->v1);
    append(b->v2);
  } else if (const auto* gm = std::get_if<SimpleGamma>(&c)) {
    append(gm->loop_set);
    append(gm->w);
  } else {
    append(g.loop_vertices());
    for (Vertex v = 1; v <= g.num_vertices(); ++v)
      if (!g.has_loop(v)) order.push_back(v);
  }
  std::vector<Vertex> label(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t k = 0; k < order.size(); ++k) label[order[k] - 1] = static_cast<Vertex>(k + 1);
  return label;
}

MonomialOrder default_order(const Graph& g) {
  return MonomialOrder(g, standard_labeling(g, classify(g)));
}

std::strong_ordering lex_cmp(const Graph& g, const Monomial& a, const Monomial& b) {
  return default_order(g).compare(a, b);
}

namespace {

Binomial cancel_common(Binomial b) {
  const Monomial common = Monomial::gcd(b.plus, b.minus);
  if (!common.is_one()) {
    b.plus = b.plus / common;
    b.minus = b.minus / common;
  }
  return b;
}

}  // namespace

std::optional<Binomial> walk_binomial(const Graph& g, const Walk& w) {
  if (!w.is_even()) throw ContractError("walk_binomial needs an even walk");
  if (!is_closed_walk(g, w)) throw ContractError("walk_binomial needs a closed walk");
  Binomial b{Monomial(g.num_edges()), Monomial(g.num_edges())};
  for (std::size_t k = 0; k < w.length(); ++k) {
    (k % 2 == 0 ? b.plus : b.minus)[w.edges[k]] += 1;
  }
  b = cancel_common(std::move(b));
  if (b.plus.is_one() && b.minus.is_one()) return std::nullopt;
  return b;
}

Binomial orient(Binomial b, const MonomialOrder& order) {
  if (order.less(b.plus, b.minus)) std::swap(b.plus, b.minus);
  return b;
}

std::vector<Binomial> generators(const Graph& g, const MonomialOrder& order) {
  std::set<Binomial> found;
  for (const Walk& w : enumerate_even_closed_walks(g, 2 * g.num_edges())) {
    if (auto b = walk_binomial(g, w)) found.insert(orient(std::move(*b), order));
  }
  // Drop u - v when a kept binomial u' - v' of lower degree has u' | u and
  // v' | v (or crosswise). Then u - v = a(u' - v') + v'(a - b) with a - b in
  // the ideal and of lower degree, so the kept set still generates.
  std::vector<Binomial> by_degree(found.begin(), found.end());
  std::stable_sort(by_degree.begin(), by_degree.end(), [](const Binomial& a, const Binomial& b) {
    return a.plus.degree() < b.plus.degree();
  });
  std::vector<Binomial> kept;
  for (const Binomial& f : by_degree) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Binomial& h) {
      return (h.plus.divides(f.plus) && h.minus.divides(f.minus)) ||
             (h.plus.divides(f.minus) && h.minus.divides(f.plus));
    });
    if (!redundant) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Binomial> generators(const Graph& g) { return generators(g, default_order(g)); }

GroebnerBasis groebner_basis(const Graph& g) {
  const Classification c = classify(g);
  bool simplex_case = false;
  if (std::holds_alternative<NotSimple>(c)) {
    throw UnsupportedError("NotSimple: edge polytope is not simple; no quadratic basis is known");
  }
  if (std::holds_alternative<Simplex>(c)) {
    if (g.num_loops() < 2) throw ZeroIdealError("I_G = (0): the toric ideal is zero");
    simplex_case = true;
  }
  GroebnerBasis gb{MonomialOrder(g, standard_labeling(g, c)), {}, simplex_case};
  const std::vector<Vertex>& label = gb.order.internal_label();
  std::vector<Vertex> user(label.size() + 1);
  for (std::size_t v = 0; v < label.size(); ++v) user[label[v]] = static_cast<Vertex>(v + 1);
  const int top = simplex_case ? static_cast<int>(g.num_loops()) : g.num_vertices();

  const auto var = [&](int a, int b) { return g.edge_index(user[a], user[b]); };
  const auto add = [&](int a1, int b1, int a2, int b2, int a3, int b3, int a4, int b4) {
    auto p1 = var(a1, b1), p2 = var(a2, b2), m1 = var(a3, b3), m2 = var(a4, b4);
    if (!p1 || !p2 || !m1 || !m2) return;
    Binomial b{Monomial(g.num_edges()), Monomial(g.num_edges())};
    b.plus[*p1] += 1;
    b.plus[*p2] += 1;
    b.minus[*m1] += 1;
    b.minus[*m2] += 1;
    gb.elements.push_back(std::move(b));
  };
  for (int i = 1; i <= top; ++i)
    for (int j = i; j <= top; ++j)
      for (int k = j + 1; k <= top; ++k)
        for (int l = k; l <= top; ++l) add(i, j, k, l, i, k, j, l);
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j)
      for (int k = j; k <= top; ++k)
        for (int l = k + 1; l <= top; ++l) add(i, l, j, k, i, k, j, l);
  return gb;
}

std::optional<Binomial> reduce(const Binomial& b, const std::vector<Binomial>& basis,
                               const MonomialOrder& order) {
  Monomial pos = b.plus;
  Monomial neg = b.minus;
  const auto step = [&](Monomial& m) {
    for (const Binomial& g : basis) {
      if (g.plus.divides(m)) {
        m = (m / g.plus) * g.minus;
        return true;
      }
    }
    return false;
  };
  while (pos != neg) {
    const bool pos_larger = order.compare(pos, neg) > 0;
    Monomial& larger = pos_larger ? pos : neg;
    Monomial& smaller = pos_larger ? neg : pos;
    if (step(larger)) continue;
    if (step(smaller)) continue;
    return Binomial{std::move(pos), std::move(neg)};
  }
  return std::nullopt;
}

Binomial s_polynomial(const Binomial& f, const Binomial& g) {
  const Monomial l = Monomial::lcm(f.plus, g.plus);
  // (l/in f) f - (l/in g) g = (l/in g) tail g - (l/in f) tail f
  return Binomial{(l / g.plus) * g.minus, (l / f.plus) * f.minus};
}

bool buchberger_verify(const std::vector<Binomial>& basis, const MonomialOrder& order) {
  for (const Binomial& b : basis)
    if (order.compare(b.plus, b.minus) <= 0) return false;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t c = a + 1; c < basis.size(); ++c) {
      if (reduce(s_polynomial(basis[a], basis[c]), basis, order)) return false;
    }
  }
  return true;
}

bool kernel_check(const Binomial& b, const Graph& g) {
  std::vector<long> balance(static_cast<std::size_t>(g.num_vertices()), 0);
  for (std::size_t var = 0; var < g.num_edges(); ++var) {
    const Edge& e = g.edge(var);
    const long diff = static_cast<long>(b.plus[var]) - static_cast<long>(b.minus[var]);
    balance[e.i - 1] += diff;
    balance[e.j - 1] += diff;
  }
  return std::all_of(balance.begin(), balance.end(), [](long x) { return x == 0; });
}

std::string to_string(const Monomial& m, const Graph& g) {
  std::string out;
  for (std::size_t var = 0; var < m.num_vars(); ++var) {
    if (m[var] == 0) continue;
    if (!out.empty()) out += "*";
    const Edge& e = g.edge(var);
    out += "x_{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}";
    if (m[var] > 1) out += "^" + std::to_string(m[var]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b, const Graph& g) {
  return to_string(b.plus, g) + " - " + to_string(b.minus, g);
}

namespace {

nlohmann::json monomial_json(const Monomial& m, const Graph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t var = 0; var < m.num_vars(); ++var) {
    if (m[var] == 0) continue;
    const Edge& e = g.edge(var);
    out.push_back({std::to_string(e.i) + "," + std::to_string(e.j), m[var]});
  }
  return out;
}

}  // namespace

nlohmann::json binomial_json(const Binomial& b, const Graph& g) {
  return {{"plus", monomial_json(b.plus, g)}, {"minus", monomial_json(b.minus, g)}};
}

nlohmann::json order_json(const MonomialOrder& order, const Graph& g) {
  nlohmann::json vars = nlohmann::json::array();
  for (std::size_t var : order.descending()) {
    const Edge& e = g.edge(var);
    vars.push_back(std::to_string(e.i) + "," + std::to_string(e.j));
  }
  return {{"type", "lex"},
          {"internal_label", order.internal_label()},
          {"variables_descending", vars}};
}

}  // namespace edgepoly
