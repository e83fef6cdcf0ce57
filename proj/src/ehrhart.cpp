#include "edgepoly/ehrhart.hpp"

#include <functional>
#include <map>

#include "edgepoly/errors.hpp"
#include "edgepoly/toric.hpp"

namespace edgepoly {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::constant(Rational c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::linear(Rational shift) { return UniPoly({std::move(shift), Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& m) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& scale) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scale;
  return UniPoly(std::move(out));
}

UniPoly binomial_poly(long shift, long k) {
  if (k < 0) return {};
  UniPoly out = UniPoly::constant(1);
  for (long t = 0; t < k; ++t) out = out * UniPoly::linear(Rational(shift - t));
  Integer fact = 1;
  for (long t = 2; t <= k; ++t) fact *= t;
  Rational scale(Integer(1), fact);
  scale.canonicalize();
  return out * scale;
}

std::string to_string(const UniPoly& p) {
  if (p.coeffs().empty()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "m";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

nlohmann::json unipoly_json(const UniPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : p.coeffs()) {
    coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  }
  return {{"coeffs", coeffs}, {"degree", p.degree()}};
}

FamilyParams family_params(const Classification& c, int num_vertices) {
  FamilyParams params;
  params.d = num_vertices;
  if (const auto* a = std::get_if<SimpleAlpha>(&c)) {
    params.family = SimpleFamily::Alpha;
    params.p = static_cast<long>(a->v1.size());
    params.q = static_cast<long>(a->v2.size());
  } else if (const auto* b = std::get_if<SimpleBeta>(&c)) {
    params.family = SimpleFamily::Beta;
    params.p = static_cast<long>(b->v1.size());
    params.q = static_cast<long>(b->v2.size());
  } else if (const auto* gm = std::get_if<SimpleGamma>(&c)) {
    params.family = SimpleFamily::Gamma;
    params.p = static_cast<long>(gm->loop_set.size());
  } else {
    throw UnsupportedError("no closed form: classification is " + tag_name(c));
  }
  return params;
}

UniPoly ehrhart_closed_form(const FamilyParams& params) {
  const long p = params.p, q = params.q, d = params.d;
  switch (params.family) {
    case SimpleFamily::Alpha:
      return binomial_poly(p - 1, p - 1) * binomial_poly(q - 1, q - 1);
    case SimpleFamily::Beta:
      return binomial_poly(p, p) * binomial_poly(q, q);
    case SimpleFamily::Gamma: {
      UniPoly sum;
      for (long j = 1; j <= p; ++j) sum = sum + binomial_poly(j - 2, j - 1) * binomial_poly(d - j, d - j);
      return sum;
    }
  }
  throw ContractError("unknown family");
}

namespace {

Integer choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

Integer normalized_volume(const FamilyParams& params) {
  const long p = params.p, q = params.q, d = params.d;
  switch (params.family) {
    case SimpleFamily::Alpha:
      return choose(p + q - 2, p - 1);
    case SimpleFamily::Beta:
      return choose(p + q, p);
    case SimpleFamily::Gamma: {
      Integer sum = 0;
      for (long j = 1; j <= p; ++j) sum += choose(d - 1, j - 1);
      return sum;
    }
  }
  throw ContractError("unknown family");
}

Integer volume_from_polynomial(const UniPoly& p, int dim) {
  if (p.degree() != dim) throw ContractError("polynomial degree differs from the dimension");
  Integer fact = 1;
  for (int t = 2; t <= dim; ++t) fact *= t;
  Rational vol = p.leading() * Rational(fact);
  vol.canonicalize();
  if (vol.get_den() != 1) throw ContractError("normalized volume is not an integer");
  return vol.get_num();
}

UniPoly ehrhart_interpolate(std::span<const std::pair<long, Integer>> samples, int degree) {
  std::map<long, Integer> points;
  for (const auto& [m, count] : samples) {
    auto [it, fresh] = points.emplace(m, count);
    if (!fresh && it->second != count) throw ContractError("conflicting samples at one m");
  }
  if (degree < 0 || points.size() < static_cast<std::size_t>(degree) + 1) {
    throw ContractError("insufficient sample count for interpolation of degree " +
                        std::to_string(degree));
  }
  // Lagrange form, summed exactly.
  UniPoly result;
  for (const auto& [mi, yi] : points) {
    UniPoly basis = UniPoly::constant(1);
    Rational denom = 1;
    for (const auto& [mj, yj] : points) {
      if (mj == mi) continue;
      basis = basis * UniPoly::linear(Rational(-mj));
      denom *= Rational(mi - mj);
    }
    result = result + basis * (Rational(yi) / denom);
  }
  if (result.degree() > degree) throw ContractError("samples do not fit the requested degree");
  return result;
}

Integer count_sorted_monomials(const Graph& g, long m) {
  const Classification c = classify(g);
  if (!is_simple_non_simplex(c)) {
    throw ContractError("count_sorted_monomials needs an alpha, beta or gamma graph");
  }
  if (m < 0) throw ContractError("m must be nonnegative");
  const std::vector<Vertex> label = standard_labeling(g, c);
  const int d = g.num_vertices();
  std::vector<Vertex> user(static_cast<std::size_t>(d) + 1);
  for (int v = 1; v <= d; ++v) user[label[v - 1]] = v;
  const auto edge = [&](int a, int b) { return g.has_edge(user[a], user[b]); };

  const auto len = static_cast<std::size_t>(m);
  std::vector<int> lows(len);
  Integer count = 0;
  // Choose j_r for r = pos.., nondecreasing from `floor`.
  std::function<void(std::size_t, int)> pick_high = [&](std::size_t pos, int floor) {
    if (pos == len) {
      ++count;
      return;
    }
    for (int j = floor; j <= d; ++j)
      if (edge(lows[pos], j)) pick_high(pos + 1, j);
  };
  std::function<void(std::size_t, int)> pick_low = [&](std::size_t pos, int floor) {
    if (pos == len) {
      pick_high(0, len == 0 ? 1 : lows.back());
      return;
    }
    for (int i = floor; i <= d; ++i) {
      lows[pos] = i;
      pick_low(pos + 1, i);
    }
  };
  pick_low(0, 1);
  return count;
}

}  // namespace edgepoly
