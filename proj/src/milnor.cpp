#include "wtower/milnor.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "wtower/errors.hpp"
#include "wtower/lambda.hpp"

namespace wtower {

const MeridianWord* Longitudes::find(int i) const {
  for (const auto& w : words)
    if (w.component == i) return &w;
  return nullptr;
}

Longitudes parse_longitudes(std::istream& in) {
  Longitudes out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    size_t colon = line.find(':', start);
    if (colon == std::string::npos)
      throw ParseError(lineno, (int)start + 1, "expected 'i : word'");
    int comp;
    try {
      comp = std::stoi(line.substr(start, colon - start));
    } catch (...) {
      throw ParseError(lineno, (int)start + 1, "bad component index");
    }
    if (comp < 1) throw ParseError(lineno, (int)start + 1, "components start at 1");
    MeridianWord w = parse_meridian_word(comp, line.substr(colon + 1), lineno);
    out.words.push_back(std::move(w));
    out.components = std::max(out.components, comp);
    out.components = std::max(out.components, out.words.back().max_generator());
  }
  return out;
}

namespace {

bool contains(const std::vector<int>& mono, int i) {
  return std::find(mono.begin(), mono.end(), i) != mono.end();
}

std::string mono_str(const std::vector<int>& mono) {
  std::string s;
  for (int g : mono) s += "X" + std::to_string(g);
  return s;
}

// Milnor coefficients of one longitude at one order, assembled into the
// bracketing-dual Lie element via the left-normed monomials (k1..kn, max).
LieElement assemble_mu(const MagnusPolynomial& p, int component, int order) {
  LieElement out;
  for (const auto& [mono, c] : p.terms()) {
    if ((int)mono.size() != order + 1) continue;
    if (contains(mono, component)) continue;
    int maxgen = *std::max_element(mono.begin(), mono.end());
    if (mono.back() != maxgen) continue;
    out.add(left_normed(mono), c);
  }
  return out;
}

void check_lower_orders(const MagnusPolynomial& p, int component, int order) {
  for (const auto& [mono, c] : p.terms()) {
    int d = (int)mono.size();
    if (d < 1 || d > order) continue;
    if (contains(mono, component)) continue;
    throw DomainError("LowerOrderNonzero",
                      "component " + std::to_string(component) +
                          " has nonzero coefficient on " + mono_str(mono));
  }
}

}  // namespace

std::map<int, LieElement> mu_invariants(const Longitudes& l, int order) {
  std::map<int, LieElement> out;
  for (const auto& w : l.words) {
    MagnusPolynomial p = magnus_expand(w, order + 1, true);
    check_lower_orders(p, w.component, order);
    out.emplace(w.component, assemble_mu(p, w.component, order));
  }
  return out;
}

FirstOrderResult first_nonvanishing_order(const Longitudes& l) {
  FirstOrderResult res;
  int m = l.components;
  if (m < 2) {
    res.all_vanish = true;
    return res;
  }
  // One expansion per longitude up to the top relevant degree m-1.
  std::vector<MagnusPolynomial> exps;
  exps.reserve(l.words.size());
  for (const auto& w : l.words) exps.push_back(magnus_expand(w, m - 1, true));

  for (int n = 0; n + 2 <= m; ++n) {
    bool nonzero = false;
    for (size_t k = 0; k < l.words.size(); ++k) {
      for (const auto& [mono, c] : exps[k].terms()) {
        if ((int)mono.size() != n + 1) continue;
        if (contains(mono, l.words[k].component)) continue;
        nonzero = true;
        break;
      }
      if (nonzero) break;
    }
    if (nonzero) {
      res.order = n;
      res.invariants = mu_invariants(l, n);
      return res;
    }
  }
  res.all_vanish = true;
  return res;
}

std::vector<std::pair<int, bool>> verify_eta_identity(const IntersectionForest& f,
                                                      const Longitudes& l) {
  LambdaVector lambda = normalize_lambda(forest_to_sum(f));
  int n = f.ctx.order;
  int m = std::max(f.ctx.labels, l.components);
  auto mu = mu_invariants(l, n);
  std::vector<std::pair<int, bool>> out;
  for (int i = 1; i <= m; ++i) {
    LieNormalForm lhs = lie_normalize(eta(i, lambda));
    LieNormalForm rhs;
    auto it = mu.find(i);
    if (it != mu.end()) rhs = lie_normalize(it->second);
    bool equal = (lhs.coords == rhs.coords);
    out.emplace_back(i, equal);
  }
  return out;
}

}  // namespace wtower
