#include "wtower/magnus.hpp"

#include <algorithm>
#include <sstream>

#include "wtower/errors.hpp"
#include "wtower/group.hpp"

namespace wtower {

int MeridianWord::max_generator() const {
  int best = 0;
  for (const auto& r : runs) best = std::max(best, r.first);
  return best;
}

std::string MeridianWord::str() const {
  if (runs.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << runs[i].first;
    if (runs[i].second != 1) os << '^' << runs[i].second;
  }
  return os.str();
}

MeridianWord parse_meridian_word(int component, const std::string& text, int line) {
  // Reuse the gword grammar over a free group large enough for the word.
  std::istringstream probe(text);
  std::string tok;
  int max_gen = 1;
  while (probe >> tok) {
    if (tok.size() >= 2 && tok[0] == 'x') {
      size_t caret = tok.find('^');
      try {
        max_gen = std::max(max_gen, std::stoi(tok.substr(
                                        1, caret == std::string::npos
                                               ? std::string::npos
                                               : caret - 1)));
      } catch (...) {
      }
    }
  }
  GroupSpec spec{GroupKind::free_group, max_gen};
  GroupElement g = parse_group_element(spec, text, line);
  MeridianWord w;
  w.component = component;
  w.runs = g.runs();
  return w;
}

int64_t MagnusPolynomial::coefficient(const std::vector<int>& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

void MagnusPolynomial::add(const std::vector<int>& mono, int64_t c) {
  if (c == 0) return;
  if ((int)mono.size() > cap_) return;
  if (non_repeating_) {
    std::vector<int> sorted = mono;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
  }
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MagnusPolynomial MagnusPolynomial::operator*(const MagnusPolynomial& o) const {
  MagnusPolynomial out(cap_, non_repeating_ || o.non_repeating_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) {
      if ((int)(wa.size() + wb.size()) > cap_) continue;
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

MagnusPolynomial MagnusPolynomial::one(int degree_cap, bool non_repeating) {
  MagnusPolynomial p(degree_cap, non_repeating);
  p.add({}, 1);
  return p;
}

std::string MagnusPolynomial::str() const {
  if (terms_.empty()) return "0";
  // Constant first, then by (length, lexicographic); std::map with the
  // vector key already orders lexicographically but not by length.
  std::vector<std::pair<std::vector<int>, int64_t>> items(terms_.begin(),
                                                          terms_.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first.size() != b.first.size())
                       return a.first.size() < b.first.size();
                     return a.first < b.first;
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : items) {
    int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << ' ';
    for (int g : w) os << 'X' << g;
  }
  return os.str();
}

MagnusPolynomial magnus_expand(const MeridianWord& w, int degree_cap,
                               bool non_repeating) {
  if (degree_cap < 1)
    throw DomainError("ContextMismatch", "expansion degree must be >= 1");
  MagnusPolynomial acc = MagnusPolynomial::one(degree_cap, non_repeating);
  for (const auto& [gen, exp] : w.runs) {
    MagnusPolynomial factor(degree_cap, non_repeating);
    if (exp >= 0) {
      factor.add({}, 1);
      factor.add({gen}, 1);  // x -> 1 + X
    } else {
      // x^{-1} -> 1 - X + X^2 - ... truncated
      std::vector<int> mono;
      int64_t sign = 1;
      factor.add({}, 1);
      for (int d = 1; d <= degree_cap; ++d) {
        mono.push_back(gen);
        sign = -sign;
        factor.add(mono, sign);
      }
    }
    int64_t count = exp >= 0 ? exp : -exp;
    for (int64_t i = 0; i < count; ++i) acc = acc * factor;
  }
  return acc;
}

}  // namespace wtower
