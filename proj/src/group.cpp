#include "wtower/group.hpp"

#include <algorithm>
#include <sstream>

#include "wtower/errors.hpp"

namespace wtower {

std::string GroupSpec::str() const {
  switch (kind) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::free_abelian: return "zk:" + std::to_string(rank);
    case GroupKind::free_group: return "free:" + std::to_string(rank);
  }
  return "?";
}

GroupSpec parse_group_spec(const std::string& s) {
  if (s == "trivial") return {GroupKind::trivial, 0};
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string head = s.substr(0, colon);
    int k = 0;
    try {
      k = std::stoi(s.substr(colon + 1));
    } catch (...) {
      throw DomainError("BadGroupSpec", "bad group rank in '" + s + "'");
    }
    if (k < 1) throw DomainError("BadGroupSpec", "group rank must be >= 1");
    if (head == "zk") return {GroupKind::free_abelian, k};
    if (head == "free") return {GroupKind::free_group, k};
  }
  throw DomainError("BadGroupSpec", "unknown group spec '" + s + "'");
}

GroupElement GroupElement::identity(const GroupSpec& spec) {
  GroupElement g;
  g.spec_ = spec;
  if (spec.kind == GroupKind::free_abelian) g.exps_.assign(spec.rank, 0);
  return g;
}

GroupElement GroupElement::abelian(const GroupSpec& spec, std::vector<int64_t> exps) {
  if (spec.kind != GroupKind::free_abelian)
    throw DomainError("BadGroupSpec", "abelian payload for non-abelian spec");
  if ((int)exps.size() != spec.rank)
    throw DomainError("BadGroupSpec", "exponent vector length mismatch");
  GroupElement g;
  g.spec_ = spec;
  g.exps_ = std::move(exps);
  return g;
}

static void reduce_runs(std::vector<std::pair<int, int64_t>>& runs) {
  std::vector<std::pair<int, int64_t>> out;
  for (const auto& r : runs) {
    if (r.second == 0) continue;
    if (!out.empty() && out.back().first == r.first) {
      out.back().second += r.second;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back(r);
    }
  }
  runs = std::move(out);
}

GroupElement GroupElement::word(const GroupSpec& spec,
                                std::vector<std::pair<int, int64_t>> runs) {
  GroupElement g = raw_word(spec, std::move(runs));
  if (spec.kind == GroupKind::free_group) reduce_runs(g.word_);
  return g;
}

GroupElement GroupElement::raw_word(const GroupSpec& spec,
                                    std::vector<std::pair<int, int64_t>> runs) {
  GroupElement g;
  g.spec_ = spec;
  for (const auto& r : runs) {
    if (r.first < 1 || r.first > spec.rank)
      throw DomainError("LabelOutOfRange",
                        "generator x" + std::to_string(r.first) + " outside rank " +
                            std::to_string(spec.rank));
  }
  if (spec.kind == GroupKind::trivial) {
    if (!runs.empty())
      throw DomainError("BadGroupSpec", "nontrivial word in the trivial group");
    return g;
  }
  if (spec.kind == GroupKind::free_abelian) {
    g.exps_.assign(spec.rank, 0);
    for (const auto& r : runs) g.exps_[r.first - 1] += r.second;
    return g;
  }
  g.word_ = std::move(runs);
  return g;
}

GroupElement GroupElement::generator(const GroupSpec& spec, int i, int64_t e) {
  return word(spec, {{i, e}});
}

bool GroupElement::is_identity() const {
  switch (spec_.kind) {
    case GroupKind::trivial: return true;
    case GroupKind::free_abelian:
      return std::all_of(exps_.begin(), exps_.end(), [](int64_t v) { return v == 0; });
    case GroupKind::free_group: return word_.empty();
  }
  return true;
}

bool GroupElement::is_reduced() const {
  if (spec_.kind != GroupKind::free_group) return true;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (word_[i].second == 0) return false;
    if (i + 1 < word_.size() && word_[i].first == word_[i + 1].first) return false;
  }
  return true;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (spec_ != o.spec_)
    throw DomainError("ContextMismatch", "multiplying elements of different groups");
  switch (spec_.kind) {
    case GroupKind::trivial: return *this;
    case GroupKind::free_abelian: {
      std::vector<int64_t> e = exps_;
      for (int i = 0; i < spec_.rank; ++i) e[i] += o.exps_[i];
      return abelian(spec_, std::move(e));
    }
    case GroupKind::free_group: {
      std::vector<std::pair<int, int64_t>> runs = word_;
      runs.insert(runs.end(), o.word_.begin(), o.word_.end());
      return word(spec_, std::move(runs));
    }
  }
  return *this;
}

GroupElement GroupElement::inverse() const {
  switch (spec_.kind) {
    case GroupKind::trivial: return *this;
    case GroupKind::free_abelian: {
      std::vector<int64_t> e = exps_;
      for (auto& v : e) v = -v;
      return abelian(spec_, std::move(e));
    }
    case GroupKind::free_group: {
      std::vector<std::pair<int, int64_t>> runs(word_.rbegin(), word_.rend());
      for (auto& r : runs) r.second = -r.second;
      return word(spec_, std::move(runs));
    }
  }
  return *this;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return spec_ == o.spec_ && exps_ == o.exps_ && word_ == o.word_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (exps_ != o.exps_) return exps_ < o.exps_;
  return word_ < o.word_;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](int gen, int64_t exp) {
    if (exp == 0) return;
    if (!first) os << ' ';
    first = false;
    os << 'x' << gen;
    if (exp != 1) os << '^' << exp;
  };
  if (spec_.kind == GroupKind::free_abelian) {
    for (int i = 0; i < spec_.rank; ++i) emit(i + 1, exps_[i]);
  } else {
    for (const auto& r : word_) emit(r.first, r.second);
  }
  if (first) return "e";
  return os.str();
}

GroupElement parse_group_element(const GroupSpec& spec, const std::string& text,
                                 int line) {
  std::istringstream is(text);
  std::string tok;
  std::vector<std::pair<int, int64_t>> runs;
  bool saw_e = false;
  while (is >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 'x')
      throw ParseError(line, 0, "bad group term '" + tok + "'");
    size_t caret = tok.find('^');
    int gen;
    int64_t exp = 1;
    try {
      gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos
                                                               : caret - 1));
      if (caret != std::string::npos) exp = std::stoll(tok.substr(caret + 1));
    } catch (...) {
      throw ParseError(line, 0, "bad group term '" + tok + "'");
    }
    runs.emplace_back(gen, exp);
  }
  if (!runs.empty() && saw_e)
    throw ParseError(line, 0, "'e' mixed with generator terms");
  if (spec.kind == GroupKind::trivial && !runs.empty())
    throw ParseError(line, 0, "group element given but group is trivial");
  return GroupElement::word(spec, std::move(runs));
}

}  // namespace wtower
