#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wtower/errors.hpp"
#include "wtower/intdet.hpp"
#include "wtower/lambda.hpp"
#include "wtower/lie.hpp"
#include "wtower/magnus.hpp"
#include "wtower/milnor.hpp"
#include "wtower/relations.hpp"
#include "wtower/tree_sum.hpp"

using namespace wtower;

namespace {

std::ifstream open_or_die(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("FileNotFound", "cannot open '" + path + "'");
  return in;
}

std::string quotient_str(int64_t d) {
  if (d == 0) return "Z";
  if (d == 1) return "trivial";
  return "Z_" + std::to_string(d);
}

void print_subgroup(const LatticeSubgroup& s) {
  std::cout << "image basis:\n";
  if (s.basis.empty()) std::cout << "(trivial)\n";
  for (const auto& row : s.basis) {
    for (size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? " " : "") << row[i];
    std::cout << '\n';
  }
  std::cout << "invariant factors:";
  for (int64_t f : s.factors) std::cout << ' ' << f;
  std::cout << '\n';
}

void print_lie(const std::map<int, LieElement>& mu) {
  for (const auto& [i, el] : mu) {
    std::cout << "component " << i << ":\n";
    LieNormalForm nf = lie_normalize(el);
    std::cout << nf.str();
  }
}

void print_quad_report(const QuadImageReport& rep, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["bound"] = rep.bound;
    j["effective_bound"] = rep.effective_bound;
    j["exhaustive"] = rep.exhaustive;
    j["point_count"] = rep.points.size();
    j["projection_gcds"] = rep.projection_gcds;
    j["projection_check_ok"] = rep.projection_check_ok;
    j["closure_pairs_checked"] = rep.closure_pairs_checked;
    j["closure_violations"] = rep.closure_violations;
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& p : rep.points) pts.push_back({p[0], p[1]});
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << "p0,p1\n";
    for (const auto& p : rep.points) std::cout << p[0] << ',' << p[1] << '\n';
    return;
  }
  std::cout << "bound = " << rep.bound << '\n'
            << "effective bound = " << rep.effective_bound << '\n'
            << "exhaustive = " << (rep.exhaustive ? "true" : "false") << '\n'
            << "points = " << rep.points.size() << '\n'
            << "projection gcds = " << rep.projection_gcds[0] << ' '
            << rep.projection_gcds[1] << '\n'
            << "projection check = "
            << (rep.projection_check_ok ? "ok" : "violated") << '\n'
            << "closure pairs checked = " << rep.closure_pairs_checked << '\n'
            << "closure violations = " << rep.closure_violations.size() << '\n';
  for (const auto& v : rep.closure_violations)
    std::cout << "  (" << v[0] << ',' << v[1] << ") + (" << v[2] << ',' << v[3]
              << ") not attained\n";
  std::cout << "points:\n";
  for (const auto& p : rep.points) std::cout << p[0] << ' ' << p[1] << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"non-repeating Whitney tower intersection invariants"};
  app.require_subcommand(1);

  // normalize
  auto* cmd_norm = app.add_subcommand("normalize", "canonical form of a forest");
  int n_order = -1, n_labels = -1;
  std::string n_group = "trivial", n_file;
  cmd_norm->add_option("--order", n_order, "tree order n");
  cmd_norm->add_option("--labels", n_labels, "label count m");
  cmd_norm->add_option("--group", n_group, "trivial|zk:K|free:K");
  cmd_norm->add_option("file", n_file, "forest file")->required();

  // rank
  auto* cmd_rank = app.add_subcommand("rank", "free rank of Lambda_n(m)");
  int r_n = 0, r_m = 0;
  cmd_rank->add_option("n", r_n, "order")->required();
  cmd_rank->add_option("m", r_m, "labels")->required();

  // op
  auto* cmd_op = app.add_subcommand("op", "surface operation on a tree sum");
  std::string op_kind, op_group = "trivial", op_file;
  int op_i = 0, op_j = 0, op_order = -1, op_labels = -1;
  cmd_op->add_option("--kind", op_kind, "delta|sigma|s|e")->required();
  cmd_op->add_option("--i", op_i, "label i")->required();
  cmd_op->add_option("--j", op_j, "label j (sigma only)");
  cmd_op->add_option("--order", op_order, "tree order n");
  cmd_op->add_option("--labels", op_labels, "label count m");
  cmd_op->add_option("--group", op_group, "trivial|zk:K|free:K");
  cmd_op->add_option("file", op_file, "tree sum file")->required();

  // eta
  auto* cmd_eta = app.add_subcommand("eta", "rooting map to the reduced Lie algebra");
  int eta_i = 0, eta_order = -1, eta_labels = -1;
  std::string eta_file;
  cmd_eta->add_option("--i", eta_i, "root label")->required();
  cmd_eta->add_option("--order", eta_order, "tree order n");
  cmd_eta->add_option("--labels", eta_labels, "label count m");
  cmd_eta->add_option("file", eta_file, "tree sum file")->required();

  // magnus
  auto* cmd_mag = app.add_subcommand("magnus", "Magnus expansion of a word");
  int mag_deg = 1;
  bool mag_nonrep = false;
  std::string mag_word;
  cmd_mag->add_option("--deg", mag_deg, "truncation degree")->required();
  cmd_mag->add_flag("--nonrepeating", mag_nonrep, "drop repeated indices");
  cmd_mag->add_option("word", mag_word, "word in x1..xm")->required();

  // mu
  auto* cmd_mu = app.add_subcommand("mu", "non-repeating Milnor invariants");
  int mu_order = 0;
  std::string mu_file;
  cmd_mu->add_option("--order", mu_order, "invariant order n")->required();
  cmd_mu->add_option("file", mu_file, "longitude file")->required();

  // order
  auto* cmd_order = app.add_subcommand("order", "first non-vanishing order");
  std::string ord_file;
  cmd_order->add_option("file", ord_file, "longitude file")->required();

  // verify-mu
  auto* cmd_verify = app.add_subcommand("verify-mu", "eta identity cross-check");
  int v_order = -1, v_labels = -1;
  std::string v_forest, v_long;
  cmd_verify->add_option("--order", v_order, "tree order n");
  cmd_verify->add_option("--labels", v_labels, "label count m");
  cmd_verify->add_option("forest", v_forest, "forest file")->required();
  cmd_verify->add_option("longitudes", v_long, "longitude file")->required();

  // int1-triple / int1-quad / int2-linear
  auto* cmd_i1t = app.add_subcommand("int1-triple", "order-1 triple indeterminacy");
  std::string i1t_file;
  cmd_i1t->add_option("file", i1t_file, "data file")->required();
  auto* cmd_i1q = app.add_subcommand("int1-quad", "order-1 quadruple indeterminacy");
  std::string i1q_file;
  cmd_i1q->add_option("file", i1q_file, "data file")->required();
  auto* cmd_i2l = app.add_subcommand("int2-linear", "linear order-2 indeterminacy");
  std::string i2l_file;
  cmd_i2l->add_option("file", i2l_file, "data file")->required();

  // int2-quad
  auto* cmd_i2q = app.add_subcommand("int2-quad", "quadratic order-2 image explorer");
  std::string i2q_file, i2q_format = "text";
  int64_t i2q_bound = 1;
  uint64_t i2q_budget = 500000000ull;
  cmd_i2q->add_option("--bound", i2q_bound, "box bound B")->required();
  cmd_i2q->add_option("--budget", i2q_budget, "operation budget");
  cmd_i2q->add_option("--format", i2q_format, "text|json|csv");
  cmd_i2q->add_option("file", i2q_file, "data file")->required();

  // int2-member
  auto* cmd_i2m = app.add_subcommand("int2-member", "bounded membership query");
  std::string i2m_file, i2m_target;
  int64_t i2m_bound = 1;
  uint64_t i2m_budget = 500000000ull;
  cmd_i2m->add_option("--target", i2m_target, "target 'a,b'")->required();
  cmd_i2m->add_option("--bound", i2m_bound, "box bound B")->required();
  cmd_i2m->add_option("--budget", i2m_budget, "operation budget");
  cmd_i2m->add_option("file", i2m_file, "data file")->required();

  // gcd-check
  auto* cmd_gcd = app.add_subcommand("gcd-check", "pull-apart gcd sufficiency");
  std::string gcd_file;
  cmd_gcd->add_option("file", gcd_file, "pairing values file")->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_rank->parsed()) {
    std::cout << lambda_rank(r_n, r_m) << '\n';
    return 0;
  }
  if (cmd_norm->parsed()) {
    GroupSpec spec = parse_group_spec(n_group);
    auto in = open_or_die(n_file);
    IntersectionForest f = parse_forest(spec, in, n_order, n_labels);
    std::cout << normalize_lambda(forest_to_sum(f)).str();
    return 0;
  }
  if (cmd_op->parsed()) {
    GroupSpec spec = parse_group_spec(op_group);
    auto in = open_or_die(op_file);
    TreeSum s = parse_tree_sum(spec, in, op_order, op_labels);
    TreeSum out;
    if (op_kind == "delta")
      out = op_parallel(s, op_i);
    else if (op_kind == "sigma")
      out = op_sum(s, op_i, op_j);
    else if (op_kind == "s")
      out = op_reverse(s, op_i);
    else if (op_kind == "e")
      out = op_delete(s, op_i);
    else
      throw DomainError("UnknownOp", "op kind must be delta|sigma|s|e");
    std::cout << out.str();
    return 0;
  }
  if (cmd_eta->parsed()) {
    GroupSpec spec{GroupKind::trivial, 0};
    auto in = open_or_die(eta_file);
    TreeSum s = parse_tree_sum(spec, in, eta_order, eta_labels);
    std::cout << eta(eta_i, s).str();
    return 0;
  }
  if (cmd_mag->parsed()) {
    MeridianWord w = parse_meridian_word(1, mag_word);
    std::cout << magnus_expand(w, mag_deg, mag_nonrep).str() << '\n';
    return 0;
  }
  if (cmd_mu->parsed()) {
    auto in = open_or_die(mu_file);
    Longitudes l = parse_longitudes(in);
    print_lie(mu_invariants(l, mu_order));
    return 0;
  }
  if (cmd_order->parsed()) {
    auto in = open_or_die(ord_file);
    Longitudes l = parse_longitudes(in);
    FirstOrderResult res = first_nonvanishing_order(l);
    if (res.all_vanish) {
      std::cout << "all orders vanish (link-homotopically trivial)\n";
    } else {
      std::cout << "order = " << res.order << '\n';
      print_lie(res.invariants);
    }
    return 0;
  }
  if (cmd_verify->parsed()) {
    GroupSpec spec{GroupKind::trivial, 0};
    auto fin = open_or_die(v_forest);
    IntersectionForest f = parse_forest(spec, fin, v_order, v_labels);
    auto lin = open_or_die(v_long);
    Longitudes l = parse_longitudes(lin);
    bool all = true;
    for (const auto& [i, ok] : verify_eta_identity(f, l)) {
      std::cout << "i=" << i << ' ' << (ok ? "true" : "false") << '\n';
      all = all && ok;
    }
    return all ? 0 : 1;
  }
  if (cmd_i1t->parsed()) {
    auto in = open_or_die(i1t_file);
    TripleResult res = int1_triple(parse_intersection_data(in));
    std::cout << "d = " << res.d << '\n'
              << "quotient = " << quotient_str(res.d) << '\n';
    return 0;
  }
  if (cmd_i1q->parsed()) {
    auto in = open_or_die(i1q_file);
    print_subgroup(int1_quadruple(parse_intersection_data(in)));
    return 0;
  }
  if (cmd_i2l->parsed()) {
    auto in = open_or_die(i2l_file);
    print_subgroup(int2_linear(parse_intersection_data(in)));
    return 0;
  }
  if (cmd_i2q->parsed()) {
    if (i2q_format != "text" && i2q_format != "json" && i2q_format != "csv")
      throw DomainError("UnknownFormat", "format must be text|json|csv");
    auto in = open_or_die(i2q_file);
    QuadImageReport rep =
        int2_quadratic_image(parse_intersection_data(in), i2q_bound, i2q_budget);
    print_quad_report(rep, i2q_format);
    return 0;
  }
  if (cmd_i2m->parsed()) {
    auto comma = i2m_target.find(',');
    if (comma == std::string::npos)
      throw DomainError("BadTarget", "target must be 'a,b'");
    Point2 target;
    try {
      target[0] = std::stoll(i2m_target.substr(0, comma));
      target[1] = std::stoll(i2m_target.substr(comma + 1));
    } catch (...) {
      throw DomainError("BadTarget", "target must be 'a,b'");
    }
    auto in = open_or_die(i2m_file);
    MembershipResult res =
        int2_membership(target, parse_intersection_data(in), i2m_bound, i2m_budget);
    if (res.attained) {
      std::cout << "yes witness =";
      for (int64_t v : res.witness) std::cout << ' ' << v;
      std::cout << '\n';
    } else {
      std::cout << "unknown within bound\n";
    }
    return 0;
  }
  if (cmd_gcd->parsed()) {
    auto in = open_or_die(gcd_file);
    std::vector<int64_t> vals;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      std::istringstream ls(line);
      int64_t x;
      while (ls >> x) vals.push_back(x);
      if (!ls.eof()) throw ParseError(lineno, 1, "bad integer");
    }
    std::cout << (gcd_pullapart_check(vals) ? "true" : "false") << '\n';
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", col " << e.col() << ": "
              << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
