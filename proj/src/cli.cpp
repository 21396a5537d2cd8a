#include "matgeg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "matgeg/errors.hpp"
#include "matgeg/verify.hpp"

namespace matgeg {

namespace {

struct Options {
  unsigned wmax = 12;
  std::optional<std::string> n, p;
  std::string json_path;
  bool timing = false;
  unsigned order = 2;
  std::optional<unsigned> deg;
  std::string op_file;
  std::string word;
  std::string targets = "c1";
  unsigned w = 0;
};

// Input problems that are the caller's fault rather than a falsified check.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Bindings bindings_of(const Options& o) {
  Bindings b;
  if (o.p) b[Var::p] = parse_rat(*o.p);
  if (o.n) b[Var::n] = parse_rat(*o.n);
  return b;
}

// Words like "D1D3", "C1 C2", "A*B*A" or "I" multiply left to right.
DiffOp parse_op_word(const std::string& text, const DWAlgebra& alg) {
  DiffOp out = alg.identity();
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '*') {
      ++i;
      continue;
    }
    auto digit = [&](char lo, char hi) {
      if (i + 1 >= text.size() || text[i + 1] < lo || text[i + 1] > hi)
        throw UsageError("bad operator word '" + text + "'");
      return text[i + 1] - '0';
    };
    if (ch == 'D') {
      out = out * alg.generator(digit('1', '4'));
      i += 2;
    } else if (ch == 'C') {
      out = out * (digit('1', '2') == 1 ? alg.C1() : alg.C2());
      i += 2;
    } else if (ch == 'A') {
      out = out * alg.A(), ++i;
    } else if (ch == 'B') {
      out = out * alg.B(), ++i;
    } else if (ch == 'I') {
      ++i;
    } else {
      throw UsageError("bad operator word '" + text + "'");
    }
    any = true;
  }
  if (!any) throw UsageError("empty operator word");
  return out;
}

DiffOp load_op(const Options& o, const DWAlgebra& alg) {
  if (!o.op_file.empty() && !o.word.empty()) throw UsageError("give --op or --word, not both");
  if (!o.word.empty()) return parse_op_word(o.word, alg);
  if (o.op_file.empty()) throw UsageError("an operator is required (--op file.json or --word)");
  std::ifstream in(o.op_file);
  if (!in) throw UsageError("cannot read " + o.op_file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(o.op_file + ": " + e.what());
  }
  DiffOp d;
  try {
    d = diffop_from_json(j);
  } catch (const json::exception& e) {
    throw UsageError(o.op_file + ": " + e.what());
  }
  return alg.bindings().empty() ? d : d.evaluate(alg.bindings());
}

void cmd_verify_relations(const Options& o, Report& rep) {
  const DWAlgebra alg(bindings_of(o));
  rep.add(remark_products(alg));
  rep.add(ab_relations(alg));
  rep.add(ds_rows(alg));
  rep.add(cubic_relation(alg));
}

void cmd_eigencheck(const Options& o, Report& rep) { rep.add(eigen_battery(o.wmax, bindings_of(o))); }

void cmd_mop(const Options& o, Report& rep) {
  const Bindings b = bindings_of(o);
  MatPoly q = monic_mop_closed(o.w).poly;
  if (!b.empty()) q = q.evaluate(b);
  rep.extra["w"] = o.w;
  rep.extra["bindings"] = to_json(b);
  rep.extra["Q"] = to_json(q);
  rep.add(mop_cross_check(o.w).back());
}

void cmd_decompose(const Options& o, Report& rep) {
  const DWAlgebra alg(bindings_of(o));
  const DiffOp d = load_op(o, alg);
  rep.extra["operator"] = to_json(d);
  rep.add(timed([&] {
    try {
      const SpanDecomp s = alg.decompose(d);
      rep.extra["decomposition"] = to_json(s);
      return residual_check("decompose round-trip: reassemble(decompose(D)) = D", alg.reassemble(s) - d);
    } catch (const NonMember& e) {
      return bool_check("D lies in D(W)", false, json{{"reason", e.what()}}, e.what());
    }
  }));
}

void cmd_center_decompose(const Options& o, Report& rep) {
  const DWAlgebra alg(bindings_of(o));
  const DiffOp d = load_op(o, alg);
  rep.extra["operator"] = to_json(d);
  rep.add(timed([&] {
    try {
      const CenterDecomp c = alg.center_decompose(d);
      rep.extra["decomposition"] = to_json(c);
      return residual_check("center round-trip: p(C1) + q(C1) C2 = D", alg.reassemble(c) - d);
    } catch (const MathError& e) {
      return bool_check("D is central", false, json{{"reason", e.what()}}, e.what());
    }
  }));
}

void cmd_bridge_check(const Options&, Report& rep) { rep.add(bridge_battery()); }

void cmd_centralizer(const Options& o, Report& rep) {
  const DWAlgebra sym(bindings_of(o));
  std::vector<DiffOp> targets{sym.C1()};
  if (o.targets == "c1c2")
    targets.push_back(sym.C2());
  else if (o.targets != "c1")
    throw UsageError("--targets must be c1 or c1c2");
  const unsigned d = o.deg.value_or(o.order + 4);
  const SolutionSpace sol = centralizer_truncated(targets, o.order, d);
  json basis = json::array();
  for (const auto& b : sol.basis) basis.push_back(to_json(b));
  rep.extra["order"] = o.order;
  rep.extra["degree"] = d;
  rep.extra["targets"] = o.targets;
  rep.extra["dimension"] = sol.dimension;
  rep.extra["numeric_specialized"] = sol.numeric_specialized;
  if (sol.numeric_specialized) {
    rep.extra["bindings"] = to_json(sol.bindings);
    rep.extra["specialized_dims"] = sol.specialized_dims;
  }
  rep.extra["basis"] = basis;

  // Checks run where the basis lives.
  Bindings where = sym.bindings();
  for (const auto& [v, q] : sol.bindings) where[v] = q;
  const DWAlgebra alg(where);
  std::vector<DiffOp> tg;
  for (const auto& t : targets) tg.push_back(where.empty() ? t : t.evaluate(where));
  rep.add(timed([&] {
    for (std::size_t k = 0; k < sol.basis.size(); ++k)
      for (const auto& t : tg) {
        const DiffOp r = commutator(sol.basis[k], t);
        if (!r.is_zero()) return bool_check("basis commutes with targets", false, json{{"index", k}, {"commutator", to_json(r)}});
      }
    return bool_check("basis commutes with targets", true, nullptr);
  }));
  rep.add(timed([&] {
    for (std::size_t k = 0; k < sol.basis.size(); ++k)
      if (!alg.is_member(sol.basis[k]))
        return bool_check("basis lies in D(W)", false, json{{"index", k}, {"operator", to_json(sol.basis[k])}});
    return bool_check("basis lies in D(W)", true, nullptr);
  }));
  rep.add(timed([&] {
    const SolutionSpace up = centralizer_truncated(targets, o.order, d + 2);
    return bool_check("dimension stable at degree " + std::to_string(d + 2), up.dimension == sol.dimension,
                      json{{"dimension", sol.dimension}, {"raised", up.dimension}},
                      std::to_string(sol.dimension) + " vs " + std::to_string(up.dimension));
  }));
}

void cmd_orthogonality(const Options& o, Report& rep) {
  if (!o.n || !o.p) throw UsageError("orthogonality needs --n and --p");
  const Rat n = parse_rat(*o.n);
  const Rat p = parse_rat(*o.p);
  if (n.get_den() != 1 || n.get_num() % 2 != 0 || n < 4) throw UsageError("--n must be an even integer >= 4");
  if (p <= 0 || p * 2 >= n) throw UsageError("--p must satisfy 0 < p < n/2");
  rep.add(orthogonality_battery(n.get_num().get_si(), p, o.wmax));
}

void cmd_selftest(const Options&, Report& rep) {
  const DWAlgebra& alg = symbolic_algebra();
  rep.add(remark_products(alg));
  rep.add(ds_rows(alg));
  rep.add(eigen_battery(4));
  rep.add(mop_cross_check(4));
  rep.add(orthogonality_battery(4, Rat(1), 3));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification engine for the matrix Gegenbauer operator algebra", "matgeg"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "bind n to a rational");
    sub->add_option("--p", o.p, "bind p to a rational");
    sub->add_option("--json", o.json_path, "write the JSON report to this path ('-' for stdout)");
    sub->add_flag("--timing", o.timing, "include timings in the JSON report");
  };
  auto op_input = [&](CLI::App* sub) {
    sub->add_option("--op", o.op_file, "operator in the diffop JSON schema");
    sub->add_option("--word", o.word, "operator word over I, A, B, C1, C2, D1..D4, e.g. D1D4");
  };

  using Fn = void (*)(const Options&, Report&);
  std::vector<std::pair<CLI::App*, Fn>> cmds;
  auto add = [&](const char* name, const char* help, Fn fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    cmds.emplace_back(sub, fn);
    return sub;
  };
  add("verify-relations", "generator products, A/B relations, reconstructions", cmd_verify_relations);
  add("eigencheck", "Q_w D_i = Lambda_w(D_i) Q_w for w <= wmax", cmd_eigencheck)
      ->add_option("--wmax", o.wmax, "largest degree")
      ->capture_default_str();
  add("mop", "print Q_w and cross-check its two constructions", cmd_mop)->add_option("--w", o.w, "degree")->required();
  op_input(add("decompose", "write an operator over the spanning set", cmd_decompose));
  op_input(add("center-decompose", "write a central operator as p(C1) + q(C1) C2", cmd_center_decompose));
  add("bridge-check", "Hermite-algebra relations under the bridge map", cmd_bridge_check);
  {
    CLI::App* sub = add("centralizer", "truncated centralizer of C1 (and C2)", cmd_centralizer);
    sub->add_option("--order", o.order, "order bound")->capture_default_str();
    sub->add_option("--deg", o.deg, "coefficient degree bound (default order + 4)");
    sub->add_option("--targets", o.targets, "c1 or c1c2")->check(CLI::IsMember({"c1", "c1c2"}))->capture_default_str();
  }
  add("orthogonality", "exact Gram blocks at even n", cmd_orthogonality)
      ->add_option("--wmax", o.wmax, "largest degree")
      ->capture_default_str();
  add("selftest", "quick exact checks", cmd_selftest);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Report rep;
  for (auto& [sub, fn] : cmds) {
    if (!sub->parsed()) continue;
    rep.command = sub->get_name();
    Stopwatch sw;
    try {
      fn(o, rep);
    } catch (const UsageError& e) {
      err << "matgeg " << rep.command << ": " << e.what() << "\n\n" << sub->help();
      return kExitUsage;
    } catch (const ParseError& e) {
      err << "matgeg " << rep.command << ": " << e.what() << '\n';
      return kExitUsage;
    }
    rep.elapsed = sw.seconds();
  }

  const bool json_stdout = o.json_path == "-";
  if (!json_stdout) out << rep.to_text();
  if (!o.json_path.empty()) {
    const std::string text = rep.to_json(o.timing).dump(2) + "\n";
    if (json_stdout) {
      out << text;
    } else {
      std::ofstream f(o.json_path);
      if (!f) {
        err << "cannot write " << o.json_path << '\n';
        return kExitUsage;
      }
      f << text;
    }
  }
  return rep.all_passed() ? kExitOk : kExitFalsified;
}

}  // namespace matgeg
