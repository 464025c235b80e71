#pragma once

// Command-line front end. Exit codes: 0 ok, 1 parse or usage error,
// 2 check failure, 3 complexity cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qll/bayes.hpp"
#include "qll/rewrite.hpp"
#include "qll/semantics.hpp"

namespace qll {

namespace cli {

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw UsageError("cannot write '" + path + "'");
  o << text;
}

inline std::string decimal(const Value& v) {
  if (v.is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(6);
  os << v.to_float();
  return os.str();
}

// `A=x,y` or `x,y`.
inline std::set<std::string> event_arg(const std::string& s) {
  auto eq = s.find('=');
  return parse_event(eq == std::string::npos ? std::string_view(s) : std::string_view(s).substr(eq + 1));
}

}  // namespace cli

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact proof search, checking and rewriting for quantitative linear logic"};
  app.require_subcommand(1);

  std::string p_text = "1", theory_file, target, witness_file, out_file, ps_text = "1,2,4,8,16,inf";
  std::string density_file, given, event, valuation_file, softale = "real", grid = "0,1/3,1/2,1,2,3,inf";
  std::optional<int> cap;
  bool trace = false, unary = false;

  auto common = [&](CLI::App* c, bool with_theory) {
    c->add_option("--p", p_text, "hardness: positive rational or inf")->capture_default_str();
    if (with_theory) c->add_option("--theory", theory_file, "theory file");
  };

  auto* ev = app.add_subcommand("eval", "value of a structure; sequent leaves are replaced by their provability");
  ev->add_option("structure", target)->required();
  common(ev, true);

  auto* ck = app.add_subcommand("check", "check a derivation file and print its validity");
  ck->add_option("prooffile", target)->required();
  common(ck, true);

  auto* pv = app.add_subcommand("prove", "exact provability of a sequent");
  pv->add_option("sequent", target)->required();
  pv->add_option("--witness", witness_file, "write a proof of maximal validity here");
  pv->add_option("--cap", cap, "complexity cap");
  pv->add_flag("--unary-additives", unary, "at p = inf, search with unary additive rules");
  common(pv, true);

  auto* cf = app.add_subcommand("cutfree", "eliminate cuts from a derivation file");
  cf->add_option("prooffile", target)->required();
  cf->add_flag("--trace", trace, "print one line per rewrite step");
  cf->add_option("--out", out_file, "write the cut-free proof here instead of stdout");
  common(cf, true);

  auto* sw = app.add_subcommand("sweep", "provability of a sequent over several hardnesses");
  sw->add_option("sequent", target)->required();
  sw->add_option("--ps", ps_text, "comma separated hardnesses")->capture_default_str();
  sw->add_option("--theory", theory_file, "theory file");

  auto* by = app.add_subcommand("bayes", "conditional probability as provability");
  by->add_option("--density", density_file, "density file")->required();
  by->add_option("--given", given, "conditioning event, e.g. A=x,y")->required();
  by->add_option("--event", event, "event, e.g. B=y,z")->required();
  by->add_option("--cap", cap, "complexity cap");
  by->add_option("--p", p_text, "hardness")->capture_default_str();

  auto* sd = app.add_subcommand("soundness", "validity of a proof against its semantic value");
  sd->add_option("prooffile", target)->required();
  sd->add_option("--valuation", valuation_file, "valuation file")->required();
  common(sd, true);

  auto* ax = app.add_subcommand("axioms", "check softale axioms on a grid");
  ax->add_option("--softale", softale, "real | pointwise:<n> | corrupted")->capture_default_str();
  ax->add_option("--grid", grid, "comma separated values")->capture_default_str();
  ax->add_option("--p", p_text, "hardness")->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    Hardness p = Hardness::parse(p_text);
    Theory th = theory_file.empty() ? Theory{} : parse_theory(cli::read_file(theory_file));

    if (*ev) {
      Structure h = parse_structure(target, p);
      Prover pr(p, th);
      out << "value = " << structure_provability(h, pr).display() << "\n";
      return 0;
    }
    if (*ck) {
      Derivation d = parse_derivation(cli::read_file(target), p);
      auto v = check_derivation(d, p, th);
      if (!v.empty()) {
        for (const auto& x : v) out << "violation " << x.path << ": " << x.message << "\n";
        return 2;
      }
      out << "OK\n";
      out << "conclusion = " << to_string(d.bottom()) << "\n";
      if (is_closed(d.top())) out << "validity = " << validity(d).display() << "\n";
      return 0;
    }
    if (*pv) {
      ProverOptions o;
      o.complexity_cap = cap;
      o.unary_additives_at_infinity = unary;
      Prover pr(p, th, o);
      Sequent s = parse_sequent(target);
      auto r = pr.prove(s);
      out << "provability = " << r.value.display() << "\n";
      if (!witness_file.empty()) cli::write_file(witness_file, to_string(r.witness) + "\n");
      return 0;
    }
    if (*cf) {
      Derivation d = parse_derivation(cli::read_file(target), p);
      auto v = check_derivation(d, p, th);
      if (!v.empty()) {
        for (const auto& x : v) err << "violation " << x.path << ": " << x.message << "\n";
        return 2;
      }
      auto r = cut_eliminate(d, p, th);
      if (trace)
        for (const auto& s : r.trace) out << s.str() << "\n";
      std::string proof = to_string(r.result) + "\n";
      if (out_file.empty()) out << proof; else cli::write_file(out_file, proof);
      out << "validity " << validity(d).display() << " -> " << validity(r.result).display() << "\n";
      if (!r.metric_not_decreasing.empty())
        out << "note: cut metric did not decrease at " << r.metric_not_decreasing.size() << " step(s)\n";
      bool bad = !r.validity_decreasing.empty() || !r.conclusion_changed.empty() ||
                 !check_derivation(r.result, p, th).empty();
      if (bad) {
        err << "cut elimination broke validity monotonicity or the conclusion\n";
        return 2;
      }
      return 0;
    }
    if (*sw) {
      Sequent s = parse_sequent(target);
      std::stringstream ss(ps_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        Hardness q = Hardness::parse(item);
        out << "p=" << q.str() << " " << cli::decimal(Prover(q, th).value(s)) << "\n";
      }
      return 0;
    }
    if (*by) {
      Density d = parse_density(cli::read_file(density_file));
      auto a = cli::event_arg(given), b = cli::event_arg(event);
      auto r = conditional_odds(d, a, b, p, cap ? cap : std::optional<int>(default_bayes_cap));
      out << "sequent = " << to_string(r.sequent) << "\n";
      out << "conditional odds = " << r.value.display() << "\n";
      out << "oracle = " << conditional_oracle(d, a, b, p).display() << "\n";
      if (r.empty_intersection) out << "note: events are disjoint, consequent is bot\n";
      if (!(p == Hardness(1))) out << "note: hardness other than 1\n";
      return 0;
    }
    if (*sd) {
      Derivation d = parse_derivation(cli::read_file(target), p);
      auto v = check_derivation(d, p, th);
      if (!v.empty()) {
        for (const auto& x : v) err << "violation " << x.path << ": " << x.message << "\n";
        return 2;
      }
      auto val = parse_valuation(cli::read_file(valuation_file), p);
      auto [lhs, rhs] = soundness_gap(d, val, RealSoftale{p});
      out << "validity = " << lhs.display() << "\n";
      out << "semantic = " << rhs.display() << "\n";
      bool ok = leq(lhs, rhs);
      out << (ok ? "sound" : "UNSOUND") << "\n";
      return ok ? 0 : 2;
    }
    if (*ax) {
      auto values = parse_grid(grid, p);
      AxiomReport rep;
      if (softale == "real") {
        rep = check_softale_axioms(RealSoftale{p}, values);
      } else if (softale == "corrupted") {
        rep = check_softale_axioms(CorruptedTensorSoftale{{p}}, values);
      } else if (softale.starts_with("pointwise:")) {
        std::size_t n = std::stoul(softale.substr(10));
        if (n < 1) throw UsageError("pointwise size must be at least 1");
        rep = check_softale_axioms(PointwiseSoftale{n, p}, tuples_over(values, n));
      } else {
        throw UsageError("unknown softale '" + softale + "'");
      }
      out << "softale " << rep.softale << " grid " << rep.grid_size << "\n";
      for (const auto& [name, count] : rep.instances) {
        if (name == "prelinearity") continue;
        auto bad = rep.violation_count.count(name) ? rep.violation_count.at(name) : 0;
        out << name << " " << (bad ? "FAIL" : "ok") << " " << count - bad << "/" << count << "\n";
      }
      for (const auto& x : rep.violations)
        out << "  violated " << x.axiom << " at " << x.witness << ": " << x.lhs.literal() << " vs " << x.rhs.literal()
            << "\n";
      auto pre = rep.violation_count.count("prelinearity") ? rep.violation_count.at("prelinearity") : 0;
      out << "prelinearity " << (pre ? "no" : "yes") << "\n";
      for (const auto& x : rep.prelinearity) out << "  counterexample " << x.witness << "\n";
      return rep.ok() ? 0 : 2;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace qll
