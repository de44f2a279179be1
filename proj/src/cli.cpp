#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ybe/errors.hpp"
#include "ybe/report.hpp"

namespace ybe {

namespace {

using nlohmann::json;

std::string join_vec(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Settings {
  std::string file;
  bool as_json = false;
  bool list = false;
  std::uint64_t max_germ = GermOptions{}.max_size;
  std::uint64_t seed = TripleSampling{}.seed;
  int radius = 4;
  bool radius_given = false;
  std::string word;
  std::string out_path;
};

int cmd_validate(const Settings& st, std::ostream& out) {
  const Solution s = load_solution_file(st.file);
  out << "valid solution, n = " << s.size() << "\n";
  return 0;
}

int cmd_info(const Settings& st, std::ostream& out) {
  const Solution s = load_solution_file(st.file);
  const SolutionProfile p = profile(s);
  if (st.as_json) {
    out << to_json(p).dump(2) << "\n";
    return 0;
  }
  out << "n = " << p.n << "\n";
  out << "class m = " << p.class_m << "\n";
  out << "D = " << p.diagonal.to_string() << "\n";
  out << "condition (C): " << yes_no(p.condition_c) << "\n";
  out << "square-free: " << yes_no(p.square_free) << "\n";
  out << "|IYB group| = " << p.iyb_order << "\n";
  out << "retraction sizes:";
  for (const auto k : p.retraction_sizes) out << ' ' << k;
  out << "\nmultipermutation level: "
      << (p.multipermutation_level ? std::to_string(*p.multipermutation_level)
                                   : std::string("irretractable"))
      << "\n";
  out << "frozen elements:\n";
  for (std::size_t k = 0; k < p.frozen.size(); ++k) {
    out << "  theta_" << k + 1 << " = " << word_label(p.frozen[k]) << "\n";
  }
  return 0;
}

int cmd_germ(const Settings& st, std::ostream& out) {
  const Germ g = Germ::build(load_solution_file(st.file), {st.max_germ});
  if (st.as_json) {
    out << germ_to_json(g).dump(2) << "\n";
    return 0;
  }
  if (st.list) {
    for (const auto& s : g.simples()) {
      out << join_vec(s.residue) << ' ' << s.phi.to_string() << ' ' << word_label(s.witness)
          << "\n";
    }
    return 0;
  }
  out << "class m = " << g.class_m() << ", germ size = " << g.size() << "\n";
  return 0;
}

int cmd_brace(const Settings& st, std::ostream& out) {
  const Germ g = Germ::build(load_solution_file(st.file), {st.max_germ});
  TripleSampling sampling;
  sampling.seed = st.seed;
  const BraceLawReport r = check_brace_laws(g, sampling);
  if (st.as_json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "brace laws: " << (r.passed ? "pass" : "FAIL") << " (" << r.triples_checked
        << " triples, " << (r.exhaustive ? "exhaustive over simples" : "sampled, seed " + std::to_string(r.seed))
        << ")\n";
    if (r.counterexample) out << "counterexample: " << *r.counterexample << "\n";
  }
  return r.passed ? 0 : 1;
}

int cmd_rep(const Settings& st, std::ostream& out, std::ostream& err) {
  const DimensionResult r = dimension_analysis(load_solution_file(st.file), {st.max_germ});
  std::ofstream file(st.out_path);
  if (!file) {
    err << "cannot write " << st.out_path << "\n";
    return 1;
  }
  file << rep_to_json(r).dump(2) << "\n";
  out << "wrote " << r.spanning.size() << " matrices, dimension " << r.report.dimension << " to "
      << st.out_path << "\n";
  return 0;
}

int cmd_dim(const Settings& st, std::ostream& out) {
  const Solution s = load_solution_file(st.file);
  const DimensionResult result = dimension_analysis(s, {st.max_germ});
  DimensionReport r = result.report;
  if (st.radius_given) {
    r.ball_rank = oracle::check_span_stabilization(s, st.radius).ranks.back();
  }
  if (st.as_json) {
    out << to_json(r).dump(2) << "\n";
    return 0;
  }
  out << "n = " << r.n << ", class m = " << r.class_m << ", |IYB group| = " << r.iyb_order << "\n";
  out << "spanning set (" << r.spanning_labels.size() << "), * = kept in basis:\n";
  for (std::size_t i = 0; i < r.spanning_labels.size(); ++i) {
    const bool kept =
        std::find(r.basis_indices.begin(), r.basis_indices.end(), i) != r.basis_indices.end();
    out << "  " << (kept ? '*' : ' ') << " psi(" << r.spanning_labels[i] << ")\n";
  }
  out << "dimension = " << r.dimension << " (bound " << r.bound << ")\n";
  out << "simples-only rank = " << r.simples_only_rank
      << " (simples span: " << yes_no(r.simples_span) << ")\n";
  if (r.ball_rank) out << "ball rank at radius " << st.radius << " = " << *r.ball_rank << "\n";
  return 0;
}

int cmd_oracle(const Settings& st, std::ostream& out) {
  const Solution s = load_solution_file(st.file);
  const auto inj = oracle::check_pi_injectivity(s, st.radius);
  const auto counts = oracle::check_counts(s);
  const auto span = oracle::check_span_stabilization(s, st.radius);
  const auto dim = dimension_report(s, {st.max_germ});
  const bool span_agrees = !span.stabilized_rank || *span.stabilized_rank == dim.dimension;
  const bool ok = inj.passed && counts.passed && span_agrees;

  if (st.as_json) {
    json j{{"radius", st.radius},
           {"injectivity", to_json(inj)},
           {"counts", to_json(counts)},
           {"span", to_json(span)},
           {"dimension", dim.dimension},
           {"span_agrees", span_agrees},
           {"passed", ok}};
    out << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  out << "pi injectivity (radius " << inj.radius << ", " << inj.states
      << " elements): " << (inj.passed ? "pass" : "FAIL") << "\n";
  if (inj.witness) out << "  witness: " << *inj.witness << "\n";
  out << "germ count " << counts.germ_count << " (expected " << counts.germ_expected << ")\n";
  if (counts.div_delta_count) {
    out << "Div(Delta) count " << *counts.div_delta_count << " (expected "
        << counts.div_delta_expected << ")\n";
  }
  out << "|T| * |T_K| = " << counts.kernel_reps << " * " << counts.kernel_cosets << ", |IYB| = "
      << counts.iyb_order << ": " << (counts.passed ? "pass" : "FAIL") << "\n";
  out << "span ranks by radius:";
  for (const auto r : span.ranks) out << ' ' << r;
  out << "\n";
  if (span.stabilized_rank) {
    out << "stabilized at " << *span.stabilized_rank << ", dimension " << dim.dimension << ": "
        << (span_agrees ? "agree" : "DISAGREE") << "\n";
  } else {
    out << "not stabilized at radius " << st.radius << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_element(const Settings& st, std::ostream& out, std::ostream& err) {
  const Germ g = Germ::build(load_solution_file(st.file), {st.max_germ});
  std::istringstream in(st.word);
  GroupElement e = g.identity();
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    int x = 0;
    try {
      std::size_t used = 0;
      x = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      err << "bad letter '" << token << "' in --word\n";
      return 2;
    }
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > g.rank()) {
      err << "letter " << x << " out of range 1.." << g.rank() << " (negative = inverse)\n";
      return 2;
    }
    letters.push_back(x);
    const GroupElement gen = g.generator(std::abs(x) - 1);
    e = g.multiply(e, x > 0 ? gen : g.inverse(gen));
  }
  const Decomposition d = decompose(g, e);
  const AffineMatrix m = psi(g, e);
  if (st.as_json) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < m.matrix().rows(); ++i) {
      rows.emplace_back();
      for (std::size_t j = 0; j < m.matrix().cols(); ++j) rows.back().push_back(m.matrix()(i, j));
    }
    json j{{"word", letters},
           {"vector", e.vec},
           {"phi", g.phi(e).one_line()},
           {"psi", rows},
           {"decomposition", {{"simple", d.simple.vec}, {"alpha", d.alpha}}}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "pi = " << join_vec(e.vec) << "\n";
  out << "phi = " << g.phi(e).to_string() << " = " << g.phi(e).cycle_string() << "\n";
  out << "psi =\n" << m.matrix().to_string();
  out << "simple = " << join_vec(d.simple.vec) << " ("
      << word_label(g.simple_at_residue(d.simple.vec).witness) << "), alpha = " << join_vec(d.alpha)
      << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Garside and structure-group invariants of involutive Yang-Baxter solutions", "ybe"};
  app.require_subcommand(1);
  Settings st;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", st.file, "solution JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", st.as_json, "machine-readable output"); };
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--max-germ", st.max_germ, "refuse germs larger than N = m^n")
        ->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check the solution axioms");
  add_file(validate);

  auto* info = app.add_subcommand("info", "class, diagonal map, frozen words, retraction");
  add_file(info);
  add_json(info);

  auto* germ = app.add_subcommand("germ", "enumerate the simples Div(Delta^{m-1})");
  add_file(germ);
  add_json(germ);
  add_guard(germ);
  germ->add_flag("--list", st.list, "one line per simple: residue, phi, witness word");

  auto* brace = app.add_subcommand("brace-check", "verify the left brace laws");
  add_file(brace);
  add_json(brace);
  add_guard(brace);
  brace->add_option("--seed", st.seed, "seed for sampled triples")->capture_default_str();

  auto* rep = app.add_subcommand("rep", "write the spanning matrices as JSON");
  add_file(rep);
  add_guard(rep);
  rep->add_option("--out", st.out_path, "output path")->required();

  auto* dim = app.add_subcommand("dim", "dimension of the image algebra");
  add_file(dim);
  add_json(dim);
  add_guard(dim);
  dim->add_option("--radius", st.radius, "also report the rank over the word ball of radius R");

  auto* orc = app.add_subcommand("oracle", "brute-force cross-checks");
  add_file(orc);
  add_json(orc);
  add_guard(orc);
  orc->add_option("--radius", st.radius, "word length for ball enumeration")->capture_default_str();

  auto* element = app.add_subcommand("element", "pi, phi, psi and decomposition of a word");
  add_file(element);
  add_json(element);
  add_guard(element);
  element->add_option("--word", st.word, "letters 1..n separated by spaces; -x is x^{-1}")
      ->required();

  std::vector<const char*> argv{"ybe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  st.radius_given = dim->count("--radius") > 0;
  if (st.radius < 0) {
    err << "--radius must be >= 0\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(st, out);
    if (*info) return cmd_info(st, out);
    if (*germ) return cmd_germ(st, out);
    if (*brace) return cmd_brace(st, out);
    if (*rep) return cmd_rep(st, out, err);
    if (*dim) return cmd_dim(st, out);
    if (*orc) return cmd_oracle(st, out);
    if (*element) return cmd_element(st, out, err);
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "invalid solution: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ybe
