#include "antialg/cli.hpp"

#include "antialg/adjoint.hpp"
#include "antialg/axioms.hpp"
#include "antialg/builtins.hpp"
#include "antialg/densities.hpp"
#include "antialg/errors.hpp"
#include "antialg/geom.hpp"
#include "antialg/io.hpp"
#include "antialg/reps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

namespace antialg {

namespace {

/// Collects checks and key=value pairs, then prints them in one go.
class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void add(const NamedCheck& c) { checks_.push_back(c); }
  void add(const CheckList& cs) { checks_.insert(checks_.end(), cs.begin(), cs.end()); }
  void fail(std::string id, std::string witness) { add(make_check(std::move(id), false, 0, std::move(witness))); }
  void kv(std::string key, std::string value) { kv_.emplace_back(std::move(key), std::move(value)); }

  int finish() {
    std::size_t passed = 0, failed = 0, skipped = 0, tuples_skipped = 0;
    for (const auto& c : checks_) {
      tuples_skipped += c.skipped;
      switch (c.verdict) {
        case Verdict::pass:
          ++passed;
          out_ << "PASS " << c.id << "\n";
          break;
        case Verdict::fail:
          ++failed;
          out_ << "FAIL " << c.id << " " << c.witness << "\n";
          break;
        case Verdict::skipped_out_of_window:
          ++skipped;
          out_ << "SKIP " << c.id << " " << c.skipped << "\n";
          break;
      }
    }
    out_ << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    out_ << "---\n";
    for (const auto& [k, v] : kv_) out_ << k << "=" << v << "\n";
    out_ << "checks=" << checks_.size() << "\n";
    out_ << "failed=" << failed << "\n";
    out_ << "skipped_tuples=" << tuples_skipped << "\n";
    for (const auto& c : checks_) out_ << c.id << ".checked=" << c.checked << "\n";
    out_ << "status=" << (failed == 0 ? "pass" : "fail") << "\n";
    return failed == 0 ? kExitOk : kExitFail;
  }

 private:
  std::ostream& out_;
  CheckList checks_;
  std::vector<std::pair<std::string, std::string>> kv_;
};

std::string dims(const AlgebraDef& alg) {
  return std::to_string(alg.dim(Parity::even)) + "|" + std::to_string(alg.dim(Parity::odd));
}

AlgebraDef load_algebra(const std::string& path) { return parse_algebra_file(read_file(path)); }

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::optional<WindowSpec> window_of(const std::string& bound, const std::string& guard) {
  if (bound.empty()) {
    if (!guard.empty()) throw InputError("--guard needs --window");
    return std::nullopt;
  }
  const Rational b = parse_rational(bound);
  return WindowSpec(b, guard.empty() ? b : parse_rational(guard));
}

std::string first_lines(const std::vector<std::string>& lines, std::size_t k) {
  std::string s;
  for (std::size_t i = 0; i < lines.size() && i < k; ++i) s += (i ? "; " : "") + lines[i];
  if (lines.size() > k) s += "; ...";
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie antialgebra toolkit", "antialg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::function<int()> action;

  // check
  std::string file, file2, profile_text, output;
  bool serial = false;
  auto* check = app.add_subcommand("check", "Check a table against the axioms of a profile");
  check->add_option("file", file, "Algebra file")->required();
  check->add_option("--profile", profile_text, "antialgebra, lie-super, jordan-super (default: file hint)");
  check->add_flag("--serial", serial, "Use the serial kernel");
  check->callback([&] {
    action = [&] {
      const AlgebraDef alg = load_algebra(file);
      Profile p = alg.hint();
      if (!profile_text.empty()) {
        auto parsed = parse_profile(profile_text);
        if (!parsed || *parsed == Profile::none) throw InputError("unknown profile '" + profile_text + "'");
        p = *parsed;
      }
      if (p == Profile::none) throw InputError("no profile given and the file has no profile hint");
      Reporter r(out);
      const Report rep = check_profile(alg, p, serial ? Execution::serial : Execution::parallel);
      r.add(to_checks(rep, alg, to_string(p)));
      r.kv("command", "check");
      r.kv("algebra", alg.name());
      r.kv("dims", dims(alg));
      r.kv("profile", std::string(to_string(p)));
      return r.finish();
    };
  });

  // adjoint
  auto* adjoint = app.add_subcommand("adjoint", "Build the adjoint Lie superalgebra");
  adjoint->add_option("file", file, "Algebra file")->required();
  adjoint->add_option("-o,--output", output, "Output algebra file ('-' for stdout)")->required();
  adjoint->callback([&] {
    action = [&] {
      const AlgebraDef alg = load_algebra(file);
      Reporter r(out);
      const Adjoint adj = adjoint_algebra(alg);
      const AlgebraDef& g = adj.lie.algebra;
      r.add(check_well_defined(adj, alg));
      r.add(to_checks(check_profile(g, Profile::lie_super), g, "lie-super"));
      write_text(output, emit_algebra_file(g), out);
      r.kv("command", "adjoint");
      r.kv("algebra", g.name());
      r.kv("dims", dims(g));
      r.kv("output", output);
      return r.finish();
    };
  });

  // derivations
  auto* ders = app.add_subcommand("derivations", "Solve for the derivation superalgebra");
  ders->add_option("file", file, "Algebra file")->required();
  ders->callback([&] {
    action = [&] {
      const AlgebraDef alg = load_algebra(file);
      const Derivations d = derivations(alg);
      Reporter r(out);
      out << emit_algebra_file(d.lie.algebra);
      r.add(to_checks(check_profile(d.lie.algebra, Profile::lie_super), d.lie.algebra, "lie-super"));
      r.kv("command", "derivations");
      r.kv("algebra", alg.name());
      r.kv("dims", dims(d.lie.algebra));
      return r.finish();
    };
  });

  // embed-check
  auto* embed = app.add_subcommand("embed-check", "Compare the adjoint algebra with the derivations");
  embed->add_option("file", file, "Algebra file")->required();
  embed->callback([&] {
    action = [&] {
      const AlgebraDef alg = load_algebra(file);
      const EmbeddingReport e = embedding_check(alg);
      Reporter r(out);
      r.add(e.checks);
      r.kv("command", "embed-check");
      r.kv("algebra", alg.name());
      r.kv("adjoint_dims", std::to_string(e.g_even) + "|" + std::to_string(e.g_odd));
      r.kv("der_dims", std::to_string(e.der_even) + "|" + std::to_string(e.der_odd));
      r.kv("surjective", e.surjective ? "true" : "false");
      return r.finish();
    };
  });

  // rep-check
  bool osp = false;
  auto* repcheck = app.add_subcommand("rep-check", "Check a representation");
  repcheck->add_option("algebra", file, "Algebra file")->required();
  repcheck->add_option("rep", file2, "Representation file")->required();
  repcheck->add_flag("--osp", osp, "Also test the osp(1|2) relations (needs symbols eps, a, b)");
  repcheck->callback([&] {
    action = [&] {
      const AlgebraDef alg = load_algebra(file);
      const RepDef rep = parse_rep_file(read_file(file2), alg);
      Reporter r(out);
      r.add(check_rep(rep));
      if (osp) {
        auto img = [&](std::string_view s) {
          auto k = alg.find(s);
          if (!k) throw InputError("--osp needs a symbol '" + std::string(s) + "'");
          return rep.image(*k);
        };
        const OspRelationReport o = k3_osp_relations(img("a"), img("b"), img("eps"));
        r.add(o.phase1);
        r.add(o.phase2);
      }
      r.kv("command", "rep-check");
      r.kv("algebra", alg.name());
      r.kv("rep_dims", std::to_string(rep.d0()) + "|" + std::to_string(rep.d1()));
      r.kv("zero", rep.is_zero() ? "true" : "false");
      return r.finish();
    };
  });

  // induce
  auto* induce = app.add_subcommand("induce", "Induce a representation of the adjoint algebra");
  induce->add_option("algebra", file, "Algebra file")->required();
  induce->add_option("rep", file2, "Representation file")->required();
  induce->add_option("-o,--output", output, "Write the induced representation ('-' for stdout)");
  induce->callback([&] {
    action = [&] {
      const AlgebraDef alg = load_algebra(file);
      const RepDef rep = parse_rep_file(read_file(file2), alg);
      const InducedRep ind = induce_superrep(rep);
      Reporter r(out);
      r.add(ind.checks);
      if (!output.empty()) write_text(output, emit_rep_file(ind.rep), out);
      r.kv("command", "induce");
      r.kv("algebra", ind.adjoint.lie.algebra.name());
      r.kv("rep_dims", std::to_string(ind.rep.d0()) + "|" + std::to_string(ind.rep.d1()));
      return r.finish();
    };
  });

  // builtin
  std::string name, bound, guard;
  auto* bi = app.add_subcommand("builtin", "Emit a built-in algebra");
  bi->add_option("name", name, "k3, ak1, osp12, k1, witt")->required();
  bi->add_option("--window", bound, "Window bound (ak1, k1, witt)");
  bi->add_option("--guard", guard, "Guard band (default: the bound)");
  bi->add_option("-o,--output", output, "Output file (default stdout)");
  bi->callback([&] {
    action = [&] {
      const AlgebraDef alg = builtin(parse_builtin(name), window_of(bound, guard));
      write_text(output.empty() ? "-" : output, emit_algebra_file(alg), out);
      return int(kExitOk);
    };
  });

  // bivectors
  int max_deg = 1;
  auto* biv = app.add_subcommand("bivectors", "Solve for invariant bivectors");
  biv->add_option("--max-deg", max_deg, "Maximal coefficient degree")->required()->check(CLI::Range(0, 4));
  biv->callback([&] {
    action = [&] {
      const BivectorSpace s = invariant_bivectors(max_deg);
      for (std::size_t k = 0; k < s.basis.size(); ++k)
        out << "basis " << k << " " << to_string(s.parity[k]) << ": " << to_string(s.basis[k]) << "\n";
      Reporter r(out);
      r.add(make_check("bivectors.contains-P", s.contains(poisson_bivector()), 1, "P not in the solution space"));
      if (max_deg >= 1)
        r.add(make_check("bivectors.contains-Lambda", s.contains(lambda_bivector()), 1,
                         "Lambda not in the solution space"));
      r.kv("command", "bivectors");
      r.kv("max_deg", std::to_string(max_deg));
      r.kv("dim", std::to_string(s.basis.size()));
      return r.finish();
    };
  });

  // extract
  std::string space;
  int window = -1;
  auto* ex = app.add_subcommand("extract", "Extract a table from a space of functions");
  ex->add_option("--space", space, "linear, quadratic, deg1-window, deg2-window")->required();
  ex->add_option("--window", window, "Label bound for window spaces")->check(CLI::NonNegativeNumber);
  ex->add_option("-o,--output", output, "Output file (default stdout)");
  ex->callback([&] {
    action = [&] {
      const AlgebraDef alg =
          extract_table(parse_function_space(space), window < 0 ? std::nullopt : std::optional<int>(window));
      write_text(output.empty() ? "-" : output, emit_algebra_file(alg), out);
      return int(kExitOk);
    };
  });

  // densities
  std::size_t samples = 100;
  std::uint64_t seed = 0x5eed;
  auto* dens = app.add_subcommand("densities", "Sampled checks of the tensor-density brackets");
  dens->add_option("--samples", samples, "Number of sampled triples")->required();
  dens->add_option("--seed", seed, "Sampling seed");
  dens->add_option("--window", bound, "Also check the compatibility identity on this window");
  dens->add_option("--guard", guard, "Guard band for --window");
  dens->callback([&] {
    action = [&] {
      Reporter r(out);
      r.add(check_poisson_leibniz(samples, seed));
      if (auto w = window_of(bound, guard)) r.add(check_compatibility(*w));
      r.kv("command", "densities");
      r.kv("samples", std::to_string(samples));
      r.kv("seed", std::to_string(seed));
      return r.finish();
    };
  });

  // realize
  auto* re = app.add_subcommand("realize", "Realize a window of densities and compare with the built-in");
  re->add_option("--space", space, "antialgebra or liesuper")->required();
  re->add_option("--window", bound, "Window bound")->required();
  re->add_option("--guard", guard, "Guard band (default: the bound)");
  re->add_option("-o,--output", output, "Also write the realized table ('-' for stdout)");
  re->callback([&] {
    action = [&] {
      const DensitySpace s = parse_density_space(space);
      const WindowSpec w = *window_of(bound, guard);
      const AlgebraDef alg = realize_window(s, w);
      if (!output.empty()) write_text(output, emit_algebra_file(alg), out);
      Reporter r(out);
      if (s == DensitySpace::antialgebra) {
        const auto diff = table_diff(alg, builtin(BuiltinName::ak1, w));
        r.add(make_check("realize.diff-ak1", diff.empty(), alg.size() * alg.size(), first_lines(diff, 3)));
        r.kv("diff_entries", std::to_string(diff.size()));
      } else {
        r.add(to_checks(check_profile(alg, Profile::lie_super), alg, "lie-super"));
      }
      r.kv("command", "realize");
      r.kv("algebra", alg.name());
      r.kv("dims", dims(alg));
      return r.finish();
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto sub = app.get_subcommands();
    err << (sub.empty() ? app.help() : sub.front()->help());
    return kExitInput;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    Reporter r(out);
    r.fail("precondition", e.what());
    return r.finish();
  } catch (const OutOfWindow& e) {
    Reporter r(out);
    r.fail("out-of-window", e.what());
    return r.finish();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace antialg
