// Exhaustive search for small representations with odd entries in {-1, 0, 1}.
// Every hit is re-checked with the library and can be written as a .rep file.

#include "antialg/builtins.hpp"
#include "antialg/errors.hpp"
#include "antialg/io.hpp"
#include "antialg/reps.hpp"
#include "oracle/rep_search.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

antialg::RepDef to_rep(const antialg::AlgebraDef& alg, const oracle::Candidate& c) {
  std::vector<antialg::GradedMatrix> images;
  for (std::size_t i = 0; i < alg.size(); ++i)
    images.emplace_back(c.d0, c.d1, alg.parity(i), antialg::Matrix::from_rows(c.images[i]));
  return antialg::RepDef(alg, c.d0, c.d1, std::move(images));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brute-force search for small representations", "rep-search"};
  std::string file;
  std::size_t max_dim = 3;
  bool emit = false;
  app.add_option("algebra", file, "Algebra file (default: the built-in k3)");
  app.add_option("--max-dim", max_dim, "Largest d0 + d1")->check(CLI::Range(2, 4));
  app.add_flag("--emit", emit, "Print every nonzero representation found");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const antialg::AlgebraDef alg = file.empty() ? antialg::k3() : antialg::parse_algebra_file(antialg::read_file(file));
    std::size_t total_nonzero = 0, disagreements = 0;
    for (std::size_t n = 2; n <= max_dim; ++n)
      for (std::size_t d0 = 1; d0 < n; ++d0) {
        std::size_t candidates = 0, reps = 0, nonzero = 0;
        oracle::enumerate(alg, d0, n - d0, [&](const oracle::Candidate& c) {
          ++candidates;
          const antialg::RepDef rep = to_rep(alg, c);
          const bool lib = antialg::all_passed(antialg::check_rep(rep));
          if (lib != c.is_rep) ++disagreements;
          if (!c.is_rep) return;
          ++reps;
          if (rep.is_zero()) return;
          ++nonzero;
          if (emit) std::cout << antialg::emit_rep_file(rep);
        });
        total_nonzero += nonzero;
        std::cout << "dims " << d0 << "|" << n - d0 << ": candidates=" << candidates << " reps=" << reps
                  << " nonzero=" << nonzero << "\n";
      }
    std::cout << "algebra=" << alg.name() << " nonzero=" << total_nonzero << " disagreements=" << disagreements
              << "\n";
    return disagreements == 0 ? 0 : 1;
  } catch (const antialg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
