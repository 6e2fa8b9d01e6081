// mcgrw: derive / check / invariants / sw / pi1

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcg/errors.hpp"
#include "mcg/invariants.hpp"
#include "mcg/moves.hpp"
#include "mcg/pi1.hpp"
#include "mcg/registry.hpp"
#include "mcg/sw.hpp"

namespace {

using namespace mcg;

Registry load_registry(const std::string& path) {
  return path.empty() ? Registry::standard() : Registry::load(path);
}

int cmd_derive(const std::string& relator, const std::string& script, const std::string& out,
               const std::string& registry, bool trace) {
  const Registry reg = load_registry(registry);
  const WordInput input = parse_word_input(read_file(relator));
  const auto moves = parse_script(read_file(script));
  const DerivationCertificate cert = run_script(input, moves, reg);
  if (trace) {
    std::cerr << "0: " << to_string(cert.initial.word) << "\n";
    for (std::size_t k = 0; k < cert.steps.size(); ++k) {
      const auto& st = cert.steps[k];
      std::cerr << k + 1 << " [" << to_string(st.move) << "]: " << to_string(st.after) << "\n";
      for (const auto& e : st.evidence) std::cerr << "    " << e << "\n";
    }
  }
  const std::string json = certificate_to_json(cert);
  if (out.empty()) {
    std::cout << json;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ExitCode::kParse, "cannot write " + out);
  f << json;
  const auto& s = cert.summary;
  std::cout << "steps " << cert.steps.size() << "\n"
            << "final " << to_string(cert.final_word) << "\n"
            << "census n=" << s.census.n << " n0=" << s.census.nonseparating << " n1=" << s.census.separating << "\n"
            << "lantern contractions " << s.lantern_contractions << ", expansions " << s.lantern_expansions << "\n";
  if (!s.invariant_lines.empty()) {
    std::cout << invariant_header() << "\n";
    for (const auto& l : s.invariant_lines) std::cout << l << "\n";
  }
  for (const auto& a : s.annotations) std::cout << "note: " << a << "\n";
  std::cout << "certificate written to " << out << "\n";
  return 0;
}

int cmd_check(const std::string& path, const std::string& registry) {
  const Registry reg = load_registry(registry);
  const DerivationCertificate cert = certificate_from_json(read_file(path));
  check_certificate(cert, reg);
  std::cout << "ok: " << cert.steps.size() << " steps replayed, final word and summary verified\n";
  return 0;
}

int cmd_invariants(const std::string& path, const std::string& registry) {
  const Registry reg = load_registry(registry);
  const WordInput in = parse_word_input(read_file(path));
  const Census c = census(in.word, reg);
  const FibrationInvariants inv = fibration_invariants(c);
  std::cout << "word: " << to_string(in.word) << "\n"
            << "n = " << inv.n << " (nonseparating " << c.nonseparating << ", separating " << c.separating << ")\n"
            << "e = " << inv.e << "\n"
            << "sigma = " << inv.sigma << "\n"
            << "c1^2 = " << inv.c1sq << "\n"
            << "chi_h = " << inv.chi_h << "\n"
            << "b2+ = " << inv.b2plus << ", b2- = " << inv.b2minus << "\n";
  if (inv.b2plus > 0) {
    std::cout << "if simply connected with odd form: homeomorphic to " << homeo_type(inv) << "\n";
  }
  if (in.context != Context::kRelator) std::cout << "note: word not declared '= 1'; values are formal\n";
  std::cout << "--\n" << invariant_header() << "\n" << invariant_line(inv) << "\n";
  return 0;
}

int cmd_sw(const std::string& path) {
  const auto r = run_sw_script(read_file(path));
  std::cout << r.report;
  std::cout << "--\n" << to_string(r.final_sw) << "\n";
  if (r.last_minimality) {
    std::cout << "minimal " << (r.last_minimality->minimal ? "true" : "false") << "\n";
    for (const auto& p : r.last_minimality->pairs) std::cout << "witness " << to_string(p.square) << "\n";
  }
  return 0;
}

bool is_presentation(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line.substr(0, line.find('#')));
    std::string first;
    if (ls >> first) return first == "gens:";
  }
  return false;
}

int cmd_pi1(const std::string& path, std::size_t limit, bool h1_only, const std::string& registry) {
  const std::string text = read_file(path);
  FPGroup g;           // printed presentation
  FPGroup enumerated;  // the group handed to coset enumeration
  AbelianInvariants h1;
  bool degraded = false;
  if (is_presentation(text)) {
    g = parse_presentation(text);
    h1 = abelianization(g);
    enumerated = g;
    std::cout << "presentation: " << g.generators.size() << " generators, " << g.relators.size() << " relators\n";
  } else {
    const Registry reg = load_registry(registry);
    const WordInput in = parse_word_input(text);
    const TotalSpacePresentation p = total_space_presentation(in.word, reg);
    g = p.group;
    h1 = h1_quotient(in.word, reg);
    degraded = !p.abelianized.empty();
    enumerated = degraded ? p.loops_only : g;
    std::cout << "presentation: " << g.generators.size() << " generators, " << g.relators.size()
              << " relators (surface relator + " << in.word.size() - p.trivial_relators << " vanishing cycles";
    if (p.trivial_relators) std::cout << ", " << p.trivial_relators << " trivial dropped";
    std::cout << ")\n";
    if (degraded) {
      std::cout << "H1-level only: " << p.abelianized.size() << " relators abelianized (no pi1 word):\n";
      for (const auto& a : p.abelianized) std::cout << "  " << a << "\n";
    }
    const AbelianInvariants from_group = abelianization(g);
    if (from_group.divisors != h1.divisors) {
      throw VerificationError("H1 from the presentation " + to_string(from_group) + " differs from registry classes " +
                              to_string(h1));
    }
  }
  std::cout << to_text(g);
  std::cout << "H1 divisors " << to_string(h1) << (h1.trivial() ? " (trivial)" : " (nontrivial)") << "\n";
  std::optional<CosetResult> cr;
  if (!h1_only) {
    if (degraded) {
      std::cout << "coset enumeration on the surface relator and the " << enumerated.relators.size() - 1
                << " genuine loop relators (pi1 is a quotient of this group)\n";
    }
    cr = coset_enumerate(enumerated, limit);
    if (cr->complete) {
      std::cout << "coset enumeration: order " << cr->order << " (" << cr->defined << " cosets defined)\n";
      if (cr->order == 1 && !h1.trivial()) throw VerificationError("trivial group with nontrivial H1");
      if (cr->order == 1) std::cout << "pi1 trivial\n";
    } else {
      std::cout << "coset enumeration: LIMIT after " << cr->defined << " cosets\n";
    }
  }
  std::cout << "--\nh1 " << to_string(h1) << "\n";
  if (cr) std::cout << "cosets " << (cr->complete ? std::to_string(cr->order) : std::string("LIMIT")) << "\n";
  return cr && !cr->complete ? static_cast<int>(ExitCode::kResourceLimit) : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dehn twist word rewriting for genus-2 Lefschetz fibrations"};
  app.require_subcommand(1);
  std::string registry;

  std::string relator, script, out;
  bool trace = false;
  auto* derive = app.add_subcommand("derive", "apply a move script to a relator and emit a certificate");
  derive->add_option("relator", relator)->required()->check(CLI::ExistingFile);
  derive->add_option("script", script)->required()->check(CLI::ExistingFile);
  derive->add_option("-o,--output", out, "certificate path (default: stdout)");
  derive->add_option("--registry", registry)->check(CLI::ExistingFile);
  derive->add_flag("--trace", trace, "print every step to stderr");

  std::string cert;
  auto* check = app.add_subcommand("check", "replay a certificate");
  check->add_option("certificate", cert)->required()->check(CLI::ExistingFile);
  check->add_option("--registry", registry)->check(CLI::ExistingFile);

  std::string word;
  auto* inv = app.add_subcommand("invariants", "e, sigma, c1^2, chi_h, b2 of a relator");
  inv->add_option("relator", word)->required()->check(CLI::ExistingFile);
  inv->add_option("--registry", registry)->check(CLI::ExistingFile);

  std::string sw_script;
  auto* sw = app.add_subcommand("sw", "run a Seiberg-Witten script");
  sw->add_option("script", sw_script)->required()->check(CLI::ExistingFile);

  std::string pi1_input;
  std::size_t limit = 100000;
  bool h1_only = false;
  auto* pi1 = app.add_subcommand("pi1", "presentation, H1 and coset enumeration");
  pi1->add_option("input", pi1_input, "relator word file or 'gens:' presentation")->required()->check(CLI::ExistingFile);
  pi1->add_option("--limit", limit, "maximum number of cosets")->check(CLI::PositiveNumber);
  pi1->add_flag("--h1-only", h1_only);
  pi1->add_option("--registry", registry)->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::kParse);
  }

  try {
    if (*derive) return cmd_derive(relator, script, out, registry, trace);
    if (*check) return cmd_check(cert, registry);
    if (*inv) return cmd_invariants(word, registry);
    if (*sw) return cmd_sw(sw_script);
    if (*pi1) return cmd_pi1(pi1_input, limit, h1_only, registry);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kVerification);
  }
  return 0;
}
