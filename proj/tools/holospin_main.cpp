#include <algorithm>
#include <cctype>
#include <chrono>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holospin/catalog.hpp"
#include "holospin/engine.hpp"
#include "holospin/output.hpp"
#include "holospin/spinor.hpp"
#include "holospin/verify.hpp"

namespace {

using namespace holospin;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct KernelOpts {
  std::string group;
  int p = 0;
  int q = 0;
  bool show_basis = false;
  bool gram = false;
  bool variants = false;
  std::string format = "json";
};

// The echo in the payload is rebuilt from the parsed values in a fixed
// order, so equivalent invocations produce identical documents.
std::string kernel_echo(const std::string& cmd, const KernelOpts& o, bool variants_flag) {
  std::ostringstream os;
  os << cmd << " --group " << lower(o.group) << " --p " << o.p << " --q " << o.q;
  if (o.show_basis) os << " --show-basis";
  if (o.gram) os << " --gram";
  if (variants_flag && o.variants) os << " --variants";
  os << " --format " << o.format;
  return os.str();
}

std::size_t log2_size(std::size_t dim) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < dim) ++m;
  return m;
}

// "u(1,-1)" terms with explicit non-unit coefficients
std::string spinor_terms(const Spinor& v) {
  const Spinor u = in_basis(v, SpinorBasis::u_tensor);
  const std::size_t m = log2_size(u.coords.size());
  std::string out;
  for (std::size_t idx = 0; idx < u.coords.size(); ++idx) {
    const FieldScalar& c = u.coords[idx];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.str() + ")*";
    out += "u" + EpsilonTuple::from_index(idx, m).str();
  }
  return out.empty() ? "0" : out;
}

void print_gram_markdown(std::ostream& os, const GramReport& g) {
  os << "gram matrix:\n";
  for (std::size_t i = 0; i < g.gram.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < g.gram.cols(); ++j)
      os << (j ? ", " : " ") << g.gram.at(i, j).str();
    os << " ]\n";
  }
  os << "causal tags:";
  for (CausalTag t : g.tags) os << " " << causal_tag_name(t);
  os << "\n";
}

void print_report_markdown(std::ostream& os, const FixedSpaceReport& rep, bool show_basis,
                           bool gram) {
  os << "# " << display_name(rep.id) << "\n\n";
  os << "signature: " << rep.signature.str() << ", n = " << rep.signature.n() << "\n";
  os << "N = " << rep.dim << "\n";
  os << "chirality: " << chirality_split_str(rep.chirality_split, rep.dim) << "\n";
  for (const std::string& note : rep.notes) os << "note: " << note << "\n";
  if (show_basis)
    for (std::size_t i = 0; i < rep.basis.size(); ++i)
      os << "phi_" << i + 1 << " = " << spinor_terms(rep.basis[i]) << "\n";
  if (gram && rep.gram) print_gram_markdown(os, *rep.gram);
}

void print_variants_markdown(std::ostream& os, const VariantsReport& vr, bool show_basis,
                             bool gram) {
  for (const VariantReport& var : vr.variants) {
    os << "\n## " << var.label << "\n\n";
    if (!var.available) {
      os << "unavailable: " << var.reason << "\n";
      continue;
    }
    os << "N = " << var.basis.size() << "\n";
    os << "chirality: " << chirality_split_str(var.chirality_split, var.basis.size()) << "\n";
    for (const std::string& check : var.checks) os << "check: " << check << "\n";
    if (show_basis)
      for (std::size_t i = 0; i < var.basis.size(); ++i)
        os << "phi_" << i + 1 << " = " << spinor_terms(var.basis[i]) << "\n";
    if (gram && var.gram) print_gram_markdown(os, *var.gram);
  }
}

int run_kernel(const KernelOpts& o, bool always_variants) {
  const auto t0 = Clock::now();
  HolonomyId id;
  try {
    id.family = family_from_name(o.group);
    id.p = o.p;
    id.q = o.q;
    validate(id);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const FixedSpaceReport rep = fixed_space(id);
  const bool with_variants = always_variants || o.variants;
  const std::string echo =
      kernel_echo(always_variants ? "variants" : "kernel", o, !always_variants);

  if (o.format == "markdown") {
    print_report_markdown(std::cout, rep, o.show_basis, o.gram);
    if (with_variants)
      print_variants_markdown(std::cout, orientation_variants(rep), o.show_basis, o.gram);
    return 0;
  }

  Json results{{"report", report_json(rep, o.show_basis, o.gram)}};
  if (with_variants) {
    Json vars = Json::array();
    for (const VariantReport& var : orientation_variants(rep).variants)
      vars.push_back(variant_json(var, o.show_basis, o.gram));
    results["variants"] = std::move(vars);
  }
  std::cout << output_document(echo, std::move(results), elapsed_ms(t0)).dump(2) << "\n";
  return 0;
}

int run_table(std::size_t max_n, const std::string& format) {
  const auto t0 = Clock::now();
  const std::vector<TheoremEntry> rows = theorem_table(max_n);
  std::size_t failures = 0;
  for (const TheoremEntry& e : rows)
    if (!e.pass) ++failures;

  if (format == "markdown") {
    std::cout << table_markdown(rows);
  } else {
    std::ostringstream echo;
    echo << "table --max-n " << max_n << " --format " << format;
    Json results{{"table", table_json(rows)}};
    std::cout << output_document(echo.str(), std::move(results), elapsed_ms(t0)).dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

int run_verify_cmd(const std::string& suite) {
  const auto t0 = Clock::now();
  std::vector<SuiteResult> suites;
  try {
    suites = run_verify(suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  bool pass = true;
  Json results_suites = Json::array();
  for (const SuiteResult& s : suites) {
    pass = pass && s.pass;
    results_suites.push_back(suite_json(s));
    for (const CheckResult& c : s.checks)
      if (!c.pass) std::cerr << "FAIL " << s.name << "/" << c.name << ": " << c.detail << "\n";
  }
  Json results{{"suites", std::move(results_suites)}};
  std::cout << output_document("verify --suite " + suite, std::move(results), elapsed_ms(t0))
                   .dump(2)
            << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fixed-spinor computations for the holonomy group catalog"};
  app.require_subcommand(1);

  KernelOpts kernel_opts;
  CLI::App* kernel = app.add_subcommand("kernel", "fixed spinor space of one group");
  kernel->add_option("--group", kernel_opts.group, "family mnemonic (so0, u, su, sp, spsp1, spr_sl2r, spc_sl2c, soc, g2, g2star, g2c, spin7, spin43, spin7c)")->required();
  kernel->add_option("--p", kernel_opts.p, "first parameter");
  kernel->add_option("--q", kernel_opts.q, "second parameter");
  kernel->add_flag("--show-basis", kernel_opts.show_basis, "include basis spinors");
  kernel->add_flag("--gram", kernel_opts.gram, "include scalar products and causal tags");
  kernel->add_flag("--variants", kernel_opts.variants, "include orientation variants");
  kernel->add_option("--format", kernel_opts.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  KernelOpts variant_opts;
  CLI::App* variants = app.add_subcommand("variants", "fixed space under orientation changes");
  variants->add_option("--group", variant_opts.group, "family mnemonic")->required();
  variants->add_option("--p", variant_opts.p, "first parameter");
  variants->add_option("--q", variant_opts.q, "second parameter");
  variants->add_flag("--show-basis", variant_opts.show_basis, "include basis spinors");
  variants->add_flag("--gram", variant_opts.gram, "include scalar products and causal tags");
  variants->add_option("--format", variant_opts.format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  std::size_t max_n = 8;
  std::string table_format = "json";
  CLI::App* table = app.add_subcommand("table", "classification rows for all admissible groups");
  table->add_option("--max-n", max_n, "largest module dimension n (4..16)")
      ->check(CLI::Range(std::size_t{4}, std::size_t{16}));
  table->add_option("--format", table_format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "property suites with counterexample dumps");
  verify->add_option("--suite", suite, "clifford, inner, equivariance, forms or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*kernel) return run_kernel(kernel_opts, false);
    if (*variants) return run_kernel(variant_opts, true);
    if (*table) return run_table(max_n, table_format);
    if (*verify) return run_verify_cmd(suite);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
