#include "holospin/output.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "holospin/catalog.hpp"
#include "holospin/spinor.hpp"

namespace holospin {

namespace {

// the spelling the command line accepts for --group
std::string family_mnemonic(Family f) {
  std::string s = family_name(f);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Json field_scalar_json(const FieldScalar& s) {
  const auto pair = [](const Rational& q) {
    return Json::array({q.get_num().get_str(), q.get_den().get_str()});
  };
  return Json::array({pair(s.a().re), pair(s.a().im), pair(s.b().re), pair(s.b().im)});
}

Json spinor_json(const Spinor& v) {
  Json coords = Json::array();
  for (const FieldScalar& c : v.coords) coords.push_back(field_scalar_json(c));
  return Json{{"basis", v.basis == SpinorBasis::u_tensor ? "u_tensor" : "standard"},
              {"coords", std::move(coords)}};
}

Json signature_json(const Signature& sig) {
  return Json{{"n", sig.n()}, {"r", sig.r()}, {"s", sig.s()}, {"display", sig.str()}};
}

Json chirality_json(const ChiralitySplit& split, std::size_t dim) {
  return Json{{"defined", split.defined},
              {"plus", split.plus},
              {"minus", split.minus},
              {"mixed", split.mixed},
              {"display", chirality_split_str(split, dim)}};
}

Json gram_json(const GramReport& g) {
  Json matrix = Json::array();
  for (std::size_t i = 0; i < g.gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.gram.cols(); ++j) row.push_back(field_scalar_json(g.gram.at(i, j)));
    matrix.push_back(std::move(row));
  }
  Json tags = Json::array();
  for (CausalTag t : g.tags) tags.push_back(causal_tag_name(t));
  return Json{{"matrix", std::move(matrix)}, {"tags", std::move(tags)}};
}

Json report_json(const FixedSpaceReport& rep, bool include_basis, bool include_gram) {
  Json out{{"group", display_name(rep.id)},
           {"family", family_mnemonic(rep.id.family)},
           {"p", rep.id.p},
           {"q", rep.id.q},
           {"signature", signature_json(rep.signature)},
           {"N", rep.dim},
           {"chirality", chirality_json(rep.chirality_split, rep.dim)},
           {"notes", rep.notes}};
  if (include_basis) {
    Json basis = Json::array();
    for (const Spinor& v : rep.basis) basis.push_back(spinor_json(v));
    out["basis"] = std::move(basis);
  }
  if (include_gram && rep.gram) out["gram"] = gram_json(*rep.gram);
  return out;
}

Json variant_json(const VariantReport& var, bool include_basis, bool include_gram) {
  Json out{{"label", var.label}, {"available", var.available}};
  if (!var.available) {
    out["reason"] = var.reason;
    return out;
  }
  out["N"] = var.basis.size();
  out["chirality"] = chirality_json(var.chirality_split, var.basis.size());
  out["checks"] = var.checks;
  if (include_basis) {
    Json basis = Json::array();
    for (const Spinor& v : var.basis) basis.push_back(spinor_json(v));
    out["basis"] = std::move(basis);
  }
  if (include_gram && var.gram) out["gram"] = gram_json(*var.gram);
  return out;
}

Json entry_json(const TheoremEntry& e) {
  Json row{{"group", display_name(e.row.id)},
           {"n", e.row.n},
           {"r", e.row.r},
           {"expected_N", e.row.expected_N},
           {"expected_chirality", e.row.expected_chirality},
           {"expected_causal", e.row.expected_causal}};
  return Json{{"row", std::move(row)},
              {"report", report_json(e.report, true, true)},
              {"actual_chirality", e.actual_chirality},
              {"actual_causal", e.actual_causal},
              {"pass", e.pass},
              {"failures", e.failures}};
}

Json table_json(const std::vector<TheoremEntry>& rows) {
  Json out = Json::array();
  for (const TheoremEntry& e : rows) out.push_back(entry_json(e));
  return out;
}

Json suite_json(const SuiteResult& s) {
  Json checks = Json::array();
  for (const CheckResult& c : s.checks) {
    Json jc{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  return Json{{"name", s.name}, {"pass", s.pass}, {"checks", std::move(checks)}};
}

Json output_document(const std::string& command, Json results, double timing_ms) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"results", std::move(results)},
              {"timing_ms", timing_ms}};
}

std::string table_markdown(const std::vector<TheoremEntry>& rows) {
  std::ostringstream out;
  out << "| H | n | r | N | chirality | causal type |\n";
  out << "| --- | --- | --- | --- | --- | --- |\n";
  std::size_t failed = 0;
  for (const TheoremEntry& e : rows) {
    out << "| " << display_name(e.row.id) << " | " << e.row.n << " | " << e.row.r << " | "
        << e.report.dim << " | " << e.actual_chirality << " | " << e.actual_causal << " |\n";
    if (!e.pass) ++failed;
  }
  out << "\n" << rows.size() << " rows, ";
  if (failed == 0) {
    out << "all pass.\n";
  } else {
    out << failed << " failed.\n";
    for (const TheoremEntry& e : rows) {
      if (e.pass) continue;
      out << "FAIL " << display_name(e.row.id) << ":";
      for (const std::string& f : e.failures) out << " " << f << ";";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace holospin
