#include "holospin/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace holospin {

namespace {

/// Joint kernel of the lifted generators in standard coordinates, computed
/// by intersecting one kernel at a time. The running space is held as
/// columns; each generator contributes one exact elimination at the current
/// width, so the work shrinks as the intersection narrows and stops at
/// width zero.
std::vector<FieldVector> joint_kernel(const CliffordRep& rep, const std::vector<SoMatrix>& gens) {
  const std::size_t dim = rep.dim();
  std::vector<FieldVector> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    cols[j].assign(dim, FieldScalar());
    cols[j][j] = FieldScalar(1);
  }
  for (const SoMatrix& g : gens) {
    if (cols.empty()) break;
    const std::vector<LiftTerm> terms = lift_terms(g);
    FieldMatrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      FieldVector w = lift_apply(rep, terms, cols[j]);
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = std::move(w[i]);
    }
    const std::vector<FieldVector> coeffs = kernel_basis(m);
    std::vector<FieldVector> next;
    next.reserve(coeffs.size());
    for (const FieldVector& c : coeffs) {
      FieldVector v(dim, FieldScalar());
      for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) v = vec_add(v, vec_scale(c[j], cols[j]));
      next.push_back(std::move(v));
    }
    cols = std::move(next);
  }
  return cols;
}

/// Standard-coordinate vectors to the canonical u(eps) basis of their span.
std::vector<Spinor> canonical_u_basis(const std::vector<FieldVector>& std_cols) {
  std::vector<FieldVector> rows;
  rows.reserve(std_cols.size());
  for (const FieldVector& v : std_cols)
    rows.push_back(standard_to_u(Spinor{SpinorBasis::standard, v}).coords);
  rows = rref_rows(std::move(rows));
  std::vector<Spinor> out;
  out.reserve(rows.size());
  for (FieldVector& r : rows) out.push_back(Spinor{SpinorBasis::u_tensor, std::move(r)});
  return out;
}

ChiralitySplit split_of(const Signature& sig, const std::vector<Spinor>& basis) {
  ChiralitySplit out;
  if (sig.n() % 2 != 0) return out;
  out.defined = true;
  if (basis.empty()) return out;
  const std::size_t dim = basis.front().coords.size();
  // u(eps) coordinate q lies in Delta^+ exactly when popcount(q) is even
  std::vector<std::size_t> plus_rows, minus_rows;
  for (std::size_t q = 0; q < dim; ++q)
    (__builtin_popcountll(q) % 2 == 0 ? plus_rows : minus_rows).push_back(q);
  const auto part_dim = [&](const std::vector<std::size_t>& vanish) {
    FieldMatrix m(vanish.size(), basis.size());
    for (std::size_t i = 0; i < vanish.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) m.at(i, j) = basis[j].coords[vanish[i]];
    return kernel_basis(m).size();
  };
  out.plus = part_dim(minus_rows);
  out.minus = part_dim(plus_rows);
  out.mixed = out.plus + out.minus < basis.size();
  return out;
}

std::string causal_str(const FixedSpaceReport& rep) {
  if (rep.dim == 0) return "-";
  if (rep.signature.r() == 0) return "n/a (definite)";
  if (!rep.gram) return "-";
  std::string s;
  for (std::size_t i = 0; i < rep.gram->tags.size(); ++i)
    s += std::string(i ? ", " : "") + causal_tag_name(rep.gram->tags[i]);
  return s;
}

}  // namespace

std::string chirality_split_str(const ChiralitySplit& split, std::size_t dim) {
  if (dim == 0) return "-";
  if (!split.defined) return "n/a (odd n)";
  std::string s;
  if (split.plus > 0) s += "Delta+ (" + std::to_string(split.plus) + ")";
  if (split.minus > 0)
    s += std::string(s.empty() ? "" : " + ") + "Delta- (" + std::to_string(split.minus) + ")";
  if (s.empty()) s = "no chiral part";
  if (split.mixed) s += " [mixed]";
  return s;
}

FixedSpaceReport fixed_space(const HolonomyId& id) {
  const AlgebraPresentation pres = algebra(id);
  const CliffordRep rep = build_rep(pres.signature);
  const std::vector<FieldVector> kernel = joint_kernel(rep, pres.generators);
  std::vector<Spinor> basis = canonical_u_basis(kernel);
  if (basis.size() != kernel.size())
    throw std::logic_error("fixed_space: canonicalization changed the dimension");

  FixedSpaceReport out{id,       pres.signature,   basis.size(), std::move(basis),
                       ChiralitySplit{}, std::nullopt, {}};
  out.chirality_split = split_of(pres.signature, out.basis);

  // re-check the defining property on the reported vectors
  std::vector<FieldVector> std_basis;
  std_basis.reserve(out.basis.size());
  for (const Spinor& v : out.basis) std_basis.push_back(u_to_standard(v).coords);
  for (const SoMatrix& g : pres.generators) {
    const std::vector<LiftTerm> terms = lift_terms(g);
    for (const FieldVector& v : std_basis)
      if (!vec_is_zero(lift_apply(rep, terms, v)))
        throw std::logic_error("fixed_space: reported vector not annihilated");
  }

  if (out.dim == 0) {
    out.notes.push_back("kernel is zero: no fixed spinors");
  } else {
    out.notes.push_back("annihilation: " + std::to_string(pres.generators.size()) +
                        " generators x " + std::to_string(out.dim) + " basis vectors, exact zero");
  }
  if (pres.signature.n() % 2 != 0) out.notes.push_back("no chirality grading (odd n)");
  if (pres.signature.r() == 0) {
    out.notes.push_back("definite signature: scalar product positive definite, no causal classes");
  } else if (out.dim > 0) {
    out.gram = gram_report(rep, out.basis);
  }
  return out;
}

VariantsReport orientation_variants(const FixedSpaceReport& report) {
  const Signature& sig = report.signature;
  const CliffordRep rep = build_rep(sig);
  const std::vector<std::size_t> tl = sig.timelike_indices();
  const std::vector<std::size_t> sl = sig.spacelike_indices();

  std::vector<FieldVector> base_std;
  base_std.reserve(report.basis.size());
  for (const Spinor& v : report.basis) base_std.push_back(u_to_standard(v).coords);

  VariantsReport out{report, {}};
  out.variants.push_back(
      VariantReport{"H", true, "", report.basis, report.chirality_split, report.gram, {}});

  struct Transport {
    const char* label;
    bool use_e1, use_en;
  };
  const Transport kinds[3] = {{"H'", true, false}, {"H''", false, true}, {"H'''", true, true}};
  for (const Transport& t : kinds) {
    VariantReport var{t.label, true, "", {}, ChiralitySplit{}, std::nullopt, {}};
    if (t.use_e1 && tl.empty()) {
      var.available = false;
      var.reason = "no timelike direction (r = 0)";
    }
    if (t.use_en && sl.empty()) {
      var.available = false;
      var.reason += std::string(var.reason.empty() ? "" : "; ") + "no spacelike direction (s = 0)";
    }
    if (!var.available) {
      out.variants.push_back(std::move(var));
      continue;
    }

    // transport first by the spacelike factor, then the timelike one, so
    // the combined variant is Phi(e1) Phi(en) . v
    std::vector<FieldVector> moved;
    moved.reserve(base_std.size());
    for (const FieldVector& v : base_std) {
      FieldVector w = v;
      if (t.use_en) w = rep.action(sl.back()).apply(w);
      if (t.use_e1) w = rep.action(tl.front()).apply(w);
      moved.push_back(std::move(w));
    }
    var.basis = canonical_u_basis(moved);
    var.chirality_split = split_of(sig, var.basis);

    if (report.dim > 0) {
      if (sig.n() % 2 == 0) {
        const ChiralitySplit& b = report.chirality_split;
        const ChiralitySplit& w = var.chirality_split;
        const bool swaps = t.use_e1 != t.use_en;  // an odd number of Clifford factors
        const bool ok = swaps ? (w.plus == b.minus && w.minus == b.plus && w.mixed == b.mixed)
                              : (w.plus == b.plus && w.minus == b.minus && w.mixed == b.mixed);
        if (!ok)
          throw std::logic_error(std::string("orientation_variants: chirality rule violated for ") +
                                 t.label);
        var.checks.push_back(swaps ? "half-spinor modules swap: verified"
                                   : "half-spinor modules preserved: verified");
      }
      if (sig.r() >= 1) {
        // <e_j x, e_j y> = (-1)^r kappa_j <x, y>, so the Gram matrix of the
        // transported vectors is a fixed sign times the original
        int factor = 1;
        if (t.use_e1) factor *= (sig.r() % 2 == 0 ? -1 : 1);
        if (t.use_en) factor *= (sig.r() % 2 == 0 ? 1 : -1);
        std::vector<Spinor> moved_sp;
        moved_sp.reserve(moved.size());
        for (const FieldVector& w : moved) moved_sp.push_back(Spinor{SpinorBasis::standard, w});
        const FieldMatrix got = gram_report(rep, moved_sp).gram;
        const FieldMatrix want = report.gram->gram * FieldScalar(factor);
        if (!(got == want))
          throw std::logic_error(
              std::string("orientation_variants: scalar product rule violated for ") + t.label);
        var.checks.push_back(std::string("scalar products scale by ") +
                             (factor == 1 ? "+1" : "-1") + ": verified");
      }
    }
    if (sig.r() >= 1 && !var.basis.empty()) var.gram = gram_report(rep, var.basis);
    out.variants.push_back(std::move(var));
  }
  return out;
}

TheoremRow theorem_expectation(const HolonomyId& id) {
  validate(id);
  const Signature sig = signature_of(id);
  TheoremRow row{id, sig.n(), sig.r(), 0, "-", "-"};
  switch (id.family) {
    case Family::SO0:
    case Family::U:
    case Family::SpSp1:
    case Family::SpR_SL2R:
    case Family::SpC_SL2C:
    case Family::SOC:
      break;  // no fixed spinors
    case Family::SU:
      row.expected_N = 2;
      row.expected_chirality = ((id.p + id.q) % 2 == 0) ? "single half" : "one per half";
      row.expected_causal = (id.p == 0)       ? "n/a (definite)"
                            : (id.p % 2 == 0) ? "all spacelike"
                                              : "one spacelike, one timelike";
      break;
    case Family::Sp:
      row.expected_N = static_cast<std::size_t>(id.p + id.q + 1);
      row.expected_chirality = "single half";
      row.expected_causal = (id.p == 0) ? "n/a (definite)" : "all spacelike";
      break;
    case Family::G2:
      row.expected_N = 1;
      row.expected_chirality = "n/a (odd n)";
      row.expected_causal = "n/a (definite)";
      break;
    case Family::G2star:
      row.expected_N = 1;
      row.expected_chirality = "n/a (odd n)";
      row.expected_causal = "spacelike";
      break;
    case Family::G2C:
      row.expected_N = 2;
      row.expected_chirality = "one per half";
      row.expected_causal = "isotropic, non-orthogonal pair";
      break;
    case Family::Spin7:
      row.expected_N = 1;
      row.expected_chirality = "Delta+";
      row.expected_causal = "n/a (definite)";
      break;
    case Family::Spin43:
      row.expected_N = 1;
      row.expected_chirality = "Delta+";
      row.expected_causal = "timelike";
      break;
    case Family::Spin7C:
      row.expected_N = 1;
      row.expected_chirality = "Delta+";
      row.expected_causal = "spacelike";
      break;
  }
  return row;
}

namespace {

void check_chirality_pattern(TheoremEntry& e) {
  const ChiralitySplit& cs = e.report.chirality_split;
  const HolonomyId& id = e.row.id;
  bool ok = true;
  switch (id.family) {
    case Family::SU:
      ok = cs.defined && !cs.mixed &&
           (((id.p + id.q) % 2 == 0) ? (cs.plus == e.report.dim || cs.minus == e.report.dim)
                                     : (cs.plus == 1 && cs.minus == 1));
      break;
    case Family::Sp:
      ok = cs.defined && !cs.mixed && (cs.plus == e.report.dim || cs.minus == e.report.dim);
      break;
    case Family::G2C:
      ok = cs.defined && !cs.mixed && cs.plus == 1 && cs.minus == 1;
      break;
    case Family::Spin7:
    case Family::Spin43:
    case Family::Spin7C:
      ok = cs.defined && !cs.mixed && cs.plus == e.report.dim && cs.minus == 0;
      break;
    case Family::G2:
    case Family::G2star:
      ok = !cs.defined;  // n = 7: no grading to check
      break;
    default:
      break;
  }
  if (!ok)
    e.failures.push_back("chirality: " + e.actual_chirality + ", expected " +
                         e.row.expected_chirality);
}

void check_causal_pattern(TheoremEntry& e) {
  if (!e.report.gram) return;
  const GramReport& g = *e.report.gram;
  const auto count = [&](CausalTag t) {
    return static_cast<std::size_t>(std::count(g.tags.begin(), g.tags.end(), t));
  };
  const HolonomyId& id = e.row.id;
  bool ok = true;
  switch (id.family) {
    case Family::SU:
      ok = (id.p % 2 == 0) ? count(CausalTag::spacelike) == 2
                           : (count(CausalTag::spacelike) == 1 && count(CausalTag::timelike) == 1);
      break;
    case Family::Sp:
    case Family::G2star:
    case Family::Spin7C:
      ok = count(CausalTag::spacelike) == e.report.dim;
      break;
    case Family::Spin43:
      ok = count(CausalTag::timelike) == e.report.dim;
      break;
    case Family::G2C:
      ok = count(CausalTag::isotropic) == 2 && !g.gram.at(0, 1).is_zero();
      break;
    default:
      break;
  }
  if (!ok)
    e.failures.push_back("causal: " + e.actual_causal + ", expected " + e.row.expected_causal);
}

TheoremEntry compute_entry(const HolonomyId& id) {
  TheoremRow row = theorem_expectation(id);
  try {
    FixedSpaceReport rep = fixed_space(id);
    TheoremEntry e{std::move(row), std::move(rep), "", "", false, {}};
    e.actual_chirality = chirality_split_str(e.report.chirality_split, e.report.dim);
    e.actual_causal = causal_str(e.report);
    if (e.report.dim != e.row.expected_N) {
      e.failures.push_back("N = " + std::to_string(e.report.dim) + ", expected " +
                           std::to_string(e.row.expected_N));
    } else if (e.report.dim > 0) {
      check_chirality_pattern(e);
      if (e.report.signature.r() >= 1) check_causal_pattern(e);
    }
    e.pass = e.failures.empty();
    return e;
  } catch (const std::exception& ex) {
    TheoremEntry e{std::move(row),
                   FixedSpaceReport{id, signature_of(id), 0, {}, ChiralitySplit{}, std::nullopt, {}},
                   "-",
                   "-",
                   false,
                   {}};
    e.failures.push_back(std::string("error: ") + ex.what());
    return e;
  }
}

std::size_t thread_budget(std::size_t jobs) {
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("HOLOSPIN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) workers = static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::min(workers, jobs));
}

}  // namespace

std::vector<HolonomyId> admissible_ids(std::size_t max_n) {
  std::vector<HolonomyId> out;
  for (Family f : all_families()) {
    switch (f) {
      case Family::SO0:
        for (std::size_t n = 2; n <= max_n; ++n)
          for (std::size_t p = 0; p <= n; ++p)
            out.push_back({f, static_cast<int>(p), static_cast<int>(n - p)});
        break;
      case Family::U:
      case Family::SU:
        for (std::size_t t = 2; 2 * t <= max_n; ++t)
          for (std::size_t p = 0; p <= t; ++p)
            out.push_back({f, static_cast<int>(p), static_cast<int>(t - p)});
        break;
      case Family::Sp:
      case Family::SpSp1:
        for (std::size_t t = 2; 4 * t <= max_n; ++t)
          for (std::size_t p = 0; p <= t; ++p)
            out.push_back({f, static_cast<int>(p), static_cast<int>(t - p)});
        break;
      case Family::SpR_SL2R:
        for (std::size_t p = 2; 4 * p <= max_n; ++p) out.push_back({f, static_cast<int>(p), 0});
        break;
      case Family::SpC_SL2C:
        for (std::size_t p = 2; 8 * p <= max_n; ++p) out.push_back({f, static_cast<int>(p), 0});
        break;
      case Family::SOC:
        for (std::size_t p = 2; 2 * p <= max_n; ++p) out.push_back({f, static_cast<int>(p), 0});
        break;
      default: {
        const HolonomyId id{f, 0, 0};
        if (signature_of(id).n() <= max_n) out.push_back(id);
      }
    }
  }
  return out;
}

std::vector<TheoremEntry> theorem_table(std::size_t max_n) {
  if (max_n < 4) throw std::invalid_argument("theorem_table: budget must be at least 4");
  const std::vector<HolonomyId> ids = admissible_ids(max_n);
  std::vector<std::optional<TheoremEntry>> slots(ids.size());
  std::atomic<std::size_t> next{0};
  const auto run = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      slots[i] = compute_entry(ids[i]);
    }
  };
  const std::size_t workers = thread_budget(ids.size());
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(run);
    run();
    for (std::thread& th : pool) th.join();
  }
  std::vector<TheoremEntry> out;
  out.reserve(slots.size());
  for (std::optional<TheoremEntry>& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace holospin
