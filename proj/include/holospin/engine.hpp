#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holospin/catalog.hpp"
#include "holospin/clifford.hpp"
#include "holospin/numfield.hpp"
#include "holospin/spinor.hpp"

namespace holospin {

/// Dimensions of the intersections of a spinor subspace with the two
/// half-spinor modules. defined is false for odd n, where no grading
/// exists. mixed means the space is not the sum of its chiral parts.
struct ChiralitySplit {
  bool defined = false;
  std::size_t plus = 0;
  std::size_t minus = 0;
  bool mixed = false;
};

/// Display form: "-" for the zero space, "n/a" when undefined, otherwise
/// e.g. "Delta+ (2)", "Delta+ (1) + Delta- (1)", with " [mixed]" appended
/// when the split does not exhaust the space.
std::string chirality_split_str(const ChiralitySplit& split, std::size_t dim);

/// Joint kernel of the lifted holonomy algebra inside the spinor module.
/// basis is RREF-canonical in u(eps) coordinates (pivots 1, pivot columns
/// cleared, rows ordered by pivot), so identical queries produce identical
/// reports. gram is attached when the signature has a timelike direction
/// and the kernel is nonzero.
struct FixedSpaceReport {
  HolonomyId id;
  Signature signature;
  std::size_t dim = 0;
  std::vector<Spinor> basis;  // u_tensor coordinates
  ChiralitySplit chirality_split;
  std::optional<GramReport> gram;
  std::vector<std::string> notes;  // consistency checks performed
};

/// Build the spinor representation of the entry's signature, lift every
/// Lie algebra generator, and intersect their kernels by exact
/// elimination. Each reported basis vector is re-checked to be annihilated
/// by every generator; a discrepancy throws std::logic_error.
FixedSpaceReport fixed_space(const HolonomyId& id);

/// One orientation variant of a fixed space: the space itself ("H"), or
/// its image under Clifford multiplication by the first timelike direction
/// ("H'"), the last spacelike direction ("H''"), or both ("H'''"). When
/// the signature lacks the needed direction the variant is unavailable and
/// reason says why.
struct VariantReport {
  std::string label;
  bool available = false;
  std::string reason;
  std::vector<Spinor> basis;  // u_tensor, RREF-canonical
  ChiralitySplit chirality_split;
  std::optional<GramReport> gram;
  std::vector<std::string> checks;  // verified flip rules, human readable
};

struct VariantsReport {
  FixedSpaceReport base;
  std::vector<VariantReport> variants;  // H, H', H'', H''' in this order
};

/// Transport the fixed space along the four orientation choices and verify
/// the flip rules: Clifford multiplication by a single direction swaps the
/// half-spinor modules and multiplication by e1 en preserves them; the
/// scalar product rescales by (-1)^(r+1) under e1, (-1)^r under en and -1
/// under e1 en. A violated rule throws std::logic_error.
VariantsReport orientation_variants(const FixedSpaceReport& report);

/// Expected classification of one catalog entry: fixed-space dimension,
/// chirality pattern, causal pattern. Pattern strings are display text;
/// the structural checks live in theorem_table.
struct TheoremRow {
  HolonomyId id;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t expected_N = 0;
  std::string expected_chirality;
  std::string expected_causal;
};

TheoremRow theorem_expectation(const HolonomyId& id);

/// Computed table row: expectation, report, verdict. failures lists every
/// check that did not match; pass == failures.empty().
struct TheoremEntry {
  TheoremRow row;
  FixedSpaceReport report;
  std::string actual_chirality;
  std::string actual_causal;
  bool pass = false;
  std::vector<std::string> failures;
};

/// All valid catalog ids with n <= max_n, families in catalog order, then
/// ascending n, then ascending p.
std::vector<HolonomyId> admissible_ids(std::size_t max_n);

/// Run fixed_space over admissible_ids(max_n) and check each result
/// against its expectation. Mismatches are recorded in the row, never
/// thrown. max_n must be at least 4. Rows may be computed in parallel
/// (HOLOSPIN_THREADS caps the worker count); output order is always the
/// enumeration order.
std::vector<TheoremEntry> theorem_table(std::size_t max_n);

}  // namespace holospin
