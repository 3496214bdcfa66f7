// SPDX-License-Identifier: MIT
/**
 * @file verify.hpp
 * @brief Self-checking harness: re-derives every pinned constant of the
 *        library and reports pass/fail per check.
 */
#pragma once

#include <string>
#include <vector>

#include "vclat/scalars.hpp"

namespace vclat {

/// One verification record.  `id` is a stable dotted slug (e.g.
/// "chow.segre"), `claim` a self-describing sentence, and `expected` /
/// `computed` exact renderings of both sides.
struct CheckRecord {
  std::string id;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass;
};

struct VerifyOptions {
  /// Restrict to one section: "chow", "cremona", "fm", "components",
  /// "new-rationals", "bigger-disc", or "survey".  Empty runs all.
  std::string only;
  /// Upper bound of the beyond-d witness search.
  Int max_bigger_disc = 500;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  bool overall = true;
  long long wall_ms = 0;
};

/// Names of the sections `run_verify` knows, in execution order.
const std::vector<std::string>& verify_sections();

/**
 * Runs the requested sections in order and returns every check record.
 * Deterministic apart from wall_ms.  Throws std::invalid_argument for an
 * unknown section name.
 */
VerifyReport run_verify(const VerifyOptions& opts = {});

}  // namespace vclat
