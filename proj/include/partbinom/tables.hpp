#pragma once

#include <string>

namespace partbinom {

/* Deterministic aligned text tables of the core objects.
 * kind: "genbinom" (rows <lambda,r> for each partition of n <= max),
 *       "stirling" (signed first-kind triangle for n <= max),
 *       "pjk"      (P_jk polynomials for j <= max).
 * Throws std::invalid_argument for other kinds or max < 1. */
std::string render_table(const std::string& kind, long max);

}  // namespace partbinom
