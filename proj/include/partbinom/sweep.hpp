#pragma once

#include "partbinom/numbers.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace partbinom {

/* Ordered parameter assignment for one verifier instance. */
using Params = std::vector<std::pair<std::string, long>>;

struct IdentityReport {
  std::string identity_id;
  Params params;
  std::string lhs;  // canonical rendering
  std::string rhs;
  bool equal = false;
  double elapsed_ms = 0.0;
};

struct SweepConfig {
  std::string identity_id;
  long n_max = 1;
  long r_max = -1;  // -1: follows n_max
  long s_max = -1;  // -1: follows n_max
  long umax = 6;
  long oracle_cap = 16;
  long jobs = 1;

  long r_cap() const { return r_max >= 1 ? r_max : n_max; }
  long s_cap() const { return s_max >= 1 ? s_max : n_max; }
};

struct SideStrings {
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

struct IdentityInfo {
  std::string id;
  std::string params_sig;   // e.g. "n, r, s"
  std::string description;  // one-line statement of the identity
  bool hidden = false;      // excluded from `list`
  std::function<std::vector<Params>(const SweepConfig&)> grid;
  std::function<SideStrings(const Params&, const SweepConfig&)> run;
};

/* All registered verifiers, fixed order. */
const std::vector<IdentityInfo>& identity_registry();

/* nullptr when unknown. */
const IdentityInfo* find_identity(const std::string& id);

/* One report per grid tuple, in grid (lexicographic) order regardless of
 * cfg.jobs.  Throws std::invalid_argument for unknown identity or bad caps. */
std::vector<IdentityReport> run_sweep(const SweepConfig& cfg);

/* Deterministic report renderings; per-result elapsed_ms only included when
 * with_timings is set (wall time is not reproducible byte-for-byte). */
std::string render_json(const SweepConfig& cfg,
                        const std::vector<IdentityReport>& reports,
                        bool with_timings);
std::string render_tsv(const SweepConfig& cfg,
                       const std::vector<IdentityReport>& reports,
                       bool with_timings);

}  // namespace partbinom
