#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "einstein4/json_io.hpp"

namespace einstein4 {

struct RunConfig {
  std::uint64_t seed = 0xE1457E1Aull;
  double fd_step = 1e-3;
  int quad_order = 0;   // 0 = per-purpose defaults
  double tol = 0.0;     // 0 = per-check defaults
  std::string format = "text";
  std::string output_path;
  // Sample counts for the fuzzed checks of the `report` subcommand.
  long fuzz_count = 2000;
  long kato_samples = 20000;
  bool deterministic = true;
};

// Where an expected value comes from: a definition/normalization anchor, an
// independent derivation (closed form, exact arithmetic, oracle), or a
// classical reference value.
enum class ExpectedSource { Definition, Derived, Reference };
const char* to_string(ExpectedSource s);

struct CheckRecord {
  std::string id;
  std::string group;
  std::string description;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  double margin = 0.0;  // tolerance - |computed - expected| for equality checks
  ExpectedSource source = ExpectedSource::Derived;
  bool pass = false;
};

struct VerificationReport {
  std::string schema_version = "1";
  std::string toolchain;
  RunConfig config;
  std::vector<CheckRecord> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

/// Runs every check suite (pointwise algebra, spinor identities, model
/// geometry, integral invariants, conformal law, topology gates).
VerificationReport run_all_checks(const RunConfig& cfg);

/// Render as json | csv | markdown | text. Throws on an unknown format.
std::string emit_report(const VerificationReport& rep, const std::string& format);

Json report_to_json(const VerificationReport& rep);

}  // namespace einstein4
