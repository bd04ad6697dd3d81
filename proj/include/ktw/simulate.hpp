// Simulation scenarios shared by the CLI and the test-suite, plus the
// RunConfig plumbing. Keeping them in the library makes the byte-determinism
// contract testable without shelling out.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ktw/io.hpp"
#include "ktw/types.hpp"

namespace ktw {

struct RunConfig {
  int n = 2;
  std::uint64_t seed = 0;
  std::map<std::string, double> tol;  // per-suite tolerance overrides
  std::string scenario = "riccati";   // riccati | kepler3d | perturbed
  std::string out;                    // output path; empty = stdout
  std::string format = "csv";         // csv | json
  double t_end = -1.0, dt = -1.0;     // <= 0 picks per-scenario defaults
};

// Parse a JSON config file into cfg (fields absent in the file are kept).
// Throws std::runtime_error with a message on malformed input.
void load_config(const std::string& path, RunConfig& cfg);

// Columns: s, state..., Itilde0, M..., R... (complex entries as re/im pairs).
Table run_riccati(const RunConfig& cfg);
// n = 2 KS trajectory; columns: s, t_physical, y1..y3, x1..x3, H0, Mvec, Rvec.
Table run_kepler3d(const RunConfig& cfg);
// Flow of the perturbed Hamiltonian; columns: s, state..., H, I_1..I_2n.
Table run_perturbed(const RunConfig& cfg);

// Dispatch on cfg.scenario, write the table per cfg.out/cfg.format.
// Returns the process exit code (0 ok, 1 integration failure, 2 bad config).
int cmd_simulate(const RunConfig& cfg);

// Print (k, l), rank and nilpotency verdict for the anti-hermitian matrix in
// the given file (see README for the accepted formats). Exit codes 0/1/2.
int cmd_classify(const RunConfig& cfg, const std::string& matrix_path);

}  // namespace ktw
