// Deterministic table output: CSV with full-precision reals, JSON mirror with
// run metadata. All floating-point formatting goes through format_g17 so the
// same run always produces the same bytes.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ktw {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // each row has columns.size() entries
};

// snprintf("%.17g") in the C locale.
std::string format_g17(double x);

struct OutputMeta {
  int n = 0;
  std::uint64_t seed = 0;
  std::string scenario;
  std::string conventions_hash;  // hex of conventions::table_hash()
};

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, const OutputMeta& meta, std::ostream& os);

// format is "csv" or "json"; writes to path ("-" or empty = stdout).
void write_table(const Table& t, const OutputMeta& meta, const std::string& path,
                 const std::string& format);

}  // namespace ktw
