#pragma once

// Plain-text run records.
//
//   # lemon run record v1
//   [section]
//   key: value
//   key: v1 v2 v3
//
// Sections and keys appear in a fixed order. Reals use 6 significant digits
// (printf "%.6g"). Lists are space-separated; an empty list leaves nothing after
// the colon. Vertex ids are written as external ids when an IdMap is supplied.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lemon/batch.hpp"
#include "lemon/conductance.hpp"
#include "lemon/detect.hpp"
#include "lemon/io.hpp"

namespace lemon {

struct RecordField {
  std::string key;
  std::string value;
};

struct RecordSection {
  std::string name;
  std::vector<RecordField> fields;

  const std::string& get(std::string_view key) const;
  bool has(std::string_view key) const;
  std::int64_t get_int(std::string_view key) const;
  double get_real(std::string_view key) const;
  std::vector<std::int64_t> get_ints(std::string_view key) const;
  std::vector<double> get_reals(std::string_view key) const;
};

/// Generic parsed record.
struct Record {
  std::vector<RecordSection> sections;

  const RecordSection& section(std::string_view name) const;
  std::vector<const RecordSection*> sections_with_prefix(std::string_view prefix) const;
};

/// Accumulates sections in order and renders the canonical text.
class RecordWriter {
 public:
  RecordWriter& section(std::string_view name);
  RecordWriter& field(std::string_view key, std::string_view value);
  RecordWriter& field(std::string_view key, const char* value) { return field(key, std::string_view(value)); }
  RecordWriter& field(std::string_view key, std::int64_t value);
  RecordWriter& field(std::string_view key, int value) { return field(key, static_cast<std::int64_t>(value)); }
  RecordWriter& field(std::string_view key, std::uint64_t value);
  RecordWriter& field(std::string_view key, double value);
  RecordWriter& field(std::string_view key, bool value) { return field(key, std::int64_t{value ? 1 : 0}); }
  RecordWriter& ints(std::string_view key, const std::vector<std::int64_t>& values);
  RecordWriter& reals(std::string_view key, const std::vector<double>& values);

  std::string str() const { return text_; }

 private:
  std::string text_ = "# lemon run record v1\n";
};

std::string format_real(double x);

Record parse_record(std::string_view text);

std::string serialize_detection(const DetectionResult& r, const IdMap& ids);
std::string serialize_batch(const BatchReport& r, const IdMap& ids);
std::string serialize_sweep(const SweepCurve& c);
/// One [combo i] section per row after a [param_sweep] header.
std::string serialize_param_sweep(const std::vector<ParamSweepRow>& rows, const LemonParams& base, int cases,
                                  std::uint64_t rng_seed);
std::string serialize_eval(const std::vector<MatchScore>& matches);

/// Inverse of serialize_detection (ids come back as external ids, reals at 6 digits).
DetectionResult parse_detection(const Record& rec);
BatchReport parse_batch(const Record& rec);
SweepCurve parse_sweep(const Record& rec);

}  // namespace lemon
