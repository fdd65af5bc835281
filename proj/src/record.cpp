#include "lemon/record.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lemon {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// ---- generic record ----------------------------------------------------------

const std::string& RecordSection::get(std::string_view key) const {
  for (const auto& f : fields)
    if (f.key == key) return f.value;
  throw DataError("record section [" + name + "] has no field '" + std::string(key) + "'");
}

bool RecordSection::has(std::string_view key) const {
  for (const auto& f : fields)
    if (f.key == key) return true;
  return false;
}

namespace {

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while ((pos = s.find_first_not_of(' ', pos)) != std::string_view::npos) {
    const auto end = std::min(s.find(' ', pos), s.size());
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::int64_t to_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DataError("record: bad integer '" + std::string(s) + "'");
  return v;
}

std::uint64_t to_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DataError("record: bad integer '" + std::string(s) + "'");
  return v;
}

double to_real(std::string_view s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw DataError("record: bad real '" + std::string(s) + "'");
  }
}

}  // namespace

std::int64_t RecordSection::get_int(std::string_view key) const { return to_int(get(key)); }
double RecordSection::get_real(std::string_view key) const { return to_real(get(key)); }

std::vector<std::int64_t> RecordSection::get_ints(std::string_view key) const {
  std::vector<std::int64_t> out;
  for (auto w : split_words(get(key))) out.push_back(to_int(w));
  return out;
}

std::vector<double> RecordSection::get_reals(std::string_view key) const {
  std::vector<double> out;
  for (auto w : split_words(get(key))) out.push_back(to_real(w));
  return out;
}

const RecordSection& Record::section(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return s;
  throw DataError("record has no section [" + std::string(name) + "]");
}

std::vector<const RecordSection*> Record::sections_with_prefix(std::string_view prefix) const {
  std::vector<const RecordSection*> out;
  for (const auto& s : sections)
    if (s.name.starts_with(prefix)) out.push_back(&s);
  return out;
}

RecordWriter& RecordWriter::section(std::string_view name) {
  text_ += '[';
  text_ += name;
  text_ += "]\n";
  return *this;
}

RecordWriter& RecordWriter::field(std::string_view key, std::string_view value) {
  text_ += key;
  text_ += ':';
  if (!value.empty()) {
    text_ += ' ';
    text_ += value;
  }
  text_ += '\n';
  return *this;
}

RecordWriter& RecordWriter::field(std::string_view key, std::int64_t value) { return field(key, std::to_string(value)); }
RecordWriter& RecordWriter::field(std::string_view key, std::uint64_t value) { return field(key, std::to_string(value)); }
RecordWriter& RecordWriter::field(std::string_view key, double value) { return field(key, format_real(value)); }

RecordWriter& RecordWriter::ints(std::string_view key, const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return field(key, std::string_view(s));
}

RecordWriter& RecordWriter::reals(std::string_view key, const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += format_real(values[i]);
  }
  return field(key, std::string_view(s));
}

Record parse_record(std::string_view text) {
  Record rec;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw DataError("record line " + std::to_string(line_no) + ": bad section header");
      rec.sections.push_back({std::string(line.substr(1, line.size() - 2)), {}});
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos || rec.sections.empty())
      throw DataError("record line " + std::to_string(line_no) + ": expected 'key: value'");
    std::string_view value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    rec.sections.back().fields.push_back({std::string(line.substr(0, colon)), std::string(value)});
  }
  return rec;
}

// ---- typed records -----------------------------------------------------------

namespace {

std::vector<std::int64_t> external_ids(const std::vector<Vertex>& vs, const IdMap& ids) {
  std::vector<std::int64_t> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(ids.to_external(v));
  return out;
}

std::vector<Vertex> as_vertices(const std::vector<std::int64_t>& xs) {
  return {xs.begin(), xs.end()};
}

void write_params(RecordWriter& w, const LemonParams& p) {
  w.field("mode", to_string(p.mode))
      .field("walk_steps", p.walk_steps)
      .field("dimension", p.dimension)
      .field("expansion_step", p.expansion_step)
      .field("alpha", p.alpha)
      .field("avg_community_size", p.avg_community_size)
      .field("max_walk_spread_steps", p.sampler.max_steps)
      .field("spread_threshold", p.sampler.spread_threshold)
      .field("size_min", p.size_min)
      .field("size_max", p.size_max)
      .field("max_iterations", p.max_iterations)
      .field("degree_normalized_p0", p.degree_normalized_p0);
  std::vector<std::int64_t> combos;
  for (const auto& [k, l] : p.combo_sweep) {
    combos.push_back(k);
    combos.push_back(l);
  }
  w.ints("combo_sweep", combos);
}

LemonParams read_params(const RecordSection& s) {
  LemonParams p;
  p.mode = parse_size_mode(s.get("mode"));
  p.walk_steps = static_cast<int>(s.get_int("walk_steps"));
  p.dimension = static_cast<int>(s.get_int("dimension"));
  p.expansion_step = static_cast<int>(s.get_int("expansion_step"));
  p.alpha = s.get_real("alpha");
  p.avg_community_size = static_cast<int>(s.get_int("avg_community_size"));
  p.sampler.max_steps = static_cast<int>(s.get_int("max_walk_spread_steps"));
  p.sampler.spread_threshold = s.get_real("spread_threshold");
  p.size_min = static_cast<int>(s.get_int("size_min"));
  p.size_max = static_cast<int>(s.get_int("size_max"));
  p.max_iterations = static_cast<int>(s.get_int("max_iterations"));
  p.degree_normalized_p0 = s.get_int("degree_normalized_p0") != 0;
  const auto combos = s.get_ints("combo_sweep");
  for (std::size_t i = 0; i + 1 < combos.size(); i += 2)
    p.combo_sweep.emplace_back(static_cast<int>(combos[i]), static_cast<int>(combos[i + 1]));
  return p;
}

StopReason parse_stop_reason(std::string_view s) {
  for (auto r : {StopReason::local_min, StopReason::size_exceeded, StopReason::max_iter, StopReason::lp_infeasible})
    if (to_string(r) == s) return r;
  throw DataError("record: unknown stop reason '" + std::string(s) + "'");
}

}  // namespace

std::string serialize_detection(const DetectionResult& r, const IdMap& ids) {
  RecordWriter w;
  w.section("detection");
  write_params(w, r.params);
  w.field("rng_seed", r.rng_seed)
      .ints("initial_seeds", external_ids(r.initial_seeds, ids))
      .field("used_walk_steps", r.walk_steps)
      .field("used_dimension", r.dimension)
      .field("stop_reason", to_string(r.stop_reason))
      .field("iterations", static_cast<std::int64_t>(r.iterations.size()))
      .field("selected_iteration", static_cast<std::int64_t>(r.selected_iteration))
      .field("chosen_size", r.chosen_size);
  if (r.score) w.field("precision", r.score->precision).field("recall", r.score->recall).field("f1", r.score->f1);
  w.ints("members", external_ids(r.members, ids));

  for (std::size_t i = 0; i < r.iterations.size(); ++i) {
    const auto& it = r.iterations[i];
    w.section("iteration " + std::to_string(i))
        .field("seed_size", it.seed_size)
        .field("subgraph_size", it.subgraph_size)
        .field("basis_dimension", it.basis_dimension)
        .field("phi_min", it.phi_min)
        .field("sweep_argmin", it.sweep_argmin)
        .field("community_size", it.community_size);
    if (it.f1) w.field("f1", *it.f1);
    w.ints("community", external_ids(it.community, ids));
  }
  return w.str();
}

DetectionResult parse_detection(const Record& rec) {
  const auto& s = rec.section("detection");
  DetectionResult r;
  r.params = read_params(s);
  r.rng_seed = to_uint(s.get("rng_seed"));
  r.initial_seeds = as_vertices(s.get_ints("initial_seeds"));
  r.walk_steps = static_cast<int>(s.get_int("used_walk_steps"));
  r.dimension = static_cast<int>(s.get_int("used_dimension"));
  r.stop_reason = parse_stop_reason(s.get("stop_reason"));
  r.selected_iteration = static_cast<std::size_t>(s.get_int("selected_iteration"));
  r.chosen_size = static_cast<int>(s.get_int("chosen_size"));
  if (s.has("f1")) r.score = F1Score{s.get_real("precision"), s.get_real("recall"), s.get_real("f1")};
  r.members = as_vertices(s.get_ints("members"));
  for (const auto* sec : rec.sections_with_prefix("iteration ")) {
    IterationRecord it;
    it.seed_size = static_cast<int>(sec->get_int("seed_size"));
    it.subgraph_size = static_cast<int>(sec->get_int("subgraph_size"));
    it.basis_dimension = static_cast<int>(sec->get_int("basis_dimension"));
    it.phi_min = sec->get_real("phi_min");
    it.sweep_argmin = static_cast<int>(sec->get_int("sweep_argmin"));
    it.community_size = static_cast<int>(sec->get_int("community_size"));
    if (sec->has("f1")) it.f1 = sec->get_real("f1");
    it.community = as_vertices(sec->get_ints("community"));
    r.iterations.push_back(std::move(it));
  }
  if (static_cast<std::int64_t>(r.iterations.size()) != s.get_int("iterations"))
    throw DataError("record: iteration count mismatch");
  return r;
}

std::string serialize_batch(const BatchReport& r, const IdMap& ids) {
  RecordWriter w;
  w.section("batch");
  write_params(w, r.params);
  w.field("seed_strategy", to_string(r.options.strategy))
      .field("dataset_kind", r.options.kind == DatasetKind::synthetic ? "synthetic" : "real")
      .field("seed_count", static_cast<std::int64_t>(r.options.seed_count.value_or(0)))
      .field("seed_ratio", r.options.seed_ratio)
      .field("enlarge_seeds", r.options.enlarge_seeds)
      .field("rng_seed", r.rng_seed)
      .field("cases", static_cast<std::int64_t>(r.cases.size()))
      .field("mean_f1", r.mean)
      .field("stddev_f1", r.stddev);
  std::int64_t failed = 0;
  for (const auto& c : r.cases) failed += c.failed ? 1 : 0;
  w.field("failed_cases", failed);

  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    const auto& c = r.cases[i];
    w.section("case " + std::to_string(i))
        .field("community_index", static_cast<std::int64_t>(c.community_index))
        .field("rng_seed", c.rng_seed)
        .ints("seeds", external_ids(c.seeds, ids))
        .field("f1", c.f1)
        .field("chosen_size", c.chosen_size)
        .field("iterations", c.iterations)
        .field("stop_reason", to_string(c.stop_reason))
        .field("failed", c.failed);
    if (c.failed) w.field("error", std::string_view(c.error));
  }
  return w.str();
}

BatchReport parse_batch(const Record& rec) {
  const auto& s = rec.section("batch");
  BatchReport r;
  r.params = read_params(s);
  r.options.strategy = parse_seed_strategy(s.get("seed_strategy"));
  r.options.kind = s.get("dataset_kind") == "synthetic" ? DatasetKind::synthetic : DatasetKind::real;
  if (const auto n = s.get_int("seed_count"); n > 0) r.options.seed_count = static_cast<int>(n);
  r.options.seed_ratio = s.get_real("seed_ratio");
  r.options.enlarge_seeds = s.get_int("enlarge_seeds") != 0;
  r.rng_seed = to_uint(s.get("rng_seed"));
  r.mean = s.get_real("mean_f1");
  r.stddev = s.get_real("stddev_f1");
  for (const auto* sec : rec.sections_with_prefix("case ")) {
    BatchCase c;
    c.community_index = static_cast<std::size_t>(sec->get_int("community_index"));
    c.rng_seed = to_uint(sec->get("rng_seed"));
    c.seeds = as_vertices(sec->get_ints("seeds"));
    c.f1 = sec->get_real("f1");
    c.chosen_size = static_cast<int>(sec->get_int("chosen_size"));
    c.iterations = static_cast<int>(sec->get_int("iterations"));
    c.stop_reason = parse_stop_reason(sec->get("stop_reason"));
    c.failed = sec->get_int("failed") != 0;
    if (c.failed) c.error = sec->get("error");
    r.cases.push_back(std::move(c));
  }
  if (static_cast<std::int64_t>(r.cases.size()) != s.get_int("cases")) throw DataError("record: case count mismatch");
  return r;
}

std::string serialize_sweep(const SweepCurve& c) {
  RecordWriter w;
  std::vector<std::int64_t> sizes(c.sizes.begin(), c.sizes.end());
  w.section("sweep")
      .field("argmin_size", c.argmin_size)
      .field("min_value", c.min_value)
      .ints("sizes", sizes)
      .reals("conductances", c.conductances);
  return w.str();
}

SweepCurve parse_sweep(const Record& rec) {
  const auto& s = rec.section("sweep");
  SweepCurve c;
  c.argmin_size = static_cast<int>(s.get_int("argmin_size"));
  c.min_value = s.get_real("min_value");
  for (auto x : s.get_ints("sizes")) c.sizes.push_back(static_cast<int>(x));
  c.conductances = s.get_reals("conductances");
  return c;
}

std::string serialize_param_sweep(const std::vector<ParamSweepRow>& rows, const LemonParams& base, int cases,
                                  std::uint64_t rng_seed) {
  RecordWriter w;
  w.section("param_sweep");
  write_params(w, base);
  w.field("cases", cases).field("rng_seed", rng_seed).field("combos", static_cast<std::int64_t>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    w.section("combo " + std::to_string(i))
        .field("walk_steps", r.walk_steps)
        .field("dimension", r.dimension)
        .field("mean_f1", r.mean)
        .field("stddev_f1", r.stddev)
        .reals("f1", r.f1);
  }
  return w.str();
}

std::string serialize_eval(const std::vector<MatchScore>& matches) {
  std::vector<double> f1;
  for (const auto& m : matches) f1.push_back(m.score.f1);
  const auto summary = summarize(f1);
  RecordWriter w;
  w.section("eval")
      .field("communities", static_cast<std::int64_t>(matches.size()))
      .field("mean_f1", summary.mean)
      .field("stddev_f1", summary.stddev);
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const auto& m = matches[i];
    w.section("community " + std::to_string(i))
        .field("best_match", static_cast<std::int64_t>(m.best_match))
        .field("precision", m.score.precision)
        .field("recall", m.score.recall)
        .field("f1", m.score.f1);
  }
  return w.str();
}

}  // namespace lemon
