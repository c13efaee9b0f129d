#include "spiketopo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace spiketopo {
namespace {

using nlohmann::json;

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw DataError("malformed JSON at " + position(text, byte) + ": " + e.what());
  }
}

const json& member(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw DataError(where + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw DataError(where + ": missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw DataError(where + ": expected an integer");
  return value.get<std::int64_t>();
}

std::string as_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw DataError(where + ": expected a string");
  return value.get<std::string>();
}

const json& as_array(const json& value, const std::string& where) {
  if (!value.is_array()) throw DataError(where + ": expected an array");
  return value;
}

double as_number(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return parse_number(value.get<std::string>(), where);
  throw DataError(where + ": expected a number");
}

// JSON cannot hold infinities, and the 12-digit rule should apply to every
// real value written out.
json number_json(double value) {
  if (std::isinf(value)) return format_number(value);
  return parse_number(format_number(value), "number");
}

void throw_violations(const std::vector<Violation>& violations) {
  if (violations.empty()) return;
  std::string message = "invalid dataset:";
  for (const auto& v : violations) {
    message += "\n  ";
    if (v.trial_id >= 0) message += "trial " + std::to_string(v.trial_id) + ": ";
    message += "[" + v.rule + "] " + v.message;
  }
  throw DataError(message);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::vector<std::string> csv_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::int64_t parse_int(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw DataError(where + ": expected an integer, got '" + text + "'");
  return value;
}

std::string csv_where(std::size_t line_index) { return "CSV line " + std::to_string(line_index + 1); }

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

double parse_number(const std::string& text, const std::string& what) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw DataError(what + ": expected a number, got '" + text + "'");
  }
  return value;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw DataError("failed writing '" + path + "'");
}

Dataset parse_raster_json(const std::string& text) {
  const json root = parse_json(text);
  Dataset ds;
  const auto t_max = as_int(member(root, "t_max", "raster"), "raster.t_max");
  if (t_max < 0) throw DataError("raster.t_max must be nonnegative");
  ds.domain = TimeDomain(t_max);
  for (const auto& s : as_array(member(root, "stimuli", "raster"), "raster.stimuli"))
    ds.stimuli.push_back(as_string(s, "raster.stimuli"));

  const auto& trials = as_array(member(root, "trials", "raster"), "raster.trials");
  std::size_t index = 0;
  for (const auto& trial : trials) {
    const std::string where = "raster.trials[" + std::to_string(index++) + "]";
    const auto id = as_int(member(trial, "trial_id", where), where + ".trial_id");
    const auto stimulus = as_string(member(trial, "stimulus", where), where + ".stimulus");
    std::vector<SpikeTrain> trains;
    for (const auto& train : as_array(member(trial, "trains", where), where + ".trains")) {
      std::vector<Tick> times;
      for (const auto& t : as_array(train, where + ".trains")) {
        const Tick tick = as_int(t, where + ".trains");
        if (!ds.domain.contains(tick)) {
          throw DataError("trial " + std::to_string(id) + ": [range] spike time " + std::to_string(tick) +
                          " outside [0, " + std::to_string(t_max) + "]");
        }
        if (!times.empty() && tick <= times.back()) {
          throw DataError("trial " + std::to_string(id) + ": spike times must be strictly increasing");
        }
        times.push_back(tick);
      }
      trains.emplace_back(std::move(times), ds.domain);
    }
    if (trains.empty()) throw DataError("trial " + std::to_string(id) + ": [shape] no trains");
    if (ds.neuron_count == 0) ds.neuron_count = trains.size();
    ds.trials.push_back({TrainEnsemble(std::move(trains)), stimulus, id});
  }
  throw_violations(validate_dataset(ds));
  return ds;
}

std::string raster_to_json(const Dataset& dataset) {
  json root;
  root["t_max"] = dataset.domain.t_max;
  root["stimuli"] = dataset.stimuli;
  root["trials"] = json::array();
  for (const auto& trial : dataset.trials) {
    json trains = json::array();
    for (const auto& train : trial.ensemble.trains())
      trains.push_back(std::vector<Tick>(train.times().begin(), train.times().end()));
    root["trials"].push_back({{"trial_id", trial.trial_id}, {"stimulus", trial.stimulus}, {"trains", trains}});
  }
  return root.dump() + "\n";
}

Dataset parse_raster_csv(const std::string& text, double tick, Tick t_max) {
  const auto lines = csv_lines(text);
  if (lines.empty()) throw DataError("raster CSV: empty file");
  if (lines.front() != "trial_id,neuron_index,time,stimulus") {
    throw DataError("raster CSV: expected header 'trial_id,neuron_index,time,stimulus'");
  }
  struct Row {
    std::int64_t trial;
    std::size_t neuron;
    Tick time;
    std::string stimulus;
  };
  std::vector<Row> rows;
  Dataset ds;
  std::size_t neurons = 0;
  Tick latest = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != 4) throw DataError(csv_where(i) + ": expected 4 fields");
    const auto trial = parse_int(fields[0], csv_where(i));
    const auto neuron = parse_int(fields[1], csv_where(i));
    if (neuron < 0) throw DataError(csv_where(i) + ": negative neuron_index");
    const Tick time = quantize(parse_number(fields[2], csv_where(i)), tick);
    if (time < 0) throw DataError(csv_where(i) + ": [range] negative spike time");
    rows.push_back({trial, static_cast<std::size_t>(neuron), time, fields[3]});
    neurons = std::max(neurons, static_cast<std::size_t>(neuron) + 1);
    latest = std::max(latest, time);
    if (std::find(ds.stimuli.begin(), ds.stimuli.end(), fields[3]) == ds.stimuli.end()) ds.stimuli.push_back(fields[3]);
  }
  if (rows.empty()) throw DataError("raster CSV: no spikes");
  ds.domain = TimeDomain(t_max >= 0 ? t_max : latest);
  ds.neuron_count = neurons;

  std::map<std::int64_t, std::pair<std::string, std::vector<std::vector<Tick>>>> trials;
  for (const auto& row : rows) {
    auto& [stimulus, trains] = trials[row.trial];
    if (trains.empty()) {
      stimulus = row.stimulus;
      trains.resize(neurons);
    } else if (stimulus != row.stimulus) {
      throw DataError("trial " + std::to_string(row.trial) + ": [label] rows disagree on the stimulus");
    }
    if (!ds.domain.contains(row.time)) {
      throw DataError("trial " + std::to_string(row.trial) + ": [range] spike time " + std::to_string(row.time) +
                      " outside [0, " + std::to_string(ds.domain.t_max) + "]");
    }
    trains[row.neuron].push_back(row.time);
  }
  for (auto& [id, entry] : trials) {
    std::vector<SpikeTrain> trains;
    for (auto& times : entry.second) trains.push_back(SpikeTrain::from_unsorted(std::move(times), ds.domain));
    ds.trials.push_back({TrainEnsemble(std::move(trains)), entry.first, id});
  }
  throw_violations(validate_dataset(ds));
  return ds;
}

std::string raster_to_csv(const Dataset& dataset) {
  std::string out = "trial_id,neuron_index,time,stimulus\n";
  for (const auto& trial : dataset.trials)
    for (std::size_t n = 0; n < trial.ensemble.size(); ++n)
      for (Tick t : trial.ensemble[n].times())
        out += std::to_string(trial.trial_id) + "," + std::to_string(n) + "," + std::to_string(t) + "," +
               trial.stimulus + "\n";
  return out;
}

Dataset read_raster(const std::string& path, double tick) {
  const std::string text = read_text_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return parse_raster_csv(text, tick);
  return parse_raster_json(text);
}

std::string matrix_to_csv(const LabeledMatrix& m) {
  const std::size_t n = m.matrix.size();
  if (m.ids.size() != n || m.labels.size() != n) throw std::invalid_argument("matrix_to_csv: ids/labels size mismatch");
  std::string out = "id,label";
  for (auto id : m.ids) out += "," + std::to_string(id);
  out += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out += std::to_string(m.ids[i]) + "," + m.labels[i];
    for (std::size_t j = 0; j < n; ++j) out += "," + format_number(m.matrix(i, j));
    out += "\n";
  }
  return out;
}

LabeledMatrix parse_matrix_csv(const std::string& text) {
  const auto lines = csv_lines(text);
  if (lines.empty()) throw DataError("matrix CSV: empty file");
  const auto header = split_csv_line(lines.front());
  if (header.size() < 2 || header[0] != "id" || header[1] != "label") {
    throw DataError("matrix CSV: header must start with 'id,label'");
  }
  const std::size_t n = header.size() - 2;
  if (lines.size() != n + 1) {
    throw DataError("matrix CSV: header names " + std::to_string(n) + " columns but there are " +
                    std::to_string(lines.size() - 1) + " rows");
  }
  LabeledMatrix m;
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != n + 2) throw DataError(csv_where(i) + ": expected " + std::to_string(n + 2) + " fields");
    m.ids.push_back(parse_int(fields[0], csv_where(i)));
    if (fields[0] != header[i + 1]) throw DataError(csv_where(i) + ": row id does not match the header column");
    m.labels.push_back(fields[1]);
    for (std::size_t j = 0; j < n; ++j) entries.push_back(parse_number(fields[j + 2], csv_where(i)));
  }
  try {
    m.matrix = DistanceMatrix(n, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("matrix CSV: ") + e.what());
  }
  return m;
}

std::string diagrams_to_csv(const std::vector<PersistenceDiagram>& diagrams) {
  std::string out = "degree,birth,death\n";
  for (const auto& d : diagrams)
    for (const auto& p : d.points())
      out += std::to_string(d.degree()) + "," + format_number(p.birth) + "," + format_number(p.death) + "\n";
  return out;
}

std::map<int, PersistenceDiagram> parse_diagram_csv(const std::string& text) {
  const auto lines = csv_lines(text);
  if (lines.empty() || lines.front() != "degree,birth,death") {
    throw DataError("diagram CSV: expected header 'degree,birth,death'");
  }
  std::map<int, std::vector<DiagramPoint>> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != 3) throw DataError(csv_where(i) + ": expected 3 fields");
    const auto degree = parse_int(fields[0], csv_where(i));
    const double birth = parse_number(fields[1], csv_where(i));
    const double death = parse_number(fields[2], csv_where(i));
    if (degree < 0 || degree > 16) throw DataError(csv_where(i) + ": bad degree");
    if (std::isinf(birth) || death < birth) throw DataError(csv_where(i) + ": need finite birth <= death");
    points[static_cast<int>(degree)].push_back({birth, death});
  }
  std::map<int, PersistenceDiagram> out;
  for (auto& [degree, pts] : points) out.emplace(degree, PersistenceDiagram(degree, std::move(pts)));
  return out;
}

std::string report_to_json(const ClassificationReport& report) {
  json root;
  root["score"] = number_json(report.score);
  root["mean"] = number_json(report.mean);
  root["std"] = number_json(report.std);
  root["per_repetition_scores"] = json::array();
  for (double s : report.per_repetition_scores) root["per_repetition_scores"].push_back(number_json(s));
  root["per_trial"] = json::array();
  for (const auto& p : report.per_trial) {
    root["per_trial"].push_back(
        {{"trial_id", p.trial_id}, {"truth", p.truth}, {"predicted", p.predicted}, {"repetition", p.repetition}});
  }
  return root.dump(2) + "\n";
}

ClassificationReport parse_report_json(const std::string& text) {
  const json root = parse_json(text);
  ClassificationReport r;
  r.score = as_number(member(root, "score", "report"), "report.score");
  r.mean = as_number(member(root, "mean", "report"), "report.mean");
  r.std = as_number(member(root, "std", "report"), "report.std");
  for (const auto& s : as_array(member(root, "per_repetition_scores", "report"), "report.per_repetition_scores"))
    r.per_repetition_scores.push_back(as_number(s, "report.per_repetition_scores"));
  for (const auto& p : as_array(member(root, "per_trial", "report"), "report.per_trial")) {
    const std::string where = "report.per_trial";
    r.per_trial.push_back({as_int(member(p, "trial_id", where), where),
                           as_string(member(p, "truth", where), where),
                           as_string(member(p, "predicted", where), where),
                           static_cast<std::size_t>(as_int(member(p, "repetition", where), where))});
  }
  return r;
}

std::map<std::int64_t, LickTimes> parse_licks_json(const std::string& text) {
  const json root = parse_json(text);
  std::map<std::int64_t, LickTimes> out;
  std::size_t index = 0;
  for (const auto& trial : as_array(member(root, "trials", "licks"), "licks.trials")) {
    const std::string where = "licks.trials[" + std::to_string(index++) + "]";
    const auto id = as_int(member(trial, "trial_id", where), where + ".trial_id");
    LickTimes lt;
    for (const auto& t : as_array(member(trial, "licks", where), where + ".licks")) {
      const Tick tick = as_int(t, where + ".licks");
      if (!lt.licks.empty() && tick < lt.licks.back()) throw DataError(where + ": licks must be ascending");
      lt.licks.push_back(tick);
    }
    if (auto it = trial.find("onset_index"); it != trial.end()) {
      const auto onset = as_int(*it, where + ".onset_index");
      if (onset < 0) throw DataError(where + ": negative onset_index");
      lt.onset_index = static_cast<std::size_t>(onset);
    }
    if (!out.emplace(id, std::move(lt)).second) throw DataError(where + ": duplicate trial_id");
  }
  return out;
}

std::string licks_to_json(const std::map<std::int64_t, LickTimes>& licks) {
  json root;
  root["trials"] = json::array();
  for (const auto& [id, lt] : licks)
    root["trials"].push_back({{"trial_id", id}, {"licks", lt.licks}, {"onset_index", lt.onset_index}});
  return root.dump() + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "q,mean,std\n";
  for (const auto& r : rows) out += format_number(r.q) + "," + format_number(r.mean) + "," + format_number(r.std) + "\n";
  return out;
}

std::string coords_to_csv(const std::vector<std::vector<double>>& coords, const std::vector<std::int64_t>& ids,
                          const std::vector<std::string>& labels) {
  if (coords.size() != ids.size() || ids.size() != labels.size()) {
    throw std::invalid_argument("coords_to_csv: size mismatch");
  }
  static const char* const kAxes[] = {"x", "y", "z"};
  const std::size_t dim = coords.empty() ? 0 : coords.front().size();
  if (dim > 3) throw std::invalid_argument("coords_to_csv: at most three axes");
  std::string out = "trial_id";
  for (std::size_t a = 0; a < dim; ++a) out += std::string(",") + kAxes[a];
  out += ",stimulus\n";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out += std::to_string(ids[i]);
    // Avoid printing "-0" for coordinates that are zero.
    for (double v : coords[i]) out += "," + format_number(v == 0.0 ? 0.0 : v);
    out += "," + labels[i] + "\n";
  }
  return out;
}

}  // namespace spiketopo
