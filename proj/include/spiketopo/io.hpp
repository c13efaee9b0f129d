#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spiketopo/core.hpp"
#include "spiketopo/pipeline.hpp"
#include "spiketopo/single_neuron.hpp"
#include "spiketopo/stability.hpp"

namespace spiketopo {

/// 12 significant digits ("%.12g"); infinities print as "inf" / "-inf".
std::string format_number(double value);
/// Inverse of format_number; throws DataError naming `what` on bad text.
double parse_number(const std::string& text, const std::string& what);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

/// {"t_max", "stimuli", "trials": [{"trial_id", "stimulus", "trains"}]}.
/// Syntax errors carry the line and column; structural problems are reported
/// through validate_dataset's messages. Both raise DataError.
Dataset parse_raster_json(const std::string& text);
std::string raster_to_json(const Dataset& dataset);

/// One row per spike: trial_id,neuron_index,time,stimulus with a header row.
/// Real-valued times are quantized with `tick`. The neuron count is one past
/// the largest index seen, t_max is the given value or else the latest
/// spike, and stimuli are listed in order of first appearance.
Dataset parse_raster_csv(const std::string& text, double tick = 1.0, Tick t_max = -1);
std::string raster_to_csv(const Dataset& dataset);

/// Picks the format from the extension (".csv" or JSON otherwise).
Dataset read_raster(const std::string& path, double tick = 1.0);

struct LabeledMatrix {
  DistanceMatrix matrix;
  std::vector<std::int64_t> ids;
  std::vector<std::string> labels;
};

/// Header "id,label,<id_1>,...,<id_n>", then one row "<id>,<label>,v_1,...".
std::string matrix_to_csv(const LabeledMatrix& m);
LabeledMatrix parse_matrix_csv(const std::string& text);

/// Rows "degree,birth,death"; death "inf" for essential classes.
std::string diagrams_to_csv(const std::vector<PersistenceDiagram>& diagrams);
/// Diagrams by degree; a degree without rows is absent from the map.
std::map<int, PersistenceDiagram> parse_diagram_csv(const std::string& text);

std::string report_to_json(const ClassificationReport& report);
ClassificationReport parse_report_json(const std::string& text);

/// {"trials": [{"trial_id", "licks", optional "onset_index"}]}.
std::map<std::int64_t, LickTimes> parse_licks_json(const std::string& text);
std::string licks_to_json(const std::map<std::int64_t, LickTimes>& licks);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// Header "trial_id,x[,y[,z]],stimulus".
std::string coords_to_csv(const std::vector<std::vector<double>>& coords, const std::vector<std::int64_t>& ids,
                          const std::vector<std::string>& labels);

}  // namespace spiketopo
