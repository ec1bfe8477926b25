#ifndef GAPFLOW_IO_HPP_
#define GAPFLOW_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "gapflow/diagnostics.hpp"
#include "gapflow/estimation.hpp"
#include "gapflow/simulation.hpp"

namespace gapflow::io {

// Parse / file-content problems carry a position where available.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Write raw text, replacing the file.
void write_file_text(const std::string& path, const std::string& content);

// Versioned JSON model document ("schema_version": 1).
std::string model_to_json(const SuperposedGapModel& model);
SuperposedGapModel model_from_json(const std::string& text);
void write_model(const std::string& path, const SuperposedGapModel& model);
SuperposedGapModel read_model(const std::string& path);

// FitReport JSON (NaN encoded as null).
std::string fit_report_to_json(const FitReport& report);
FitReport fit_report_from_json(const std::string& text);
std::string selection_to_json(const SelectionResult& selection);

// Arrival CSV: header "time_s,lane" (per-lane) or "time_s" (merged
// disorderly stream).  Non-monotone lane times raise DataError unless
// auto_sort is set.
ArrivalTimeline read_arrivals(const std::string& path, bool auto_sort = false);
void write_arrivals(const std::string& path, const ArrivalTimeline& timeline);

// Gap CSV: single "gap_s" column.
std::vector<double> read_gaps(const std::string& path);
void write_gaps(const std::string& path, const std::vector<double>& gaps);

// Density CSV: "bin_center,empirical_density,model_pdf".
void write_density(const std::string& path, const DensityTable& table);

// Grid CSV of the model cdf/pdf: "g,cdf,pdf".
void write_grid(const std::string& path, const std::vector<double>& grid,
                const std::vector<CdfPdf>& values);

}  // namespace gapflow::io

#endif  // GAPFLOW_IO_HPP_
