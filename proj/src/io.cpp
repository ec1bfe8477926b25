#include "gapflow/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace gapflow::io {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    out << content;
}

json component_to_json(const HeadwayModel& c) {
    json j;
    switch (c.family()) {
        case Family::Exponential:
            j["rate"] = c.params()[0];
            break;
        case Family::Gamma:
            j["shape"] = c.params()[0];
            j["rate"] = c.params()[1];
            break;
        case Family::LogLogistic:
            j["scale"] = c.params()[0];
            j["shape"] = c.params()[1];
            break;
    }
    return j;
}

HeadwayModel component_from_json(Family family, const json& j) {
    switch (family) {
        case Family::Exponential:
            return HeadwayModel::exponential(j.at("rate").get<double>());
        case Family::Gamma:
            return HeadwayModel::gamma(j.at("shape").get<double>(),
                                       j.at("rate").get<double>());
        case Family::LogLogistic:
            return HeadwayModel::log_logistic(j.at("scale").get<double>(),
                                              j.at("shape").get<double>());
    }
    throw DataError("unknown family in model document");
}

double json_number(const json& j) {
    // NaN is serialized as null
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    return j.get<double>();
}

json number_or_null(double v) {
    if (std::isnan(v) || std::isinf(v)) return nullptr;
    return v;
}

void check_schema(const json& j) {
    if (!j.contains("schema_version") ||
        j.at("schema_version").get<int>() != kSchemaVersion)
        throw DataError("unsupported or missing schema_version");
}

}  // namespace

void write_file_text(const std::string& path, const std::string& content) {
    write_file(path, content);
}

std::string model_to_json(const SuperposedGapModel& model) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "gap_model";
    j["family"] = family_name(model.component(0).family());
    j["L"] = model.size();
    j["components"] = json::array();
    for (const auto& c : model.components()) {
        if (c.family() != model.component(0).family())
            throw DataError("model document requires a single family");
        j["components"].push_back(component_to_json(c));
    }
    return j.dump(2) + "\n";
}

SuperposedGapModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("invalid model JSON: ") + e.what());
    }
    check_schema(j);
    const Family family = family_from_name(j.at("family").get<std::string>());
    std::vector<HeadwayModel> components;
    for (const auto& cj : j.at("components"))
        components.push_back(component_from_json(family, cj));
    if (j.contains("L") &&
        j.at("L").get<std::size_t>() != components.size())
        throw DataError("model document: L does not match component count");
    return SuperposedGapModel(std::move(components));
}

void write_model(const std::string& path, const SuperposedGapModel& model) {
    write_file(path, model_to_json(model));
}

SuperposedGapModel read_model(const std::string& path) {
    return model_from_json(read_file(path));
}

std::string fit_report_to_json(const FitReport& report) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "fit_report";
    j["family"] = family_name(report.family);
    j["L"] = report.L;
    j["estimates"] = report.estimates;
    auto nested = [](const std::vector<std::vector<double>>& rows) {
        json out = json::array();
        for (const auto& row : rows) {
            json r = json::array();
            for (double v : row) r.push_back(number_or_null(v));
            out.push_back(std::move(r));
        }
        return out;
    };
    j["std_errors"] = nested(report.std_errors);
    j["t_values"] = nested(report.t_values);
    j["max_loglik"] = number_or_null(report.max_loglik);
    j["aic"] = number_or_null(report.aic);
    j["n_obs"] = report.n_obs;
    j["n_zero_dropped"] = report.n_zero_dropped;
    j["converged"] = report.converged;
    j["rank_deficient"] = report.rank_deficient;
    j["n_function_evals"] = report.n_function_evals;
    j["n_starts_used"] = report.n_starts_used;
    j["message"] = report.message;
    return j.dump(2) + "\n";
}

FitReport fit_report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("invalid report JSON: ") + e.what());
    }
    check_schema(j);
    FitReport report;
    report.family = family_from_name(j.at("family").get<std::string>());
    report.L = j.at("L").get<std::size_t>();
    report.estimates =
        j.at("estimates").get<std::vector<std::vector<double>>>();
    auto nested = [](const json& rows) {
        std::vector<std::vector<double>> out;
        for (const auto& row : rows) {
            std::vector<double> r;
            for (const auto& v : row) r.push_back(json_number(v));
            out.push_back(std::move(r));
        }
        return out;
    };
    report.std_errors = nested(j.at("std_errors"));
    report.t_values = nested(j.at("t_values"));
    report.max_loglik = json_number(j.at("max_loglik"));
    report.aic = json_number(j.at("aic"));
    report.n_obs = j.at("n_obs").get<std::size_t>();
    report.n_zero_dropped = j.value("n_zero_dropped", std::size_t{0});
    report.converged = j.at("converged").get<bool>();
    report.rank_deficient = j.value("rank_deficient", false);
    report.n_function_evals = j.value("n_function_evals", 0);
    report.n_starts_used = j.value("n_starts_used", 0);
    report.message = j.value("message", std::string{});
    return report;
}

std::string selection_to_json(const SelectionResult& selection) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "selection_result";
    j["best"] = json::parse(fit_report_to_json(selection.best));
    j["table"] = json::array();
    for (const auto& r : selection.table)
        j["table"].push_back(json::parse(fit_report_to_json(r)));
    return j.dump(2) + "\n";
}

ArrivalTimeline read_arrivals(const std::string& path, bool auto_sort) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty arrival file: " + path);
    const bool has_lane = line.find("lane") != std::string::npos;
    if (line.rfind("time_s", 0) != 0)
        throw DataError("arrival file must start with a time_s header: " +
                        path);
    ArrivalTimeline timeline;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string time_field, lane_field;
        if (!std::getline(row, time_field, ','))
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": malformed row");
        int lane = 0;
        try {
            std::size_t pos = 0;
            const double t = std::stod(time_field, &pos);
            if (pos != time_field.size()) throw std::invalid_argument("junk");
            if (has_lane) {
                if (!std::getline(row, lane_field, ','))
                    throw std::invalid_argument("missing lane");
                lane = std::stoi(lane_field);
            }
            timeline.lanes[lane].push_back(t);
        } catch (const std::exception&) {
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": malformed row: " + line);
        }
    }
    if (timeline.total_arrivals() == 0)
        throw DataError("arrival file has no rows: " + path);
    if (auto_sort) {
        for (auto& [lane, times] : timeline.lanes)
            std::sort(times.begin(), times.end());
    }
    try {
        timeline.validate();
    } catch (const std::invalid_argument& e) {
        throw DataError(path + ": " + e.what());
    }
    return timeline;
}

void write_arrivals(const std::string& path, const ArrivalTimeline& timeline) {
    std::ostringstream out;
    const bool merged_only =
        timeline.lanes.size() == 1 && timeline.lanes.begin()->first == 0;
    if (merged_only) {
        out << "time_s\n";
        for (double t : timeline.lanes.begin()->second)
            out << fmt_full(t) << "\n";
    } else {
        out << "time_s,lane\n";
        // chronological across lanes
        std::vector<std::pair<double, int>> rows;
        for (const auto& [lane, times] : timeline.lanes)
            for (double t : times) rows.emplace_back(t, lane);
        std::sort(rows.begin(), rows.end());
        for (const auto& [t, lane] : rows)
            out << fmt_full(t) << "," << lane << "\n";
    }
    write_file(path, out.str());
}

std::vector<double> read_gaps(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty gap file: " + path);
    if (line.rfind("gap_s", 0) != 0)
        throw DataError("gap file must start with a gap_s header: " + path);
    std::vector<double> gaps;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            std::size_t pos = 0;
            const double g = std::stod(line, &pos);
            if (pos != line.size()) throw std::invalid_argument("junk");
            if (g < 0.0) throw std::invalid_argument("negative gap");
            gaps.push_back(g);
        } catch (const std::exception&) {
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": malformed row: " + line);
        }
    }
    if (gaps.empty()) throw DataError("gap file has no rows: " + path);
    return gaps;
}

void write_gaps(const std::string& path, const std::vector<double>& gaps) {
    std::ostringstream out;
    out << "gap_s\n";
    for (double g : gaps) out << fmt_full(g) << "\n";
    write_file(path, out.str());
}

void write_density(const std::string& path, const DensityTable& table) {
    std::ostringstream out;
    out << "bin_center,empirical_density,model_pdf\n";
    for (const auto& row : table.rows)
        out << fmt_full(row.bin_center) << ","
            << fmt_full(row.empirical_density) << "," << fmt_full(row.model_pdf)
            << "\n";
    write_file(path, out.str());
}

void write_grid(const std::string& path, const std::vector<double>& grid,
                const std::vector<CdfPdf>& values) {
    if (grid.size() != values.size())
        throw std::invalid_argument("write_grid: size mismatch");
    std::ostringstream out;
    out << "g,cdf,pdf\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << fmt_full(grid[i]) << "," << fmt_full(values[i].cdf) << ","
            << fmt_full(values[i].pdf) << "\n";
    write_file(path, out.str());
}

}  // namespace gapflow::io
