#include "lehmer/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace lehmer::io {

namespace {

std::string trim(std::string_view sv) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    std::size_t b = 0, e = sv.size();
    while (b < e && is_space(sv[b])) ++b;
    while (e > b && is_space(sv[e - 1])) --e;
    return std::string(sv.substr(b, e - b));
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::optional<double> try_parse_double(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) return std::nullopt;
    return v;
}

double parse_finite(const std::string& token, std::size_t row, const char* what) {
    const auto v = try_parse_double(token);
    if (!v) throw ParseError(row, std::string("cannot parse ") + what + " from '" + token + "'");
    if (!std::isfinite(*v))
        throw ParseError(row, std::string("non-finite ") + what + " '" + token + "'");
    return *v;
}

TimeSeries read_series_csv(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    bool with_time = false;
    bool saw_header = false;
    std::vector<double> values;
    std::vector<double> times;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
            line.erase(0, 3);
        if (trim(line).empty()) continue;
        if (!saw_header) {
            const std::string header = to_lower(trim(line));
            if (header == "value")
                with_time = false;
            else if (header == "time,value" || header == "time, value")
                with_time = true;
            else
                throw ParseError(line_no, "expected header 'value' or 'time,value', got '" +
                                              trim(line) + "'");
            saw_header = true;
            continue;
        }
        const auto cells = split(line, ',');
        const std::size_t expected = with_time ? 2 : 1;
        if (cells.size() != expected)
            throw ParseError(line_no, "expected " + std::to_string(expected) + " column(s), got " +
                                          std::to_string(cells.size()));
        if (with_time) {
            const double t = parse_finite(cells[0], line_no, "time");
            if (!times.empty() && !(t > times.back()))
                throw ParseError(line_no, "timestamps must be strictly increasing");
            times.push_back(t);
            values.push_back(parse_finite(cells[1], line_no, "value"));
        } else {
            values.push_back(parse_finite(cells[0], line_no, "value"));
        }
    }
    if (values.empty()) throw EmptyInput();
    if (with_time) return TimeSeries(std::move(values), std::move(times));
    return TimeSeries(std::move(values));
}

TimeSeries read_series_json(std::istream& is) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    }
    if (!doc.is_array()) throw ParseError(0, "expected a JSON array");
    if (doc.empty()) throw EmptyInput();

    std::vector<double> values;
    std::vector<double> times;
    const bool with_time = doc.front().is_object();
    std::size_t row = 0;
    for (const auto& item : doc) {
        ++row;
        if (with_time) {
            if (!item.is_object() || !item.contains("time") || !item.contains("value") ||
                !item["time"].is_number() || !item["value"].is_number())
                throw ParseError(row, "expected {\"time\": t, \"value\": v}");
            const double t = item["time"].get<double>();
            if (!times.empty() && !(t > times.back()))
                throw ParseError(row, "timestamps must be strictly increasing");
            times.push_back(t);
            values.push_back(item["value"].get<double>());
        } else {
            if (!item.is_number()) throw ParseError(row, "expected a number");
            values.push_back(item.get<double>());
        }
        if (!std::isfinite(values.back())) throw ParseError(row, "non-finite value");
    }
    if (with_time) return TimeSeries(std::move(values), std::move(times));
    return TimeSeries(std::move(values));
}

}  // namespace

Format format_from_string(std::string_view name) {
    const std::string n = to_lower(trim(name));
    if (n == "csv") return Format::Csv;
    if (n == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (use csv or json)");
}

Format infer_format(const std::string& path) {
    const std::size_t dot = path.find_last_of('.');
    if (dot != std::string::npos && to_lower(path.substr(dot)) == ".json") return Format::Json;
    return Format::Csv;
}

TimeSeries read_series(const std::string& path, Format format) {
    std::ifstream is(path);
    if (!is) throw FileError("cannot open '" + path + "' for reading");
    return format == Format::Csv ? read_series_csv(is) : read_series_json(is);
}

NormalizationPipeline parse_pipeline(std::string_view spec) {
    const std::string s = trim(spec);
    if (s.empty()) return NormalizationPipeline{};
    std::vector<NormalizationStep> steps;
    for (const auto& raw : split(s, ',')) {
        const std::string token = trim(raw);
        if (token.empty()) throw std::invalid_argument("empty pipeline step");
        const std::size_t colon = token.find(':');
        const std::string name = to_lower(trim(token.substr(0, colon)));
        std::optional<double> param;
        if (colon != std::string::npos) {
            param = try_parse_double(token.substr(colon + 1));
            if (!param)
                throw std::invalid_argument("cannot parse parameter in pipeline step '" + token +
                                            "'");
        }
        const auto need_param = [&](const char* step_name) {
            if (!param)
                throw std::invalid_argument(std::string(step_name) + " requires a parameter");
            return *param;
        };
        const auto no_param = [&](const char* step_name) {
            if (param)
                throw std::invalid_argument(std::string(step_name) + " takes no parameter");
        };
        if (name == "abs-shift")
            steps.push_back(abs_shift(need_param("abs-shift")));
        else if (name == "affine-unit")
            steps.push_back(affine_to_unit_interval(need_param("affine-unit")));
        else if (name == "scale-max")
            steps.push_back(scale_to_max(need_param("scale-max")));
        else if (name == "softplus") {
            no_param("softplus");
            steps.push_back(softplus());
        } else if (name == "exp") {
            no_param("exp");
            steps.push_back(exp_map());
        } else if (name == "shift-min")
            steps.push_back(affine_shift_min(need_param("shift-min")));
        else
            throw std::invalid_argument("unknown pipeline step '" + name + "'");
    }
    return NormalizationPipeline(std::move(steps));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string moment_to_string(BreveMoment s) {
    if (s.is_pos_infinity()) return "+inf";
    if (s.is_neg_infinity()) return "-inf";
    return format_double(s.value());
}

BreveMoment moment_from_string(std::string_view token) {
    const std::string t = to_lower(trim(token));
    if (t == "inf" || t == "+inf" || t == "infinity" || t == "+infinity")
        return BreveMoment::pos_infinity();
    if (t == "-inf" || t == "-infinity") return BreveMoment::neg_infinity();
    const auto v = try_parse_double(t);
    if (!v || std::isnan(*v))
        throw std::invalid_argument("cannot parse breve moment from '" + std::string(token) + "'");
    return BreveMoment::from_double(*v);
}

namespace {

std::string cell_to_string(const Record& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_unsigned()) return std::to_string(value.get<unsigned long long>());
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number_float()) return format_double(value.get<double>());
    return value.dump();
}

void write_csv_rows(std::ostream& os, std::span<const Record> records) {
    if (records.empty()) return;
    bool first = true;
    for (const auto& [key, value] : records.front().items()) {
        (void)value;
        if (!first) os << ',';
        os << key;
        first = false;
    }
    os << '\n';
    for (const auto& record : records) {
        first = true;
        for (const auto& [key, value] : record.items()) {
            (void)key;
            if (!first) os << ',';
            os << cell_to_string(value);
            first = false;
        }
        os << '\n';
    }
}

}  // namespace

void write_record(std::ostream& os, const Record& record, Format format) {
    if (format == Format::Csv)
        write_csv_rows(os, std::span<const Record>(&record, 1));
    else
        os << record.dump() << '\n';
}

void write_records(std::ostream& os, std::span<const Record> records, Format format) {
    if (format == Format::Csv) {
        write_csv_rows(os, records);
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : records) arr.push_back(r);
        os << arr.dump() << '\n';
    }
}

namespace {

Record moment_field(BreveMoment s) {
    if (s.is_finite()) return Record(s.value());
    return Record(moment_to_string(s));
}

}  // namespace

std::vector<Record> spectrum_records(std::span<const SpectrumPoint> points) {
    std::vector<Record> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        Record r;
        r["s"] = moment_field(p.s);
        r["value"] = p.value;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Record> spectrogram_records(const BreveSpectrogram& sg) {
    std::vector<Record> out;
    out.reserve(sg.rows() * sg.cols());
    for (std::size_t w = 0; w < sg.rows(); ++w) {
        for (std::size_t j = 0; j < sg.cols(); ++j) {
            Record r;
            r["window_start"] = sg.window_starts()[w];
            r["s"] = moment_field(sg.s_grid()[j]);
            r["value"] = sg.value(w, j);
            out.push_back(std::move(r));
        }
    }
    return out;
}

CsvTable read_csv_table(std::istream& is) {
    CsvTable table;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto cells = split(line, ',');
        if (!saw_header) {
            table.header = std::move(cells);
            saw_header = true;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

}  // namespace lehmer::io
