#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lehmer/sample.hpp"
#include "lehmer/signal.hpp"
#include "lehmer/transform.hpp"

namespace lehmer::io {

enum class Format { Csv, Json };

Format format_from_string(std::string_view name);

// Guesses from the extension: .json means JSON, anything else CSV.
Format infer_format(const std::string& path);

// CSV needs a `value` or `time,value` header; JSON accepts an array of
// numbers or of {"time": t, "value": v} records. Non-finite entries are
// rejected with their row number.
TimeSeries read_series(const std::string& path, Format format);

// Pipeline spec: comma-separated steps, e.g. "affine-unit:0.01,shift-min:1".
// Step names: abs-shift, affine-unit, scale-max, softplus, exp, shift-min.
NormalizationPipeline parse_pipeline(std::string_view spec);

// %.17g, enough digits to round-trip any double.
std::string format_double(double v);

std::string moment_to_string(BreveMoment s);
BreveMoment moment_from_string(std::string_view token);

// Flat records with insertion-ordered keys; infinite moments are stored as
// the strings "+inf"/"-inf", everything else as numbers.
using Record = nlohmann::ordered_json;

void write_record(std::ostream& os, const Record& record, Format format);
void write_records(std::ostream& os, std::span<const Record> records, Format format);

std::vector<Record> spectrum_records(std::span<const SpectrumPoint> points);
std::vector<Record> spectrogram_records(const BreveSpectrogram& sg);

// Parsed CSV table, for round-trip checks and small readers.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv_table(std::istream& is);

}  // namespace lehmer::io
