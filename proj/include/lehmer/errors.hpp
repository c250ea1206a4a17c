#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lehmer {

// Errors a caller can recover from; the CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input and serialization failures; the CLI maps these to exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PipelineYieldsNonPositive final : public DomainError {
public:
    explicit PipelineYieldsNonPositive(const std::string& detail)
        : DomainError("PipelineYieldsNonPositive: " + detail) {}
};

class GridNotSorted final : public DomainError {
public:
    explicit GridNotSorted(std::size_t position)
        : DomainError("GridNotSorted: grid decreases at index " + std::to_string(position)) {}
};

class OrderZero final : public DomainError {
public:
    OrderZero() : DomainError("OrderZero: derivative order must be >= 1") {}
};

class ConstantSample final : public DomainError {
public:
    explicit ConstantSample(const std::string& detail)
        : DomainError("ConstantSample: " + detail) {}
};

class TargetOutOfRange final : public DomainError {
public:
    TargetOutOfRange(double target, double lo, double hi, const std::string& detail = "")
        : DomainError("TargetOutOfRange: target " + std::to_string(target) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]" +
                      (detail.empty() ? "" : "; " + detail)) {}
};

class SeriesDiverging final : public DomainError {
public:
    explicit SeriesDiverging(int term)
        : DomainError("SeriesDiverging: term magnitude grew for 3 consecutive orders (at k=" +
                      std::to_string(term) + ")") {}
};

class BelowBranchPoint final : public DomainError {
public:
    explicit BelowBranchPoint(double x)
        : DomainError("BelowBranchPoint: x = " + std::to_string(x) + " is below -1/e") {}
};

class NormalizationMismatch final : public DomainError {
public:
    NormalizationMismatch(double expected, double actual)
        : DomainError("NormalizationMismatch: expected " + std::to_string(expected) +
                      ", got " + std::to_string(actual)) {}
};

class SeriesTooShort final : public DomainError {
public:
    SeriesTooShort(std::size_t length, std::size_t width)
        : DomainError("SeriesTooShort: series length " + std::to_string(length) +
                      " is shorter than window width " + std::to_string(width)) {}
};

class ParseError final : public IoError {
public:
    ParseError(std::size_t row, const std::string& reason)
        : IoError("ParseError: row " + std::to_string(row) + ": " + reason), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class EmptyInput final : public IoError {
public:
    EmptyInput() : IoError("EmptyInput: no data rows in input") {}
};

class FileError final : public IoError {
public:
    explicit FileError(const std::string& detail) : IoError("FileError: " + detail) {}
};

}  // namespace lehmer
