#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace regmix {

/// Ordered positive lifetime observations with a label.
class Dataset {
  public:
    Dataset(std::string label, std::vector<double> values);

    const std::string& label() const noexcept { return label_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t count() const noexcept { return values_.size(); }

    double sum() const noexcept;
    double mean() const noexcept { return sum() / static_cast<double>(count()); }

    /// One value per line, full precision; the same format load_file reads.
    void write_values(std::ostream& out) const;

  private:
    std::string label_;
    std::vector<double> values_;
};

/// Text format: one decimal value per line; blank lines and lines starting
/// with '#' are ignored. Throws parse_error with the line number on
/// malformed input and data_error on non-positive values.
Dataset parse_values(std::string_view text, const std::string& label);

/// Labels of the bundled datasets: ex1 (bank service waiting times, minutes),
/// ex2 (ball bearing revolutions to failure, millions), ex3 (analgesic
/// relief times, minutes), ex4 (aircraft window glass strength).
std::vector<std::string> builtin_labels();

/// Loads a bundled dataset and verifies its count and checksum.
Dataset load_builtin(const std::string& label);

/// Loads a dataset from a file in the parse_values format.
Dataset load_file(const std::string& path);

}  // namespace regmix
