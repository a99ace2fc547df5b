#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graviton {

// Row sink for the per-tick metrics table. Cells are pre-serialized exact
// strings (integers in minimal units, rationals as "num/den"), so emitting
// them is pure text plumbing and byte-stable across platforms.
class MetricsWriter {
public:
    virtual ~MetricsWriter() = default;
    virtual void header(const std::vector<std::string>& columns) = 0;
    virtual void row(const std::vector<std::string>& cells) = 0;
};

class CsvWriter final : public MetricsWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void header(const std::vector<std::string>& columns) override;
    void row(const std::vector<std::string>& cells) override;

private:
    std::ostream& out_;
};

// One JSON object per line, keys in column order.
class RecordsWriter final : public MetricsWriter {
public:
    explicit RecordsWriter(std::ostream& out) : out_(out) {}
    void header(const std::vector<std::string>& columns) override;
    void row(const std::vector<std::string>& cells) override;

private:
    std::ostream& out_;
    std::vector<std::string> columns_;
};

// Collects rows in memory; used by tests and the python bindings.
class TableWriter final : public MetricsWriter {
public:
    void header(const std::vector<std::string>& columns) override { columns_ = columns; }
    void row(const std::vector<std::string>& cells) override { rows_.push_back(cells); }

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace graviton
