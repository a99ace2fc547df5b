#include "graviton/metrics.hpp"

#include <nlohmann/json.hpp>

namespace graviton {

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

void RecordsWriter::header(const std::vector<std::string>& columns) { columns_ = columns; }

void RecordsWriter::row(const std::vector<std::string>& cells) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < cells.size() && i < columns_.size(); ++i) {
        obj[columns_[i]] = cells[i];
    }
    out_ << obj.dump() << '\n';
}

} // namespace graviton
