#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <vector>

namespace setu::detail {

/// Walks the data rows of a TSV stream: '#'-prefixed lines and blank lines
/// are skipped, a trailing '\r' is tolerated, every field is NFC-normalized.
/// Rows with a field count different from `expected_fields` raise DataError
/// naming the 1-based line number.
void for_each_tsv_row(
    std::istream& in, std::size_t expected_fields,
    const std::function<void(std::size_t line_no,
                             std::vector<std::string>& fields)>& fn);

}  // namespace setu::detail
