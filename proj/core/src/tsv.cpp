#include "tsv.hpp"

#include "setu/errors.hpp"
#include "setu/unicode.hpp"

namespace setu::detail {

void for_each_tsv_row(
    std::istream& in, std::size_t expected_fields,
    const std::function<void(std::size_t, std::vector<std::string>&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != expected_fields) {
      throw DataError("expected " + std::to_string(expected_fields) +
                          " tab-separated fields, got " +
                          std::to_string(fields.size()),
                      line_no);
    }
    for (auto& f : fields) {
      try {
        f = uni::to_nfc(f);
      } catch (const std::invalid_argument& e) {
        throw DataError(e.what(), line_no);
      }
    }
    fn(line_no, fields);
  }
}

}  // namespace setu::detail
