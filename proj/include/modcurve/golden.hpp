#pragma once

// Published table values shipped with the library, in the plain-text record
// format of data/golden_tables.txt.

#include <string>
#include <string_view>
#include <vector>

namespace modcurve::golden {

struct Record {
  int table;
  std::string row;
  std::string column;
  std::string value;
  int line;  // 1-based line in the source text

  friend bool operator==(const Record&, const Record&) = default;
};

/// Parses the record format; throws DomainError on a malformed line or an
/// unsupported version.
std::vector<Record> parse(std::string_view text);

/// The embedded data file.
std::string_view embedded_text();
const std::vector<Record>& embedded();

/// Records of one table, in file order.
std::vector<Record> table(int id);

}  // namespace modcurve::golden
