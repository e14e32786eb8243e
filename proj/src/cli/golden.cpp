#include "modcurve/golden.hpp"

#include "modcurve/arith.hpp"

#include <sstream>

namespace modcurve::golden {

namespace detail {
extern const std::string_view kGoldenText;
}

namespace {
constexpr int kVersion = 1;
}

std::vector<Record> parse(std::string_view text) {
  std::vector<Record> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool versioned = false;
  for (int number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto bad = [&](const std::string& why) {
      return DomainError("golden data line " + std::to_string(number) + ": " + why);
    };
    if (tok[0] == "version") {
      if (tok.size() != 2 || tok[1] != std::to_string(kVersion)) throw bad("unsupported version");
      versioned = true;
      continue;
    }
    if (!versioned) throw bad("record before the version line");
    if (tok.size() != 4) throw bad("expected <table> <row> <column> <value>");
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(tok[0], &used);
      if (used != tok[0].size()) throw bad("bad table id");
    } catch (const std::logic_error&) {
      throw bad("bad table id");
    }
    out.push_back({id, tok[1], tok[2], tok[3], number});
  }
  if (!versioned) throw DomainError("golden data has no version line");
  return out;
}

std::string_view embedded_text() { return detail::kGoldenText; }

const std::vector<Record>& embedded() {
  static const std::vector<Record> records = parse(embedded_text());
  return records;
}

std::vector<Record> table(int id) {
  std::vector<Record> out;
  for (const auto& r : embedded()) {
    if (r.table == id) out.push_back(r);
  }
  return out;
}

}  // namespace modcurve::golden
