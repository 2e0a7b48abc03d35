#pragma once

#include <ostream>
#include <string>

namespace srgeo {

/// Round-trip representation ("%.17g"), locale independent.
std::string formatDouble(double v);

/// Writes values separated by commas and ends the row with '\n'.
class CsvRow {
 public:
  explicit CsvRow(std::ostream& os) : os_(os) {}
  ~CsvRow() { os_ << '\n'; }
  CsvRow(const CsvRow&) = delete;
  CsvRow& operator=(const CsvRow&) = delete;

  CsvRow& operator<<(double v);
  CsvRow& operator<<(int v);
  CsvRow& operator<<(const std::string& s);

 private:
  void sep();
  std::ostream& os_;
  bool first_ = true;
};

}  // namespace srgeo
