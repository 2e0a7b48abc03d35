#include "srgeo/core/csv.hpp"

#include <charconv>

namespace srgeo {

std::string formatDouble(double v) {
  char buf[32];
  // to_chars ignores the C locale, unlike printf
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void CsvRow::sep() {
  if (!first_) os_ << ',';
  first_ = false;
}

CsvRow& CsvRow::operator<<(double v) {
  sep();
  os_ << formatDouble(v);
  return *this;
}

CsvRow& CsvRow::operator<<(int v) {
  sep();
  os_ << v;
  return *this;
}

CsvRow& CsvRow::operator<<(const std::string& s) {
  sep();
  os_ << s;
  return *this;
}

}  // namespace srgeo
