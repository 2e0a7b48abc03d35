#include "srgeo/fourier/literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "srgeo/core/error.hpp"

namespace srgeo {
namespace {

bool isSeparator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';'; }

// Splits on commas, semicolons and whitespace; empty tokens are dropped.
std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (isSeparator(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double parseNumber(const std::string& tok) {
  // strtod accepts "1e-4", "+3", "inf"; reject the last
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw InputError("field literal: cannot parse number '" + tok + "'");
  }
  return v;
}

int parseInt(const std::string& tok) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("field literal: cannot parse mode index '" + tok + "'");
  }
  return v;
}

FourierField parseTriples(std::string_view text, int band) {
  FourierField f(band);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t open = text.find('(', pos);
    if (open == std::string_view::npos) {
      for (std::size_t i = pos; i < text.size(); ++i) {
        if (!isSeparator(text[i])) throw InputError("field literal: stray text after triples");
      }
      break;
    }
    for (std::size_t i = pos; i < open; ++i) {
      if (!isSeparator(text[i])) throw InputError("field literal: stray text between triples");
    }
    const std::size_t close = text.find(')', open);
    if (close == std::string_view::npos) throw InputError("field literal: unbalanced '('");
    const auto parts = tokens(text.substr(open + 1, close - open - 1));
    if (parts.size() != 3) throw InputError("field literal: triples need (k, re, im)");
    const int k = parseInt(parts[0]);
    if (std::abs(k) > band) {
      throw DimensionError("field literal: mode " + std::to_string(k) + " exceeds band limit");
    }
    const FourierField::Complex c(parseNumber(parts[1]), parseNumber(parts[2]));
    f.setCoeff(k, f.coeff(k) + c);
    pos = close + 1;
  }
  return f;
}

FourierField parseDense(std::string_view text, int band) {
  const auto parts = tokens(text);
  if (parts.empty()) throw InputError("field literal: empty");
  const int highest = static_cast<int>(parts.size()) / 2;
  if (highest > band) {
    throw DimensionError("field literal: " + std::to_string(parts.size()) +
                         " entries need band limit >= " + std::to_string(highest));
  }
  FourierField f(band);
  f.setCoeff(0, parseNumber(parts[0]));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const int n = static_cast<int>((i + 1) / 2);
    const double v = parseNumber(parts[i]);
    // a_n cos + b_n sin  ->  c_n = (a_n - i b_n) / 2
    const FourierField::Complex add = (i % 2 == 1) ? FourierField::Complex(v / 2.0, 0.0)
                                                   : FourierField::Complex(0.0, -v / 2.0);
    f.setCoeff(n, f.coeff(n) + add);
  }
  return f;
}

}  // namespace

FourierField parseFieldLiteral(std::string_view text, int bandLimit) {
  if (bandLimit < 0) throw DimensionError("band limit must be non-negative");
  if (text.find('(') != std::string_view::npos) return parseTriples(text, bandLimit);
  return parseDense(text, bandLimit);
}

}  // namespace srgeo
