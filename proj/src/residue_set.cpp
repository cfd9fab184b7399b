#include "psd/residue_set.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "psd/error.hpp"

namespace psd {

ResidueSet::ResidueSet(int modulus, std::vector<int> elements) : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ < 1) throw InputError(fmt::format("residue set modulus must be positive, got {}", modulus_));
  for (auto& x : elements_) x = ((x % modulus_) + modulus_) % modulus_;
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw InputError(fmt::format("residue set in Z_{} has duplicate elements", modulus_));
  }
}

bool ResidueSet::contains(int x) const {
  x = ((x % modulus_) + modulus_) % modulus_;
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string to_text(const ResidueSet& d) {
  return fmt::format("{}: {}", d.modulus(), fmt::join(d.elements(), ","));
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(fmt::format("residue set: malformed {} '{}'", what, s));
  }
  return value;
}

}  // namespace

ResidueSet parse_residue_set(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("residue set: expected \"v: e1,e2,...\"");
  const int v = parse_int(text.substr(0, colon), "modulus");
  std::vector<int> elements;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    elements.push_back(parse_int(rest.substr(0, comma), "element"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  for (int x : elements) {
    if (x < 0 || x >= v) throw InputError(fmt::format("residue set: element {} outside [0, {}]", x, v - 1));
  }
  return ResidueSet(v, std::move(elements));
}

}  // namespace psd
