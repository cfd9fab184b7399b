#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace psd {

/// A subset of Z_v, kept sorted and duplicate-free.
class ResidueSet {
 public:
  /// Elements are reduced mod v; duplicates after reduction are an error.
  ResidueSet(int modulus, std::vector<int> elements);

  int modulus() const { return modulus_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int x) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  int modulus_;
  std::vector<int> elements_;
};

/// "v: e1,e2,...,ek"
std::string to_text(const ResidueSet& d);
ResidueSet parse_residue_set(std::string_view text);

}  // namespace psd
