#pragma once

#include <string>
#include <vector>

#include "psd/binary_matrix.hpp"

namespace psd {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> details;  // one diagnostic per line
};

/// Direct quadruple loop over cells; the reference for the bit-parallel table.
int naive_autocorrelation(const BinaryMatrix& r, int t1, int t2);

/// Runs every acceptance criterion in order. `workers` is passed to the searches.
std::vector<CriterionResult> run_acceptance(int workers = 1);

/// "PASS  3  name  (1.23 s)" followed by indented details.
std::string format_result(const CriterionResult& r, bool verbose);

}  // namespace psd
