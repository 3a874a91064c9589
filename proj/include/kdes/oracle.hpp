#pragma once

#include "kdes/permutation.hpp"
#include "kdes/poly.hpp"

#include <stdexcept>

namespace kdes {

class GuardViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleOptions {
  int jobs = 1;
  // Largest n enumerated without complaint.
  int guard = 11;
};

// Brute force over S_n in lexicographic order. Work is split into contiguous
// rank ranges, one per job, and integer counts are summed, so the result does
// not depend on the job count.
IntPoly poly_A_bruteforce(int k, int n, const OracleOptions& opts = {});
BiPoly poly_B_bruteforce(int k, int n, const OracleOptions& opts = {});
IntPoly distribution_general(int n, const StatConfig& cfg, const OracleOptions& opts = {});

}  // namespace kdes
