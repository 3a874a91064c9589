#pragma once

#include "kdes/oracle.hpp"
#include "kdes/permutation.hpp"
#include "kdes/report.hpp"

namespace kdes {

// p_i -> n+1-p_i
Permutation complement(const Permutation& p);
Permutation reverse(const Permutation& p);
// complement, then reverse
Permutation star(const Permutation& p);

// On S_L with L = kn+k-2, k >= 3. Sends des_left = j to des_left = n-j.
Permutation bij01(const Permutation& p, int k);
Permutation bij01_inverse(const Permutation& p, int k);

struct Bij02Result {
  Permutation perm;
  // Whether the leading entry of perm is a multiple of k.
  bool leading_in_class = false;
};

// On S_L with L = kn+k-2, k >= 3. des_left = j goes to des_right = j-1 with a
// leading multiple of k, or to des_right = j with a leading non-multiple.
Bij02Result bij02(const Permutation& p, int k);
Permutation bij02_inverse(const Permutation& p, int k);

// Exhaustive checks of the bijections and the palindromicity statements for
// every admissible length in the range.
VerificationReport check_bijections(IntRange lengths, const OracleOptions& opts = {});

}  // namespace kdes
