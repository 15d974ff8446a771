#ifndef NEFCALC_NEFSEQ_HPP
#define NEFCALC_NEFSEQ_HPP

#include <vector>

#include "nefcalc/certified.hpp"
#include "nefcalc/mixedvol.hpp"
#include "nefcalc/polytope.hpp"

namespace nefcalc {

// s_i^2 >= s_{i-1} s_{i+1} per index, with the exact deficit.
struct LogConcavityReport {
  struct Entry {
    int index;
    Rational deficit;  // s_i^2 - s_{i-1} s_{i+1}
    bool holds;
    bool equality;
  };
  std::vector<Entry> entries;
  bool pass = true;
};

// s_i^d >= s_0^{d-i} s_d^i per index; compared after clearing to integer
// powers, so no roots are ever taken.
struct KtPowerReport {
  struct Entry {
    int index;
    Rational deficit;  // s_i^d - s_0^{d-i} s_d^i
    bool holds;
    bool equality;
  };
  std::vector<Entry> entries;
  bool pass = true;
};

struct MinkowskiReport {
  Cmp verdict;        // ((a+b)^d)^{1/d} vs (a^d)^{1/d} + (b^d)^{1/d}
  bool pass;          // GT or EQ
  bool equality;
  bool expansion_identity;  // ((a+b)^d) = sum binom(d,i) s_i, exact
  Rational sum_volume_scaled;  // d! vol(P+Q)
  unsigned bits_used;
};

struct EqualityConditionsReport {
  bool cond_log_equalities;   // 1) s_i^2 = s_{i-1} s_{i+1} for all i
  bool cond_power_equalities; // 2) s_i^d = s_0^{d-i} s_d^i for all i
  bool cond_endpoint;         // 3) s_{d-1}^d = s_0 s_d^{d-1}
  bool all_agree;
};

LogConcavityReport check_log_concavity(const NefSequence& seq);
KtPowerReport check_kt_power(const NefSequence& seq);
MinkowskiReport check_minkowski(const Polytope& p, const Polytope& q,
                                unsigned max_bits);
EqualityConditionsReport check_equality_conditions(const NefSequence& seq);

}  // namespace nefcalc

#endif
