#pragma once

#include "cycloid/params.hpp"

namespace cycloid {

/// Length of the elementary cycle through forward places only: A / gcd(beta, delta).
long long forward_cycle_length(const CycloidParams& c);
/// Length of the elementary cycle through backward places only: A / gcd(alpha, gamma).
long long backward_cycle_length(const CycloidParams& c);

bool is_regular(const CycloidParams& c);            // beta | delta
bool is_co_regular(const CycloidParams& c);         // alpha | gamma
bool is_canonical_regular(const CycloidParams& c);  // beta == gamma == delta

struct CycResult {
  long long cyc = 0;
  long long witness_i = 0;
  long long witness_j = 0;
};

/// Length of the candidate cycle for a given fold count j >= 1, together with
/// the accompanying value of i.
CycResult cyc_candidate(const CycloidParams& c, long long j);

/// Minimal cycle length via the bounded one-parameter search, with the
/// achieving (i, j). Ties resolve to the smallest j.
CycResult cyc_general(const CycloidParams& c);

/// The local-basic-circuit formula, evaluated literally (no minimization).
long long cyc_lbc(const CycloidParams& c);

/// True iff the local-basic-circuit formula already gives the minimum.
bool is_lbc(const CycloidParams& c);

/// Closed forms for the (co-)regular shortcuts. Requires alpha <= beta and
/// beta | delta, or alpha > beta and alpha | gamma; anything else throws.
long long cyc_regular(const CycloidParams& c);

struct CycleReport {
  long long forward_len = 0;
  long long backward_len = 0;
  long long cyc = 0;
  long long witness_i = 0;
  long long witness_j = 0;
  bool lbc = false;
  bool regular = false;
  bool co_regular = false;
  bool canonical_regular = false;
};

CycleReport analyze_cycles(const CycloidParams& c);

}  // namespace cycloid
