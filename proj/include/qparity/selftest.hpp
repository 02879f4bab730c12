#pragma once

#include <ostream>

namespace qparity {

struct AcceptanceOptions {
  long sweep_max = 100000;     // quarter search / Bernstein sweep bound
  int triple_max_n = 300;      // three-way spectrum agreement bound
  int equivalence_order = 16;  // specialness criteria box order
  int annihilation_smax = 10;  // annihilation identity max S
  long closed_match_n = 100;   // closed eigenvalue vs G coefficient bound
  int gram_smax = 4;           // Gram bridge max S
  long figure_count = 501;     // figure reproduction row count
};

/// Runs the full acceptance suite, one pass/fail line per criterion.
/// Returns the number of failed criteria.
int run_acceptance(std::ostream& out, const AcceptanceOptions& opts = {});

}  // namespace qparity
