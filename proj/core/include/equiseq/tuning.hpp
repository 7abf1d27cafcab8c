#pragma once

namespace equiseq {

// Crossover constants for the automatic strategy selection. The asymptotic
// crossovers are fixed by the cost analysis of each algorithm; the factors
// below scale them for a particular machine. All default to 1.
struct Tuning {
  // subcadence: run-scanning over split texts when k >= c * log2(n)
  double split_crossover = 1.0;
  // per character: pair enumeration when k * |N_c|^2 < c * n^2 / log2(n)
  double pairs_budget = 1.0;
  // cadence: filter the split scan when k >= c * sqrt(n * log2(n))
  double filter_crossover = 1.0;
  // pattern matching: bit-parallel when m < c * log2(n)
  double bitpar_crossover = 1.0;
};

}  // namespace equiseq
