#pragma once

#include <hexakit/interval.hpp>

#include <string>
#include <vector>

namespace hexakit {

struct CheckResult {
  std::string id;
  std::string claim;
  std::string status; // certified | refuted | inconclusive
  Interval enclosure;
  double margin = 0.0;
};

struct Certificate {
  std::vector<CheckResult> items;
  Interval working_c;      // min of the certified regional lower bounds
  Interval a2;             // working_c / 8
  bool all_certified = false;
};

// Full scalar ledger L1..L20 evaluated in outward-rounded interval
// arithmetic.  a_value overrides the coefficient a = 3/50 (used by the
// tamper hook to demonstrate refutation).
Certificate check_scalar_ledger(double a_value = 3.0 / 50.0);

std::string certificate_json(const Certificate& cert);

// Same document with an extra "scans" array appended.
std::string certificate_json(const Certificate& cert,
                             const std::vector<CheckResult>& scans);

struct ScanResult {
  double min_value = 0.0;
  double arg_x = 0.0;
  double arg_y = 0.0;
  double certified_bound = 0.0; // min_value - lipschitz * half cell diagonal
  bool certified = false;       // lipschitz given and bound positive
};

// Grid scan of f_max(k, x, y) over a box; heuristic corroboration with an
// optional Lipschitz-based lower bound.
ScanResult scan_infimum(int k, double x0, double x1, double y0, double y1,
                        int grid, double lipschitz = 0.0);

// Corroborating scans over the standard boxes (k = 7, 8, 9 and the k = 6
// slice at x = 1/10); status heuristic-pass / heuristic-fail.  The y tails
// beyond the box are covered by the certified ledger items.
std::vector<CheckResult> scan_rows(int grid);

// Largest C on the sample grid with arc1(x) >= 1 + 6 x^2 - C x^3 for
// 0 < x <= x_max.
double fit_arc_coercivity(double x_max = 0.5, int grid = 10000);

} // namespace hexakit
