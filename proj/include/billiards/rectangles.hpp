#pragma once

#include <array>
#include <vector>

namespace billiards {

// Unit-area rectangle [0, c] x [0, 1/c].
struct RectangleTable {
  double c = 1.0;
};

// Closed trajectory class on the rectangle torus, one per vector
// (n c, m / c) with n, m not both zero.
struct HomotopyClass {
  int n = 0;
  int m = 0;
};

// The four cyclically related trajectories of a class: the images of
// (n c, m / c) under quarter turns. Their lengths sum to the closed form
//   L(c) = 2 sqrt(n^2 c^2 + m^2 / c^2) + 2 sqrt(m^2 c^2 + n^2 / c^2).
struct FamilyLengths {
  std::array<double, 4> lengths{};
  double total = 0.0;
  bool degenerate = false;  // n m = 0: axis-parallel family
};

double closed_form_length(int n, int m, double c);
FamilyLengths family_lengths(int n, int m, double c);

struct RectangleMinimum {
  double c_star = 1.0;
  double value = 0.0;
  bool degenerate = false;
};

// Golden-section search of L over log c in [-5, 5].
RectangleMinimum minimize_c(int n, int m);

struct ScanVerdict {
  bool all_hold = false;
  double worst_margin = 0.0;   // min over the grid of L(c) - L(1)
  double worst_quartic = 0.0;  // min over the grid of c^4 + c^-4 - 2
};

// Pointwise check of L(c) >= L(1) and of the quartic mean inequality the
// closed-form argument reduces to.
ScanVerdict inequality_scan(int n, int m, const std::vector<double>& grid);

}  // namespace billiards
