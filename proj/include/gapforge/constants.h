// Copyright 2026 The gapforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAPFORGE_CONSTANTS_H_
#define GAPFORGE_CONSTANTS_H_

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace gapforge {

// Constants of the bound. All logarithms are natural.
inline constexpr double kC = std::numbers::pi / 2;
inline constexpr double kCb = 9 * std::numbers::pi;

// Exponent c = ln 5 / ln(3/2) of the Solovay-Kitaev length estimate.
double sk_exponent();

// c_s = d + 2.
double sk_constant(int d);

// 1 / (d + 2), the largest admissible eps0.
double eps0_min(int d);

// tau(eps, d) = L * sqrt(L / 32 + ln(d L / eps)), L = sqrt(ln(6 C_b / eps)).
double tau(double eps, int d);

// ceil(5 d^{5/2} / eps * tau(eps, d)).
std::int64_t scale_t0(double eps, int d);

// (d^2 - 1)(2 ln(1/eps) + ln(4 C_b^{3/2} d)) + ln 32: the numerator of the
// word-length estimate at scale t0.
double length_numerator(int d, double eps);

// [2 ln(1 / (c_s eps0))]^{2c} / (16 N^2), N = length_numerator(d, eps0).
// Requires 0 < eps0 <= eps0_min(d); values within 1e-12 of eps0_min snap to
// it and give exactly 0, with a note appended to `warnings`.
double alpha(int d, double eps0, std::vector<std::string>* warnings = nullptr);

// 4 C / c_s^2 = 2 pi / (d + 2)^2.
double beta(int d);

struct Theorem2Constants {
  double slope;   // (d^2 - 1) / gap
  double offset;  // B = -(d^2 - 1) ln(4.75) / gap
  double volume;  // C_V = 9.5^{d^2 - 1}
};

Theorem2Constants theorem2_constants(int d, double gap);

struct BoundParams {
  int d = 2;
  double eps0 = 0.0;
  double c = 0.0;
  double c_s = 0.0;
  double C = kC;
  double C_b = kCb;
  std::int64_t t0 = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<std::string> warnings;
};

BoundParams make_bound_params(int d, double eps0);

struct TableRow {
  int d;
  double eps0;
  std::int64_t t0;
  double alpha;
  double beta;
  // The eps0 = 1/(d+2) row with the smallest t0.
  bool minimal;
};

// The eps0 values of the published tables for d = 2, 3, 4, ending with
// eps0_min(d). Other d get an empty grid.
std::vector<double> printed_grid(int d);

// One row per (d, eps0). An empty grid selects printed_grid(d).
std::vector<TableRow> emit_tables(const std::vector<int>& dims,
                                  const std::vector<double>& grid = {});

// alpha as "%.2e", beta as "%.3f", eps0 as "%g".
std::string format_alpha(double alpha);
std::string format_beta(double beta);
std::string format_eps0(double eps0);

// Columns eps0,t0,alpha,beta, preceded by d when `with_d` is set.
std::string tables_to_csv(const std::vector<TableRow>& rows, bool with_d);

}  // namespace gapforge

#endif  // GAPFORGE_CONSTANTS_H_
