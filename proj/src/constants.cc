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

#include "gapforge/constants.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gapforge/error.h"

namespace gapforge {
namespace {

constexpr double kSnapTol = 1e-12;

void require_dim(int d) {
  if (d < 2) throw DomainError("dimension d must be at least 2");
}

std::string printf_string(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

}  // namespace

double sk_exponent() { return std::log(5.0) / std::log(1.5); }

double sk_constant(int d) { return d + 2.0; }

double eps0_min(int d) {
  require_dim(d);
  return 1.0 / (d + 2.0);
}

double tau(double eps, int d) {
  require_dim(d);
  if (!(eps > 0 && eps < 1)) throw DomainError("tau: eps must lie in (0, 1)");
  const double L = std::sqrt(std::log(6 * kCb / eps));
  return L * std::sqrt(L / 32 + std::log(d / eps * L));
}

std::int64_t scale_t0(double eps, int d) {
  const double value = 5 * std::pow(d, 2.5) / eps * tau(eps, d);
  return static_cast<std::int64_t>(std::ceil(value));
}

double length_numerator(int d, double eps) {
  require_dim(d);
  if (!(eps > 0 && eps < 1)) throw DomainError("eps must lie in (0, 1)");
  const double dim = d * d - 1.0;
  return dim * (2 * std::log(1 / eps) + std::log(4 * std::pow(kCb, 1.5) * d)) +
         std::log(32.0);
}

double alpha(int d, double eps0, std::vector<std::string>* warnings) {
  const double top = eps0_min(d);
  if (!(eps0 > 0)) throw DomainError("alpha: eps0 must be positive");
  if (std::abs(eps0 - top) <= kSnapTol) {
    if (warnings) {
      warnings->push_back(
          "eps0 equals 1/(d+2); alpha vanishes and the bound is trivial");
    }
    return 0.0;
  }
  if (eps0 > top) {
    throw DomainError("alpha: eps0 must not exceed 1/(d+2) = " +
                      std::to_string(top));
  }
  const double c = sk_exponent();
  const double log_term = 2 * std::log(1 / (sk_constant(d) * eps0));
  const double N = length_numerator(d, eps0);
  return std::pow(log_term, 2 * c) / (16 * N * N);
}

double beta(int d) {
  const double cs = sk_constant(d);
  return 4 * kC / (cs * cs);
}

Theorem2Constants theorem2_constants(int d, double gap) {
  require_dim(d);
  if (!(gap > 0 && gap <= 1)) {
    throw DomainError("gap must lie in (0, 1]");
  }
  const double dim = d * d - 1.0;
  return {dim / gap, -dim * std::log(4.75) / gap, std::pow(9.5, dim)};
}

BoundParams make_bound_params(int d, double eps0) {
  BoundParams p;
  p.d = d;
  const double top = eps0_min(d);
  p.eps0 = std::abs(eps0 - top) <= kSnapTol ? top : eps0;
  p.c = sk_exponent();
  p.c_s = sk_constant(d);
  p.alpha = alpha(d, p.eps0, &p.warnings);
  p.t0 = scale_t0(p.eps0, d);
  p.beta = beta(d);
  return p;
}

std::vector<double> printed_grid(int d) {
  std::vector<double> grid;
  auto steps = [&](int first, int last) {
    for (int i = first; i <= last; ++i) grid.push_back(i / 100.0);
  };
  switch (d) {
    case 2:
      steps(4, 17);
      break;
    case 3:
      steps(2, 15);
      break;
    case 4:
      steps(1, 14);
      break;
    default:
      return grid;
  }
  grid.push_back(eps0_min(d));
  return grid;
}

std::vector<TableRow> emit_tables(const std::vector<int>& dims,
                                  const std::vector<double>& grid) {
  std::vector<TableRow> rows;
  for (int d : dims) {
    std::vector<double> eps = grid.empty() ? printed_grid(d) : grid;
    for (double e : eps) {
      BoundParams p = make_bound_params(d, e);
      rows.push_back({d, p.eps0, p.t0, p.alpha, p.beta, p.eps0 == eps0_min(d)});
    }
  }
  return rows;
}

std::string format_alpha(double alpha) { return printf_string("%.2e", alpha); }
std::string format_beta(double beta) { return printf_string("%.3f", beta); }
std::string format_eps0(double eps0) { return printf_string("%g", eps0); }

std::string tables_to_csv(const std::vector<TableRow>& rows, bool with_d) {
  std::ostringstream out;
  if (with_d) out << "d,";
  out << "eps0,t0,alpha,beta\n";
  for (const TableRow& r : rows) {
    if (with_d) out << r.d << ',';
    out << format_eps0(r.eps0) << ',' << r.t0 << ',' << format_alpha(r.alpha)
        << ',' << format_beta(r.beta) << '\n';
  }
  return out.str();
}

}  // namespace gapforge
