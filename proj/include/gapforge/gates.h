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

#ifndef GAPFORGE_GATES_H_
#define GAPFORGE_GATES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gapforge/weights.h"

namespace gapforge {

struct Gate {
  std::string label;
  Eigen::MatrixXcd matrix;
};

// Finite gate set in PU(d). When `symmetric` is set the gates are the k
// generators U_1..U_k and the inverses are implicit, so |S| = 2k. Otherwise
// the gates are the full multiset S.
class GateSet {
 public:
  // Validates unitarity to 1e-10 and rescales each matrix to determinant
  // one by the principal d-th root. Matrices already within 1e-13 of
  // determinant one are kept bit for bit.
  GateSet(int d, std::vector<Gate> gates, bool symmetric);

  int d() const { return d_; }
  bool symmetric() const { return symmetric_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const {
    return symmetric_ ? 2 * gates_.size() : gates_.size();
  }

  // Every element of S, inverses included: U_1..U_k, U_1^-1..U_k^-1 for
  // symmetric sets.
  std::vector<Eigen::MatrixXcd> elements() const;

  // True if the multiset S is closed under inversion in PU(d), either by
  // the flag or because every listed inverse is present.
  bool inverse_closed(double tolerance = 1e-9) const;

 private:
  int d_;
  std::vector<Gate> gates_;
  bool symmetric_;
};

struct LoadOptions {
  // Project matrices within 1e-6 of unitary onto the unitary group (polar
  // factor) instead of rejecting them.
  bool repair = false;
};

GateSet load_gateset(const std::string& path, const LoadOptions& options = {});
void save_gateset(const GateSet& set, const std::string& path);
GateSet gateset_from_json(const std::string& text,
                          const LoadOptions& options = {});
std::string gateset_to_json(const GateSet& set);

// Haar-distributed U(d) element: QR of a complex Gaussian matrix with the
// phases of diag(R) pushed into Q.
Eigen::MatrixXcd haar_unitary(int d, std::mt19937_64& rng);

// k Haar-random generators with implicit inverses, labelled U1..Uk.
GateSet haar_random_gateset(int d, int k, std::uint64_t seed);

// D(g,h) = min over theta of ||e^{i theta} g - h||. Throws DomainError for
// inputs further than 1e-8 from unitary.
double pu_distance(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& h);

// Same metric from the eigenphases of w = g^H h; no validation.
double pu_distance_from_product(const Eigen::MatrixXcd& w);

// Lower bound on D(g,h) from the trace of w = g^H h alone.
double pu_distance_lower_bound(const Eigen::MatrixXcd& w);

Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& A);

// S^2: every generator squared, symmetry flag and labels carried over.
GateSet squared_set(const GateSet& set);

// S together with S^-1 under the counting measure.
GateSet symmetrized(const GateSet& set);

enum class Universality { kLikely, kNot, kInconclusive };

std::string to_string(Universality verdict);

struct UniversalityReport {
  Universality verdict = Universality::kInconclusive;
  int t_probe = 3;
  double max_norm = 0.0;
  // Weight attaining max_norm.
  std::vector<int> worst_weight;
  // Residual ||A v - v|| of the best invariant vector candidate.
  double invariant_residual = 0.0;
};

// Heuristic, not a certificate. A block of norm one with an invariant vector
// proves non-universality; norms bounded away from one only suggest it.
UniversalityReport universality_heuristic(const GateSet& set, int t_probe = 3);

struct NetOptions {
  std::uint64_t word_cap = 10'000'000;
  int threads = 0;
};

struct NetEstimate {
  int length = 0;
  double eps = 0.0;
  std::size_t samples = 0;
  std::size_t words = 0;
  double covered_fraction = 0.0;
  double max_observed_distance = 0.0;
  std::vector<std::string> warnings;
};

// Fraction of `samples` Haar points within eps of some word of length at
// most `length` (identity included). Adjacent inverse letters are pruned.
// Throws ResourceError past the word cap.
NetEstimate empirical_net(const GateSet& set, int length, double eps,
                          std::size_t samples, std::uint64_t seed,
                          const NetOptions& options = {});

// empirical_net for every length 0..max_length over the same samples.
std::vector<NetEstimate> empirical_net_profile(const GateSet& set,
                                               int max_length, double eps,
                                               std::size_t samples,
                                               std::uint64_t seed,
                                               const NetOptions& options = {});

}  // namespace gapforge

#endif  // GAPFORGE_GATES_H_
