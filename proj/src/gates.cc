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

#include "gapforge/gates.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <json.hpp>

#include "gapforge/error.h"

namespace gapforge {
namespace {

using Complex = std::complex<double>;
using json = nlohmann::ordered_json;

constexpr double kUnitarityTol = 1e-10;
constexpr double kRepairTol = 1e-6;
constexpr double kDetPhaseTol = 1e-13;

double unitarity_defect(const Eigen::MatrixXcd& U) {
  const Eigen::Index n = U.rows();
  return (U.adjoint() * U - Eigen::MatrixXcd::Identity(n, n))
      .cwiseAbs()
      .maxCoeff();
}

Eigen::MatrixXcd normalize_det(const Eigen::MatrixXcd& U) {
  double phase = std::arg(U.determinant());
  if (std::abs(phase) <= kDetPhaseTol) return U;
  return U * std::polar(1.0, -phase / static_cast<double>(U.rows()));
}

Eigen::MatrixXcd matrix_from_json(const json& rows, int d) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    throw DomainError("gate matrix must have d rows");
  }
  Eigen::MatrixXcd M(d, d);
  for (int r = 0; r < d; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw DomainError("gate matrix must be square");
    }
    for (int c = 0; c < d; ++c) {
      const json& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
          !z[1].is_number()) {
        throw IoError("matrix entries must be [re, im] pairs");
      }
      M(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return M;
}

}  // namespace

GateSet::GateSet(int d, std::vector<Gate> gates, bool symmetric)
    : d_(d), gates_(std::move(gates)), symmetric_(symmetric) {
  if (d < 2) throw DomainError("gate set dimension must be at least 2");
  if (gates_.empty()) throw DomainError("gate set is empty");
  for (Gate& g : gates_) {
    if (g.matrix.rows() != d || g.matrix.cols() != d) {
      throw DomainError("gate '" + g.label + "' is not " + std::to_string(d) +
                        "x" + std::to_string(d));
    }
    if (!(unitarity_defect(g.matrix) <= kUnitarityTol)) {
      throw DomainError("gate '" + g.label + "' is not unitary");
    }
    g.matrix = normalize_det(g.matrix);
  }
}

std::vector<Eigen::MatrixXcd> GateSet::elements() const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(size());
  for (const Gate& g : gates_) out.push_back(g.matrix);
  if (symmetric_) {
    for (const Gate& g : gates_) out.push_back(g.matrix.adjoint());
  }
  return out;
}

bool GateSet::inverse_closed(double tolerance) const {
  if (symmetric_) return true;
  const std::size_t n = gates_.size();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    Eigen::MatrixXcd inv = gates_[i].matrix.adjoint();
    bool found = false;
    for (std::size_t j = i; j < n; ++j) {
      if (used[j]) continue;
      if (pu_distance_from_product(inv.adjoint() * gates_[j].matrix) <=
          tolerance) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullU |
                                                Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

GateSet gateset_from_json(const std::string& text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed gate-set JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("gates")) {
      throw IoError("gate-set JSON needs \"d\" and \"gates\"");
    }
    const int d = doc.at("d").get<int>();
    if (d < 2) throw DomainError("gate-set dimension must be at least 2");
    const bool symmetric = doc.value("symmetric", false);
    std::vector<Gate> gates;
    int index = 0;
    for (const json& entry : doc.at("gates")) {
      ++index;
      Gate g;
      g.label = entry.value("label", "G" + std::to_string(index));
      if (!entry.contains("matrix")) throw IoError("gate without \"matrix\"");
      g.matrix = matrix_from_json(entry.at("matrix"), d);
      double defect = unitarity_defect(g.matrix);
      if (defect > kUnitarityTol) {
        if (!options.repair || !(defect <= kRepairTol)) {
          throw DomainError("gate '" + g.label + "' is not unitary (defect " +
                            std::to_string(defect) + ")");
        }
        g.matrix = polar_unitary(g.matrix);
      }
      gates.push_back(std::move(g));
    }
    return GateSet(d, std::move(gates), symmetric);
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid gate-set JSON: ") + e.what());
  }
}

std::string gateset_to_json(const GateSet& set) {
  json doc;
  doc["d"] = set.d();
  json gates = json::array();
  for (const Gate& g : set.gates()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) {
        row.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
      }
      rows.push_back(std::move(row));
    }
    gates.push_back({{"label", g.label}, {"matrix", std::move(rows)}});
  }
  doc["gates"] = std::move(gates);
  doc["symmetric"] = set.symmetric();
  return doc.dump(2);
}

GateSet load_gateset(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gate-set file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return gateset_from_json(buffer.str(), options);
}

void save_gateset(const GateSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write gate-set file '" + path + "'");
  out << gateset_to_json(set) << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

Eigen::MatrixXcd haar_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd Z(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) Z(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd& R = qr.matrixQR();
  for (int k = 0; k < d; ++k) {
    Complex r = R(k, k);
    double mag = std::abs(r);
    Q.col(k) *= mag > 0 ? r / mag : Complex(1.0);
  }
  return Q;
}

GateSet haar_random_gateset(int d, int k, std::uint64_t seed) {
  if (d < 2 || k < 1) throw DomainError("need d >= 2 and k >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Gate> gates;
  for (int i = 1; i <= k; ++i) {
    gates.push_back({"U" + std::to_string(i), haar_unitary(d, rng)});
  }
  return GateSet(d, std::move(gates), true);
}

double pu_distance_lower_bound(const Eigen::MatrixXcd& w) {
  const double d = static_cast<double>(w.rows());
  return std::sqrt(std::max(0.0, (2 * d - 2 * std::abs(w.trace())) / d));
}

double pu_distance_from_product(const Eigen::MatrixXcd& w) {
  const Eigen::Index d = w.rows();
  if (d == 2) {
    // Eigenphases psi +- phi: the optimum chord is 2 sin(phi/2) or its
    // antipodal partner, both captured by |tr w| = 2 |cos phi|.
    double det_mag = std::abs(w.determinant());
    double tr = std::abs(w.trace()) / std::sqrt(det_mag);
    return std::sqrt(std::max(0.0, 2.0 - tr));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(w, false);
  std::vector<double> phases(d);
  for (Eigen::Index k = 0; k < d; ++k) phases[k] = std::arg(es.eigenvalues()[k]);
  std::sort(phases.begin(), phases.end());
  double largest_gap = phases.front() + 2 * std::numbers::pi - phases.back();
  for (Eigen::Index k = 1; k < d; ++k) {
    largest_gap = std::max(largest_gap, phases[k] - phases[k - 1]);
  }
  // The best rotation centers the smallest arc covering every phase.
  double half_arc = (2 * std::numbers::pi - largest_gap) / 2;
  return 2 * std::sin(half_arc / 2);
}

double pu_distance(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& h) {
  if (g.rows() != g.cols() || h.rows() != h.cols() || g.rows() != h.rows()) {
    throw DomainError("pu_distance: shape mismatch");
  }
  if (!(unitarity_defect(g) <= 1e-8) || !(unitarity_defect(h) <= 1e-8)) {
    throw DomainError("pu_distance: inputs must be unitary");
  }
  return pu_distance_from_product(g.adjoint() * h);
}

GateSet squared_set(const GateSet& set) {
  std::vector<Gate> gates;
  gates.reserve(set.gates().size());
  for (const Gate& g : set.gates()) {
    gates.push_back({g.label + "^2", g.matrix * g.matrix});
  }
  return GateSet(set.d(), std::move(gates), set.symmetric());
}

GateSet symmetrized(const GateSet& set) {
  return GateSet(set.d(), set.gates(), true);
}

std::string to_string(Universality verdict) {
  switch (verdict) {
    case Universality::kLikely:
      return "universal-likely";
    case Universality::kNot:
      return "not-universal";
    case Universality::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace gapforge
