#pragma once

#include "repalg/qlinalg.hpp"
#include "repalg/rep_algebra.hpp"
#include "repalg/words.hpp"

#include <vector>

namespace repalg::filtration {

using algebra::AlgebraContext;
using poly::TruncPoly;

/// Johnson-type map: column v is the homogeneous degree-(k+1) image of the
/// degree-1 generator v.
struct EtaMatrix {
  int k = 1;
  std::vector<TruncPoly> columns;

  bool is_zero() const;
  /// Rows indexed by basis_Tk(k+1), columns by basis_Tk(1).
  qla::QMatrix to_matrix(const AlgebraContext& ctx) const;
  friend bool operator==(const EtaMatrix&, const EtaMatrix&) = default;
};

EtaMatrix operator-(const EtaMatrix& a);

/// True iff s_sigma(a.fwd, v) lies in J^{k+1} for every degree-1 generator v.
/// Throws std::invalid_argument when cap < k + 1.
bool is_in_D(const AlgebraContext& ctx, const words::AutPair& a, int k);

/// v -> s_sigma(a.fwd, v) in degree k+1 (right action, f^sigma - f).
/// Throws std::domain_error when a is not in D(k).
EtaMatrix eta_k(const AlgebraContext& ctx, const words::AutPair& a, int k);

/// Left-action reading v -> sigma.v - v, i.e. eta_k of the inverse.
EtaMatrix eta_k_left(const AlgebraContext& ctx, const words::AutPair& a, int k);

/// Position of x_p ^ x_q (p < q, 1-based) in the basis of Lambda^2 H.
std::size_t wedge_index(int p, int q, int n);

/// Matrix from H coordinates (columns) to Lambda^2 H coordinates (rows).
struct Tau1Value {
  int n = 0;
  qla::QMatrix matrix;
  friend bool operator==(const Tau1Value&, const Tau1Value&) = default;
};

bool is_IA(const words::AutPair& a);
/// Lambda^2 class of x_l^-1 x_l^sigma via the degree-2 Magnus expansion.
/// Throws std::domain_error for automorphisms outside IA.
Tau1Value tau1(const words::AutPair& a);

}  // namespace repalg::filtration
