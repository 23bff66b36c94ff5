#pragma once

#include <vector>

#include "padicw1/padic.hpp"

namespace padicw1 {

using PadicVector = std::vector<Padic>;
using PadicMatrix = std::vector<PadicVector>;

/// Reduced row echelon form: each row has a 1 in its pivot column and the
/// other rows vanish there. Entries that cannot be told apart from zero at
/// their precision are never used as pivots.
struct RowEchelon {
  PadicMatrix rows;
  std::vector<int> pivots;
  int columns = 0;
};

/// Gauss-Jordan elimination; in each column the pivot of least valuation is
/// chosen.
RowEchelon row_echelon(PadicMatrix rows, int columns);

int rank(const PadicMatrix& rows, int columns);

/// Basis of {x : A x = 0} for the m x n matrix A.
PadicMatrix nullspace(const PadicMatrix& a, int columns);

/// Span membership: coefficients c with v = sum c_i rows_i
/// plus a residual supported off the pivot columns.
struct SpanFit {
  PadicVector coefficients;
  PadicVector residual;
  /// Least valuation bound over the residual; kExact when it is empty.
  int residual_valuation = Padic::kExact;
  bool in_span() const;
};

SpanFit fit_in_span(const RowEchelon& e, const PadicVector& v);

}  // namespace padicw1
