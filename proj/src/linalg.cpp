#include "padicw1/linalg.hpp"

#include <algorithm>

namespace padicw1 {

RowEchelon row_echelon(PadicMatrix rows, int columns) {
  RowEchelon e;
  e.columns = columns;
  size_t next = 0;
  for (int col = 0; col < columns && next < rows.size(); ++col) {
    size_t best = rows.size();
    int best_val = 0;
    for (size_t r = next; r < rows.size(); ++r) {
      const Padic& x = rows[r][col];
      if (x.is_zero()) continue;
      if (best == rows.size() || *x.valuation() < best_val) {
        best = r;
        best_val = *x.valuation();
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    PadicVector& piv = rows[next];
    Padic inv = piv[col].one_like() / piv[col];
    for (auto& x : piv) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_exact_zero()) continue;
      Padic f = rows[r][col];
      for (int c = 0; c < columns; ++c) rows[r][c] -= f * piv[c];
    }
    e.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

int rank(const PadicMatrix& rows, int columns) {
  return static_cast<int>(row_echelon(rows, columns).pivots.size());
}

PadicMatrix nullspace(const PadicMatrix& a, int columns) {
  PadicMatrix out;
  if (a.empty()) {
    throw std::invalid_argument("nullspace: empty matrix");
  }
  RowEchelon e = row_echelon(a, columns);
  const Padic& proto = a.front().front();
  std::vector<bool> is_pivot(static_cast<size_t>(columns), false);
  for (int c : e.pivots) is_pivot[static_cast<size_t>(c)] = true;
  for (int j = 0; j < columns; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    PadicVector x(static_cast<size_t>(columns), proto.zero_like());
    x[static_cast<size_t>(j)] = proto.one_like();
    for (size_t i = 0; i < e.rows.size(); ++i) {
      x[static_cast<size_t>(e.pivots[i])] = -e.rows[i][j];
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool SpanFit::in_span() const {
  return std::all_of(residual.begin(), residual.end(),
                     [](const Padic& x) { return x.is_zero(); });
}

SpanFit fit_in_span(const RowEchelon& e, const PadicVector& v) {
  SpanFit fit;
  fit.residual = v;
  for (size_t i = 0; i < e.rows.size(); ++i) {
    Padic c = fit.residual[static_cast<size_t>(e.pivots[i])];
    fit.coefficients.push_back(c);
    if (c.is_exact_zero()) continue;
    for (int k = 0; k < e.columns; ++k) fit.residual[k] -= c * e.rows[i][k];
  }
  for (const Padic& x : fit.residual) {
    fit.residual_valuation = std::min(fit.residual_valuation, x.valuation_bound());
  }
  return fit;
}

}  // namespace padicw1
