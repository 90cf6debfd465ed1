#include "scs/matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "scs/coordinates.hpp"
#include "scs/errors.hpp"

namespace scs {

SquareMatrix::SquareMatrix(int n) : n_(n) {
  if (n < 1) throw DimensionError("matrix dimension must be at least 1");
  a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Scalar(0));
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : SquareMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw DimensionError("matrix rows must have length n");
    int j = 0;
    for (const auto& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  SquareMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != m.n()) {
      throw DimensionError("row " + std::to_string(i) + " has length " + std::to_string(row.size()) +
                           ", expected " + std::to_string(m.n()));
    }
    for (int j = 0; j < m.n(); ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

bool SquareMatrix::is_exact() const {
  for (const auto& v : a_) {
    if (!v.is_exact()) return false;
  }
  return true;
}

SquareMatrix SquareMatrix::principal_submatrix(Subset rows) const {
  std::vector<int> idx;
  for (int i = 0; i < n_; ++i) {
    if (rows & (Subset{1} << i)) idx.push_back(i);
  }
  SquareMatrix m(static_cast<int>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) {
      m(static_cast<int>(r), static_cast<int>(c)) = (*this)(idx[r], idx[c]);
    }
  }
  return m;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& rhs) {
  if (rhs.n_ != n_) throw DimensionError("matrix dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& rhs) {
  if (rhs.n_ != n_) throw DimensionError("matrix dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(const Scalar& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("matrix dimension mismatch");
  SquareMatrix c(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int k = 0; k < a.n(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.n(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

const char* to_string(SubsetKind k) { return k == SubsetKind::PM ? "PM" : "CS"; }
const char* to_string(SymKind k) { return k == SymKind::D ? "d" : "c"; }

SubsetVector::SubsetVector(int n, SubsetKind kind) : n_(n), kind_(kind) {
  if (n < 0 || n > kMaxMinorsDim) {
    throw DimensionError("subset vectors support 0 <= n <= " + std::to_string(kMaxMinorsDim));
  }
  values_.assign(std::size_t{1} << n, Scalar(0));
  values_[0] = Scalar(1);
}

SubsetVector::SubsetVector(int n, SubsetKind kind, std::vector<Scalar> values)
    : n_(n), kind_(kind), values_(std::move(values)) {
  if (n < 0 || n > kMaxMinorsDim) {
    throw DimensionError("subset vectors support 0 <= n <= " + std::to_string(kMaxMinorsDim));
  }
  if (values_.size() != (std::size_t{1} << n)) throw DimensionError("subset vector must have 2^n entries");
  if (!(values_[0] == Scalar(1))) throw DomainError("subset vector entry at the empty set must be 1");
}

bool SubsetVector::is_exact() const {
  for (const auto& v : values_) {
    if (!v.is_exact()) return false;
  }
  return true;
}

SymVector::SymVector(SymKind kind, std::vector<Scalar> values) : kind_(kind), values_(std::move(values)) {
  if (values_.empty() || !(values_[0] == Scalar(1))) {
    throw DomainError("symmetrized vector must start with v_0 = 1");
  }
}

bool SymVector::is_exact() const {
  for (const auto& v : values_) {
    if (!v.is_exact()) return false;
  }
  return true;
}

std::string SymVector::to_string() const {
  std::string out = std::string(scs::to_string(kind_)) + "=(";
  for (std::size_t k = 0; k < values_.size(); ++k) out += (k ? "," : "") + values_[k].to_string();
  return out + ")";
}

namespace {

Scalar bareiss_determinant(SquareMatrix m) {
  const int n = m.n();
  Scalar sign(1);
  Scalar prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m(i, k).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return Scalar(0);
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Scalar float_determinant(const SquareMatrix& a) {
  const int n = a.n();
  std::vector<std::complex<double>> m(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] = a(i, j).to_complex();
  }
  auto at = [&](int i, int j) -> std::complex<double>& { return m[static_cast<std::size_t>(i * n + j)]; };
  std::complex<double> det(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(at(i, k)) > std::abs(at(pivot, k))) pivot = i;
    }
    if (at(pivot, k) == std::complex<double>(0.0, 0.0)) return Scalar::approx(0.0);
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      det = -det;
    }
    det *= at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const auto f = at(i, k) / at(k, k);
      for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return Scalar::approx(det);
}

}  // namespace

Scalar determinant(const SquareMatrix& a) {
  return a.is_exact() ? bareiss_determinant(a) : float_determinant(a);
}

SubsetVector principal_minors(const SquareMatrix& a) {
  if (a.n() > kMaxMinorsDim) {
    throw DimensionError("principal_minors supports n <= " + std::to_string(kMaxMinorsDim));
  }
  SubsetVector out(a.n(), SubsetKind::PM);
  const Subset count = Subset{1} << a.n();
  for (Subset s = 1; s < count; ++s) out[s] = determinant(a.principal_submatrix(s));
  return out;
}

namespace {

// Sum over all Hamiltonian cycles of `set` anchored at `start`, extending the
// path that currently ends at `last` through `remaining`.
void accumulate_cycles(const SquareMatrix& a, int start, int last, Subset remaining, const Scalar& prefix,
                       Scalar& total) {
  if (remaining == 0) {
    total += prefix * a(last, start);
    return;
  }
  for (Subset rest = remaining; rest; rest &= rest - 1) {
    const int next = __builtin_ctz(rest);
    const Scalar& edge = a(last, next);
    if (edge.is_zero()) continue;
    accumulate_cycles(a, start, next, remaining & ~(Subset{1} << next), prefix * edge, total);
  }
}

}  // namespace

SubsetVector cycle_sums(const SquareMatrix& a) {
  if (a.n() > kMaxCycleSumDim) {
    throw DimensionError("cycle_sums supports n <= " + std::to_string(kMaxCycleSumDim));
  }
  SubsetVector out(a.n(), SubsetKind::CS);
  const Subset count = Subset{1} << a.n();
  for (Subset s = 1; s < count; ++s) {
    const int start = __builtin_ctz(s);
    Scalar total(0);
    if (subset_size(s) == 1) {
      total = a(start, start);
    } else {
      accumulate_cycles(a, start, start, s & ~(Subset{1} << start), Scalar(1), total);
    }
    // Keep approximate inputs approximate even when every cycle vanished.
    if (!a.is_exact() && total.is_exact()) total = Scalar::approx(total.to_complex());
    out[s] = std::move(total);
  }
  return out;
}

SymmetrizeResult symmetrize(const SubsetVector& v, double tol) {
  const int n = v.n();
  const bool exact = v.is_exact();
  std::vector<std::optional<Subset>> reference(static_cast<std::size_t>(n) + 1);
  std::vector<Scalar> values(static_cast<std::size_t>(n) + 1, Scalar(0));
  values[0] = Scalar(1);
  const Subset count = Subset{1} << n;
  for (Subset s = 1; s < count; ++s) {
    const auto k = static_cast<std::size_t>(subset_size(s));
    if (!reference[k]) {
      reference[k] = s;
      values[k] = v[s];
      continue;
    }
    const bool agree = exact ? v[s] == values[k] : approx_equal(v[s], values[k], tol);
    if (!agree) return SymmetryViolation{*reference[k], s, values[k], v[s]};
  }
  return SymVector(v.kind() == SubsetKind::PM ? SymKind::D : SymKind::C, std::move(values));
}

ScsReport is_scs(const SquareMatrix& a, double tol) {
  ScsReport report;
  auto d = symmetrize(principal_minors(a), tol);
  auto c = symmetrize(cycle_sums(a), tol);
  if (std::holds_alternative<SymVector>(d)) report.d = std::get<SymVector>(d);
  if (std::holds_alternative<SymVector>(c)) report.c = std::get<SymVector>(c);
  report.scs = report.d.has_value() && report.c.has_value();
  if (report.scs) {
    const SymVector mapped = c_from_d_sym(*report.d);
    for (int k = 0; k <= a.n(); ++k) {
      if (!same_value(mapped[k], (*report.c)[k], 1e-9)) {
        throw ContractViolation("symmetrized minors and cycle-sums disagree at k=" + std::to_string(k));
      }
    }
  }
  return report;
}

}  // namespace scs
