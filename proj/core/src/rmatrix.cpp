#include "qva/rmatrix.hpp"

#include <stdexcept>

#include "qva/g_series.hpp"

namespace qva {

namespace {

std::array<ExpandedScalar, 16> zero_entries(const VarSpace &space) {
  return {ExpandedScalar(space), ExpandedScalar(space), ExpandedScalar(space),
          ExpandedScalar(space), ExpandedScalar(space), ExpandedScalar(space),
          ExpandedScalar(space), ExpandedScalar(space), ExpandedScalar(space),
          ExpandedScalar(space), ExpandedScalar(space), ExpandedScalar(space),
          ExpandedScalar(space), ExpandedScalar(space), ExpandedScalar(space),
          ExpandedScalar(space)};
}

/// scalar(x) * 1 + perm(x) * P, both series in x = h/u.
MatrixOperator from_x_series(const VarSpace &space, std::size_t u, const HSeries &scalar,
                             const HSeries &perm) {
  const ExpandedScalar s = substitute_inverse_series(space, scalar, u, 1, {});
  const ExpandedScalar p = substitute_inverse_series(space, perm, u, 1, {});
  MatrixOperator m(space);
  for (std::size_t i = 0; i < 4; ++i)
    m.at(i, i) += s;
  const MatrixOperator perm_op = MatrixOperator::permutation(space);
  return m + p * perm_op;
}

} // namespace

MatrixOperator::MatrixOperator(const VarSpace &space)
    : space_(space), entries_(zero_entries(space)) {}

MatrixOperator MatrixOperator::identity(const VarSpace &space) {
  MatrixOperator m(space);
  for (std::size_t i = 0; i < 4; ++i)
    m.at(i, i) = ExpandedScalar::constant(space, 1);
  return m;
}

MatrixOperator MatrixOperator::permutation(const VarSpace &space) {
  // P = sum_{i,j} e_ij (x) e_ji
  MatrixOperator m(space);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      m.at(index(i, j), index(j, i)) = ExpandedScalar::constant(space, 1);
  return m;
}

MatrixOperator &MatrixOperator::operator+=(const MatrixOperator &rhs) {
  for (std::size_t i = 0; i < 16; ++i)
    entries_[i] += rhs.entries_[i];
  return *this;
}

MatrixOperator &MatrixOperator::operator-=(const MatrixOperator &rhs) {
  for (std::size_t i = 0; i < 16; ++i)
    entries_[i] -= rhs.entries_[i];
  return *this;
}

MatrixOperator operator*(const ExpandedScalar &s, const MatrixOperator &m) {
  MatrixOperator out(m.space_);
  for (std::size_t i = 0; i < 16; ++i)
    out.entries_[i] = s * m.entries_[i];
  return out;
}

MatrixOperator operator*(const MatrixOperator &a, const MatrixOperator &b) {
  MatrixOperator out(a.space_);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t k = 0; k < 4; ++k)
        if (!a.at(r, k).is_zero() && !b.at(k, c).is_zero())
          out.at(r, c) += a.at(r, k) * b.at(k, c);
  return out;
}

bool operator==(const MatrixOperator &a, const MatrixOperator &b) {
  for (std::size_t i = 0; i < 16; ++i)
    if (!(a.entries_[i] == b.entries_[i]))
      return false;
  return true;
}

bool MatrixOperator::is_zero() const {
  for (const auto &e : entries_)
    if (!e.is_zero())
      return false;
  return true;
}

MatrixOperator MatrixOperator::h_slice(int power) const {
  const std::size_t h = space_.index("h");
  MatrixOperator out(space_);
  for (std::size_t i = 0; i < 16; ++i)
    out.entries_[i] = entries_[i].slice(h, power);
  return out;
}

MatrixOperator rl_product(const MatrixOperator &a, const MatrixOperator &b) {
  // (e_pr e_ac) (x) (e_bd e_qs) = [r==a][d==q] e_pc (x) e_bs
  using M = MatrixOperator;
  M out(a.space());
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t bb = 0; bb < 2; ++bb)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t s = 0; s < 2; ++s)
          for (std::size_t aa = 0; aa < 2; ++aa)
            for (std::size_t d = 0; d < 2; ++d) {
              const auto &x = a.at(M::index(aa, bb), M::index(c, d));
              const auto &y = b.at(M::index(p, d), M::index(aa, s));
              if (!x.is_zero() && !y.is_zero())
                out.at(M::index(p, bb), M::index(c, s)) += x * y;
            }
  return out;
}

MatrixOperator lr_product(const MatrixOperator &a, const MatrixOperator &b) {
  // (e_ac e_pr) (x) (e_qs e_bd) = [c==p][s==b] e_ar (x) e_qd
  using M = MatrixOperator;
  M out(a.space());
  for (std::size_t aa = 0; aa < 2; ++aa)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t d = 0; d < 2; ++d)
          for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t bb = 0; bb < 2; ++bb) {
              const auto &x = a.at(M::index(aa, bb), M::index(c, d));
              const auto &y = b.at(M::index(c, q), M::index(r, bb));
              if (!x.is_zero() && !y.is_zero())
                out.at(M::index(aa, q), M::index(r, d)) += x * y;
            }
  return out;
}

MatrixOperator yang_r(const VarSpace &space, std::size_t u, const Argument &arg) {
  const std::size_t n = space.h_order();
  if (n == 0)
    throw std::invalid_argument("yang_r: space has no h coordinate");
  const HSeries minus_x = HSeries::monomial(n, 1, -1);
  return from_x_series(space, u, HSeries::one(n), transform_argument(minus_x, arg.sign, arg.shift));
}

MatrixOperator rbar(const VarSpace &space, std::size_t u, const Argument &arg) {
  const std::size_t n = space.h_order();
  if (n == 0)
    throw std::invalid_argument("rbar: space has no h coordinate");
  const HSeries g = g_series(n);
  const HSeries minus_x_g = HSeries::monomial(n, 1, -1) * g;
  return from_x_series(space, u, transform_argument(g, arg.sign, arg.shift),
                       transform_argument(minus_x_g, arg.sign, arg.shift));
}

VarSpace rmatrix_space(std::size_t h_order) {
  const int top = static_cast<int>(h_order) - 1;
  return VarSpace::with_h({{"u", -top, 0}}, h_order);
}

} // namespace qva
