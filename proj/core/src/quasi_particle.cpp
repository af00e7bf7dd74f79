#include "qva/quasi_particle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qva/linalg.hpp"

namespace qva {

QPMonomial::QPMonomial(const std::vector<std::pair<int, int>> &written) {
  std::vector<QuasiParticle> ps;
  for (auto it = written.rbegin(); it != written.rend(); ++it)
    ps.push_back({it->first, it->second});
  *this = from_particles(std::move(ps));
}

QPMonomial QPMonomial::from_particles(std::vector<QuasiParticle> particles) {
  QPMonomial q;
  for (std::size_t s = 0; s < particles.size(); ++s) {
    const auto &p = particles[s];
    if (p.charge < 1 || p.energy > -1)
      throw std::invalid_argument("quasi-particle needs charge >= 1 and energy <= -1");
    if (s > 0 && p.charge > particles[s - 1].charge)
      throw std::invalid_argument("quasi-particle charges must not increase from right to left");
    q.degree_ -= p.energy;
  }
  q.particles_ = std::move(particles);
  return q;
}

std::vector<std::pair<int, int>> QPMonomial::written() const {
  std::vector<std::pair<int, int>> out;
  for (auto it = particles_.rbegin(); it != particles_.rend(); ++it)
    out.emplace_back(it->charge, it->energy);
  return out;
}

int QPMonomial::total_charge() const {
  int c = 0;
  for (const auto &p : particles_)
    c += p.charge;
  return c;
}

std::string QPMonomial::to_string() const {
  if (particles_.empty())
    return "1";
  std::ostringstream os;
  for (auto it = particles_.rbegin(); it != particles_.rend(); ++it)
    os << "x_(" << it->charge << ")(" << it->energy << ")";
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const QPMonomial &q) { return os << q.to_string(); }

bool enumeration_less(const QPMonomial &a, const QPMonomial &b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  if (a.size() != b.size())
    return a.size() < b.size();
  const auto &pa = a.particles();
  const auto &pb = b.particles();
  for (std::size_t s = 0; s < pa.size(); ++s)
    if (pa[s].charge != pb[s].charge)
      return pa[s].charge < pb[s].charge;
  for (std::size_t s = 0; s < pa.size(); ++s)
    if (pa[s].energy != pb[s].energy)
      return pa[s].energy < pb[s].energy;
  return false;
}

bool is_basis_monomial(const QPMonomial &q, std::optional<int> max_charge) {
  const auto &ps = q.particles();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const int s = static_cast<int>(i) + 1;
    const int m = ps[i].charge;
    const int n = ps[i].energy;
    if (max_charge && m > *max_charge)
      return false;
    if (n > -m - 2 * (s - 1) * m)
      return false;
    if (i > 0 && m == ps[i - 1].charge && n > ps[i - 1].energy - 2 * ps[i - 1].charge)
      return false;
  }
  return true;
}

std::vector<QPMonomial> enumerate_qp_basis(int degree, std::optional<int> max_charge) {
  std::vector<QPMonomial> out;
  if (degree < 0)
    return out;
  std::vector<QuasiParticle> current;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(QPMonomial::from_particles(current));
      return;
    }
    const int s = static_cast<int>(current.size()) + 1;
    int top = current.empty() ? remaining : current.back().charge;
    if (max_charge)
      top = std::min(top, *max_charge);
    for (int m = top; m >= 1; --m) {
      int n_max = -m * (2 * s - 1);
      if (!current.empty() && current.back().charge == m)
        n_max = std::min(n_max, current.back().energy - 2 * m);
      for (int n = n_max; n >= -remaining; --n) {
        current.push_back({m, n});
        extend(remaining + n);
        current.pop_back();
      }
    }
  };
  extend(degree);
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

std::vector<QPMonomial> enumerate_qp_basis_upto(int max_degree, std::optional<int> max_charge) {
  std::vector<QPMonomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto part = enumerate_qp_basis(d, max_charge);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ExpandedVector shifted_product(const VarSpace &space, int degree_cap, std::size_t z,
                               const std::vector<Rat> &shifts) {
  const std::size_t h = space.index("h");
  ExpandedVector out = ExpandedVector::vacuum(space, degree_cap);
  for (const Rat &s : shifts) {
    LinearForm form{{z, Rat(1)}};
    if (s != 0)
      form.emplace_back(h, s);
    out = out * ExpandedVector::xplus(space, degree_cap, form);
  }
  return out;
}

ExpandedVector quasi_particle_series(const VarSpace &space, int degree_cap, std::size_t z, int m,
                                     const Rat &t, const Rat &shift) {
  std::vector<Rat> shifts;
  for (int j = 0; j < m; ++j)
    shifts.push_back(shift + t * j);
  return shifted_product(space, degree_cap, z, shifts);
}

QPFactory::QPFactory(Rat t, std::size_t h_order, int degree_cap)
    : t_(std::move(t)), h_order_(h_order), degree_cap_(degree_cap) {
  if (h_order == 0)
    throw std::invalid_argument("QPFactory: h-order must be positive");
}

const WElement &QPFactory::coefficient(int m, int r) {
  if (m < 1 || r < m)
    throw std::invalid_argument("undefined coefficient");
  if (r > degree_cap_)
    throw std::out_of_range("quasi-particle coefficient above the degree cap");
  auto it = series_.find(m);
  if (it == series_.end()) {
    const VarSpace space = VarSpace::with_h({{"u", 0, degree_cap_ - m}}, h_order_);
    const ExpandedVector e = quasi_particle_series(space, degree_cap_, 0, m, t_);
    std::vector<WElement> coeffs;
    for (int rr = m; rr <= degree_cap_; ++rr)
      coeffs.push_back(e.at({rr - m, 0}));
    it = series_.emplace(m, std::move(coeffs)).first;
  }
  return it->second[static_cast<std::size_t>(r - m)];
}

WElement QPFactory::to_w(const QPMonomial &q) {
  if (q.degree() > degree_cap_)
    throw std::out_of_range("quasi-particle monomial above the degree cap");
  WElement out = WElement::vacuum(degree_cap_, h_order_);
  for (const auto &p : q.particles())
    out = out * coefficient(p.charge, -p.energy);
  return out;
}

WElement qp_series_coefficient(int m, const Rat &t, int r, std::size_t h_order, int degree_cap) {
  QPFactory f(t, h_order, degree_cap);
  return f.coefficient(m, r);
}

WElement qp_monomial_to_w(const QPMonomial &q, const Rat &t, std::size_t h_order, int degree_cap) {
  QPFactory f(t, h_order, degree_cap);
  return f.to_w(q);
}

bool TransitionMatrix::all_blocks_invertible() const {
  return std::all_of(block_invertible.begin(), block_invertible.end(), [](bool b) { return b; });
}

namespace {

bool block_invertible_from(const std::vector<WElement> &vectors, int degree) {
  const auto pbw = pbw_monomials(degree);
  if (vectors.size() != pbw.size())
    return false;
  std::map<PBWMonomial, std::size_t> col;
  for (std::size_t i = 0; i < pbw.size(); ++i)
    col.emplace(pbw[i], i);
  SparseEchelon e(pbw.size());
  for (const auto &w : vectors) {
    RatRow row;
    for (const auto &[m, c] : w.terms())
      if (m.degree() == degree && c[0] != 0)
        row.emplace_back(col.at(m), c[0]);
    e.insert(row);
  }
  return e.rank() == pbw.size();
}

} // namespace

TransitionMatrix transition_matrix(int max_degree, const Rat &t, std::size_t h_order) {
  TransitionMatrix tm;
  QPFactory f(t, h_order, max_degree);
  std::map<PBWMonomial, std::size_t> row_index;
  for (int d = 0; d <= max_degree; ++d)
    for (auto &m : pbw_monomials(d)) {
      row_index.emplace(m, tm.rows.size());
      tm.rows.push_back(std::move(m));
    }
  tm.columns = enumerate_qp_basis_upto(max_degree);
  tm.entries.assign(tm.rows.size(), std::vector<HSeries>(tm.columns.size(), HSeries(h_order)));
  std::vector<std::vector<WElement>> by_degree(static_cast<std::size_t>(max_degree) + 1);
  for (std::size_t j = 0; j < tm.columns.size(); ++j) {
    WElement w = f.to_w(tm.columns[j]);
    for (const auto &[m, c] : w.terms())
      tm.entries[row_index.at(m)][j] = c;
    by_degree[static_cast<std::size_t>(tm.columns[j].degree())].push_back(std::move(w));
  }
  for (int d = 0; d <= max_degree; ++d)
    tm.block_invertible.push_back(block_invertible_from(by_degree[static_cast<std::size_t>(d)], d));
  return tm;
}

bool classical_block_invertible(int degree, const Rat &t) {
  QPFactory f(t, 1, degree);
  std::vector<WElement> vectors;
  for (const auto &q : enumerate_qp_basis(degree))
    vectors.push_back(f.to_w(q));
  return block_invertible_from(vectors, degree);
}

} // namespace qva
