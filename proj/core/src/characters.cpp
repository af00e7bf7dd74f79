#include "qva/characters.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "qva/ideal.hpp"
#include "qva/pbw.hpp"
#include "qva/quasi_particle.hpp"

namespace qva {

QSeries character_principal(int max_degree) {
  QSeries s{{}, "principal"};
  for (int d = 0; d <= max_degree; ++d)
    s.coeffs.push_back(static_cast<long long>(pbw_monomials(d).size()));
  return s;
}

QSeries character_qp_basis(int max_degree, const Rat &t, std::optional<int> max_charge) {
  QSeries s{{}, max_charge ? "qp-basis charge<=" + std::to_string(*max_charge) : "qp-basis"};
  (void)t;
  for (int d = 0; d <= max_degree; ++d)
    s.coeffs.push_back(static_cast<long long>(enumerate_qp_basis(d, max_charge).size()));
  return s;
}

QSeries character_quotient(int level, int max_degree) {
  QSeries s{std::vector<long long>(static_cast<std::size_t>(std::max(max_degree + 1, 0))),
            "quotient level " + std::to_string(level)};
  std::atomic<int> next{0};
  auto work = [&] {
    for (int d = next++; d <= max_degree; d = next++)
      s.coeffs[static_cast<std::size_t>(d)] = static_cast<long long>(quotient_graded_dim(level, d));
  };
  const unsigned n = std::min<unsigned>(worker_threads(), static_cast<unsigned>(max_degree + 1));
  if (n <= 1) {
    work();
    return s;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i)
    pool.emplace_back(work);
  for (auto &th : pool)
    th.join();
  return s;
}

unsigned worker_threads() {
  const char *env = std::getenv("QVA_THREADS");
  if (!env)
    return 1;
  char *end = nullptr;
  const long v = std::strtol(env, &end, 10);
  return (end != env && *end == '\0' && v > 0) ? static_cast<unsigned>(v) : 1;
}

} // namespace qva
