#include "affsl2/ls_paths.hpp"

#include <string>

#include "affsl2/errors.hpp"
#include "affsl2/weyl.hpp"

namespace affsl2 {

std::vector<LSPathTuple> enumerate_paths(std::int64_t l, std::int64_t m) {
  if (l < m || m < 0)
    throw BadRange("enumerate_paths: need l >= m >= 0, got l=" + std::to_string(l) + " m=" + std::to_string(m));
  std::vector<LSPathTuple> out;
  std::size_t const len = static_cast<std::size_t>(l - m);
  if (len == 0) {
    out.push_back({l, m, {}});
    return out;
  }
  if (m == 0) return out;

  // Odometer over weakly increasing sequences with values in 1..m.
  std::vector<std::int64_t> cur(len, 1);
  while (true) {
    out.push_back({l, m, cur});
    std::size_t pos = len;
    while (pos > 0 && cur[pos - 1] == m) --pos;
    if (pos == 0) break;
    std::int64_t const v = cur[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < len; ++i) cur[i] = v;
  }
  return out;
}

Weight path_weight_chi(LSPathTuple const& p) {
  Weight w;
  for (std::int64_t j = p.end + 1; j <= p.begin; ++j) {
    if (j % 2 != 0)
      w.a0 += p.index_at(j);
    else
      w.a1 += p.index_at(j);
  }
  return w;
}

LaurentPoly chevalley_a(std::int64_t k, std::int64_t m) {
  if (k < m || m < 0) throw BadRange("chevalley_a: need k >= m >= 0");
  LaurentPoly sum;
  for (auto const& p : enumerate_paths(k, m)) sum.add_term(path_weight_chi(p), 1);
  if (k - 1 >= m)
    for (auto const& p : enumerate_paths(k - 1, m)) sum.add_term(path_weight_chi(p), 1);
  LaurentPoly a = sum.shifted(q(m));
  if ((k + m) % 2 != 0) a = -a;
  return a;
}

LaurentPoly d_divisor(std::int64_t k, std::int64_t m) {
  if (k < m || m < 0) return {};
  // [O^1] = 1 - e^{Lambda_0}[L(Lambda_0)]; the e^{Lambda_0} shift is already
  // absorbed into chevalley_a's root-lattice normalization.
  if (k == m) return LaurentPoly(1) - chevalley_a(k, m);
  return -chevalley_a(k, m);
}

}  // namespace affsl2
