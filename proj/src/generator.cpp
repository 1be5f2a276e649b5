#include "pssp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pssp {

Instance generate_instance(const GeneratorOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const int n = opts.partitions;
  const int m = opts.machines;
  const auto total = static_cast<std::size_t>(n) * m;

  std::uniform_int_distribution<Time> duration(opts.min_duration, opts.max_duration);
  std::vector<Operation> ops;
  ops.reserve(total);
  std::vector<int> order(m);
  for (int j = 0; j < n; ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int k = 0; k < m; ++k) ops.push_back({j * m + k, order[k], j, duration(rng)});
  }

  // rank[o]: position of o in a random topological order.
  std::vector<OpId> sequence;
  sequence.reserve(total);
  if (opts.job_shop) {
    std::vector<int> next(n, 0);
    std::vector<int> open(n);
    std::iota(open.begin(), open.end(), 0);
    while (!open.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
      const auto idx = pick(rng);
      const int j = open[idx];
      sequence.push_back(j * m + next[j]);
      if (++next[j] == m) open.erase(open.begin() + static_cast<std::ptrdiff_t>(idx));
    }
  } else {
    sequence.resize(total);
    std::iota(sequence.begin(), sequence.end(), 0);
    std::shuffle(sequence.begin(), sequence.end(), rng);
  }

  std::vector<Precedence> edges;
  if (opts.job_shop) {
    for (int j = 0; j < n; ++j)
      for (int k = 1; k < m; ++k) edges.push_back({j * m + k - 1, j * m + k});
  }
  std::bernoulli_distribution coin(std::clamp(opts.density, 0.0, 1.0));
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a + 1; b < total; ++b)
      if (coin(rng)) edges.push_back({sequence[a], sequence[b]});

  return Instance(m, n, std::move(ops), std::move(edges));
}

}  // namespace pssp
