#ifndef PSSP_GENERATOR_HPP
#define PSSP_GENERATOR_HPP

#include <cstdint>

#include "pssp/instance.hpp"

namespace pssp {

struct GeneratorOptions {
  int partitions = 3;
  int machines = 3;
  Time min_duration = 1;
  Time max_duration = 5;
  // Probability of an edge between any two operations, oriented from lower to
  // higher rank in a random topological order.
  double density = 0.0;
  // Chain each partition's operations in a random machine order, as in a job shop.
  bool job_shop = false;
  std::uint64_t seed = 0;
};

/// Random canonical instance; acyclic by construction. Same options, same instance.
Instance generate_instance(const GeneratorOptions& opts);

}  // namespace pssp

#endif  // PSSP_GENERATOR_HPP
