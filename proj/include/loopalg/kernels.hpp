#pragma once

// Execution policies for the data-parallel loops. Every parallel kernel has a
// serial reference path with identical results: accumulation into canonical
// term maps is exact and order-independent.

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "loopalg/poly.hpp"

namespace loopalg {

enum class Exec { serial, parallel };

// Sets the OpenMP worker count; non-positive means "all cores".
void set_worker_count(int workers);
int worker_count();

// Runs body(i, out) for i in [0, n) and sums the produced term maps.
template <class Body>
TermMap accumulate(std::size_t n, Exec exec, Body&& body) {
  TermMap result;
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i, result);
    return result;
  }
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  std::vector<TermMap> partial(static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    body(static_cast<std::size_t>(i), partial[static_cast<std::size_t>(omp_get_thread_num())]);
  for (auto& p : partial) {
    if (result.empty()) {
      result = std::move(p);
    } else {
      merge_into(result, p);
    }
  }
#else
  for (std::size_t i = 0; i < n; ++i) body(i, result);
#endif
  return result;
}

// Runs job(i) for independent jobs writing to distinct slots.
template <class Job>
void for_each_index(std::size_t n, Exec exec, Job&& job) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) job(static_cast<std::size_t>(i));
}

// Term list snapshot for index-based parallel loops.
template <class P>
std::vector<const typename TermMap::value_type*> term_pointers(const P& p) {
  std::vector<const typename TermMap::value_type*> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back(&t);
  return out;
}

}  // namespace loopalg
