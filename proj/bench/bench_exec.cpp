// Serial reference path against the OpenMP path on the heavier kernels.
// Usage: bench_exec [repeats] [workers]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "loopalg/centralizer.hpp"
#include "loopalg/pbw.hpp"
#include "loopalg/talalaev.hpp"

using namespace loopalg;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

PBWPoly power_sum(const LieAlgebraSpec& spec, int depth) {
  PBWPoly p;
  for (int a = 0; a < spec.dim(); ++a)
    for (int m = 1; m <= depth; ++m) p += PBWPoly::monomial(Word{loop_gen(spec, a, m)});
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  if (argc > 2) set_worker_count(std::atoi(argv[2]));
  std::printf("workers: %d, best of %d\n", worker_count(), repeats);
  std::printf("%-34s %10s %10s %8s %6s\n", "kernel", "serial_s", "parallel_s", "speedup", "equal");

  auto gl3 = parse_algebra("gl3");
  auto sl2 = parse_algebra("sl2");
  const PBWPoly x = normal_product(gl3, power_sum(gl3, 3), power_sum(gl3, 2), Exec::serial);
  const SymPoly s1 = s1_bar(sl2);
  const PBWPoly s1q = s1_quantum(sl2);

  struct Case {
    std::string name;
    std::function<std::string(Exec)> run;
  };
  const std::vector<Case> cases{
      {"normal_product gl3 (deg 2 x deg 2)",
       [&](Exec e) { return std::to_string(normal_product(gl3, x, x, e).size()); }},
      {"compute_Q gl3 z_order 3",
       [&](Exec e) { return std::to_string(compute_Q(gl3, 3, e).q.size()); }},
      {"commute check gl3 z_order 3",
       [&, q = compute_Q(gl3, 3, Exec::serial)](Exec e) { return std::to_string(check_pairwise_commute(gl3, q, e).all_zero); }},
      {"ad_kernel_classical sl2 (4,10)",
       [&](Exec e) { return std::to_string(ad_kernel_classical(sl2, s1, {4, 10}, 0, e).kernel_dim); }},
      {"ad_kernel_quantum sl2 (3,6)",
       [&](Exec e) { return std::to_string(ad_kernel_quantum(sl2, s1q, {3, 6}, 0, e).kernel_dim); }},
  };

  bool all_equal = true;
  for (const auto& c : cases) {
    std::string rs, rp;
    const double ts = best_of(repeats, [&] { rs = c.run(Exec::serial); });
    const double tp = best_of(repeats, [&] { rp = c.run(Exec::parallel); });
    all_equal = all_equal && rs == rp;
    std::printf("%-34s %10.4f %10.4f %8.2f %6s\n", c.name.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0,
                rs == rp ? "yes" : "NO");
  }
  return all_equal ? 0 : 1;
}
