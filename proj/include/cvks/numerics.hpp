#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cvks::num {

// Deterministic RNG: mt19937_64 with hand-rolled uniform/normal transforms so
// that streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 bits of entropy.
  double uniform();
  double uniform(double lo, double hi);
  // Standard normal via Box-Muller (pinned transform, no cached spare).
  double normal();

  // Derive an independent stream for a worker index.
  static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
  std::uint64_t mt_[312];
  int mt_index_ = 313;  // lazily initialised
  void init();
};

struct GaussHermite {
  std::vector<double> nodes;    // roots of H_n
  std::vector<double> weights;  // weights for integral e^{-x^2} f(x) dx
};

// Golub-Welsch on the Hermite Jacobi matrix.
GaussHermite gauss_hermite(int n);

struct GaussLegendre {
  std::vector<double> nodes;    // on [lo, hi]
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n, double lo, double hi);

struct NelderMeadOptions {
  int max_iterations = 500;
  double diameter_tol = 1e-6;
  double initial_step = 0.4;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

// Minimises f. Deterministic for a fixed starting point.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0,
                             const NelderMeadOptions& options = {});

// Worker cap: CVKS_THREADS if set (positive), otherwise hardware concurrency.
int thread_cap();

// Runs fn(i) for i in [0, n) across up to thread_cap() workers. fn must be
// safe to call concurrently for distinct i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvks::num
