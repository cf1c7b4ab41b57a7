#include "cvks/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace cvks::num {

namespace {
constexpr int kMtN = 312;
constexpr int kMtM = 156;
constexpr std::uint64_t kMatrixA = 0xB5026F5AA96619E9ULL;
constexpr std::uint64_t kUpperMask = 0xFFFFFFFF80000000ULL;
constexpr std::uint64_t kLowerMask = 0x7FFFFFFFULL;
}  // namespace

void Rng::init() {
  mt_[0] = state_;
  for (int i = 1; i < kMtN; ++i) {
    mt_[i] = 6364136223846793005ULL * (mt_[i - 1] ^ (mt_[i - 1] >> 62)) + static_cast<std::uint64_t>(i);
  }
  mt_index_ = kMtN;
}

std::uint64_t Rng::next_u64() {
  if (mt_index_ > kMtN) init();
  if (mt_index_ >= kMtN) {
    for (int i = 0; i < kMtN; ++i) {
      std::uint64_t x = (mt_[i] & kUpperMask) | (mt_[(i + 1) % kMtN] & kLowerMask);
      std::uint64_t xa = x >> 1;
      if (x & 1ULL) xa ^= kMatrixA;
      mt_[i] = mt_[(i + kMtM) % kMtN] ^ xa;
    }
    mt_index_ = 0;
  }
  std::uint64_t x = mt_[mt_index_++];
  x ^= (x >> 29) & 0x5555555555555555ULL;
  x ^= (x << 17) & 0x71D67FFFEDA60000ULL;
  x ^= (x << 37) & 0xFFF7EEE000000000ULL;
  x ^= x >> 43;
  return x;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::normal() {
  // Box-Muller; u clamped away from 0 so log stays finite.
  double u = uniform();
  if (u < 1e-300) u = 1e-300;
  double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

std::uint64_t Rng::stream_seed(std::uint64_t seed, std::uint64_t index) {
  // SplitMix64 over seed + odd-multiplied index.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GaussHermite gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be positive");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = std::sqrt(k / 2.0);
    J(k - 1, k) = b;
    J(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussHermite out;
  out.nodes.resize(n);
  out.weights.resize(n);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int k = 0; k < n; ++k) {
    out.nodes[k] = es.eigenvalues()(k);
    double v0 = es.eigenvectors()(0, k);
    out.weights[k] = sqrt_pi * v0 * v0;
  }
  return out;
}

GaussLegendre gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k - 1, k) = b;
    J(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussLegendre out;
  out.nodes.resize(n);
  out.weights.resize(n);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  for (int k = 0; k < n; ++k) {
    out.nodes[k] = mid + half * es.eigenvalues()(k);
    double v0 = es.eigenvectors()(0, k);
    out.weights[k] = 2.0 * v0 * v0 * half;
  }
  return out;
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0,
                             const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> verts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) verts[i + 1][i] += options.initial_step;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(verts[i]);

  auto order = [&]() {
    std::vector<std::size_t> idx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> v2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      v2[i] = verts[idx[i]];
      f2[i] = fv[idx[i]];
    }
    verts.swap(v2);
    fv.swap(f2);
  };

  auto diameter = [&]() {
    double d = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(verts[i][k] - verts[0][k]));
    return d;
  };

  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    order();
    if (diameter() < options.diameter_tol) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += verts[i][k] / static_cast<double>(n);

    auto mix = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + t * (centroid[k] - verts[n][k]);
      return p;
    };

    std::vector<double> xr = mix(1.0);
    double fr = f(xr);
    if (fr < fv[0]) {
      std::vector<double> xe = mix(2.0);
      double fe = f(xe);
      if (fe < fr) {
        verts[n] = xe;
        fv[n] = fe;
      } else {
        verts[n] = xr;
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      verts[n] = xr;
      fv[n] = fr;
    } else {
      std::vector<double> xc = mix(fr < fv[n] ? 0.5 : -0.5);
      double fc = f(xc);
      if (fc < std::min(fr, fv[n])) {
        verts[n] = xc;
        fv[n] = fc;
      } else {
        // shrink toward best vertex
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t k = 0; k < n; ++k) verts[i][k] = verts[0][k] + 0.5 * (verts[i][k] - verts[0][k]);
          fv[i] = f(verts[i]);
        }
      }
    }
  }
  order();
  return {verts[0], fv[0], iter};
}

int thread_cap() {
  if (const char* env = std::getenv("CVKS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = std::min<std::size_t>(thread_cap(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr err;
  std::mutex err_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace cvks::num
