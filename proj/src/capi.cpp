#include "cvks.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "cvks/homodyne_chsh.hpp"
#include "cvks/numerics.hpp"
#include "cvks/pseudospin.hpp"
#include "cvks/rrep.hpp"
#include "cvks/werner.hpp"

namespace {

thread_local std::string g_last_error;

cvks_status fail(cvks_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

template <typename Fn>
cvks_status guarded(Fn&& fn) {
  try {
    fn();
    return CVKS_OK;
  } catch (const std::domain_error& e) {
    return fail(CVKS_EDOMAIN, e.what());
  } catch (const cvks::num::ConvergenceError& e) {
    return fail(CVKS_ECONVERGENCE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CVKS_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(CVKS_EINTERNAL, e.what());
  } catch (...) {
    return fail(CVKS_EINTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

struct cvks_pseudospin {
  cvks::pfock::SqueezedSpec spec;
};

const char* cvks_version(void) { return "0.1.0"; }

const char* cvks_strerror(cvks_status status) {
  switch (status) {
    case CVKS_OK: return "ok";
    case CVKS_EINVAL: return "invalid argument";
    case CVKS_EDOMAIN: return "domain error";
    case CVKS_ECONVERGENCE: return "convergence failure";
    case CVKS_EINTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cvks_last_error(void) { return g_last_error.c_str(); }

double cvks_nchv_bound(void) { return cvks::pm::kNchvBound; }
double cvks_quantum_max(void) { return cvks::pm::kQuantumMax; }

cvks_status cvks_werner_eval(double a, double p, double alpha, cvks_werner_result* out) {
  if (!out) return fail(CVKS_EINVAL, "out must not be null");
  return guarded([&] {
    const cvks::pm::KsBreakdown b = cvks::werner::werner_ks({a, p, alpha});
    out->ks = b.ks;
    out->r[0] = b.r1;
    out->r[1] = b.r2;
    out->r[2] = b.r3;
    out->c[0] = b.c1;
    out->c[1] = b.c2;
    out->c[2] = b.c3;
    out->max_imag_residue = b.max_imag_residue;
    const auto oc = cvks::werner::classify_case(a, p);
    out->has_oracle = oc.has_value() ? 1 : 0;
    out->oracle = oc ? cvks::werner::appendix_oracle(*oc, alpha)
                     : std::numeric_limits<double>::quiet_NaN();
  });
}

cvks_status cvks_reference_oracle(double a, double p, double alpha, double* out) {
  if (!out) return fail(CVKS_EINVAL, "out must not be null");
  return guarded([&] {
    const auto oc = cvks::werner::classify_case(a, p);
    if (!oc) throw std::invalid_argument("(a, p) does not match a tabulated closed-form case");
    *out = cvks::werner::appendix_oracle(*oc, alpha);
  });
}

cvks_status cvks_closed_form_eval(double a, double p, double alpha, double* out_ks) {
  if (!out_ks) return fail(CVKS_EINVAL, "out must not be null");
  return guarded([&] { *out_ks = cvks::werner::closed_form_recursion_ks({a, p, alpha}).ks; });
}

cvks_status cvks_chsh_value(double a, double p, double alpha, const double angles[4], double* out) {
  if (!out || !angles) return fail(CVKS_EINVAL, "null pointer argument");
  return guarded([&] {
    const auto state = cvks::werner::build_werner({a, p, alpha});
    *out = cvks::chsh::chsh_value(state, {angles[0], angles[1], angles[2], angles[3]}, alpha);
  });
}

cvks_status cvks_chsh_maximize(double a, double p, double alpha, int restarts, uint64_t seed,
                               double* best, double angles_out[4]) {
  if (!best) return fail(CVKS_EINVAL, "best must not be null");
  return guarded([&] {
    const auto state = cvks::werner::build_werner({a, p, alpha});
    const auto res = cvks::chsh::chsh_maximize(state, alpha, restarts, seed);
    *best = res.best;
    if (angles_out) {
      angles_out[0] = res.angles.theta1;
      angles_out[1] = res.angles.theta1p;
      angles_out[2] = res.angles.theta2;
      angles_out[3] = res.angles.theta2p;
    }
  });
}

cvks_status cvks_pseudospin_create(int dim, int quad_nodes, cvks_pseudospin** out) {
  if (!out) return fail(CVKS_EINVAL, "out must not be null");
  *out = nullptr;
  return guarded([&] {
    if (dim != 0 && (dim < 2 || dim % 2 != 0))
      throw std::invalid_argument("dim must be 0 (auto) or an even integer >= 2");
    if (quad_nodes < 16) throw std::invalid_argument("quad_nodes must be >= 16");
    auto* h = new cvks_pseudospin;
    h->spec.dim = dim;
    h->spec.quad_nodes = quad_nodes;
    *out = h;
  });
}

cvks_status cvks_pseudospin_ks(cvks_pseudospin* handle, double r, double* ks, double* norm_defect) {
  if (!handle || !ks) return fail(CVKS_EINVAL, "null pointer argument");
  return guarded([&] {
    auto records = cvks::pfock::ks_pseudospin({r}, handle->spec);
    *ks = records[0].ks;
    if (norm_defect) *norm_defect = records[0].norm_defect;
  });
}

void cvks_pseudospin_destroy(cvks_pseudospin* handle) { delete handle; }

cvks_status cvks_rrep_run(int dim_per_mode, int samples, uint64_t seed, double* ks_out,
                          cvks_rrep_report* report) {
  if (samples < 1) return fail(CVKS_EINVAL, "samples must be >= 1");
  return guarded([&] {
    double max_dev = 0.0;
    for (int s = 0; s < samples; ++s) {
      const auto rho = cvks::rrep::random_density(
          dim_per_mode, dim_per_mode * dim_per_mode,
          cvks::num::Rng::stream_seed(seed, static_cast<std::uint64_t>(s)));
      const double ks = cvks::rrep::ks_any_state(rho);
      if (ks_out) ks_out[s] = ks;
      max_dev = std::max(max_dev, std::abs(ks - cvks::pm::kQuantumMax));
    }
    if (report) {
      report->max_ks_deviation = max_dev;
      // single-mode normalization sanity on a thermal-like diagonal state
      const int d = std::max(8, dim_per_mode);
      Eigen::VectorXd diag(d);
      const double nbar = 0.5;
      for (int n = 0; n < d; ++n) diag(n) = std::pow(nbar / (1.0 + nbar), n) / (1.0 + nbar);
      diag /= diag.sum();
      Eigen::MatrixXcd m = diag.cast<cvks::rrep::Complex>().asDiagonal();
      const cvks::rrep::DensityMatrixFock thermal(1, d, std::move(m));
      report->norm_check_error =
          std::abs(cvks::rrep::normalization_integral_single(thermal) - 1.0);
      bool ok = true;
      for (auto kind : {cvks::pm::GammaKind::Row, cvks::pm::GammaKind::Column}) {
        for (int k = 1; k <= 3; ++k) {
          const auto g = cvks::pfock::gamma_pseudospin_matrix(cvks::pm::build_gamma(kind, k),
                                                              dim_per_mode);
          const double sign = (kind == cvks::pm::GammaKind::Column && k == 3) ? -1.0 : 1.0;
          const int n = dim_per_mode * dim_per_mode;
          const Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(n, n);
          if ((g - sign * ident).cwiseAbs().maxCoeff() > 1e-14) ok = false;
        }
      }
      report->gamma_identity_ok = ok ? 1 : 0;
    }
  });
}

}  // extern "C"
