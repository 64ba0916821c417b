#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace oddwave::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plans] : plans_) {
      fftw_destroy_plan(plans.forward);
      fftw_destroy_plan(plans.inverse);
    }
  }

  PlanPair get(int n) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(n); it != plans_.end()) return it->second;
    // FFTW_ESTIMATE never touches the planning arrays.
    double* real = fftw_alloc_real(n);
    fftw_complex* spec = fftw_alloc_complex(n / 2 + 1);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair plans{fftw_plan_dft_r2c_1d(n, real, spec, flags),
                   fftw_plan_dft_c2r_1d(n, spec, real, flags)};
    fftw_free(real);
    fftw_free(spec);
    plans_.emplace(n, plans);
    return plans;
  }

 private:
  std::mutex mutex_;
  std::map<int, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void forward_real(std::span<const double> in, std::span<std::complex<double>> out) {
  const int n = static_cast<int>(in.size());
  const PlanPair plans = cache().get(n);
  // r2c leaves its input intact but the interface is non-const.
  fftw_execute_dft_r2c(plans.forward, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void inverse_real(std::span<const std::complex<double>> in, std::span<double> out) {
  const int n = static_cast<int>(out.size());
  const PlanPair plans = cache().get(n);
  // c2r overwrites its input.
  std::vector<std::complex<double>> scratch(in.begin(), in.end());
  fftw_execute_dft_c2r(plans.inverse, reinterpret_cast<fftw_complex*>(scratch.data()),
                       out.data());
}

}  // namespace oddwave::detail
