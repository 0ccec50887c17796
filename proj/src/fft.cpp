#include "modspace/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace modspace {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plans] : plans_) {
      fftw_destroy_plan(plans.forward);
      fftw_destroy_plan(plans.backward);
    }
  }

  const PlanPair& get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    // FFTW_ESTIMATE leaves the scratch buffer untouched and gives the same
    // plan on every run.
    auto* scratch = fftw_alloc_complex(n);
    PlanPair pair;
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    pair.forward = fftw_plan_dft_1d(len, scratch, scratch, FFTW_FORWARD, flags);
    pair.backward = fftw_plan_dft_1d(len, scratch, scratch, FFTW_BACKWARD, flags);
    fftw_free(scratch);
    return plans_.emplace(n, pair).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(fftw_plan plan, std::span<std::complex<double>> data) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace

void dft_forward(std::span<std::complex<double>> data) {
  execute(cache().get(data.size()).forward, data);
}

void dft_backward(std::span<std::complex<double>> data) {
  execute(cache().get(data.size()).backward, data);
}

}  // namespace modspace
