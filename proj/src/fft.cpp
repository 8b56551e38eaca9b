#include "wblab/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wblab {

namespace {

struct PlanPair {
  fftw_plan forward;
  fftw_plan backward;
};

// In-place plans keyed by size. FFTW's planner is not thread-safe, execution is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
    }
  }

  const PlanPair& get(int n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> scratch(static_cast<std::size_t>(n) * n);
    auto* data = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p{fftw_plan_dft_2d(n, n, data, data, FFTW_FORWARD, flags),
               fftw_plan_dft_2d(n, n, data, data, FFTW_BACKWARD, flags)};
    if (p.forward == nullptr || p.backward == nullptr) throw std::runtime_error("FFTW planning failed");
    return plans_.emplace(n, p).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void run(int n, std::span<const cplx> in, std::span<cplx> out, bool forward) {
  const std::size_t total = static_cast<std::size_t>(n) * n;
  if (in.size() != total || out.size() != total) throw std::invalid_argument("fft2: size mismatch");
  const PlanPair& p = cache().get(n);
  if (in.data() != out.data()) std::copy(in.begin(), in.end(), out.begin());
  auto* data = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(forward ? p.forward : p.backward, data, data);
}

}  // namespace

void fft2_forward(int n, std::span<const cplx> in, std::span<cplx> out) { run(n, in, out, true); }

void fft2_backward(int n, std::span<const cplx> in, std::span<cplx> out) { run(n, in, out, false); }

}  // namespace wblab
