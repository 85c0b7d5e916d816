#include "stardis/kernels/box_count.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace stardis::kernels {

namespace {

Backend detect_backend() noexcept {
  Backend choice = Backend::scalar;
#if defined(STARDIS_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) choice = Backend::avx2;
#endif
  if (const char* env = std::getenv("STARDIS_KERNEL")) {
    const std::string_view want(env);
    if (want == "scalar") choice = Backend::scalar;
    if (want == "avx2" && backend_available(Backend::avx2)) choice = Backend::avx2;
  }
  return choice;
}

std::atomic<Backend>& backend_slot() noexcept {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

}  // namespace

const char* backend_name(Backend backend) noexcept {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend backend) noexcept {
  if (backend == Backend::scalar) return true;
#if defined(STARDIS_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend active_backend() noexcept { return backend_slot().load(std::memory_order_relaxed); }

bool set_backend(Backend backend) noexcept {
  if (!backend_available(backend)) return false;
  backend_slot().store(backend, std::memory_order_relaxed);
  return true;
}

BoxCount box_count(const double* coords, std::size_t n, std::size_t d,
                   const double* corner) noexcept {
#if defined(STARDIS_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return box_count_avx2(coords, n, d, corner);
#endif
  return box_count_scalar(coords, n, d, corner);
}

}  // namespace stardis::kernels
