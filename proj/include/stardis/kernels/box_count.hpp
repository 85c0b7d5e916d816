#pragma once

#include <cstddef>
#include <cstdint>

namespace stardis::kernels {

// Joint membership counts for an anchored box with the given upper corner.
// closed counts points with coords[j] <= corner[j] on every axis, open
// counts points with coords[j] < corner[j] on every axis.
struct BoxCount {
  std::uint64_t closed = 0;
  std::uint64_t open = 0;

  friend bool operator==(const BoxCount&, const BoxCount&) = default;
};

enum class Backend { scalar, avx2 };

const char* backend_name(Backend backend) noexcept;
bool backend_available(Backend backend) noexcept;

// Backend used by box_count. The default is the fastest available one;
// setting STARDIS_KERNEL=scalar (or =avx2) in the environment overrides
// the initial choice. set_backend returns false and leaves the selection
// unchanged if the requested backend is unavailable on this CPU.
Backend active_backend() noexcept;
bool set_backend(Backend backend) noexcept;

// coords is axis-major: coords[axis * n + i] is coordinate `axis` of point i.
// All variants use exact IEEE comparisons and return identical counts.
BoxCount box_count(const double* coords, std::size_t n, std::size_t d, const double* corner) noexcept;

BoxCount box_count_scalar(const double* coords, std::size_t n, std::size_t d,
                          const double* corner) noexcept;
#if defined(STARDIS_HAVE_AVX2)
BoxCount box_count_avx2(const double* coords, std::size_t n, std::size_t d,
                        const double* corner) noexcept;
#endif

}  // namespace stardis::kernels
