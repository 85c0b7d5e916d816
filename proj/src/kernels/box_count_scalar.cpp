#include "stardis/kernels/box_count.hpp"

namespace stardis::kernels {

BoxCount box_count_scalar(const double* coords, std::size_t n, std::size_t d,
                          const double* corner) noexcept {
  BoxCount out;
  for (std::size_t i = 0; i < n; ++i) {
    bool le = true;
    bool lt = true;
    for (std::size_t j = 0; j < d; ++j) {
      const double c = coords[j * n + i];
      const double x = corner[j];
      le = le && (c <= x);
      lt = lt && (c < x);
      if (!le) break;
    }
    out.closed += le ? 1 : 0;
    out.open += lt ? 1 : 0;
  }
  return out;
}

}  // namespace stardis::kernels
