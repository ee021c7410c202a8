#pragma once

#include <cstddef>
#include <cstdint>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace misbench {

// Ask the kernel to back a large buffer with huge pages; random access over
// tens of megabytes is TLB-bound on 4K pages. Best effort, no-op off Linux
// or for small buffers.
inline void advise_huge_pages(void* data, std::size_t bytes) {
#if defined(__linux__)
  constexpr std::size_t kThreshold = std::size_t{4} << 20;
  if (data == nullptr || bytes < kThreshold) return;
  const auto addr = reinterpret_cast<std::uintptr_t>(data);
  const std::uintptr_t aligned = (addr + 4095u) & ~std::uintptr_t{4095u};
  const std::size_t skip = aligned - addr;
  if (bytes <= skip) return;
  ::madvise(reinterpret_cast<void*>(aligned), bytes - skip, MADV_HUGEPAGE);
#else
  (void)data;
  (void)bytes;
#endif
}

}  // namespace misbench
