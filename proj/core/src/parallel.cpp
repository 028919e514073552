#include "fpd/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace fpd {

std::size_t worker_count() {
  if (const char* env = std::getenv("FPD_THREADS")) {
    const std::string_view s(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace fpd
