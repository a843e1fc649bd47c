#include <stdexcept>

#include "mlab/kernels/kernels.hpp"

#include "backends.hpp"

namespace mlab::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend pick_default() {
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  return Backend::Scalar;
}

Backend& current() {
  static Backend b = pick_default();
  return b;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return avx2_ops() != nullptr && cpu_has_avx2();
  }
  return false;
}

const Ops& ops_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return scalar_ops();
    case Backend::Avx2:
      if (const Ops* ops = avx2_ops(); ops != nullptr && cpu_has_avx2()) {
        return *ops;
      }
      break;
  }
  throw std::logic_error("backend not available");
}

const Ops& active() { return ops_for(current()); }

Backend active_backend() { return current(); }

bool force_backend(Backend b) {
  if (!backend_available(b)) return false;
  current() = b;
  return true;
}

}  // namespace mlab::kernels
