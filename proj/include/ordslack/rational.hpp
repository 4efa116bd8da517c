#pragma once

#include <gmpxx.h>

#include <string>

namespace ordslack {

// All exact arithmetic in the project runs on GMP. No floating point
// anywhere in the numeric kernels.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace ordslack
