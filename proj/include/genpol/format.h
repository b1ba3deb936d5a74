// Copyright 2026 The genpol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENPOL_FORMAT_H_
#define GENPOL_FORMAT_H_

#include <cmath>
#include <cstdio>
#include <string>

#include "genpol/types.h"

namespace genpol {

/// 17 significant digits, enough to round-trip any double.
inline std::string FormatExact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Short form for human-readable tables.
inline std::string FormatShort(double x, int digits = 10) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

/// `re+imi` / `re-imi`; the sign is taken from the imaginary part's sign bit.
inline std::string FormatComplex(Complex z, bool exact = true) {
  const double im = z.imag();
  const std::string re_text = exact ? FormatExact(z.real()) : FormatShort(z.real());
  const std::string im_text =
      exact ? FormatExact(std::abs(im)) : FormatShort(std::abs(im));
  return re_text + (std::signbit(im) ? "-" : "+") + im_text + "i";
}

}  // namespace genpol

#endif  // GENPOL_FORMAT_H_
