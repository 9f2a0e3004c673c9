// Copyright 2026 The xsinc Authors.
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

#ifndef XSINC_QUADRATURE_H_
#define XSINC_QUADRATURE_H_

#include <functional>
#include <stdexcept>
#include <variant>

namespace xsinc {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Globally adaptive Simpson: the panel with the largest |S2 - S1| is split
// until the summed estimate drops below abs_tol.
struct AdaptiveSimpson {
  double abs_tol = 1e-10;
  int max_panels = 1 << 20;
};

// Left-endpoint Riemann sum on the lattice {k * step}, anchored at zero
// rather than at the lower limit. Nodes in [a, b) contribute step * f(node).
struct LeftRiemannGrid {
  double step = 1e-3;
};

using QuadratureRule = std::variant<AdaptiveSimpson, LeftRiemannGrid>;

using Integrand = std::function<double(double)>;

double IntegrateAdaptiveSimpson(const Integrand& f, double a, double b,
                                const AdaptiveSimpson& options = {});

double IntegrateLeftRiemann(const Integrand& f, double a, double b,
                            const LeftRiemannGrid& grid);

// Returns 0 when b <= a.
double Integrate(const Integrand& f, double a, double b,
                 const QuadratureRule& rule = AdaptiveSimpson{});

}  // namespace xsinc

#endif  // XSINC_QUADRATURE_H_
