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

#include "xsinc/quadrature.h"

#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace xsinc {
namespace {

struct Panel {
  double a, b;
  double fa, fq1, fm, fq3, fb;  // f at a, a+h/4, a+h/2, a+3h/4, b
  double coarse;                // Simpson on [a, b]
  double fine;                  // composite Simpson on both halves
  double error;

  double Refined() const { return fine + (fine - coarse) / 15.0; }
};

Panel MakePanel(const Integrand& f, double a, double b, double fa, double fm,
                double fb) {
  Panel p;
  p.a = a;
  p.b = b;
  p.fa = fa;
  p.fm = fm;
  p.fb = fb;
  const double h = b - a;
  p.fq1 = f(a + 0.25 * h);
  p.fq3 = f(a + 0.75 * h);
  p.coarse = h / 6.0 * (fa + 4.0 * fm + fb);
  p.fine = h / 12.0 * (fa + 4.0 * p.fq1 + 2.0 * fm + 4.0 * p.fq3 + fb);
  p.error = std::abs(p.fine - p.coarse);
  return p;
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.error < y.error;
  }
};

}  // namespace

double IntegrateAdaptiveSimpson(const Integrand& f, double a, double b,
                                const AdaptiveSimpson& options) {
  if (!(b > a)) return 0.0;
  constexpr int kInitialPanels = 8;
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  const double width = (b - a) / kInitialPanels;
  double total_error = 0.0;
  double left_value = f(a);
  for (int i = 0; i < kInitialPanels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == kInitialPanels) ? b : a + (i + 1) * width;
    const double f_hi = f(hi);
    Panel p = MakePanel(f, lo, hi, left_value, f(0.5 * (lo + hi)), f_hi);
    total_error += p.error;
    queue.push(p);
    left_value = f_hi;
  }

  while (total_error > options.abs_tol) {
    if (static_cast<int>(queue.size()) >= options.max_panels) {
      throw QuadratureError("adaptive Simpson: panel cap reached on [" +
                            std::to_string(a) + ", " + std::to_string(b) +
                            "], error estimate " +
                            std::to_string(total_error));
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("adaptive Simpson: panel width underflow near " +
                            std::to_string(worst.a));
    }
    Panel left = MakePanel(f, worst.a, mid, worst.fa, worst.fq1, worst.fm);
    Panel right = MakePanel(f, mid, worst.b, worst.fm, worst.fq3, worst.fb);
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Sum smallest-first for a little less rounding.
  std::vector<double> parts;
  parts.reserve(queue.size());
  double check_error = 0.0;
  while (!queue.empty()) {
    parts.push_back(queue.top().Refined());
    check_error += queue.top().error;
    queue.pop();
  }
  if (check_error > 2.0 * options.abs_tol) {
    throw QuadratureError("adaptive Simpson: error bookkeeping drifted");
  }
  double sum = 0.0;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) sum += *it;
  return sum;
}

double IntegrateLeftRiemann(const Integrand& f, double a, double b,
                            const LeftRiemannGrid& grid) {
  if (!(b > a)) return 0.0;
  if (!(grid.step > 0.0)) {
    throw std::invalid_argument("LeftRiemannGrid: step must be positive");
  }
  // Node k sits at k*step; tolerate lattice points that a or b hit up to
  // rounding.
  const double eps = 1e-9;
  long long k = static_cast<long long>(std::ceil(a / grid.step - eps));
  double sum = 0.0;
  for (;; ++k) {
    const double node = static_cast<double>(k) * grid.step;
    if (node >= b - eps * grid.step) break;
    sum += f(node);
  }
  return sum * grid.step;
}

double Integrate(const Integrand& f, double a, double b,
                 const QuadratureRule& rule) {
  return std::visit(
      [&](const auto& r) -> double {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, AdaptiveSimpson>) {
          return IntegrateAdaptiveSimpson(f, a, b, r);
        } else {
          return IntegrateLeftRiemann(f, a, b, r);
        }
      },
      rule);
}

}  // namespace xsinc
