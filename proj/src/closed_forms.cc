// Copyright 2026 The lmc Authors
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

#include <cmath>

#include "lmc/closed_forms.h"

namespace lmc {

namespace {

inline double sn(double x) {
    return std::sin(x);
}
inline double cs(double x) {
    return std::cos(x);
}
inline double sq(double x) {
    return x * x;
}
inline double cube(double x) {
    return x * x * x;
}

}  // namespace

double zk_edge_d2(QaoaAngles a) {
    const double g = a.gamma, b = a.beta;
    return -2 * cs(2 * b) * sn(2 * b) * cs(g) * sn(g) * sq(cs(g / 2)) +
           2 * sq(sn(2 * b)) * cs(g) * sn(g) * cube(cs(g / 2)) * sn(g / 2);
}

double zk_pair_d2(QaoaAngles a) {
    const double g = a.gamma, b = a.beta;
    // The L = {w1,w2} slice carries cs^2(γ/2).
    return -2 * cs(2 * b) * sn(2 * b) * sq(cs(g)) * cs(g / 2) * sn(g / 2) +
           sq(sn(2 * b)) * sq(cs(g)) * sq(sn(g)) * sq(cs(g / 2));
}

double zk_edge_d3(QaoaAngles a) {
    const double g = a.gamma, b = a.beta;
    return -2 * cs(2 * b) * sn(2 * b) * sn(g) * cs(g) * std::pow(cs(g / 2), 4);
}

double zk_ball_d3(QaoaAngles a) {
    const double g = a.gamma, b = a.beta;
    const double s2b = sn(2 * b), c2b = cs(2 * b);
    const double sh = sn(g / 2), ch = cs(g / 2);
    const double odd = 3 * sn(3 * g / 2) - sn(5 * g / 2);
    const double even = 3 * cs(3 * g / 2) + cs(5 * g / 2);
    return 0.25 * s2b * cube(c2b) * cube(ch) * odd                                     //
           + 0.75 * s2b * cube(c2b) * sh * sq(ch) * even                               //
           - 3 * cube(s2b) * c2b * sh * std::pow(cs(g), 5) * std::pow(ch, 5)           //
           - cube(s2b) * c2b * std::pow(ch, 6) *
                 (sh * cube(even) / 64 + cube(sn(g)) * cube(cs(g)) * std::pow(ch, 4));
}

double closed_form_f2(double n, QaoaAngles a) {
    const double g = a.gamma, b = a.beta;
    return 3 * n / 4 + n / 32 * sn(4 * b) * (3 * sn(g) + 4 * sn(2 * g) + 3 * sn(3 * g)) -
           n / 16 * sq(sn(2 * b)) * sn(g) * sq(cs(g / 2)) * (sn(g) + 4 * sn(2 * g) + sn(3 * g));
}

double closed_form_f3(double n, QaoaAngles a) {
    const double g = a.gamma, b = a.beta;
    const double s2b = sn(2 * b), c2b = cs(2 * b);
    const double sh = sn(g / 2), ch = cs(g / 2);
    const double odd = 3 * sn(3 * g / 2) - sn(5 * g / 2);
    const double even = 3 * cs(3 * g / 2) + cs(5 * g / 2);
    // n/2 - (3n/4)⟨Z_uv⟩ + (n/4)⟨Z_B(u)⟩ expanded term by term.
    return n / 2                                                                      //
           + 3 * n / 2 * c2b * s2b * sn(g) * cs(g) * std::pow(ch, 4)                 //
           + n / 16 * s2b * cube(c2b) * cube(ch) * odd                               //
           + 3 * n / 16 * s2b * cube(c2b) * sh * sq(ch) * even                       //
           - 3 * n / 4 * cube(s2b) * c2b * sh * std::pow(cs(g), 5) * std::pow(ch, 5)  //
           - n / 4 * cube(s2b) * c2b * std::pow(ch, 6) *
                 (sh * cube(even) / 64 + cube(sn(g)) * cube(cs(g)) * std::pow(ch, 4));
}

}  // namespace lmc
