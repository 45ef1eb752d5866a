/* Copyright 2026 The sgpoint Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

// Walks through the outer-SG construction for a pair of conics: dual conics,
// their intersection, and the resulting simultaneous Galois points with
// their common tangent lines.

#include <iostream>

#include "sgpoint/conic.hpp"
#include "sgpoint/parse.hpp"

int main() {
    using namespace sgp;
    Conic c1(parse_curve("X^2+Y^2-Z^2"));
    Conic c2(parse_curve("X^2+Y^2-4*Y*Z+3*Z^2"));
    std::cout << "C1: " << c1.form().str() << "\n";
    std::cout << "C2: " << c2.form().str() << "\n";
    std::cout << "dual C1: " << dual_conic(c1).form().str() << "\n";
    std::cout << "dual C2: " << dual_conic(c2).form().str() << "\n";

    ConicSG sg = sg_outer_conics(c1, c2);
    std::cout << "\ndual intersection:\n";
    for (const auto& [p, m] : sg.dual_intersection)
        std::cout << "  " << p.str() << "  multiplicity " << m << "\n";
    std::cout << "\nouter SG points with their common tangents:\n";
    for (std::size_t i = 0; i < sg.sg_points.size(); ++i)
        std::cout << "  " << sg.sg_points[i].str() << "  tangents "
                  << sg.tangent_pairs[i][0].str() << " and " << sg.tangent_pairs[i][1].str()
                  << "\n";
    return 0;
}
