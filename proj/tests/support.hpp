/*
   Copyright 2026 The hopfore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Shared helpers for the test suites: seeded random generators of field
// elements and matrices.
#ifndef HOPFORE_TESTS_SUPPORT_HPP
#define HOPFORE_TESTS_SUPPORT_HPP

#include <random>

#include "hopfore/exactnum/matrix.hpp"

namespace hopfore::testing {

inline Rational random_rational(std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Cyclotomic random_cyclotomic(std::mt19937& rng, int order, double density = 0.7) {
    const auto& field = CyclotomicField::get(order);
    std::bernoulli_distribution keep(density);
    std::vector<Rational> coeffs(field.degree(), Rational(0));
    for (auto& c : coeffs)
        if (keep(rng)) c = random_rational(rng);
    return Cyclotomic::from_coefficients(order, coeffs);
}

inline Cyclotomic random_nonzero(std::mt19937& rng, int order) {
    while (true) {
        Cyclotomic c = random_cyclotomic(rng, order);
        if (!c.is_zero()) return c;
    }
}

inline Matrix random_matrix(std::mt19937& rng, int order, std::size_t rows, std::size_t cols, double density = 0.6) {
    Matrix m(order, rows, cols);
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng)) m(i, j) = random_cyclotomic(rng, order);
    return m;
}

}  // namespace hopfore::testing

#endif
