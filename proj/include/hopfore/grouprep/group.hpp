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

#ifndef HOPFORE_GROUPREP_GROUP_HPP
#define HOPFORE_GROUPREP_GROUP_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfore/error.hpp"
#include "hopfore/exactnum/matrix.hpp"

namespace hopfore {

/// A finite group given by its full multiplication table.  Every element also
/// carries a shortest word in the generators, which is how matrix
/// representations (given on generators only) are expanded to all elements.
class GroupData {
   public:
    GroupData(std::vector<std::vector<std::size_t>> mul_table, std::vector<std::size_t> generators,
              std::vector<std::string> names = {})
        : table_(std::move(mul_table)), generators_(std::move(generators)), names_(std::move(names)) {
        validate_table();
        build_words();
        if (names_.empty())
            for (std::size_t g = 0; g < size(); ++g) names_.push_back("g" + std::to_string(g));
        if (names_.size() != size()) throw Error(ErrorKind::InvalidGroup, "one name per element required");
    }

    /// D_n of order 2n; element a^k b^e has index k + n*e, generators (a, b).
    static GroupData dihedral(std::size_t n) {
        if (n < 2) throw Error(ErrorKind::InvalidParameter, "dihedral group needs n >= 2");
        const std::size_t size = 2 * n;
        std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size));
        std::vector<std::string> names(size);
        for (std::size_t g = 0; g < size; ++g) {
            const std::size_t k1 = g % n, e1 = g / n;
            names[g] = (k1 == 0 && e1 == 0) ? "1" : (k1 == 0 ? "" : (k1 == 1 ? "a" : "a^" + std::to_string(k1))) + (e1 ? "b" : "");
            for (std::size_t h = 0; h < size; ++h) {
                const std::size_t k2 = h % n, e2 = h / n;
                // b a^k = a^-k b
                const std::size_t k = e1 ? (k1 + n - k2) % n : (k1 + k2) % n;
                table[g][h] = k + n * (e1 ^ e2);
            }
        }
        return GroupData(std::move(table), {1, n}, std::move(names));
    }

    /// Cyclic group of order n with generator index 1; element g^k has index k.
    static GroupData cyclic(std::size_t n) {
        if (n < 1) throw Error(ErrorKind::InvalidParameter, "cyclic group needs n >= 1");
        std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
        std::vector<std::string> names(n);
        for (std::size_t g = 0; g < n; ++g) {
            names[g] = g == 0 ? "1" : (g == 1 ? "g" : "g^" + std::to_string(g));
            for (std::size_t h = 0; h < n; ++h) table[g][h] = (g + h) % n;
        }
        return GroupData(std::move(table), {n > 1 ? 1u : 0u}, std::move(names));
    }

    std::size_t size() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
    std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    const std::vector<std::vector<std::size_t>>& mul_table() const noexcept { return table_; }
    const std::vector<std::size_t>& inverses() const noexcept { return inverse_; }
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }
    const std::string& name(std::size_t g) const { return names_[g]; }

    /// Shortest word for g as positions into generators().
    const std::vector<std::size_t>& word(std::size_t g) const { return words_[g]; }

    /// Elements in breadth-first order from the identity; each element after
    /// the first is parent(g) * generators()[last_generator(g)].
    const std::vector<std::size_t>& bfs_order() const noexcept { return bfs_; }
    std::size_t parent(std::size_t g) const { return parent_[g]; }
    std::size_t last_generator(std::size_t g) const { return last_gen_[g]; }

    std::size_t power(std::size_t g, long e) const {
        std::size_t base = e < 0 ? inverse(g) : g;
        std::size_t out = identity_;
        for (long k = 0; k < (e < 0 ? -e : e); ++k) out = mul(out, base);
        return out;
    }

    bool is_central(std::size_t g) const {
        for (std::size_t h : generators_)
            if (mul(g, h) != mul(h, g)) return false;
        return true;
    }

    friend bool operator==(const GroupData& a, const GroupData& b) {
        return a.table_ == b.table_ && a.generators_ == b.generators_;
    }

   private:
    void validate_table() {
        const std::size_t n = table_.size();
        if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty multiplication table");
        for (const auto& row : table_) {
            if (row.size() != n) throw Error(ErrorKind::InvalidGroup, "multiplication table is not square");
            for (std::size_t v : row)
                if (v >= n) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
        }
        std::optional<std::size_t> id;
        for (std::size_t e = 0; e < n && !id; ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
            if (ok) id = e;
        }
        if (!id) throw Error(ErrorKind::InvalidGroup, "no identity element");
        identity_ = *id;
        inverse_.assign(n, n);
        for (std::size_t g = 0; g < n; ++g) {
            for (std::size_t h = 0; h < n; ++h)
                if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
            if (inverse_[g] == n) throw Error(ErrorKind::InvalidGroup, "element without inverse");
        }
        if (n <= 200) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const std::size_t ab = table_[a][b];
                    for (std::size_t c = 0; c < n; ++c)
                        if (table_[ab][c] != table_[a][table_[b][c]])
                            throw Error(ErrorKind::InvalidGroup, "multiplication is not associative");
                }
        }
        for (std::size_t g : generators_)
            if (g >= n) throw Error(ErrorKind::InvalidGroup, "generator index out of range");
    }

    void build_words() {
        const std::size_t n = size();
        words_.assign(n, {});
        parent_.assign(n, n);
        last_gen_.assign(n, 0);
        std::vector<bool> seen(n, false);
        std::deque<std::size_t> queue{identity_};
        seen[identity_] = true;
        while (!queue.empty()) {
            const std::size_t g = queue.front();
            queue.pop_front();
            bfs_.push_back(g);
            for (std::size_t k = 0; k < generators_.size(); ++k) {
                const std::size_t h = mul(g, generators_[k]);
                if (seen[h]) continue;
                seen[h] = true;
                words_[h] = words_[g];
                words_[h].push_back(k);
                parent_[h] = g;
                last_gen_[h] = k;
                queue.push_back(h);
            }
        }
        if (bfs_.size() != n) throw Error(ErrorKind::InvalidGroup, "generators do not generate the group");
    }

    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> generators_;
    std::vector<std::string> names_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<std::vector<std::size_t>> words_;
    std::vector<std::size_t> bfs_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> last_gen_;
};

/// Matrices of every group element from the matrices of the generators.
inline std::vector<Matrix> expand_representation(const GroupData& group, std::span<const Matrix> gen_matrices) {
    if (gen_matrices.size() != group.generators().size())
        throw Error(ErrorKind::ShapeMismatch, "one matrix per generator required");
    if (gen_matrices.empty()) {
        throw Error(ErrorKind::InvalidParameter, "representation without generators");
    }
    const std::size_t dim = gen_matrices.front().rows();
    const int order = gen_matrices.front().order();
    for (const auto& m : gen_matrices)
        if (m.rows() != dim || m.cols() != dim) throw Error(ErrorKind::ShapeMismatch, "generator matrices must be square of equal size");
    std::vector<Matrix> out(group.size(), Matrix(order, 0, 0));
    for (std::size_t g : group.bfs_order()) {
        if (g == group.identity())
            out[g] = Matrix::identity(order, dim);
        else
            out[g] = out[group.parent(g)] * gen_matrices[group.last_generator(g)];
    }
    return out;
}

/// True when the expanded matrices form a homomorphism: rho(g) rho(h) = rho(gh)
/// for every element g and generator h.
inline bool is_homomorphism(const GroupData& group, std::span<const Matrix> all, std::span<const Matrix> gens) {
    for (std::size_t g = 0; g < group.size(); ++g)
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (!(all[g] * gens[k] == all[group.mul(g, group.generators()[k])])) return false;
    return true;
}

}  // namespace hopfore

#endif
