#pragma once

// Subsets of the cyclic group Z_n and elements of its integer group ring.
//
// Z_n is written additively as residues {0, ..., n-1}; a generator z of the
// multiplicative cyclic group corresponds to the residue 1, so z^i <-> i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace schur {

/// Largest modulus accepted anywhere in the library. Group-ring coefficients
/// are bounded by n^2, which must fit in a 32-bit counter.
inline constexpr int kMaxModulus = 65535;

/// Throws std::invalid_argument unless 1 <= n <= kMaxModulus.
void require_modulus(int n);

/// A subset of Z_n stored as a fixed-width bit vector.
class GroupSubset {
public:
    GroupSubset() = default;
    explicit GroupSubset(int n);
    GroupSubset(int n, std::initializer_list<int> members);
    GroupSubset(int n, std::span<const int> members);

    static GroupSubset full(int n);

    int modulus() const { return n_; }
    bool contains(int x) const;
    void insert(int x);
    void erase(int x);

    int size() const;
    bool empty() const;
    /// Smallest member, or -1 for the empty set.
    int min() const;
    std::vector<int> elements() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                f(static_cast<int>(w * 64) + bit);
                bits &= bits - 1;
            }
        }
    }

    bool intersects(const GroupSubset& other) const;
    bool is_subset_of(const GroupSubset& other) const;

    GroupSubset& operator|=(const GroupSubset& other);
    GroupSubset& operator&=(const GroupSubset& other);
    GroupSubset& operator-=(const GroupSubset& other);
    friend GroupSubset operator|(GroupSubset a, const GroupSubset& b) { return a |= b; }
    friend GroupSubset operator&(GroupSubset a, const GroupSubset& b) { return a &= b; }
    friend GroupSubset operator-(GroupSubset a, const GroupSubset& b) { return a -= b; }

    bool operator==(const GroupSubset& other) const = default;

    /// Brace list such as "{1,2,4}".
    std::string to_string() const;

    std::size_t hash() const;

private:
    void check_same_modulus(const GroupSubset& other) const;
    void check_member(int x) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// C^* = { -x mod n : x in C }.
GroupSubset subset_star(const GroupSubset& c);

/// The subgroup of order d, i.e. the multiples of n/d. Requires d | n.
GroupSubset subgroup_of_order(int n, int d);

/// An element of the integer group ring N[Z_n]: one non-negative coefficient
/// per residue.
class AlgebraElement {
public:
    using Coefficient = std::uint32_t;

    explicit AlgebraElement(int n);

    int modulus() const { return static_cast<int>(coeffs_.size()); }
    Coefficient operator[](int g) const { return coeffs_[static_cast<std::size_t>(g)]; }
    std::span<const Coefficient> coefficients() const { return coeffs_; }

    void add(int g, Coefficient amount = 1);

    /// Sum of all coefficients.
    std::uint64_t mass() const;

    /// True if every residue of `c` carries the same coefficient.
    bool is_constant_on(const GroupSubset& c) const;

    bool operator==(const AlgebraElement& other) const = default;

private:
    std::vector<Coefficient> coeffs_;
};

/// Product of simple quantities: coefficient of g counts pairs (c, d) in
/// C x D with c + d = g (mod n).
AlgebraElement multiply(const GroupSubset& c, const GroupSubset& d);

} // namespace schur
