#include "schur/group_subset.hpp"

#include <bit>
#include <functional>
#include <limits>
#include <stdexcept>

namespace schur {

namespace {

std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

} // namespace

void require_modulus(int n) {
    if (n < 1 || n > kMaxModulus) {
        throw std::invalid_argument("modulus out of range: " + std::to_string(n));
    }
}

GroupSubset::GroupSubset(int n) : n_(n) {
    require_modulus(n);
    words_.assign(word_count(n), 0);
}

GroupSubset::GroupSubset(int n, std::initializer_list<int> members)
    : GroupSubset(n, std::span<const int>(members.begin(), members.size())) {}

GroupSubset::GroupSubset(int n, std::span<const int> members) : GroupSubset(n) {
    for (int x : members) insert(x);
}

GroupSubset GroupSubset::full(int n) {
    GroupSubset s(n);
    for (int x = 0; x < n; ++x) s.insert(x);
    return s;
}

void GroupSubset::check_member(int x) const {
    if (x < 0 || x >= n_) {
        throw std::out_of_range("residue " + std::to_string(x) + " not in Z_" + std::to_string(n_));
    }
}

void GroupSubset::check_same_modulus(const GroupSubset& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("modulus mismatch: " + std::to_string(n_) + " vs " +
                                    std::to_string(other.n_));
    }
}

bool GroupSubset::contains(int x) const {
    if (x < 0 || x >= n_) return false;
    return (words_[static_cast<std::size_t>(x) / 64] >> (x % 64)) & 1U;
}

void GroupSubset::insert(int x) {
    check_member(x);
    words_[static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (x % 64);
}

void GroupSubset::erase(int x) {
    check_member(x);
    words_[static_cast<std::size_t>(x) / 64] &= ~(std::uint64_t{1} << (x % 64));
}

int GroupSubset::size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool GroupSubset::empty() const {
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

int GroupSubset::min() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    }
    return -1;
}

std::vector<int> GroupSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int x) { out.push_back(x); });
    return out;
}

bool GroupSubset::intersects(const GroupSubset& other) const {
    check_same_modulus(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

bool GroupSubset::is_subset_of(const GroupSubset& other) const {
    check_same_modulus(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

GroupSubset& GroupSubset::operator|=(const GroupSubset& other) {
    check_same_modulus(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

GroupSubset& GroupSubset::operator&=(const GroupSubset& other) {
    check_same_modulus(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

GroupSubset& GroupSubset::operator-=(const GroupSubset& other) {
    check_same_modulus(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

std::string GroupSubset::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int x) {
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    });
    out += '}';
    return out;
}

std::size_t GroupSubset::hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

GroupSubset subset_star(const GroupSubset& c) {
    const int n = c.modulus();
    GroupSubset out(n);
    c.for_each([&](int x) { out.insert((n - x) % n); });
    return out;
}

GroupSubset subgroup_of_order(int n, int d) {
    require_modulus(n);
    if (d < 1 || n % d != 0) {
        throw std::invalid_argument(std::to_string(d) + " does not divide " + std::to_string(n));
    }
    GroupSubset out(n);
    const int step = n / d;
    for (int x = 0; x < n; x += step) out.insert(x);
    return out;
}

AlgebraElement::AlgebraElement(int n) {
    require_modulus(n);
    coeffs_.assign(static_cast<std::size_t>(n), 0);
}

void AlgebraElement::add(int g, Coefficient amount) {
    auto& slot = coeffs_.at(static_cast<std::size_t>(g));
    if (slot > std::numeric_limits<Coefficient>::max() - amount) {
        throw std::overflow_error("group-ring coefficient overflow");
    }
    slot += amount;
}

std::uint64_t AlgebraElement::mass() const {
    std::uint64_t total = 0;
    for (auto c : coeffs_) total += c;
    return total;
}

bool AlgebraElement::is_constant_on(const GroupSubset& c) const {
    if (c.modulus() != modulus()) throw std::invalid_argument("modulus mismatch");
    bool seen = false;
    Coefficient value = 0;
    bool constant = true;
    c.for_each([&](int x) {
        const auto v = coeffs_[static_cast<std::size_t>(x)];
        if (!seen) {
            value = v;
            seen = true;
        } else if (v != value) {
            constant = false;
        }
    });
    return constant;
}

AlgebraElement multiply(const GroupSubset& c, const GroupSubset& d) {
    if (c.modulus() != d.modulus()) {
        throw std::invalid_argument("multiply: modulus mismatch");
    }
    const int n = c.modulus();
    AlgebraElement out(n);
    // n <= kMaxModulus keeps every coefficient below n^2 < 2^32.
    const auto ds = d.elements();
    c.for_each([&](int x) {
        for (int y : ds) {
            int g = x + y;
            if (g >= n) g -= n;
            out.add(g);
        }
    });
    return out;
}

} // namespace schur
