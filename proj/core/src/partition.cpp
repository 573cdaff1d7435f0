#include "schur/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace schur {

SchurPartition::SchurPartition(int n, std::vector<GroupSubset> classes)
    : n_(n), classes_(std::move(classes)), labels_(static_cast<std::size_t>(n), -1) {
    std::sort(classes_.begin(), classes_.end(),
              [](const GroupSubset& a, const GroupSubset& b) { return a.min() < b.min(); });
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        classes_[i].for_each([&](int x) { labels_[static_cast<std::size_t>(x)] = static_cast<int>(i); });
    }
}

SchurPartition SchurPartition::from_classes(int n, std::vector<GroupSubset> classes) {
    require_modulus(n);
    GroupSubset seen(n);
    for (const auto& c : classes) {
        if (c.modulus() != n) throw std::invalid_argument("class modulus differs from partition modulus");
        if (c.empty()) throw std::invalid_argument("empty class in partition");
        if (c.intersects(seen)) throw std::invalid_argument("classes overlap: " + c.to_string());
        seen |= c;
    }
    if (seen.size() != n) throw std::invalid_argument("classes do not cover Z_" + std::to_string(n));
    return SchurPartition(n, std::move(classes));
}

SchurPartition SchurPartition::from_lists(int n, const std::vector<std::vector<int>>& classes) {
    require_modulus(n);
    std::vector<GroupSubset> sets;
    sets.reserve(classes.size());
    for (const auto& members : classes) {
        GroupSubset s(n);
        for (int x : members) {
            if (s.contains(x)) throw std::invalid_argument("duplicate residue " + std::to_string(x));
            s.insert(x);
        }
        sets.push_back(std::move(s));
    }
    return from_classes(n, std::move(sets));
}

bool SchurPartition::is_union_of_classes(const GroupSubset& s) const {
    bool ok = true;
    s.for_each([&](int x) {
        if (ok && !classes_[static_cast<std::size_t>(class_of(x))].is_subset_of(s)) ok = false;
    });
    return ok;
}

std::string SchurPartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (i != 0) out += ' ';
        out += classes_[i].to_string();
    }
    return out;
}

std::string AxiomViolation::describe() const {
    switch (axiom) {
    case Axiom::identity:
        return "axiom 1: class " + std::to_string(first_class) + " holds 0 but is not {0}";
    case Axiom::inverse:
        return "axiom 2: star of class " + std::to_string(first_class) + " is not a class";
    case Axiom::closure:
        return "axiom 3: product of classes " + std::to_string(first_class) + " and " +
               std::to_string(second_class) + " differs on residues " + std::to_string(element_a) +
               " and " + std::to_string(element_b) + " of class " + std::to_string(target_class);
    }
    return "unknown axiom";
}

AxiomCheck check_axioms(const SchurPartition& p) {
    const auto& cls = p.classes();
    const int zero_class = p.class_of(0);
    if (cls[static_cast<std::size_t>(zero_class)].size() != 1) {
        AxiomViolation v;
        v.axiom = Axiom::identity;
        v.first_class = zero_class;
        return {false, v};
    }
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto star = subset_star(cls[i]);
        if (star != cls[static_cast<std::size_t>(p.class_of(star.min()))]) {
            AxiomViolation v;
            v.axiom = Axiom::inverse;
            v.first_class = static_cast<int>(i);
            return {false, v};
        }
    }
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i; j < cls.size(); ++j) {
            const auto product = multiply(cls[i], cls[j]);
            for (std::size_t t = 0; t < cls.size(); ++t) {
                int first = -1;
                int other = -1;
                cls[t].for_each([&](int x) {
                    if (other != -1) return;
                    if (first == -1) {
                        first = x;
                    } else if (product[x] != product[first]) {
                        other = x;
                    }
                });
                if (other != -1) {
                    AxiomViolation v;
                    v.axiom = Axiom::closure;
                    v.first_class = static_cast<int>(i);
                    v.second_class = static_cast<int>(j);
                    v.target_class = static_cast<int>(t);
                    v.element_a = first;
                    v.element_b = other;
                    return {false, v};
                }
            }
        }
    }
    return {true, std::nullopt};
}

bool is_schur_partition(const SchurPartition& p) { return check_axioms(p).passed; }

bool is_s_subgroup(const SchurPartition& p, int d) {
    const int n = p.modulus();
    if (d < 1 || n % d != 0) return false;
    return p.is_union_of_classes(subgroup_of_order(n, d));
}

std::vector<int> s_subgroups(const SchurPartition& p) {
    std::vector<int> out;
    for (int d = 1; d <= p.modulus(); ++d) {
        if (p.modulus() % d == 0 && is_s_subgroup(p, d)) out.push_back(d);
    }
    return out;
}

SchurPartition restrict(const SchurPartition& p, int d) {
    if (!is_s_subgroup(p, d)) {
        throw std::invalid_argument("restrict: " + std::to_string(d) + " is not an S-subgroup of Z_" +
                                    std::to_string(p.modulus()));
    }
    const int step = p.modulus() / d;
    const auto h = subgroup_of_order(p.modulus(), d);
    std::vector<GroupSubset> out;
    for (const auto& c : p.classes()) {
        if (!c.is_subset_of(h)) continue;
        GroupSubset image(d);
        c.for_each([&](int x) { image.insert(x / step); });
        out.push_back(std::move(image));
    }
    return SchurPartition::from_classes(d, std::move(out));
}

SchurPartition quotient(const SchurPartition& p, int k) {
    if (!is_s_subgroup(p, k)) {
        throw std::invalid_argument("quotient: " + std::to_string(k) + " is not an S-subgroup of Z_" +
                                    std::to_string(p.modulus()));
    }
    const int m = p.modulus() / k;
    std::vector<GroupSubset> images;
    std::vector<int> owner(static_cast<std::size_t>(m), -1);
    for (const auto& c : p.classes()) {
        GroupSubset image(m);
        c.for_each([&](int x) { image.insert(x % m); });
        const int hit = owner[static_cast<std::size_t>(image.min())];
        if (hit >= 0) {
            if (images[static_cast<std::size_t>(hit)] != image) {
                throw std::invalid_argument("quotient: class images overlap inconsistently");
            }
            continue;
        }
        bool clash = false;
        image.for_each([&](int y) { clash = clash || owner[static_cast<std::size_t>(y)] >= 0; });
        if (clash) throw std::invalid_argument("quotient: class images overlap inconsistently");
        const int idx = static_cast<int>(images.size());
        image.for_each([&](int y) { owner[static_cast<std::size_t>(y)] = idx; });
        images.push_back(std::move(image));
    }
    return SchurPartition::from_classes(m, std::move(images));
}

namespace {

void put_u16(std::string& out, int v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

int get_u16(const std::string& in, std::size_t pos) {
    return static_cast<unsigned char>(in[pos]) | (static_cast<unsigned char>(in[pos + 1]) << 8);
}

} // namespace

// Layout: u16 modulus, then one u16 class label per residue (labels follow
// the canonical class order). Little-endian.
std::string canonical_encode(const SchurPartition& p) {
    std::string out;
    out.reserve(2 * (static_cast<std::size_t>(p.modulus()) + 1));
    put_u16(out, p.modulus());
    for (int label : p.labels()) put_u16(out, label);
    return out;
}

SchurPartition canonical_decode(const std::string& bytes) {
    if (bytes.size() < 2 || bytes.size() % 2 != 0) throw std::invalid_argument("canonical_decode: bad length");
    const int n = get_u16(bytes, 0);
    if (bytes.size() != 2 * (static_cast<std::size_t>(n) + 1)) {
        throw std::invalid_argument("canonical_decode: length does not match modulus");
    }
    std::vector<std::vector<int>> lists;
    for (int x = 0; x < n; ++x) {
        const int label = get_u16(bytes, 2 * (static_cast<std::size_t>(x) + 1));
        if (label >= n) throw std::invalid_argument("canonical_decode: label out of range");
        if (static_cast<std::size_t>(label) >= lists.size()) lists.resize(static_cast<std::size_t>(label) + 1);
        lists[static_cast<std::size_t>(label)].push_back(x);
    }
    auto p = SchurPartition::from_lists(n, lists);
    if (canonical_encode(p) != bytes) throw std::invalid_argument("canonical_decode: labels not canonical");
    return p;
}

bool canonical_less(const SchurPartition& a, const SchurPartition& b) {
    if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
    return a.labels() < b.labels();
}

std::size_t PartitionHash::operator()(const SchurPartition& p) const {
    std::size_t h = std::hash<int>{}(p.modulus());
    for (int label : p.labels()) h = h * 1000003U ^ static_cast<std::size_t>(label);
    return h;
}

} // namespace schur
