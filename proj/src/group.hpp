#pragma once

#include <string>
#include <vector>

namespace nhomega {

// Element of a finite abelian group Z_{m1} x ... x Z_{mr}, stored as a
// tuple of residues, component i in [0, m_i).
using GroupElement = std::vector<int>;

struct Violation {
    std::string axiom;
    std::string detail;
};
using ValidationReport = std::vector<Violation>;

class GradingGroup {
public:
    GradingGroup() = default;
    explicit GradingGroup(std::vector<int> cyclic_orders);

    int rank() const { return static_cast<int>(orders_.size()); }
    long order() const;
    const std::vector<int>& cyclic_orders() const { return orders_; }

    GroupElement zero() const { return GroupElement(orders_.size(), 0); }
    bool contains(const GroupElement& g) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    // All |G| elements in lexicographic order.
    std::vector<GroupElement> elements() const;

    bool operator==(const GradingGroup&) const = default;

private:
    std::vector<int> orders_;
};

std::string to_string(const GroupElement& g);

// eps: G x G -> {+1,-1}, given on generators and extended biadditively.
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(GradingGroup group, std::vector<std::vector<int>> gen_values);

    const GradingGroup& group() const { return group_; }
    const std::vector<std::vector<int>>& gen_values() const { return gen_values_; }

    // Biadditive extension; returns +1 or -1.
    int eps(const GroupElement& g, const GroupElement& h) const;

    // Symmetry eps(g,h)eps(h,g)=1 and well-definedness on each generator
    // pair; empty report means valid.
    ValidationReport validate() const;

    bool is_trivial() const;

    bool operator==(const Bicharacter&) const = default;

private:
    GradingGroup group_;
    std::vector<std::vector<int>> gen_values_;
};

}  // namespace nhomega
