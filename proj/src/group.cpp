#include "group.hpp"

#include <sstream>
#include <stdexcept>

namespace nhomega {

GradingGroup::GradingGroup(std::vector<int> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    for (int m : orders_) {
        if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
    }
}

long GradingGroup::order() const {
    long n = 1;
    for (int m : orders_) n *= m;
    return n;
}

bool GradingGroup::contains(const GroupElement& g) const {
    if (g.size() != orders_.size()) return false;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0 || g[i] >= orders_[i]) return false;
    }
    return true;
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (a.size() != orders_.size() || b.size() != orders_.size())
        throw std::invalid_argument("group element rank mismatch");
    GroupElement c(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i)
        c[i] = (a[i] + b[i]) % orders_[i];
    return c;
}

GroupElement GradingGroup::neg(const GroupElement& a) const {
    GroupElement c(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i)
        c[i] = (orders_[i] - a[i] % orders_[i]) % orders_[i];
    return c;
}

std::vector<GroupElement> GradingGroup::elements() const {
    std::vector<GroupElement> out;
    GroupElement g = zero();
    long n = order();
    for (long c = 0; c < n; ++c) {
        out.push_back(g);
        for (size_t i = orders_.size(); i-- > 0;) {
            if (++g[i] < orders_[i]) break;
            g[i] = 0;
        }
    }
    return out;
}

std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) os << ',';
        os << g[i];
    }
    os << ')';
    return os.str();
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<int>> gen_values)
    : group_(std::move(group)), gen_values_(std::move(gen_values)) {
    if (gen_values_.size() != static_cast<size_t>(group_.rank()))
        throw std::invalid_argument("bicharacter generator matrix rank mismatch");
    for (const auto& row : gen_values_) {
        if (row.size() != static_cast<size_t>(group_.rank()))
            throw std::invalid_argument("bicharacter generator matrix rank mismatch");
        for (int v : row) {
            if (v != 1 && v != -1)
                throw std::invalid_argument("bicharacter generator values must be +1 or -1");
        }
    }
}

int Bicharacter::eps(const GroupElement& g, const GroupElement& h) const {
    if (!group_.contains(g) || !group_.contains(h))
        throw std::invalid_argument("eps: element not in group");
    int sign = 1;
    for (size_t i = 0; i < g.size(); ++i) {
        if (gen_values_[i].empty()) continue;
        for (size_t j = 0; j < h.size(); ++j) {
            // (+-1)^(g_i*h_j): only the parity of the exponent matters.
            if (gen_values_[i][j] == -1 && (static_cast<long>(g[i]) * h[j]) % 2 != 0)
                sign = -sign;
        }
    }
    return sign;
}

ValidationReport Bicharacter::validate() const {
    ValidationReport report;
    int r = group_.rank();
    const auto& m = group_.cyclic_orders();
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (gen_values_[i][j] * gen_values_[j][i] != 1)
                report.push_back({"symmetry",
                                  "eps(g" + std::to_string(i) + ",g" + std::to_string(j) +
                                      ")*eps(g" + std::to_string(j) + ",g" + std::to_string(i) +
                                      ") != 1"});
            // value^{m_i} and value^{m_j} must be 1 for biadditive
            // extension to be well defined on residues.
            if (gen_values_[i][j] == -1 && (m[i] % 2 != 0 || m[j] % 2 != 0))
                report.push_back({"well-definedness",
                                  "gen_values[" + std::to_string(i) + "][" + std::to_string(j) +
                                      "] = -1 has order 2 but a cyclic order is odd"});
        }
    }
    return report;
}

bool Bicharacter::is_trivial() const {
    for (const auto& row : gen_values_)
        for (int v : row)
            if (v != 1) return false;
    return true;
}

}  // namespace nhomega
