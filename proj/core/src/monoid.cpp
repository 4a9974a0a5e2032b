#include "moncoh/monoid.hpp"

#include <sstream>

namespace moncoh {

std::vector<Element> Monoid::elements() const {
    auto n = size();
    if (!n) throw std::logic_error("elements(): " + name() + " is infinite");
    std::vector<Element> e(*n);
    for (std::size_t i = 0; i < *n; ++i) e[i] = static_cast<Element>(i);
    return e;
}

std::vector<Element> Monoid::nonunit_elements() const {
    std::vector<Element> e;
    for (Element x : elements())
        if (x != identity()) e.push_back(x);
    return e;
}

namespace {

std::string witness_text(const std::vector<Element>& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

}  // namespace

std::optional<LawViolation> find_law_violation(const std::vector<std::vector<Element>>& table, Element identity) {
    const auto n = static_cast<Element>(table.size());
    if (n == 0) return LawViolation{"nonempty", {}, "monoid table is empty"};
    for (Element x = 0; x < n; ++x) {
        if (static_cast<Element>(table[x].size()) != n)
            return LawViolation{"square", {x}, "table row " + std::to_string(x) + " has the wrong length"};
        for (Element y = 0; y < n; ++y)
            if (table[x][y] < 0 || table[x][y] >= n)
                return LawViolation{"closure", {x, y}, "product " + witness_text({x, y}) + " is out of range"};
    }
    if (identity < 0 || identity >= n) return LawViolation{"identity", {identity}, "identity is out of range"};
    for (Element x = 0; x < n; ++x)
        if (table[identity][x] != x || table[x][identity] != x)
            return LawViolation{"identity", {x}, "e*x != x for x = " + std::to_string(x)};
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
            if (table[x][y] != table[y][x])
                return LawViolation{"commutativity", {x, y}, "xy != yx at " + witness_text({x, y})};
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    return LawViolation{"associativity", {x, y, z}, "(xy)z != x(yz) at " + witness_text({x, y, z})};
    return std::nullopt;
}

FiniteCommutativeMonoid::FiniteCommutativeMonoid(std::vector<std::vector<Element>> table, Element identity,
                                                 std::string name)
    : n_(table.size()), identity_(identity), table_(std::move(table)), name_(std::move(name)) {
    if (auto v = find_law_violation(table_, identity_)) throw MonoidLawError(v->law, v->witness, v->message);
    if (name_.empty()) name_ = "M" + std::to_string(n_);
}

Element FiniteCommutativeMonoid::multiply(Element x, Element y) const {
    if (!contains(x) || !contains(y))
        throw std::out_of_range("multiply: element outside " + name_);
    return table_[x][y];
}

Element cyclic_reduce(int m, int q, Element x) {
    if (x < 0) throw std::invalid_argument("cyclic_reduce: negative exponent");
    if (x < m + q) return x;
    return m + (x - m) % q;
}

Element cyclic_carry(int m, int q, Element x, Element y) { return ((x + y) - cyclic_reduce(m, q, x + y)) / q; }

std::shared_ptr<const FiniteCommutativeMonoid> make_cyclic(int m, int q) {
    if (m < 0 || q < 1 || m + q < 2) throw std::invalid_argument("make_cyclic: need m >= 0, q >= 1, m + q >= 2");
    const int n = m + q;
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[x][y] = cyclic_reduce(m, q, x + y);
    auto mon = std::make_shared<FiniteCommutativeMonoid>(std::move(table), 0,
                                                         "C(" + std::to_string(m) + "," + std::to_string(q) + ")");
    mon->cyclic_ = std::pair{m, q};
    return mon;
}

Element InfiniteCyclicMonoid::multiply(Element x, Element y) const {
    if (x < 0 || y < 0) throw std::out_of_range("multiply: negative element of C(inf)");
    return x + y;
}

std::shared_ptr<const InfiniteCyclicMonoid> make_infinite_cyclic() { return std::make_shared<InfiniteCyclicMonoid>(); }

}  // namespace moncoh
