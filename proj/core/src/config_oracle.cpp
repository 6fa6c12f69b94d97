#include <powerstruct/config_oracle.hpp>

namespace powerstruct {

void FiniteCoefficientData::validate() const
{
    if (var_count == 0) throw ContractError("coefficient data: at least one variable required");
    for (const auto &[i, a] : parts) {
        if (i.size() != var_count) throw ShapeMismatch("coefficient data: part exponent " + i.to_string() + " has wrong length");
        if (i.is_zero()) throw ContractError("coefficient data: part at the zero exponent");
    }
}

IntegerSeries FiniteCoefficientData::series(const BoxShape &box) const
{
    validate();
    if (box.var_count() != var_count) throw ShapeMismatch("coefficient data: box has wrong variable count");
    IntegerSeries s = IntegerSeries::one(box);
    for (const auto &[i, a] : parts) {
        if (box.contains(i)) s.set(i, Integer(static_cast<unsigned long>(a)));
    }
    return s;
}

namespace {

struct Part {
    ExponentVector weight;
    std::uint64_t size;
};

std::vector<Part> usable_parts(const FiniteCoefficientData &data, const ExponentVector &n)
{
    data.validate();
    if (n.size() != data.var_count) throw ShapeMismatch("config count: exponent has wrong length");
    std::vector<Part> out;
    for (const auto &[i, a] : data.parts) {
        if (a > 0 && i.divides(n)) out.push_back({i, a});
    }
    return out;
}

bool fits(const ExponentVector &w, const ExponentVector &rest)
{
    for (std::size_t v = 0; v < w.size(); ++v) {
        if (w[v] > rest[v]) return false;
    }
    return true;
}

void subtract(ExponentVector &rest, const ExponentVector &w, std::uint64_t times)
{
    for (std::size_t v = 0; v < w.size(); ++v) rest[v] -= static_cast<std::uint32_t>(w[v] * times);
}

void add(ExponentVector &rest, const ExponentVector &w, std::uint64_t times)
{
    for (std::size_t v = 0; v < w.size(); ++v) rest[v] += static_cast<std::uint32_t>(w[v] * times);
}

class OccupancyCounter {
public:
    OccupancyCounter(const std::vector<Part> &parts, std::uint64_t m) : parts_(parts), m_(m) {}

    Integer run(ExponentVector rest) { return visit(0, rest, m_); }

private:
    Integer visit(std::size_t p, ExponentVector &rest, std::uint64_t free_points)
    {
        if (++nodes_ > config_enumeration_limit) throw GuardExceeded("configuration enumeration guard exceeded");
        if (p == parts_.size()) return rest.is_zero() ? Integer(1) : Integer(0);
        Integer total = 0;
        const Part &part = parts_[p];
        Integer choices = 1; // a^k
        std::uint64_t k = 0;
        while (true) {
            total += binomial(free_points, k) * choices * visit(p + 1, rest, free_points - k);
            if (k == free_points || !fits(part.weight, rest)) break;
            subtract(rest, part.weight, 1);
            ++k;
            choices *= static_cast<unsigned long>(part.size);
        }
        add(rest, part.weight, k);
        return total;
    }

    const std::vector<Part> &parts_;
    std::uint64_t m_;
    std::uint64_t nodes_ = 0;
};

// Each leaf of the search is one explicit pair (K, phi).
class NaiveCounter {
public:
    NaiveCounter(const std::vector<Part> &parts, std::uint64_t m) : parts_(parts), m_(m) {}

    std::uint64_t run(ExponentVector rest)
    {
        visit(0, rest);
        return leaves_;
    }

private:
    void visit(std::uint64_t point, ExponentVector &rest)
    {
        if (point == m_) {
            leaves_ += rest.is_zero();
            return;
        }
        visit(point + 1, rest); // point not in K
        for (const Part &part : parts_) {
            if (!fits(part.weight, rest)) continue;
            subtract(rest, part.weight, 1);
            for (std::uint64_t element = 0; element < part.size; ++element) visit(point + 1, rest);
            add(rest, part.weight, 1);
        }
    }

    const std::vector<Part> &parts_;
    std::uint64_t m_;
    std::uint64_t leaves_ = 0;
};

} // namespace

Integer config_count(const FiniteCoefficientData &data, const ExponentVector &n, ConfigEnumeration mode)
{
    const std::vector<Part> parts = usable_parts(data, n);
    if (mode == ConfigEnumeration::occupancy) return OccupancyCounter(parts, data.m_size).run(n);

    // (1 + |union A_i|)^m bounds the raw search space
    std::uint64_t branching = 1;
    for (const Part &p : parts) branching += p.size;
    long double space = 1;
    for (std::uint64_t i = 0; i < data.m_size; ++i) space *= static_cast<long double>(branching);
    if (space > static_cast<long double>(config_enumeration_limit)) {
        throw GuardExceeded("naive configuration enumeration guard exceeded");
    }
    return Integer(static_cast<unsigned long>(NaiveCounter(parts, data.m_size).run(n)));
}

namespace {

void sum_multinomial(const std::vector<Part> &parts, std::size_t p, const ExponentVector &target, ExponentVector &acc, std::uint64_t m,
                     std::vector<std::uint64_t> &k, Integer &total)
{
    if (p == parts.size()) {
        if (!(acc == target)) return;
        std::uint64_t used = 0;
        for (auto v : k) used += v;
        if (used > m) return;
        Integer term = factorial(m);
        Integer denom = factorial(m - used);
        Integer weight = 1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            denom *= factorial(k[i]);
            Integer a_pow;
            mpz_ui_pow_ui(a_pow.get_mpz_t(), static_cast<unsigned long>(parts[i].size), static_cast<unsigned long>(k[i]));
            weight *= a_pow;
        }
        total += term / denom * weight;
        return;
    }
    const ExponentVector &w = parts[p].weight;
    for (k[p] = 0;; ++k[p]) {
        ExponentVector next = acc;
        bool ok = true;
        for (std::size_t v = 0; v < w.size(); ++v) {
            next[v] = acc[v] + static_cast<std::uint32_t>(w[v] * k[p]);
            ok = ok && next[v] <= target[v];
        }
        if (!ok) break;
        sum_multinomial(parts, p + 1, target, next, m, k, total);
    }
    k[p] = 0;
}

} // namespace

Integer multinomial_coefficient(const FiniteCoefficientData &data, const ExponentVector &n)
{
    const std::vector<Part> parts = usable_parts(data, n);
    std::vector<std::uint64_t> k(parts.size(), 0);
    ExponentVector acc(n.size());
    Integer total = 0;
    sum_multinomial(parts, 0, n, acc, data.m_size, k, total);
    return total;
}

ConfigCheckReport cross_check(const FiniteCoefficientData &data, const BoxShape &box, bool with_naive)
{
    const IntegerSeries engine = power(data.series(box), Integer(static_cast<unsigned long>(data.m_size)));
    ConfigCheckReport report;
    for (std::size_t idx : box.graded_lex_indices()) {
        ConfigCheckRow row;
        row.n = box.exponent_at(idx);
        row.configurations = config_count(data, row.n);
        row.closed_form = multinomial_coefficient(data, row.n);
        row.engine = engine.at_index(idx);
        if (with_naive) {
            try {
                row.naive = config_count(data, row.n, ConfigEnumeration::naive);
            } catch (const GuardExceeded &) {
            }
        }
        const bool agree = row.configurations == row.closed_form && row.closed_form == row.engine && (!row.naive || *row.naive == row.engine);
        if (!agree && report.passed) {
            report.passed = false;
            report.first_mismatch = "at " + row.n.to_string() + ": configurations=" + row.configurations.get_str() +
                                    " closed_form=" + row.closed_form.get_str() + " engine=" + row.engine.get_str() +
                                    (row.naive ? " naive=" + row.naive->get_str() : std::string{});
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace powerstruct
