#include <powerstruct/orbifold.hpp>

#include <algorithm>
#include <numeric>

namespace powerstruct {

// ---------------------------------------------------------------------------
// Orbifold classes and the wreath-product generating series

void OrbifoldDatum::validate() const
{
    if (group_order == 0) throw ContractError("orbifold datum: group order must be positive");
    if (dimension == 0) throw ContractError("orbifold datum: dimension must be positive");
    if (classes.empty()) throw ContractError("orbifold datum: at least the identity class is required");
    const Rational m(static_cast<std::int64_t>(group_order));
    const Rational d(static_cast<std::int64_t>(dimension));
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (const auto &comp : classes[c]) {
            if (comp.shift < Rational(0) || !(comp.shift < d)) {
                throw ContractError("orbifold datum: shift " + comp.shift.to_string() + " outside [0, d)");
            }
            if (!(comp.shift * m).is_integer()) {
                throw ContractError("orbifold datum: shift " + comp.shift.to_string() + " is not a multiple of 1/m");
            }
            if (c == 0 && !comp.shift.is_zero()) throw ContractError("orbifold datum: identity class must have shift 0");
        }
    }
}

MotivicClass orbifold_class(const OrbifoldDatum &d)
{
    d.validate();
    MotivicClass sum;
    for (const auto &cls : d.classes) {
        for (const auto &comp : cls) sum += comp.component.shifted(comp.shift);
    }
    return sum;
}

EPolynomial orbifold_e_function(const OrbifoldDatum &d) { return hodge_spec(orbifold_class(d)); }

MotivicSeries wreath_series(const OrbifoldDatum &d, std::uint32_t order)
{
    const MotivicClass a = orbifold_class(d);
    const BoxShape box = BoxShape::univariate(order);
    const std::vector<MotivicClass> sigma = sigma_motivic(a, order);
    const Rational half_dim(static_cast<std::int64_t>(d.dimension), 2);
    MotivicSeries out = MotivicSeries::one(box);
    for (std::uint32_t r = 1; r <= order; ++r) {
        const MotivicClass weight = lefschetz(half_dim * Rational(static_cast<std::int64_t>(r) - 1));
        out = out * substitute_scaled(std::span<const MotivicClass>(sigma), weight, ExponentVector{r}, box);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite permutation groups

namespace {

// Minimal union-find for orbit counting.
class Partition {
public:
    explicit Partition(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[a] = b;
    }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::uint32_t> identity_perm(std::size_t n)
{
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0U);
    return p;
}

// Saturating x^n.
std::uint64_t saturating_pow(std::uint64_t x, std::uint32_t n, std::uint64_t cap)
{
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (x != 0 && out > cap / x) return cap + 1;
        out *= x;
    }
    return out;
}

} // namespace

FiniteGroupAction::FiniteGroupAction(std::size_t x_size, std::vector<Element> elements) : x_size_(x_size), elements_(std::move(elements))
{
    if (elements_.empty()) throw ContractError("group action: no elements");
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto &p = elements_[i].perm;
        if (p.size() != x_size_) throw ContractError("group action: element '" + elements_[i].label + "' has wrong length");
        std::vector<bool> hit(x_size_, false);
        for (auto v : p) {
            if (v >= x_size_ || hit[v]) throw ContractError("group action: element '" + elements_[i].label + "' is not a bijection");
            hit[v] = true;
        }
        if (!index.emplace(p, i).second) throw ContractError("group action: duplicate permutation for '" + elements_[i].label + "'");
    }
    const auto id = index.find(identity_perm(x_size_));
    if (id == index.end()) throw ContractError("group action: identity missing");
    identity_ = id->second;

    const std::size_t m = elements_.size();
    table_.resize(m * m);
    std::vector<std::uint32_t> prod(x_size_);
    for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t h = 0; h < m; ++h) {
            for (std::size_t x = 0; x < x_size_; ++x) prod[x] = elements_[g].perm[elements_[h].perm[x]];
            const auto it = index.find(prod);
            if (it == index.end()) {
                throw ContractError("group action: not closed under composition ('" + elements_[g].label + "' * '" + elements_[h].label + "')");
            }
            table_[g * m + h] = it->second;
        }
    }
    inverse_.resize(m);
    for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t h = 0; h < m; ++h) {
            if (table_[g * m + h] == identity_) inverse_[g] = h;
        }
    }

    class_of_.assign(m, m);
    auto assign_class = [&](std::size_t g) {
        if (class_of_[g] != m) return;
        for (std::size_t x = 0; x < m; ++x) class_of_[multiply(multiply(x, g), inverse(x))] = class_count_;
        ++class_count_;
    };
    assign_class(identity_);
    for (std::size_t g = 0; g < m; ++g) assign_class(g);
}

FiniteGroupAction FiniteGroupAction::cyclic(std::uint32_t n)
{
    std::vector<Element> els;
    for (std::uint32_t k = 0; k < n; ++k) {
        std::vector<std::uint32_t> p(n);
        for (std::uint32_t x = 0; x < n; ++x) p[x] = (x + k) % n;
        els.push_back({"r" + std::to_string(k), std::move(p)});
    }
    return FiniteGroupAction(n, std::move(els));
}

FiniteGroupAction FiniteGroupAction::symmetric(std::uint32_t n)
{
    std::vector<Element> els;
    auto p = identity_perm(n);
    std::size_t k = 0;
    do {
        els.push_back({"s" + std::to_string(k++), p});
    } while (std::next_permutation(p.begin(), p.end()));
    return FiniteGroupAction(n, std::move(els));
}

FiniteGroupAction FiniteGroupAction::trivial(std::uint32_t points)
{
    return FiniteGroupAction(points, {Element{"e", identity_perm(points)}});
}

std::vector<std::size_t> FiniteGroupAction::class_representatives() const
{
    std::vector<std::size_t> reps(class_count_, order());
    for (std::size_t g = 0; g < order(); ++g) {
        if (reps[class_of_[g]] == order()) reps[class_of_[g]] = g;
    }
    reps[0] = identity_;
    return reps;
}

std::size_t FiniteGroupAction::quotient_size() const
{
    Partition orbits(x_size_);
    for (std::size_t g = 0; g < order(); ++g) {
        for (std::uint32_t x = 0; x < x_size_; ++x) orbits.unite(x, apply(g, x));
    }
    std::size_t count = 0;
    for (std::size_t x = 0; x < x_size_; ++x) count += orbits.find(x) == x;
    return count;
}

std::size_t FiniteGroupAction::twisted_orbit_count(std::size_t c) const
{
    const std::size_t g = class_representatives().at(c);
    std::vector<bool> fixed(x_size_);
    for (std::uint32_t x = 0; x < x_size_; ++x) fixed[x] = apply(g, x) == x;
    Partition orbits(x_size_);
    for (std::size_t h = 0; h < order(); ++h) {
        if (multiply(h, g) != multiply(g, h)) continue;
        for (std::uint32_t x = 0; x < x_size_; ++x) {
            if (fixed[x]) orbits.unite(x, apply(h, x));
        }
    }
    std::size_t count = 0;
    for (std::size_t x = 0; x < x_size_; ++x) count += fixed[x] && orbits.find(x) == x;
    return count;
}

Integer FiniteGroupAction::orbifold_euler() const
{
    Integer chi = 0;
    for (std::size_t c = 0; c < class_count_; ++c) chi += static_cast<unsigned long>(twisted_orbit_count(c));
    return chi;
}

OrbifoldDatum FiniteGroupAction::chi_datum(std::uint32_t dimension) const
{
    OrbifoldDatum d;
    d.group_order = static_cast<std::uint32_t>(order());
    d.dimension = dimension;
    for (std::size_t c = 0; c < class_count_; ++c) {
        d.classes.push_back({FixedComponent{MotivicClass(Integer(static_cast<unsigned long>(twisted_orbit_count(c)))), Rational(0)}});
    }
    return d;
}

// ---------------------------------------------------------------------------
// Wreath products G_n = G^n x| S_n

std::uint32_t type_weight(const WreathType &type)
{
    std::uint32_t w = 0;
    for (const auto &[c, parts] : type) w += std::accumulate(parts.begin(), parts.end(), 0U);
    return w;
}

void check_wreath_guard(const FiniteGroupAction &action, std::uint32_t n)
{
    const std::uint64_t cap = wreath_enumeration_limit;
    std::uint64_t group = saturating_pow(action.order(), n, cap);
    for (std::uint32_t i = 2; i <= n && group <= cap; ++i) group *= i;
    if (group > cap) throw GuardExceeded("wreath enumeration guard: |G|^n n! exceeds " + std::to_string(cap));
    if (saturating_pow(action.x_size(), n, cap) > cap) throw GuardExceeded("wreath enumeration guard: |X|^n exceeds " + std::to_string(cap));
}

namespace {

void require_same_n(const WreathElement &a, const WreathElement &b)
{
    if (a.g.size() != b.g.size() || a.s.size() != b.s.size() || a.g.size() != a.s.size()) {
        throw ContractError("wreath elements of different size");
    }
}

std::vector<std::uint32_t> invert_perm(const std::vector<std::uint32_t> &s)
{
    std::vector<std::uint32_t> inv(s.size());
    for (std::uint32_t i = 0; i < s.size(); ++i) inv[s[i]] = i;
    return inv;
}

} // namespace

WreathElement wreath_multiply(const WreathElement &a, const WreathElement &b, const FiniteGroupAction &action)
{
    require_same_n(a, b);
    const std::size_t n = a.s.size();
    const auto s_inv = invert_perm(a.s);
    WreathElement out;
    out.g.resize(n);
    out.s.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.g[i] = action.multiply(a.g[i], b.g[s_inv[i]]);
        out.s[i] = a.s[b.s[i]];
    }
    return out;
}

WreathElement wreath_inverse(const WreathElement &a, const FiniteGroupAction &action)
{
    // (g, s)^{-1} = (s^{-1}(g^{-1}), s^{-1}); s^{-1}(h)_i = h_{s(i)}
    const std::size_t n = a.s.size();
    WreathElement out;
    out.s = invert_perm(a.s);
    out.g.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.g[i] = action.inverse(a.g[a.s[i]]);
    return out;
}

WreathElement wreath_identity(std::uint32_t n, const FiniteGroupAction &action)
{
    return WreathElement{std::vector<std::size_t>(n, action.identity()), identity_perm(n)};
}

std::vector<std::uint32_t> wreath_apply(const WreathElement &a, const std::vector<std::uint32_t> &x, const FiniteGroupAction &action)
{
    if (x.size() != a.s.size()) throw ContractError("wreath_apply: point has wrong length");
    std::vector<std::uint32_t> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[a.s[j]] = action.apply(a.g[a.s[j]], x[j]);
    return out;
}

WreathType element_type(const WreathElement &a, const FiniteGroupAction &action)
{
    const std::size_t n = a.s.size();
    if (a.g.size() != n) throw ContractError("element_type: malformed wreath element");
    WreathType type;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::size_t prod = action.identity();
        std::uint32_t length = 0;
        for (std::size_t i = start; !seen[i]; i = a.s[i]) {
            seen[i] = true;
            prod = action.multiply(a.g[i], prod);
            ++length;
        }
        type[action.class_of(prod)].push_back(length);
    }
    for (auto &[c, parts] : type) std::sort(parts.begin(), parts.end(), std::greater<>());
    return type;
}

WreathGroup::WreathGroup(const FiniteGroupAction &action, std::uint32_t n) : action_(&action), n_(n)
{
    check_wreath_guard(action, n);
    auto p = identity_perm(n);
    do {
        perm_index_.emplace(p, perms_.size());
        perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (std::uint32_t i = 0; i < n; ++i) g_block_ *= action.order();
    size_ = g_block_ * perms_.size();
}

WreathElement WreathGroup::element(std::size_t index) const
{
    WreathElement a;
    a.s = perms_[index / g_block_];
    std::size_t rest = index % g_block_;
    a.g.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        a.g[i] = rest % action_->order();
        rest /= action_->order();
    }
    return a;
}

std::size_t WreathGroup::index_of(const WreathElement &a) const
{
    std::size_t g_index = 0;
    for (std::uint32_t i = n_; i-- > 0;) g_index = g_index * action_->order() + a.g[i];
    return perm_index_.at(a.s) * g_block_ + g_index;
}

namespace {

// G_n on element indices: index = rank(s) * |G|^n + sum_i g_i |G|^i, with
// permutations ranked in lexicographic order (the order of WreathGroup).
class DenseWreath {
public:
    static constexpr std::uint32_t max_n = 16;

    DenseWreath(const FiniteGroupAction &action, std::uint32_t n) : action_(action), n_(n), group_(action, n)
    {
        std::uint64_t f = 1;
        factorials_.assign(n + 1, 1);
        for (std::uint32_t i = 1; i <= n; ++i) factorials_[i] = f *= i;
        auto p = identity_perm(n);
        do {
            perms_.insert(perms_.end(), p.begin(), p.end());
        } while (std::next_permutation(p.begin(), p.end()));
        g_block_ = group_.size() / factorials_[n];
        std::uint32_t g[max_n], s[max_n];
        for (std::uint32_t i = 0; i < n; ++i) {
            g[i] = static_cast<std::uint32_t>(action.identity());
            s[i] = i;
        }
        identity_ = encode(g, s);
        points_ = point_count(action.x_size(), n);
    }

    [[nodiscard]] std::size_t size() const noexcept { return group_.size(); }
    [[nodiscard]] std::size_t identity() const noexcept { return identity_; }
    [[nodiscard]] std::size_t points() const noexcept { return points_; }
    [[nodiscard]] WreathElement element(std::size_t idx) const { return group_.element(idx); }

    void decode(std::size_t idx, std::uint32_t *g, std::uint32_t *s) const
    {
        const std::uint32_t *p = &perms_[(idx / g_block_) * n_];
        std::copy(p, p + n_, s);
        std::size_t rest = idx % g_block_;
        for (std::uint32_t i = 0; i < n_; ++i) {
            g[i] = static_cast<std::uint32_t>(rest % action_.order());
            rest /= action_.order();
        }
    }

    [[nodiscard]] std::size_t encode(const std::uint32_t *g, const std::uint32_t *s) const
    {
        std::size_t rank = 0;
        for (std::uint32_t i = 0; i < n_; ++i) {
            std::uint32_t smaller = 0;
            for (std::uint32_t j = i + 1; j < n_; ++j) smaller += s[j] < s[i];
            rank += smaller * factorials_[n_ - 1 - i];
        }
        std::size_t code = 0;
        for (std::uint32_t i = n_; i-- > 0;) code = code * action_.order() + g[i];
        return rank * g_block_ + code;
    }

    [[nodiscard]] std::size_t multiply(std::size_t a, std::size_t b) const
    {
        std::uint32_t ag[max_n], as[max_n], bg[max_n], bs[max_n], g[max_n], s[max_n], as_inv[max_n];
        decode(a, ag, as);
        decode(b, bg, bs);
        for (std::uint32_t i = 0; i < n_; ++i) as_inv[as[i]] = i;
        for (std::uint32_t i = 0; i < n_; ++i) {
            g[i] = static_cast<std::uint32_t>(action_.multiply(ag[i], bg[as_inv[i]]));
            s[i] = as[bs[i]];
        }
        return encode(g, s);
    }

    [[nodiscard]] std::size_t inverse(std::size_t a) const
    {
        std::uint32_t ag[max_n], as[max_n], g[max_n], s[max_n];
        decode(a, ag, as);
        for (std::uint32_t i = 0; i < n_; ++i) {
            s[as[i]] = i;
            g[i] = static_cast<std::uint32_t>(action_.inverse(ag[as[i]]));
        }
        return encode(g, s);
    }

    /// (g at slot 0, id) for every g, the transposition (0 1) and the n-cycle.
    [[nodiscard]] std::vector<std::size_t> generators() const
    {
        std::vector<std::size_t> out;
        if (n_ == 0) return out;
        std::uint32_t g[max_n], s[max_n];
        decode(identity_, g, s);
        for (std::uint32_t h = 0; h < action_.order(); ++h) {
            g[0] = h;
            out.push_back(encode(g, s));
        }
        g[0] = static_cast<std::uint32_t>(action_.identity());
        if (n_ >= 2) {
            std::swap(s[0], s[1]);
            out.push_back(encode(g, s));
            for (std::uint32_t i = 0; i < n_; ++i) s[i] = (i + 1) % n_;
            out.push_back(encode(g, s));
        }
        return out;
    }

    [[nodiscard]] std::size_t apply(std::size_t a, std::size_t code) const
    {
        std::uint32_t g[max_n], s[max_n], x[max_n], y[max_n];
        decode(a, g, s);
        const std::size_t base = action_.x_size();
        for (std::uint32_t i = 0; i < n_; ++i) {
            x[i] = static_cast<std::uint32_t>(code % base);
            code /= base;
        }
        for (std::uint32_t j = 0; j < n_; ++j) y[s[j]] = action_.apply(g[s[j]], x[j]);
        std::size_t out = 0;
        for (std::uint32_t i = n_; i-- > 0;) out = out * base + y[i];
        return out;
    }

private:
    static std::size_t point_count(std::size_t base, std::uint32_t n)
    {
        std::size_t total = 1;
        for (std::uint32_t i = 0; i < n; ++i) total *= base;
        return total;
    }

    const FiniteGroupAction &action_;
    std::uint32_t n_;
    WreathGroup group_;
    std::vector<std::uint64_t> factorials_;
    std::vector<std::uint32_t> perms_;
    std::size_t g_block_ = 1;
    std::size_t identity_ = 0;
    std::size_t points_ = 1;
};

// Conjugation orbits found by breadth-first search over a generating set;
// conjugator[y] * rep * conjugator[y]^{-1} = y.
struct ConjugationOrbits {
    std::vector<std::uint32_t> label;
    std::vector<std::size_t> conjugator;
    std::vector<std::vector<std::size_t>> members;
};

ConjugationOrbits conjugation_orbits(const DenseWreath &group, const std::vector<std::size_t> &gens)
{
    constexpr std::uint32_t unlabeled = static_cast<std::uint32_t>(-1);
    std::vector<std::size_t> gen_inverse;
    for (auto s : gens) gen_inverse.push_back(group.inverse(s));
    ConjugationOrbits out;
    out.label.assign(group.size(), unlabeled);
    out.conjugator.assign(group.size(), group.identity());
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (out.label[i] != unlabeled) continue;
        const auto c = static_cast<std::uint32_t>(out.members.size());
        std::vector<std::size_t> orbit{i};
        out.label[i] = c;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const std::size_t y = orbit[head];
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const std::size_t z = group.multiply(group.multiply(gens[k], y), gen_inverse[k]);
                if (out.label[z] != unlabeled) continue;
                out.label[z] = c;
                out.conjugator[z] = group.multiply(gens[k], out.conjugator[y]);
                orbit.push_back(z);
            }
        }
        out.members.push_back(std::move(orbit));
    }
    return out;
}

} // namespace

std::vector<WreathClass> wreath_conjugacy_classes(std::uint32_t n, const FiniteGroupAction &action)
{
    const DenseWreath group(action, n);
    const ConjugationOrbits orbits = conjugation_orbits(group, group.generators());
    std::vector<WreathClass> classes;
    for (const auto &members : orbits.members) {
        WreathElement rep = group.element(members.front());
        WreathType type = element_type(rep, action);
        classes.push_back({std::move(rep), members.size(), std::move(type)});
    }
    return classes;
}

namespace {

void enumerate_partitions(std::uint32_t n, std::uint32_t max_part, std::uint64_t &count)
{
    if (n == 0) {
        ++count;
        return;
    }
    for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) enumerate_partitions(n - part, part, count);
}

std::uint64_t count_tuples(std::size_t classes_left, std::uint32_t n, const std::vector<std::uint64_t> &partitions)
{
    if (classes_left == 0) return n == 0 ? 1 : 0;
    std::uint64_t total = 0;
    for (std::uint32_t w = 0; w <= n; ++w) total += partitions[w] * count_tuples(classes_left - 1, n - w, partitions);
    return total;
}

} // namespace

std::uint64_t count_wreath_types(std::size_t class_count, std::uint32_t n)
{
    std::vector<std::uint64_t> partitions(n + 1);
    for (std::uint32_t w = 0; w <= n; ++w) enumerate_partitions(w, w, partitions[w]);
    return count_tuples(class_count, n, partitions);
}

Integer wreath_oracle_euler(const FiniteGroupAction &action, std::uint32_t n)
{
    const DenseWreath group(action, n);
    const std::vector<std::size_t> gens = group.generators();
    const ConjugationOrbits orbits = conjugation_orbits(group, gens);
    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> local(group.points(), absent);
    std::vector<std::uint32_t> stamp(group.size(), 0);
    Integer chi = 0;
    for (std::uint32_t c = 0; c < orbits.members.size(); ++c) {
        const std::vector<std::size_t> &members = orbits.members[c];
        const std::size_t a = members.front();
        std::vector<std::size_t> fixed;
        for (std::size_t code = 0; code < group.points(); ++code) {
            if (group.apply(a, code) == code) {
                local[code] = fixed.size();
                fixed.push_back(code);
            }
        }
        // Schreier generators t_z^{-1} s t_y of the centralizer of a
        Partition fixed_orbits(fixed.size());
        if (fixed.size() > 1) {
            for (std::size_t y : members) {
                for (std::size_t s : gens) {
                    const std::size_t z = group.multiply(group.multiply(s, y), group.inverse(s));
                    const std::size_t h = group.multiply(group.inverse(orbits.conjugator[z]), group.multiply(s, orbits.conjugator[y]));
                    if (stamp[h] == c + 1) continue;
                    stamp[h] = c + 1;
                    for (std::size_t i = 0; i < fixed.size(); ++i) fixed_orbits.unite(i, local[group.apply(h, fixed[i])]);
                }
            }
        }
        unsigned long count = 0;
        for (std::size_t i = 0; i < fixed.size(); ++i) count += fixed_orbits.find(i) == i;
        chi += count;
        for (std::size_t code : fixed) local[code] = absent;
    }
    return chi;
}

std::uint64_t wreath_orbit_count(const FiniteGroupAction &action, std::uint32_t n)
{
    const DenseWreath group(action, n);
    Partition orbits(group.points());
    for (std::size_t s : group.generators()) {
        for (std::size_t code = 0; code < group.points(); ++code) orbits.unite(code, group.apply(s, code));
    }
    std::uint64_t count = 0;
    for (std::size_t code = 0; code < group.points(); ++code) count += orbits.find(code) == code;
    return count;
}

WreathCheckReport wreath_check(const FiniteGroupAction &action, std::uint32_t max_n)
{
    WreathCheckReport report;
    const MotivicSeries series = wreath_series(action.chi_datum(), max_n);
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        try {
            check_wreath_guard(action, n);
        } catch (const GuardExceeded &) {
            report.refused_from = n;
            break;
        }
        WreathCheckRow row;
        row.n = n;
        row.oracle = wreath_oracle_euler(action, n);
        row.series = euler_spec(series.coeff(n));
        row.types = count_wreath_types(action.class_count(), n);

        // compare conjugation-orbit labels with element types
        const DenseWreath group(action, n);
        const ConjugationOrbits orbits = conjugation_orbits(group, group.generators());
        row.conjugacy_classes = orbits.members.size();
        std::map<std::size_t, WreathType> type_of_class;
        std::map<WreathType, std::size_t> class_of_type;
        row.types_consistent = true;
        for (std::size_t i = 0; i < group.size() && row.types_consistent; ++i) {
            const WreathType type = element_type(group.element(i), action);
            const auto c = type_of_class.emplace(orbits.label[i], type).first;
            const auto t = class_of_type.emplace(type, orbits.label[i]).first;
            row.types_consistent = c->second == type && t->second == orbits.label[i];
        }

        if (!row.passed() && report.passed) {
            report.passed = false;
            report.first_mismatch = "n=" + std::to_string(n) + ": oracle=" + row.oracle.get_str() + " series=" + row.series.get_str() +
                                    " classes=" + std::to_string(row.conjugacy_classes) + " types=" + std::to_string(row.types) +
                                    (row.types_consistent ? "" : " (classes and types disagree)");
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace powerstruct
