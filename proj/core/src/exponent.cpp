#include <powerstruct/exponent.hpp>

#include <powerstruct/errors.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace powerstruct {

std::uint64_t ExponentVector::total_degree() const noexcept
{
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const noexcept
{
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

bool ExponentVector::divides(const ExponentVector &m) const
{
    if (m.size() != size()) throw ShapeMismatch("exponent vectors of different length");
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > m.e_[i]) return false;
    }
    return true;
}

ExponentVector operator+(const ExponentVector &a, const ExponentVector &b)
{
    if (a.size() != b.size()) throw ShapeMismatch("exponent vectors of different length");
    ExponentVector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.e_[i] += b.e_[i];
    return out;
}

ExponentVector operator*(std::uint32_t k, const ExponentVector &a)
{
    ExponentVector out = a;
    for (auto &v : out.e_) v *= k;
    return out;
}

std::string ExponentVector::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

BoxShape::BoxShape(std::vector<std::uint32_t> bounds) : bounds_(std::move(bounds))
{
    if (bounds_.empty()) throw ContractError("series needs at least one variable");
    strides_.resize(bounds_.size());
    std::size_t stride = 1;
    for (std::size_t i = bounds_.size(); i-- > 0;) {
        strides_[i] = stride;
        const std::size_t width = static_cast<std::size_t>(bounds_[i]) + 1;
        if (stride > std::numeric_limits<std::size_t>::max() / width) throw ContractError("truncation box too large");
        stride *= width;
    }
    size_ = stride;
}

bool BoxShape::contains(const ExponentVector &n) const
{
    if (n.size() != bounds_.size()) return false;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (n[i] > bounds_[i]) return false;
    }
    return true;
}

std::size_t BoxShape::index_of(const ExponentVector &n) const
{
    if (n.size() != bounds_.size()) throw ShapeMismatch("exponent " + n.to_string() + " has wrong variable count for box " + to_string());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (n[i] > bounds_[i]) throw ContractError("exponent " + n.to_string() + " outside box " + to_string());
        idx += n[i] * strides_[i];
    }
    return idx;
}

ExponentVector BoxShape::exponent_at(std::size_t index) const
{
    ExponentVector n(bounds_.size());
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        n[i] = static_cast<std::uint32_t>(index / strides_[i]);
        index %= strides_[i];
    }
    return n;
}

void BoxShape::exponent_at(std::size_t index, std::uint32_t *out) const
{
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        out[i] = static_cast<std::uint32_t>(index / strides_[i]);
        index %= strides_[i];
    }
}

std::vector<std::size_t> BoxShape::graded_lex_indices() const
{
    std::vector<std::size_t> idx(size_);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<std::uint64_t> degree(size_);
    std::vector<std::uint32_t> buf(bounds_.size());
    for (std::size_t i = 0; i < size_; ++i) {
        exponent_at(i, buf.data());
        degree[i] = std::accumulate(buf.begin(), buf.end(), std::uint64_t{0});
    }
    // lex order coincides with index order, so a stable sort by degree suffices
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
    return idx;
}

std::uint32_t BoxShape::max_multiple(const ExponentVector &k) const
{
    if (k.size() != bounds_.size()) throw ShapeMismatch("exponent " + k.to_string() + " has wrong variable count for box " + to_string());
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (k[i] != 0) best = std::min(best, bounds_[i] / k[i]);
    }
    if (best == std::numeric_limits<std::uint32_t>::max()) throw ContractError("zero exponent vector has no multiples");
    return best;
}

std::string BoxShape::to_string() const { return ExponentVector(bounds_).to_string(); }

} // namespace powerstruct
