#pragma once

#include <powerstruct/series.hpp>

#include <ostream>

// gtest value printers for library types.
namespace powerstruct {

template <class Key>
void PrintTo(const SparsePoly<Key> &p, std::ostream *os)
{
    *os << to_string(p);
}

inline void PrintTo(const ExponentVector &n, std::ostream *os) { *os << n.to_string(); }

template <PreLambdaRing R>
void PrintTo(const TruncatedSeries<R> &s, std::ostream *os)
{
    *os << s.shape().to_string() << " {";
    for (const auto &[n, c] : s.terms()) *os << ' ' << n.to_string() << ": " << ring_traits<R>::to_string(c) << ';';
    *os << " }";
}

} // namespace powerstruct
