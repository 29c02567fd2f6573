#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gendo {

/// Projective lengths (c_0, ..., c_{n-1}) of a connected Nakayama algebra.
/// Cyclic series live on the oriented n-cycle; linear ones on 0 -> 1 -> ... -> n-1.
struct KupischSeries {
    std::vector<std::size_t> c;
    bool cyclic = true;

    std::size_t n() const { return c.size(); }
    std::size_t wrap(long long i) const
    {
        const long long m = static_cast<long long>(c.size());
        return static_cast<std::size_t>(((i % m) + m) % m);
    }
    /// c_i with the index read mod n.
    std::size_t len(long long i) const { return c[wrap(i)]; }
    std::size_t total() const
    {
        std::size_t s = 0;
        for (auto x : c) s += x;
        return s;
    }
    std::string to_string() const;
};

/// Throws KupischViolation naming the first failing index.
KupischSeries validate_kupisch(std::vector<std::size_t> c, bool cyclic);

}  // namespace gendo
