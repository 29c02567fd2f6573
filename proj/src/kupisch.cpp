#include "gendo/kupisch.hpp"

#include "gendo/error.hpp"

namespace gendo {

std::string KupischSeries::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s;
}

KupischSeries validate_kupisch(std::vector<std::size_t> c, bool cyclic)
{
    const std::size_t n = c.size();
    if (n == 0) throw Error(ErrorKind::KupischViolation, "empty Kupisch series");
    for (std::size_t i = 0; i < n; ++i)
        if (c[i] == 0) throw Error(ErrorKind::KupischViolation, "entry " + std::to_string(i) + " is zero", {(long long)i});
    if (cyclic) {
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] < 2)
                throw Error(ErrorKind::KupischViolation,
                            "cyclic series needs c_i >= 2 at index " + std::to_string(i), {(long long)i});
            if (c[(i + 1) % n] + 1 < c[i])
                throw Error(ErrorKind::KupischViolation,
                            "c_{i+1} >= c_i - 1 fails at index " + std::to_string(i), {(long long)i});
        }
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (c[i + 1] + 1 < c[i])
                throw Error(ErrorKind::KupischViolation,
                            "c_{i+1} >= c_i - 1 fails at index " + std::to_string(i), {(long long)i});
        if (c[n - 1] != 1)
            throw Error(ErrorKind::KupischViolation, "linear series must end in 1", {(long long)(n - 1)});
    }
    return KupischSeries{std::move(c), cyclic};
}

}  // namespace gendo
