#include "gendo/homdim.hpp"

namespace gendo {

std::string PeriodicityCertificate::describe() const
{
    const char* dir = direction == Direction::Syzygy     ? "syzygy"
                      : direction == Direction::Cosyzygy ? "cosyzygy"
                                                         : "approximation kernel";
    switch (kind) {
    case Kind::Recurrence:
        return std::string(dir) + " recurrence: summand at step " + std::to_string(offset) + " recurs at step " +
               std::to_string(offset + period) + " (period " + std::to_string(period) + ")";
    case Kind::Terminates:
        return std::string(dir) + " sequence reaches 0 after " + std::to_string(offset) + " steps";
    case Kind::ClosedOrbit:
        return std::string(dir) + " orbit closed on " + std::to_string(orbit_size) + " indecomposables";
    }
    return "";
}

std::string HomologicalDim::to_string() const
{
    switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "inf";
    case Kind::AtLeast: return ">=" + std::to_string(value);
    case Kind::ZeroModule: return "inf(zero)";
    }
    return "?";
}

HomologicalDim dim_min(const HomologicalDim& a, const HomologicalDim& b)
{
    if (a.is_infinite()) return b.kind == HomologicalDim::Kind::ZeroModule ? a : b;
    if (b.is_infinite()) return a;
    if (a.kind == HomologicalDim::Kind::Finite && b.kind == HomologicalDim::Kind::Finite)
        return a.value <= b.value ? a : b;
    // at least one AtLeast
    const HomologicalDim& fin = a.kind == HomologicalDim::Kind::Finite ? a : b;
    const HomologicalDim& low = a.kind == HomologicalDim::Kind::Finite ? b : a;
    if (fin.kind == HomologicalDim::Kind::Finite) return fin.value <= low.value ? fin : low;
    return a.value <= b.value ? a : b;
}

HomologicalDim dim_max(const HomologicalDim& a, const HomologicalDim& b)
{
    if (a.kind == HomologicalDim::Kind::ZeroModule) return b;
    if (b.kind == HomologicalDim::Kind::ZeroModule) return a;
    if (a.kind == HomologicalDim::Kind::Infinite) return a;
    if (b.kind == HomologicalDim::Kind::Infinite) return b;
    if (a.kind == HomologicalDim::Kind::AtLeast || b.kind == HomologicalDim::Kind::AtLeast) {
        std::size_t v = std::max(a.value, b.value);
        return HomologicalDim::at_least(v);
    }
    return a.value >= b.value ? a : b;
}

HomologicalDim dim_plus(const HomologicalDim& a, std::size_t k)
{
    HomologicalDim r = a;
    if (a.kind == HomologicalDim::Kind::Finite || a.kind == HomologicalDim::Kind::AtLeast) r.value += k;
    return r;
}

}  // namespace gendo
