#pragma once

#include "gendo/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gendo {

/// Why an orbit never reaches the stopping condition.
struct PeriodicityCertificate {
    enum class Direction { Syzygy, Cosyzygy, Approximation };
    enum class Kind {
        /// an indecomposable summand Z of step m recurs as a summand of step m + period
        Recurrence,
        /// the iterated module becomes zero with every intermediate term acceptable
        Terminates,
        /// every summand reachable from the start lies in a finite set, none of them bad
        ClosedOrbit,
    };
    Direction direction = Direction::Syzygy;
    Kind kind = Kind::Recurrence;
    std::size_t offset = 0;
    std::size_t period = 0;
    std::size_t orbit_size = 0;
    /// verified isomorphism blocks from the earlier summand to the later one
    std::vector<Matrix> iso;
    std::string describe() const;
};

/// Finite(n), Infinite(certificate), AtLeast(n) when the cutoff ran out, or
/// the zero-module convention (distinct from a certified Infinite).
struct HomologicalDim {
    enum class Kind { Finite, Infinite, AtLeast, ZeroModule };
    Kind kind = Kind::Finite;
    std::size_t value = 0;
    std::optional<PeriodicityCertificate> certificate;

    static HomologicalDim finite(std::size_t n) { return {Kind::Finite, n, std::nullopt}; }
    static HomologicalDim infinite(PeriodicityCertificate c) { return {Kind::Infinite, 0, std::move(c)}; }
    static HomologicalDim at_least(std::size_t n) { return {Kind::AtLeast, n, std::nullopt}; }
    static HomologicalDim zero_module() { return {Kind::ZeroModule, 0, std::nullopt}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite || kind == Kind::ZeroModule; }
    bool certified() const { return kind != Kind::AtLeast; }
    bool equals(std::size_t n) const { return kind == Kind::Finite && value == n; }
    /// "3", "inf", ">=24", "inf(zero)"
    std::string to_string() const;

    friend bool operator==(const HomologicalDim& a, const HomologicalDim& b)
    {
        if (a.kind != b.kind) return false;
        return a.kind == Kind::Infinite || a.kind == Kind::ZeroModule || a.value == b.value;
    }
};

/// min / max that respect Infinite and AtLeast.
HomologicalDim dim_min(const HomologicalDim& a, const HomologicalDim& b);
HomologicalDim dim_max(const HomologicalDim& a, const HomologicalDim& b);
HomologicalDim dim_plus(const HomologicalDim& a, std::size_t k);

}  // namespace gendo
