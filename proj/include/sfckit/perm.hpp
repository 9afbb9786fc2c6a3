#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sfckit {

/// Points a permutation acts on. Degrees stay well below 2^16 at the scales
/// this library targets (order cap ~ a few thousand, regular actions).
using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 65535;

/// A permutation of {0, ..., degree-1}, stored as its image table.
///
/// Composition is left-to-right: (a * b) maps x to b[a[x]], i.e. "apply a,
/// then b". With this convention the right regular action g -> (x -> x*g)
/// is a homomorphism.
class Perm {
public:
    Perm() = default;

    /// Identity permutation on `degree` points.
    explicit Perm(std::size_t degree);

    /// Takes ownership of an image table; validates that it is a bijection.
    explicit Perm(std::vector<Point> images);

    /// Build from cycles over 0-based points; points absent from every cycle
    /// are fixed. Throws InputError on out-of-range or repeated points.
    static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator[](std::size_t x) const { return images_[x]; }
    const std::vector<Point>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    long long order() const;

    /// Nontrivial cycles, each starting at its smallest point, sorted by
    /// smallest point. 0-based.
    std::vector<std::vector<int>> cycles() const;

    /// 1-based cycle notation, "()" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<Point> images_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace sfckit
