#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcs/fractal.hpp"
#include "qcs/membership.hpp"

namespace qcs::detail {

using Wide = __int128;

struct Point2 {
    Wide x = 0, y = 0;
};

/// Dense index over {w in O_K : norm(w) <= bound}, row by row in y. Used to
/// decide membership for every point w / alpha^N of one level at once: a node
/// is live iff some digit keeps it inside the disk forever.
class LevelLattice {
public:
    /// `scale` is alpha^N; the disk is norm(w) <= R'^2 norm(scale).
    LevelLattice(const IfsSpec& spec, const QuadInt& scale, const Rational& radius_sq, std::size_t cap);

    std::size_t size() const noexcept { return total_; }
    std::optional<std::size_t> index_of(const Point2& w) const;
    Point2 coords_of(std::size_t index) const;

    /// Marks every node that admits an infinite digit path.
    void solve();
    bool live(std::size_t index) const { return !dead_[index]; }

    /// Lowest-digit walk through live nodes until a node repeats.
    Coding coding_from(std::size_t index) const;

    QuadInt to_quadint(const Point2& w) const;

    /// Estimated lattice point count of the disk norm(w) <= R'^2 norm(scale).
    static double estimate(const Field& field, const Integer& scale_norm, const Rational& radius_sq);

private:
    Point2 mul(const Point2& a, const Point2& b) const;
    std::optional<std::size_t> successor(std::size_t index, const Point2& w, std::size_t digit) const;
    std::optional<std::size_t> predecessor(const Point2& w, std::size_t digit) const;

    Field field_;
    Wide omega_trace_, omega_norm_;
    Point2 beta_, beta_conj_;
    Wide beta_norm_;
    std::vector<Point2> shifts_;  // a * alpha^N
    Wide bound_ = 0;
    Wide y_min_ = 0, y_max_ = -1;
    std::vector<Wide> row_lo_, row_hi_;
    std::vector<std::size_t> row_start_;
    std::size_t total_ = 0;
    std::vector<std::uint8_t> dead_;
};

}  // namespace qcs::detail
