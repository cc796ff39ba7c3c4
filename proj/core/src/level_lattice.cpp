#include "level_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "qcs/error.hpp"

namespace qcs::detail {

namespace {

Wide to_wide(const Integer& z, unsigned max_bits, const char* what) {
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > max_bits)
        throw ValidationError(std::string("level enumeration: ") + what + " exceeds " + std::to_string(max_bits) +
                              " bits");
    // Two 64-bit halves: |z| < 2^max_bits <= 2^100.
    const Integer mag = abs(z);
    const Integer high = mag >> 64;
    const Integer low = mag - (high << 64);
    unsigned long long lo = 0;
    mpz_export(&lo, nullptr, -1, sizeof lo, 0, 0, low.get_mpz_t());
    const Wide out = (static_cast<Wide>(high.get_ui()) << 64) | static_cast<Wide>(lo);
    return z < 0 ? -out : out;
}

Integer from_wide(Wide w) {
    const bool neg = w < 0;
    const unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-w) : static_cast<unsigned __int128>(w);
    const unsigned long long hi = static_cast<unsigned long long>(mag >> 64);
    const unsigned long long lo = static_cast<unsigned long long>(mag);
    Integer out = Integer(static_cast<unsigned long>(hi));
    out <<= 64;
    out += Integer(static_cast<unsigned long>(lo));
    return neg ? Integer(-out) : out;
}

Wide isqrt(Wide n) {
    if (n <= 0) return 0;
    Integer r;
    const Integer big = from_wide(n);
    mpz_sqrt(r.get_mpz_t(), big.get_mpz_t());
    return to_wide(r, 64, "square root");
}

Wide floor_half(Wide n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }
Wide ceil_half(Wide n) { return -floor_half(-n); }

constexpr unsigned kCoordBits = 30;
constexpr unsigned kShiftBits = 50;
constexpr unsigned kBoundBits = 62;

}  // namespace

double LevelLattice::estimate(const Field& field, const Integer& scale_norm, const Rational& radius_sq) {
    // Area of {norm(x + y w) <= B} in (x, y) coordinates is 2 pi B / sqrt|disc|.
    long exp = 0;
    const Integer b = radius_sq.get_num() * scale_norm / radius_sq.get_den();
    const double mant = mpz_get_d_2exp(&exp, b.get_mpz_t());
    const double area_factor = 2 * std::numbers::pi / std::sqrt(static_cast<double>(-field.disc()));
    return std::ldexp(mant, static_cast<int>(std::min<long>(exp, 2000))) * area_factor;
}

LevelLattice::LevelLattice(const IfsSpec& spec, const QuadInt& scale, const Rational& radius_sq, std::size_t cap)
    : field_(spec.field()),
      omega_trace_(field_.omega_trace()),
      omega_norm_(field_.omega_norm()) {
    if (-field_.d() > (1LL << kCoordBits)) throw ValidationError("level enumeration: |d| too large");
    if (spec.digit_count() > 0xFFFF) throw ValidationError("level enumeration: too many digits");

    const double approx = estimate(field_, norm(scale), radius_sq);
    if (approx > static_cast<double>(cap) * 1.05 + 64)
        throw CapExceeded("level enumeration: about " + std::to_string(approx) + " lattice points exceed cap " +
                              std::to_string(cap),
                          approx);

    const QuadInt cb = conj(spec.beta());
    beta_ = {to_wide(spec.beta().x(), kCoordBits, "beta"), to_wide(spec.beta().y(), kCoordBits, "beta")};
    beta_conj_ = {to_wide(cb.x(), kCoordBits + 1, "beta"), to_wide(cb.y(), kCoordBits, "beta")};
    beta_norm_ = to_wide(spec.beta_norm(), 2 * kCoordBits + 4, "norm(beta)");
    for (const auto& a : spec.digits()) {
        const QuadInt s = a * scale;
        shifts_.push_back({to_wide(s.x(), kShiftBits, "digit shift"), to_wide(s.y(), kShiftBits, "digit shift")});
    }
    bound_ = to_wide(radius_sq.get_num() * norm(scale) / radius_sq.get_den(), kBoundBits, "disk bound");

    const Wide abs_d = -static_cast<Wide>(field_.d());
    const Wide y_extent = field_.half_basis() ? isqrt(4 * bound_ / abs_d) : isqrt(bound_ / abs_d);
    y_min_ = -y_extent;
    y_max_ = y_extent;
    auto nrm = [&](Wide x, Wide y) { return x * x + omega_trace_ * x * y + omega_norm_ * y * y; };

    const std::size_t rows = static_cast<std::size_t>(y_max_ - y_min_ + 1);
    row_lo_.resize(rows);
    row_hi_.resize(rows);
    row_start_.assign(rows + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        const Wide y = y_min_ + static_cast<Wide>(r);
        Wide lo, hi;
        if (!field_.half_basis()) {
            const Wide s = isqrt(bound_ - abs_d * y * y);
            lo = -s;
            hi = s;
            if (bound_ - abs_d * y * y < 0) {
                lo = 1;
                hi = 0;
            }
        } else {
            const Wide disc = 4 * bound_ - abs_d * y * y;
            if (disc < 0) {
                lo = 1;
                hi = 0;
            } else {
                const Wide s = isqrt(disc);
                lo = ceil_half(-y - s);
                hi = floor_half(-y + s);
                while (nrm(lo - 1, y) <= bound_) --lo;
                while (lo <= hi && nrm(lo, y) > bound_) ++lo;
                while (nrm(hi + 1, y) <= bound_) ++hi;
                while (hi >= lo && nrm(hi, y) > bound_) --hi;
            }
        }
        row_lo_[r] = lo;
        row_hi_[r] = hi;
        const std::size_t len = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
        row_start_[r + 1] = row_start_[r] + len;
    }
    total_ = row_start_.back();
    if (total_ > cap || total_ >= 0xFFFFFFFFULL)
        throw CapExceeded("level enumeration: " + std::to_string(total_) + " lattice points exceed cap " +
                              std::to_string(cap),
                          static_cast<double>(total_));
    dead_.assign(total_, 0);
}

std::optional<std::size_t> LevelLattice::index_of(const Point2& w) const {
    if (w.y < y_min_ || w.y > y_max_) return std::nullopt;
    const std::size_t r = static_cast<std::size_t>(w.y - y_min_);
    if (w.x < row_lo_[r] || w.x > row_hi_[r]) return std::nullopt;
    return row_start_[r] + static_cast<std::size_t>(w.x - row_lo_[r]);
}

Point2 LevelLattice::coords_of(std::size_t index) const {
    const auto it = std::upper_bound(row_start_.begin(), row_start_.end(), index);
    const std::size_t r = static_cast<std::size_t>(it - row_start_.begin()) - 1;
    return {row_lo_[r] + static_cast<Wide>(index - row_start_[r]), y_min_ + static_cast<Wide>(r)};
}

Point2 LevelLattice::mul(const Point2& a, const Point2& b) const {
    const Wide yy = a.y * b.y;
    return {a.x * b.x - omega_norm_ * yy, a.x * b.y + a.y * b.x + omega_trace_ * yy};
}

std::optional<std::size_t> LevelLattice::successor(std::size_t, const Point2& w, std::size_t digit) const {
    const Point2 bw = mul(beta_, w);
    return index_of({bw.x - shifts_[digit].x, bw.y - shifts_[digit].y});
}

std::optional<std::size_t> LevelLattice::predecessor(const Point2& w, std::size_t digit) const {
    const Point2 t{w.x + shifts_[digit].x, w.y + shifts_[digit].y};
    const Point2 p = mul(t, beta_conj_);
    if (p.x % beta_norm_ != 0 || p.y % beta_norm_ != 0) return std::nullopt;
    return index_of({p.x / beta_norm_, p.y / beta_norm_});
}

void LevelLattice::solve() {
    const std::size_t digits = shifts_.size();
    std::vector<std::uint16_t> outdeg(total_, 0);
    std::vector<std::uint32_t> stack;
    for (std::size_t r = 0; r + 1 < row_start_.size(); ++r) {
        const Wide y = y_min_ + static_cast<Wide>(r);
        for (std::size_t i = row_start_[r]; i < row_start_[r + 1]; ++i) {
            const Point2 w{row_lo_[r] + static_cast<Wide>(i - row_start_[r]), y};
            std::uint16_t count = 0;
            for (std::size_t d = 0; d < digits; ++d)
                if (successor(i, w, d)) ++count;
            outdeg[i] = count;
            if (count == 0) {
                dead_[i] = 1;
                stack.push_back(static_cast<std::uint32_t>(i));
            }
        }
    }
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        const Point2 w = coords_of(i);
        for (std::size_t d = 0; d < digits; ++d) {
            const auto pred = predecessor(w, d);
            if (!pred || dead_[*pred]) continue;
            if (--outdeg[*pred] == 0) {
                dead_[*pred] = 1;
                stack.push_back(static_cast<std::uint32_t>(*pred));
            }
        }
    }
}

Coding LevelLattice::coding_from(std::size_t index) const {
    if (dead_[index]) throw std::logic_error("coding_from: node is not live");
    std::vector<std::size_t> digits;
    std::unordered_map<std::size_t, std::size_t> first_visit;
    std::size_t cur = index;
    while (true) {
        if (auto it = first_visit.find(cur); it != first_visit.end()) {
            Coding c;
            c.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            c.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return c;
        }
        first_visit.emplace(cur, digits.size());
        const Point2 w = coords_of(cur);
        bool moved = false;
        for (std::size_t d = 0; d < shifts_.size() && !moved; ++d) {
            if (auto next = successor(cur, w, d); next && !dead_[*next]) {
                digits.push_back(d);
                cur = *next;
                moved = true;
            }
        }
        if (!moved) throw std::logic_error("coding_from: live node without live successor");
    }
}

QuadInt LevelLattice::to_quadint(const Point2& w) const { return QuadInt(field_, from_wide(w.x), from_wide(w.y)); }

}  // namespace qcs::detail
