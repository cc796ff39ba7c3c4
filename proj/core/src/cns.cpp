#include "qcs/cns.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <string>

#include "qcs/error.hpp"

namespace qcs {

CnsBasis CnsBasis::make(const Field& field, unsigned long n) {
    if (field.d() != -1) throw ValidationError("cns: only the Gaussian integers (d = -1) are supported");
    if (n == 0) throw ValidationError("cns: n must be positive");
    return CnsBasis{n, QuadInt(field, -Integer(n), 1), n * n + 1};
}

std::vector<unsigned long> cns_expand(const QuadInt& gamma, const CnsBasis& basis) {
    require_same_field(gamma, basis.theta);
    // O/theta = Z/(n^2+1) with i -> n, since i = theta + n.
    const Integer modulus(basis.digit_count);
    const Integer shift(basis.n);
    const std::size_t cap = 64 + 4 * mpz_sizeinbase(Integer(norm(gamma) + 1).get_mpz_t(), 2);

    std::vector<unsigned long> digits;
    QuadInt cur = gamma;
    while (!cur.is_zero()) {
        if (digits.size() >= cap) throw std::logic_error("cns_expand: step cap exceeded for " + to_string(gamma));
        const Integer xi = mod_floor(cur.x() + shift * cur.y(), modulus);
        digits.push_back(xi.get_ui());
        auto q = exact_div(cur - QuadInt(cur.field(), xi, 0), basis.theta);
        if (!q) throw std::logic_error("cns_expand: residue digit does not clear theta");
        cur = std::move(*q);
    }
    return digits;
}

QuadInt cns_evaluate(const std::vector<unsigned long>& digits, const CnsBasis& basis) {
    QuadInt acc(basis.theta.field(), 0, 0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it >= basis.digit_count)
            throw ValidationError("cns_evaluate: digit " + std::to_string(*it) + " exceeds n^2");
        acc = acc * basis.theta + QuadInt(acc.field(), Integer(*it), 0);
    }
    return acc;
}

std::vector<QuadInt> dyadic_alpha_description(const CnsBasis& basis, unsigned l, std::size_t cap) {
    // Words of length 2l+1; word value times theta^l is the integer with the same digits.
    const long double words = std::pow(static_cast<long double>(basis.digit_count), 2.0L * l + 1);
    if (words > static_cast<long double>(cap))
        throw CapExceeded("dyadic description: " + std::to_string(static_cast<double>(words)) + " digit words exceed cap " +
                              std::to_string(cap),
                          static_cast<double>(words));
    std::vector<QuadInt> level{QuadInt(basis.theta.field(), 0, 0)};
    for (unsigned k = 0; k < 2 * l + 1; ++k) {
        std::vector<QuadInt> next;
        next.reserve(level.size() * basis.digit_count);
        for (const auto& w : level)
            for (unsigned long xi = 0; xi < basis.digit_count; ++xi)
                next.push_back(w * basis.theta + QuadInt(w.field(), Integer(xi), 0));
        level = std::move(next);
    }
    auto less = [](const QuadInt& a, const QuadInt& b) {
        return std::tie(a.x(), a.y()) < std::tie(b.x(), b.y());
    };
    std::sort(level.begin(), level.end(), less);
    level.erase(std::unique(level.begin(), level.end()), level.end());
    return level;
}

}  // namespace qcs
