#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace nsg {

namespace {

// Cap on the closure bitmap size. Generators large enough to exceed this
// are outside the intended working range (the built-in families stay below
// ~10^5 even at d=30); refusing keeps the CLI total on malformed input.
constexpr Int kMaxBound = Int{1} << 26;

} // namespace

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::EmptyGenerators: return "EmptyGenerators";
        case Errc::GcdNotOne: return "GcdNotOne";
        case Errc::NotOdd: return "NotOdd";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::OddBranchCount: return "OddBranchCount";
        case Errc::ParityError: return "ParityError";
        case Errc::NotACoverCase: return "NotACoverCase";
        case Errc::InvalidParameters: return "InvalidParameters";
        case Errc::ClassMismatch: return "ClassMismatch";
        case Errc::NotEffective: return "NotEffective";
        case Errc::LimitExceeded: return "LimitExceeded";
    }
    return "UnknownError";
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
    if (gens.empty())
        throw Error(Errc::EmptyGenerators, "generator set is empty");
    for (Int g : gens)
        if (g < 1)
            throw Error(Errc::InvalidParameters,
                        "generator " + std::to_string(g) + " is not positive");

    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int g = 0;
    for (Int v : gens) g = std::gcd(g, v);
    if (g != 1)
        throw Error(Errc::GcdNotOne,
                    "gcd of generators is " + std::to_string(g) +
                    "; complement would be infinite");

    const Int m = gens.front();
    const Int M = gens.back();
    // Bitmap bound (m+1)*M exceeds the Frobenius number (Schur bound).
    // Checked by division so the product cannot overflow.
    if (M >= kMaxBound || M > kMaxBound / (m + 1))
        throw Error(Errc::LimitExceeded,
                    "closure bound for generators up to " + std::to_string(M) +
                    " exceeds limit");
    const Int bound = (m + 1) * M;

    NumericalSemigroup H;
    H.generators_ = std::move(gens);
    H.members_.assign(static_cast<std::size_t>(bound) + 1, false);
    H.members_[0] = true;
    for (Int n = 1; n <= bound; ++n) {
        for (Int v : H.generators_) {
            if (v > n) break;
            if (H.members_[static_cast<std::size_t>(n - v)]) {
                H.members_[static_cast<std::size_t>(n)] = true;
                break;
            }
        }
    }

    // Conductor: start of the first run of m consecutive members. Such a
    // run certifies every larger integer is a member, and the first run
    // start is exactly frobenius+1.
    Int run = 0;
    Int c = -1;
    for (Int n = 0; n <= bound; ++n) {
        run = H.members_[static_cast<std::size_t>(n)] ? run + 1 : 0;
        if (run == m) {
            c = n - m + 1;
            break;
        }
    }
    H.conductor_ = c;   // always found: bound covers frobenius + m
    return H;
}

bool NumericalSemigroup::contains(Int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return members_[static_cast<std::size_t>(n)];
}

GapSet NumericalSemigroup::gaps() const {
    GapSet out;
    for (Int n = 1; n < conductor_; ++n)
        if (!members_[static_cast<std::size_t>(n)]) out.push_back(n);
    return out;
}

GapSet NumericalSemigroup::odd_gaps() const {
    GapSet out;
    for (Int n = 1; n < conductor_; n += 2)
        if (!members_[static_cast<std::size_t>(n)]) out.push_back(n);
    return out;
}

GapSet NumericalSemigroup::even_gaps() const {
    GapSet out;
    for (Int n = 2; n < conductor_; n += 2)
        if (!members_[static_cast<std::size_t>(n)]) out.push_back(n);
    return out;
}

Int NumericalSemigroup::frobenius() const {
    return conductor_ - 1 >= 1 ? conductor_ - 1 : -1;
}

Int NumericalSemigroup::multiplicity() const {
    return generators_.front();
}

Int NumericalSemigroup::min_odd_element() const {
    for (Int n = 1; ; n += 2)
        if (contains(n)) return n;
}

Int NumericalSemigroup::h0_profile(Int n) const {
    if (n < 0)
        throw Error(Errc::InvalidParameters, "h0_profile needs n >= 0");
    Int below = 0;
    for (Int k = 1; k <= n && k < conductor_; ++k)
        if (!members_[static_cast<std::size_t>(k)]) ++below;
    return n + 1 - below;
}

NumericalSemigroup NumericalSemigroup::d2() const {
    // Halved member set: h/2 for even members h. It is closed under
    // addition, so the positive members up to its conductor plus its
    // multiplicity form a generating set.
    const Int half_top = static_cast<Int>(members_.size() - 1) / 2;
    std::vector<bool> half(static_cast<std::size_t>(half_top) + 1, false);
    for (Int i = 0; i <= half_top; ++i)
        half[static_cast<std::size_t>(i)] = contains(2 * i);

    Int c = 0;
    for (Int i = half_top; i >= 0; --i) {
        if (!half[static_cast<std::size_t>(i)]) {
            c = i + 1;
            break;
        }
    }
    Int mult = 0;
    for (Int i = 1; i <= half_top; ++i) {
        if (half[static_cast<std::size_t>(i)]) {
            mult = i;
            break;
        }
    }

    std::vector<Int> gens;
    const Int top = std::min(c + mult, half_top);
    for (Int i = 1; i <= top; ++i)
        if (half[static_cast<std::size_t>(i)]) gens.push_back(i);
    return from_generators(std::move(gens));
}

NumericalSemigroup NumericalSemigroup::double_cover(const std::vector<Int>& odd_gens) const {
    std::vector<Int> gens;
    gens.reserve(generators_.size() + odd_gens.size());
    for (Int g : generators_) gens.push_back(2 * g);
    for (Int n : odd_gens) {
        if (n % 2 == 0)
            throw Error(Errc::NotOdd,
                        "generator " + std::to_string(n) + " is even");
        gens.push_back(n);
    }
    return from_generators(std::move(gens));
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& other) const {
    return conductor_ == other.conductor_ && gaps() == other.gaps();
}

} // namespace nsg
