#pragma once

#include "b2dunkl/rational.hpp"

#include <string>

namespace b2dunkl {

/// Multiplicity pair for B2: k0 on the diagonal reflections, k1 on the
/// coordinate reflections. kplus = k0 + k1, kminus = k1 - k0.
class Params {
public:
    Params() = default;
    Params(Rational k0, Rational k1)
        : k0_(std::move(k0)), k1_(std::move(k1)), kplus_(k0_ + k1_), kminus_(k1_ - k0_) {}

    const Rational& k0() const { return k0_; }
    const Rational& k1() const { return k1_; }
    const Rational& kplus() const { return kplus_; }
    const Rational& kminus() const { return kminus_; }

    /// The sum over reflections of character value times multiplicity; zero for
    /// the 2-dimensional representation since every reflection has trace zero.
    static constexpr int gamma = 0;

    /// -1/2 < k0 +- k1 < 1/2.
    bool is_positive_region() const
    {
        const Rational half(1, 2);
        return -half < kplus_ && kplus_ < half && -half < kminus_ && kminus_ < half;
    }

    /// 1/2 +- k0 +- k1 is not an integer for any choice of signs.
    bool is_generic() const;

    /// Canonical "k0|k1" string, used as a cache key.
    std::string key() const { return to_pq(k0_) + "|" + to_pq(k1_); }

    bool operator==(const Params& o) const { return k0_ == o.k0_ && k1_ == o.k1_; }

    double k0_d() const { return to_double(k0_); }
    double k1_d() const { return to_double(k1_); }

private:
    Rational k0_ = 0, k1_ = 0, kplus_ = 0, kminus_ = 0;
};

inline bool Params::is_generic() const
{
    const Rational half(1, 2);
    for (int s0 : {-1, 1})
        for (int s1 : {-1, 1}) {
            Rational v = half + s0 * k0_ + s1 * k1_;
            v.canonicalize();
            if (v.get_den() == 1)
                return false;
        }
    return true;
}

} // namespace b2dunkl
