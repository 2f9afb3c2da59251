#pragma once

#include <random>
#include <vector>

#include "trop/function.hpp"
#include "trop/special.hpp"

// deterministic random data for property tests
namespace testgen {

using trop::AntiProfile;
using trop::Int;
using trop::PLFunction;
using trop::Profile;
using trop::Rational;

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    Rational rational(long max_num = 12, long max_den = 6) {
        long n = integer(-max_num, max_num);
        long d = integer(1, max_den);
        return Rational(n, d);
    }

    Rational nonzero_rational(long max_num = 12, long max_den = 6) {
        Rational r;
        do {
            r = rational(max_num, max_den);
        } while (r == 0);
        return r;
    }

    // rational in [0, 1) with the given denominator bound
    Rational unit_rational(long max_den = 8) {
        long d = integer(1, max_den);
        long n = integer(0, d - 1);
        return Rational(n, d);
    }

    Profile profile(int max_points = 4) {
        Profile p;
        int count = static_cast<int>(integer(1, max_points));
        // distinct abscissae on a common denominator keep them sorted easily
        long den = integer(4, 12);
        std::vector<long> nums;
        nums.push_back(0);
        while (static_cast<int>(nums.size()) < count) {
            long n = integer(0, den - 1);
            bool dup = false;
            for (long m : nums) dup = dup || m == n;
            if (!dup) nums.push_back(n);
        }
        std::sort(nums.begin(), nums.end());
        for (long n : nums) p.points.emplace_back(Rational(n, den), rational(6, 4));
        return p;
    }

    AntiProfile antiprofile(const Rational& anti_period = Rational(1), int max_points = 4) {
        AntiProfile p;
        p.anti_period = anti_period;
        Profile q = profile(max_points);
        for (auto& [u, v] : q.points) p.points.emplace_back(u * anti_period, v);
        return p;
    }

    std::vector<std::pair<Rational, Rational>> exp_terms(int max_terms = 3) {
        std::vector<std::pair<Rational, Rational>> terms;
        int count = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < count; ++i) terms.emplace_back(nonzero_rational(6, 3), unit_rational());
        return terms;
    }

    // a random expression over a few generators; always finite-valued
    PLFunction function(int depth = 3) {
        if (depth <= 0) {
            switch (integer(0, 4)) {
                case 0:
                    return PLFunction::constant(trop::TropScalar(rational()));
                case 1:
                    return PLFunction::linear(rational(4, 3), rational());
                case 2:
                    return trop::sawtooth(Rational(integer(1, 3)), Rational(integer(1, 3)));
                case 3:
                    return trop::psi();
                default:
                    return PLFunction::periodic(profile());
            }
        }
        switch (integer(0, 3)) {
            case 0:
                return oplus(function(depth - 1), function(depth - 1));
            case 1:
                return function(depth - 1) + function(depth - 1);
            case 2:
                return PLFunction::scale(rational(3, 2), function(depth - 1));
            default:
                return PLFunction::shift_arg(rational(3, 2), function(depth - 1));
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace testgen
