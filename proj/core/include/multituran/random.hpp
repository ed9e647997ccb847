#pragma once

#include <cstdint>
#include <random>

namespace multituran
{
    /// 64-bit Mersenne Twister (std::mt19937_64, whose output sequence is fixed
    /// by the standard) with hand-written range reduction, so a seed gives the
    /// same stream on every platform and standard library.
    class Rng
    {
        public:
            explicit Rng(std::uint64_t seed) :
                _engine(seed)
            {
            }

            auto next() -> std::uint64_t { return _engine(); }

            /// Uniform in [0, bound) by rejection; bound must be positive.
            auto below(std::uint64_t bound) -> std::uint64_t
            {
                auto limit = UINT64_MAX - UINT64_MAX % bound;
                std::uint64_t x;
                do
                    x = _engine();
                while (x >= limit);
                return x % bound;
            }

            auto coin() -> bool { return _engine() >> 63; }

            /// True with probability num/den.
            auto chance(std::uint64_t num, std::uint64_t den) -> bool { return below(den) < num; }

        private:
            std::mt19937_64 _engine;
    };
}
