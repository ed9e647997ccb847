#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace multituran
{
    /// Fixed-length dynamic bitset over 64-bit words. Used for adjacency rows
    /// and vertex sets; intersections and popcounts are word-parallel.
    class Bitset
    {
        public:
            using Word = std::uint64_t;
            static constexpr std::size_t word_bits = 64;
            static constexpr std::size_t npos = static_cast<std::size_t>(-1);

            Bitset() = default;

            explicit Bitset(std::size_t size) :
                _size(size),
                _words((size + word_bits - 1) / word_bits, 0)
            {
            }

            auto size() const -> std::size_t { return _size; }

            auto set(std::size_t i) -> void { _words[i / word_bits] |= Word{1} << (i % word_bits); }
            auto reset(std::size_t i) -> void { _words[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
            auto flip(std::size_t i) -> void { _words[i / word_bits] ^= Word{1} << (i % word_bits); }

            auto test(std::size_t i) const -> bool
            {
                return (_words[i / word_bits] >> (i % word_bits)) & 1;
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto any() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return true;
                return false;
            }

            auto none() const -> bool { return ! any(); }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~Word{0};
                trim();
            }

            auto reset_all() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            /// Index of the first set bit at or after from, or npos.
            auto find_next(std::size_t from) const -> std::size_t
            {
                if (from >= _size)
                    return npos;
                std::size_t wi = from / word_bits;
                Word w = _words[wi] & (~Word{0} << (from % word_bits));
                while (true) {
                    if (w)
                        return wi * word_bits + std::countr_zero(w);
                    if (++wi == _words.size())
                        return npos;
                    w = _words[wi];
                }
            }

            auto find_first() const -> std::size_t { return find_next(0); }

            auto operator&=(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|=(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            /// this &= ~other
            auto subtract(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            auto intersection_count(const Bitset & other) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i]);
                return result;
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto to_indices() const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> result;
                for (auto i = find_first() ; i != npos ; i = find_next(i + 1))
                    result.push_back(i);
                return result;
            }

            friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
            friend auto operator|(Bitset a, const Bitset & b) -> Bitset { return a |= b; }
            friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

        private:
            auto trim() -> void
            {
                if (_size % word_bits && ! _words.empty())
                    _words.back() &= (Word{1} << (_size % word_bits)) - 1;
            }

            std::size_t _size = 0;
            std::vector<Word> _words;
    };
}
