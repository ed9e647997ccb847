#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace multituran
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    auto to_string(const Rational & r) -> std::string;

    /// Parses "p", "-p" or "p/q". Throws InvalidArgument on anything else or
    /// on a zero denominator.
    auto parse_rational(std::string_view text) -> Rational;

    auto make_rational(std::int64_t numerator, std::int64_t denominator = 1) -> Rational;

    auto to_double(const Rational & r) -> double;

    /// An exact edge density, always in [0, 1].
    class Density
    {
        public:
            Density() = default;

            /// Throws InvalidArgument when value lies outside [0, 1].
            explicit Density(Rational value);

            static auto ratio(std::uint64_t edges, std::uint64_t pairs) -> Density;

            auto value() const -> const Rational & { return _value; }
            auto numerator() const -> BigInt;
            auto denominator() const -> BigInt;
            auto to_string() const -> std::string;

            friend auto operator==(const Density & a, const Density & b) -> bool { return a._value == b._value; }
            friend auto operator<=>(const Density & a, const Density & b) -> std::strong_ordering
            {
                if (a._value < b._value)
                    return std::strong_ordering::less;
                if (a._value > b._value)
                    return std::strong_ordering::greater;
                return std::strong_ordering::equal;
            }

        private:
            Rational _value{0};
    };
}
