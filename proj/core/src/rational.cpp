#include <multituran/errors.hpp>
#include <multituran/rational.hpp>

#include <cctype>

namespace multituran
{
    auto to_string(const Rational & r) -> std::string
    {
        auto num = boost::multiprecision::numerator(r);
        auto den = boost::multiprecision::denominator(r);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }

    namespace
    {
        auto parse_integer(std::string_view text, std::string_view whole) -> BigInt
        {
            std::size_t start = 0;
            if (! text.empty() && (text[0] == '-' || text[0] == '+'))
                start = 1;
            if (start == text.size())
                throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
            for (std::size_t i = start ; i < text.size() ; ++i)
                if (! std::isdigit(static_cast<unsigned char>(text[i])))
                    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
            return BigInt(std::string(text[0] == '+' ? text.substr(1) : text));
        }
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_integer(text, text));
        auto num = parse_integer(text.substr(0, slash), text);
        auto den_text = text.substr(slash + 1);
        if (! den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
            throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        auto den = parse_integer(den_text, text);
        if (den == 0)
            throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    auto make_rational(std::int64_t numerator, std::int64_t denominator) -> Rational
    {
        if (denominator == 0)
            throw InvalidArgument("zero denominator");
        return Rational(BigInt(numerator), BigInt(denominator));
    }

    auto to_double(const Rational & r) -> double
    {
        return r.convert_to<double>();
    }

    Density::Density(Rational value) :
        _value(std::move(value))
    {
        if (_value < 0 || _value > 1)
            throw InvalidArgument("density " + multituran::to_string(_value) + " outside [0, 1]");
    }

    auto Density::ratio(std::uint64_t edges, std::uint64_t pairs) -> Density
    {
        if (pairs == 0)
            throw InvalidArgument("density over an empty pair set");
        return Density(Rational(BigInt(edges), BigInt(pairs)));
    }

    auto Density::numerator() const -> BigInt
    {
        return boost::multiprecision::numerator(_value);
    }

    auto Density::denominator() const -> BigInt
    {
        return boost::multiprecision::denominator(_value);
    }

    auto Density::to_string() const -> std::string
    {
        return multituran::to_string(_value);
    }
}
