#include "sym/coefficient.hpp"

#include <stdexcept>

namespace sym {

std::string to_string(const Coefficient& c)
{
    return c.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

Coefficient parse_coefficient(std::string_view text)
{
    const std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty coefficient");
    for (char ch : s)
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw std::invalid_argument("malformed coefficient '" + s + "'");
    Coefficient c;
    if (c.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed coefficient '" + s + "'");
    if (c.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    c.canonicalize();
    return c;
}

} // namespace sym
