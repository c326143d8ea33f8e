#include "toricc/rational.hpp"

#include <cctype>

#include "toricc/errors.hpp"

namespace toricc {

std::string int_to_string(const Int& v) { return v.str(); }

std::string rat_to_string(const Rat& v) {
    if (rat_den(v) == 1) return rat_num(v).str();
    return rat_num(v).str() + "/" + rat_den(v).str();
}

static bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(const std::string& s) {
    if (!is_plain_integer(s)) throw input_error("not an integer: '" + s + "'");
    return Int(s);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in '" + s + "'");
    return Rat(num, den);
}

} // namespace toricc
