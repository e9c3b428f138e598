#include "cphi6/etaq.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace cphi6 {

Rational q_order(const EtaQuotient &eq) {
    long num = 0;
    for (const EtaFactor &f : eq) {
        if (f.n < 1) throw series_error("eta index must be positive");
        num += f.n * f.e;
    }
    long den = 24;
    const long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
    return Rational{num, den};
}

namespace {

long parse_long(const std::string &s, const char *what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception &) {
        throw series_error(std::string("parse error: bad ") + what + " '" + s + "'");
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size())
        throw series_error(std::string("parse error: trailing characters in ") + what + " '" + s + "'");
    return v;
}

} // namespace

/* comma-separated n:e pairs, e.g. "12:4,2:2,6:-2,4:-4"; whitespace-tolerant */
EtaQuotient parse_eta_quotient(const std::string &text) {
    EtaQuotient eq;
    std::stringstream ss(text);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ',')) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw series_error("parse error: expected n:e pair, got '" + item + "'");
        const long n = parse_long(item.substr(0, colon), "eta index");
        const long e = parse_long(item.substr(colon + 1), "exponent");
        if (n < 1) throw series_error("parse error: eta index must be positive");
        eq.push_back({n, e});
        any = true;
    }
    if (!any) throw series_error("parse error: empty eta quotient");
    return eq;
}

std::string format_eta_quotient(const EtaQuotient &eq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < eq.size(); ++i) {
        if (i) os << ",";
        os << eq[i].n << ":" << eq[i].e;
    }
    return os.str();
}

const EtaQuotient &named_eta(const std::string &name) {
    static const std::map<std::string, EtaQuotient> table = {
        {"t", {{12, 4}, {2, 2}, {6, -2}, {4, -4}}},
        {"y", {{4, 3}, {3, 1}, {12, -1}, {1, -3}}},
        {"p0", {{12, 4}, {3, 12}, {2, 8}, {6, -8}, {4, -12}, {1, -4}}},
        {"p1", {{12, 2}, {3, 6}, {2, 4}, {6, -4}, {4, -6}, {1, -2}}},
        {"A", {{9, 9}, {4, 2}, {2, 5}, {36, -2}, {18, -5}, {1, -9}}},
        {"B", {{9, 1}, {2, 2}, {18, -2}, {1, -1}}},
        {"L0_first", {{12, 5}, {3, 1}, {2, 8}, {24, -2}, {8, -2}, {6, -4}, {4, -3}, {1, -3}}},
        {"L0_second", {{24, 2}, {8, 2}, {3, 1}, {2, 10}, {12, -1}, {6, -2}, {4, -9}, {1, -3}}},
        {"weight_odd", {{1, 1}, {3, 9}, {2, -2}, {6, -5}, {12, -2}}},
        {"weight_even", {{1, 9}, {3, 1}, {2, -5}, {4, -2}, {6, -2}}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw series_error("unknown generator name: " + name);
    return it->second;
}

} // namespace cphi6
