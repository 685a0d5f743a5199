#include "toralab/degree.hpp"

#include <cstdlib>
#include <sstream>

namespace toralab {

std::string Deg::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

Deg Deg::parse(const std::string& s, int expected_arity) {
    size_t a = s.find('(');
    size_t b = s.rfind(')');
    if (a == std::string::npos || b == std::string::npos || b <= a)
        throw std::invalid_argument("Deg::parse: expected \"(i,...)\", got \"" + s + "\"");
    std::string body = s.substr(a + 1, b - a - 1);
    std::vector<long long> xs;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("Deg::parse: empty coordinate");
        xs.push_back(std::stoll(tok));
    }
    if (expected_arity >= 0 && static_cast<int>(xs.size()) != expected_arity)
        throw ArityError("Deg::parse: arity mismatch");
    return Deg(xs);
}

std::string RatVec::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n; ++i) {
        if (i) os << ',';
        os << c[i].str();
    }
    os << ')';
    return os.str();
}

}  // namespace toralab
