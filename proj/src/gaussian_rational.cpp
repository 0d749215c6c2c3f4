#include "cralg/gaussian_rational.hpp"

#include <ostream>
#include <sstream>

namespace cralg {

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (im_ == 0) {
        os << re_;
    } else if (re_ == 0) {
        os << im_ << "*i";
    } else {
        os << re_;
        if (im_ > 0) os << "+";
        os << im_ << "*i";
    }
    return os.str();
}

namespace {

// Reads a signed rational "[-]a[/b]" starting at pos; advances pos.
mpq_class read_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos == start) throw std::invalid_argument("GaussianRational::parse: expected number in '" + s + "'");
    mpq_class q(s.substr(start, pos - start));
    q.canonicalize();
    return q;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    size_t pos = 0;
    mpq_class first = read_rational(text, pos);
    if (pos == text.size()) return GaussianRational(first);
    if (text.compare(pos, 2, "*i") == 0 && pos + 2 == text.size())
        return GaussianRational(mpq_class(0), first);
    mpq_class second = read_rational(text, pos);
    if (text.compare(pos, 2, "*i") != 0 || pos + 2 != text.size())
        throw std::invalid_argument("GaussianRational::parse: malformed value '" + text + "'");
    return GaussianRational(first, second);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.str(); }

}  // namespace cralg
