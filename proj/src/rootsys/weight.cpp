#include "bbwtilt/rootsys/weight.hpp"

#include "bbwtilt/errors.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bbwtilt::rootsys {

namespace {

bool same_parity(const IntVec4& d) {
    const auto p = d[0] & 1;
    return (d[1] & 1) == p && (d[2] & 1) == p && (d[3] & 1) == p;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("malformed weight entry '" + std::string(s) + "' in '" + std::string(whole) + "'");
    return v;
}

// Returns the doubled value of "n" or "n/2".
std::int64_t parse_half(std::string_view tok, std::string_view whole) {
    auto slash = tok.find('/');
    if (slash == std::string_view::npos) return 2 * parse_int(tok, whole);
    auto num = parse_int(tok.substr(0, slash), whole);
    auto den = parse_int(tok.substr(slash + 1), whole);
    if (den == 1) return 2 * num;
    if (den == 2) return num;
    if (den == -2) return -num;
    throw ParseError("weight entries must be integers or halves: '" + std::string(tok) + "'");
}

} // namespace

Weight Weight::from_doubled(const IntVec4& doubled) {
    if (!same_parity(doubled)) {
        std::ostringstream os;
        os << "not a D4 lattice point (mixed integral/half-integral entries): doubled = ["
           << doubled[0] << ',' << doubled[1] << ',' << doubled[2] << ',' << doubled[3] << ']';
        throw std::invalid_argument(os.str());
    }
    return Weight(doubled);
}

Weight Weight::integral(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return Weight({2 * a, 2 * b, 2 * c, 2 * d});
}

Weight Weight::parse(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == '"') {
            continue;
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (tokens.size() != 4)
        throw ParseError("a weight needs exactly 4 entries, got " + std::to_string(tokens.size()) +
                         " in '" + std::string(text) + "'");
    IntVec4 d{};
    for (std::size_t i = 0; i < 4; ++i) d[i] = parse_half(tokens[i], text);
    if (!same_parity(d))
        throw ParseError("not a D4 lattice point (mix of integral and half-integral entries): '" +
                         std::string(text) + "'");
    return Weight(d);
}

Weight Weight::operator+(const Weight& o) const {
    return from_doubled({d_[0] + o.d_[0], d_[1] + o.d_[1], d_[2] + o.d_[2], d_[3] + o.d_[3]});
}

Weight Weight::operator-(const Weight& o) const {
    return from_doubled({d_[0] - o.d_[0], d_[1] - o.d_[1], d_[2] - o.d_[2], d_[3] - o.d_[3]});
}

std::string format_half(std::int64_t doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += ',';
        s += format_half(d_[i]);
    }
    return s + ")";
}

std::array<std::string, 4> Weight::coordinate_strings() const {
    return {format_half(d_[0]), format_half(d_[1]), format_half(d_[2]), format_half(d_[3])};
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

const Weight& rho() {
    static const Weight r = Weight::integral(3, 2, 1, 0);
    return r;
}

const std::array<IntVec4, 12>& positive_roots() {
    static const std::array<IntVec4, 12> roots = [] {
        std::array<IntVec4, 12> out{};
        std::size_t n = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                IntVec4 minus{}, plus{};
                minus[i] = 1, minus[j] = -1;
                plus[i] = 1, plus[j] = 1;
                out[n++] = minus;
                out[n++] = plus;
            }
        return out;
    }();
    return roots;
}

const std::array<IntVec4, 4>& simple_roots() {
    static const std::array<IntVec4, 4> roots{{{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}};
    return roots;
}

const std::array<IntVec4, 6>& levi_positive_roots() {
    static const std::array<IntVec4, 6> roots{{{0, 1, -1, 0},
                                               {0, 1, 1, 0},
                                               {0, 1, 0, -1},
                                               {0, 1, 0, 1},
                                               {0, 0, 1, -1},
                                               {0, 0, 1, 1}}};
    return roots;
}

std::int64_t pairing(const Weight& w, const IntVec4& root) {
    std::int64_t twice = 0;
    for (std::size_t i = 0; i < 4; ++i) twice += w.doubled(i) * root[i];
    if (twice % 2 != 0) throw InternalError("pairing with a non-root vector is not integral");
    return twice / 2;
}

} // namespace bbwtilt::rootsys
