#include "bbwtilt/rootsys/affine.hpp"

#include "bbwtilt/errors.hpp"

#include <stdexcept>

namespace bbwtilt::rootsys {

namespace {

bool odd(std::int64_t v) { return (v & 1) != 0; }

void append_term(std::string& s, std::int64_t coef, const char* var) {
    if (coef == 0) return;
    if (!s.empty()) s += coef < 0 ? "-" : "+";
    else if (coef < 0) s += "-";
    const std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1 || *var == '\0') s += std::to_string(mag);
    s += var;
}

std::string coordinate_string(const AffineForm& f) {
    if (!odd(f.k) && !odd(f.j) && !odd(f.c)) return AffineForm{f.k / 2, f.j / 2, f.c / 2}.to_string();
    const std::string num = f.to_string();
    if (f.is_constant() || (f.c == 0 && (f.k == 0 || f.j == 0) && (f.k == 1 || f.j == 1)))
        return num + "/2";
    return "(" + num + ")/2";
}

} // namespace

std::string AffineForm::to_string() const {
    std::string s;
    append_term(s, k, "k");
    append_term(s, j, "j");
    append_term(s, c, "");
    return s.empty() ? "0" : s;
}

bool ParamDomain::contains(std::int64_t kv, std::int64_t jv) const noexcept {
    if (kv < kmin) return false;
    if (kmax && kv > *kmax) return false;
    if (has_j) return jv >= jmin;
    return jv == 0;
}

AffineWeight::AffineWeight(const std::array<AffineForm, 4>& doubled, ParamDomain domain)
    : d_(doubled), domain_(domain) {
    for (std::size_t i = 1; i < 4; ++i) {
        if (odd(d_[i].k) != odd(d_[0].k) || odd(d_[i].j) != odd(d_[0].j) || odd(d_[i].c) != odd(d_[0].c))
            throw std::invalid_argument("affine weight violates the lattice parity rule: " + to_string());
    }
    if (!domain_.has_j) {
        for (auto& f : d_) f.j = 0;
    }
}

AffineWeight AffineWeight::constant(const Weight& w, ParamDomain domain) {
    std::array<AffineForm, 4> d{};
    for (std::size_t i = 0; i < 4; ++i) d[i].c = w.doubled(i);
    return AffineWeight(d, domain);
}

Weight AffineWeight::at(std::int64_t kv, std::int64_t jv) const {
    return Weight::from_doubled({d_[0].eval(kv, jv), d_[1].eval(kv, jv), d_[2].eval(kv, jv), d_[3].eval(kv, jv)});
}

AffineForm AffineWeight::pairing(const IntVec4& root) const {
    AffineForm twice{};
    for (std::size_t i = 0; i < 4; ++i) twice = twice + d_[i] * root[i];
    if (odd(twice.k) || odd(twice.j) || odd(twice.c))
        throw InternalError("symbolic pairing with a non-root vector is not integral");
    return {twice.k / 2, twice.j / 2, twice.c / 2};
}

AffineWeight AffineWeight::operator+(const Weight& w) const {
    auto d = d_;
    for (std::size_t i = 0; i < 4; ++i) d[i].c += w.doubled(i);
    return AffineWeight(d, domain_);
}

AffineWeight AffineWeight::operator-(const Weight& w) const {
    auto d = d_;
    for (std::size_t i = 0; i < 4; ++i) d[i].c -= w.doubled(i);
    return AffineWeight(d, domain_);
}

std::array<std::string, 4> AffineWeight::coordinate_strings() const {
    return {coordinate_string(d_[0]), coordinate_string(d_[1]), coordinate_string(d_[2]), coordinate_string(d_[3])};
}

std::string AffineWeight::to_string() const {
    const auto c = coordinate_strings();
    return "(" + c[0] + "," + c[1] + "," + c[2] + "," + c[3] + ")";
}

AffineWeight dotted_reflect(int i, const AffineWeight& w) {
    const auto& d = w.doubled();
    const AffineForm two{0, 0, 2};
    std::array<AffineForm, 4> out{};
    switch (i) {
    case 1: out = {d[1] - two, d[0] + two, d[2], d[3]}; break;
    case 2: out = {d[0], d[2] - two, d[1] + two, d[3]}; break;
    case 3: out = {d[0], d[1], d[3] - two, d[2] + two}; break;
    case 4: out = {d[0], d[1], -d[3] - two, -d[2] - two}; break;
    default: throw std::out_of_range("simple reflection index must be 1..4, got " + std::to_string(i));
    }
    return AffineWeight(out, w.domain());
}

} // namespace bbwtilt::rootsys
