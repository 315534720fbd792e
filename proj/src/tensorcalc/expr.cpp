#include "bbwtilt/tensorcalc/expr.hpp"

#include "bbwtilt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace bbwtilt::tensorcalc {

namespace {

const GLWeight kS{1, 0, 0, 0};
const GLWeight kSv{0, 0, 0, -1};

void normalise(std::vector<Atom>& atoms) {
    std::erase_if(atoms, [](const Atom& a) { return a.gl == GLWeight{} && a.twist == 0; });
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a > b; });
}

std::string atom_name(const Atom& a) {
    const auto& p = a.gl.parts();
    if (p[1] == 0 && p[2] == 0 && p[3] == 0 && a.twist == -p[0]) return p[0] == 1 ? "S" : "Sym^" + std::to_string(p[0]) + "(S)";
    if (p[0] == 0 && p[1] == 0 && p[2] == 0 && a.twist == -p[3])
        return p[3] == -1 ? "Sv" : "Sym^" + std::to_string(-p[3]) + "(Sv)";
    return "F[" + a.gl.to_string() + ";" + std::to_string(a.twist) + "]";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BundleExpr parse() {
        BundleExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bundle expression '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) +
                         ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::int64_t integer() {
        skip_ws();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc{}) fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    AffineForm affine() {
        AffineForm f;
        bool first = true;
        while (true) {
            skip_ws();
            std::int64_t sign = 1;
            if (accept("+")) {
                if (first) fail("leading '+'");
            } else if (accept("-")) {
                sign = -1;
            } else if (!first) {
                break;
            }
            std::int64_t coef = 1;
            bool have_coef = false;
            if (peek_digit()) coef = integer(), have_coef = true;
            if (accept("k")) f.k += sign * coef;
            else if (accept("j")) f.j += sign * coef;
            else if (have_coef) f.c += sign * coef;
            else fail("expected an integer, k or j");
            first = false;
        }
        return f;
    }

    BundleExpr expr() {
        BundleExpr e = term();
        while (accept("*")) e *= term();
        return e;
    }

    BundleExpr term() {
        skip_ws();
        if (accept("dual(")) {
            BundleExpr inner = expr();
            expect(")");
            if (!inner.is_concrete()) fail("dual() of a symbolic expression is not supported");
            return inner.dual();
        }
        if (accept("Sym^")) {
            bool symbolic = false;
            std::int64_t n = 0;
            if (accept("k")) symbolic = true;
            else n = integer();
            if (!symbolic && n < 0) fail("negative symmetric power");
            expect("(");
            BundleExpr inner = term();
            expect(")");
            return sym_of(symbolic, n, inner);
        }
        if (accept("Sv")) return BundleExpr::Sv() * optional_twist();
        if (accept("S")) return BundleExpr::S() * optional_twist();
        if (accept("O")) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '(') return optional_twist();
            return BundleExpr::O(0);
        }
        fail("expected O(..), S, Sv, Sym^n(..) or dual(..)");
    }

    BundleExpr optional_twist() {
        if (!accept("(")) return BundleExpr::O(0);
        const AffineForm t = affine();
        expect(")");
        return BundleExpr::O(t);
    }

    BundleExpr sym_of(bool symbolic, std::int64_t n, const BundleExpr& inner) {
        const auto& atoms = inner.atoms();
        const AffineForm t = inner.twist();
        if (atoms.empty()) {
            if (symbolic) fail("Sym^k of a line bundle is not supported");
            return BundleExpr::O(t * n);
        }
        if (atoms.size() != 1 || !t.is_constant()) fail("Sym^ applies to a single S, Sv or line bundle");
        const Atom& a = atoms.front();
        if (a.gl == kS && a.twist == -1) {
            if (symbolic) return BundleExpr::sym_k() * BundleExpr::O(AffineForm{t.c, 0, 0});
            return BundleExpr::sym(n) * BundleExpr::O(t.c * n);
        }
        if (a.gl == kSv && a.twist == 1 && !symbolic)
            return BundleExpr::atom({GLWeight(0, 0, 0, -n), n}) * BundleExpr::O(t.c * n);
        fail("Sym^ applies to a single S, Sv or line bundle");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Weight Atom::weight() const { return phi(gl) + Weight::integral(twist, 0, 0, 0); }

BundleExpr BundleExpr::O(std::int64_t j) { return O(AffineForm{0, 0, j}); }

BundleExpr BundleExpr::O(const AffineForm& t) {
    BundleExpr e;
    e.twist_ = t;
    return e;
}

BundleExpr BundleExpr::S() { return atom({kS, -1}); }
BundleExpr BundleExpr::Sv() { return atom({kSv, 1}); }

BundleExpr BundleExpr::sym(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("negative symmetric power");
    return atom({GLWeight(n, 0, 0, 0), -n});
}

BundleExpr BundleExpr::sym_k() {
    BundleExpr e;
    e.sym_k_ = true;
    return e;
}

BundleExpr BundleExpr::atom(const Atom& a) {
    BundleExpr e;
    e.atoms_.push_back(a);
    normalise(e.atoms_);
    return e;
}

BundleExpr& BundleExpr::operator*=(const BundleExpr& o) {
    if (sym_k_ && o.sym_k_) throw std::invalid_argument("at most one symbolic Sym^k factor is supported");
    sym_k_ = sym_k_ || o.sym_k_;
    atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
    normalise(atoms_);
    twist_ = twist_ + o.twist_;
    return *this;
}

BundleExpr BundleExpr::operator*(const BundleExpr& o) const {
    BundleExpr e = *this;
    e *= o;
    return e;
}

BundleExpr BundleExpr::dual() const {
    if (!is_concrete()) throw std::invalid_argument("dual of a symbolic expression: " + to_string());
    BundleExpr e;
    for (const auto& a : atoms_) e.atoms_.push_back(a.dual());
    normalise(e.atoms_);
    e.twist_ = -twist_;
    return e;
}

AffineForm BundleExpr::total_twist() const {
    AffineForm t = twist_;
    for (const auto& a : atoms_) t.c += a.twist;
    if (sym_k_) t.k -= 1;
    return t;
}

BundleExpr BundleExpr::at(std::int64_t k, std::int64_t j) const {
    BundleExpr e;
    e.atoms_ = atoms_;
    if (sym_k_) e.atoms_.push_back({GLWeight(k, 0, 0, 0), -k});
    normalise(e.atoms_);
    e.twist_ = AffineForm{0, 0, twist_.eval(k, j)};
    return e;
}

std::uint64_t BundleExpr::rank() const {
    if (sym_k_) throw std::invalid_argument("rank of a symbolic expression");
    std::uint64_t r = 1;
    for (const auto& a : atoms_) r *= a.rank();
    return r;
}

std::string BundleExpr::to_string() const {
    std::string s;
    auto add = [&s](const std::string& t) {
        if (!s.empty()) s += " * ";
        s += t;
    };
    if (sym_k_) add("Sym^k(S)");
    for (const auto& a : atoms_) add(atom_name(a));
    if (twist_ != AffineForm{} || s.empty()) add("O(" + twist_.to_string() + ")");
    return s;
}

BundleExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

} // namespace bbwtilt::tensorcalc
