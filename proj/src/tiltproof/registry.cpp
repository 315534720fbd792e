#include "bbwtilt/tiltproof/registry.hpp"

#include "bbwtilt/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace bbwtilt::tiltproof {

using tensorcalc::parse_expr;

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string twist_suffix(std::int64_t t) { return t == 0 ? "" : "(" + std::to_string(t) + ")"; }

// "O(-2)", "S(1)", "Sv"; falls back to the canonical expression text.
std::string short_name(const BundleExpr& e) {
    if (e.has_sym_k() || !e.twist().is_constant()) return e.to_string();
    if (e.atoms().empty()) return "O" + twist_suffix(e.twist().c);
    BundleExpr bare = e * BundleExpr::O(-e.twist().c);
    if (e.atoms().size() == 1) return bare.to_string() + twist_suffix(e.twist().c);
    return e.to_string();
}

struct Section {
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<int> lines;
};

class Reader {
public:
    Reader(const Section& s, std::string origin) : s_(s), origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& msg, int line = 0) const {
        throw ParseError(origin_ + ":" + std::to_string(line ? line : s_.line) + ": [" + s_.name + "] " + msg);
    }

    std::vector<std::string> all(const std::string& key) const {
        std::vector<std::string> out;
        for (const auto& [k, v] : s_.entries)
            if (k == key) out.push_back(v);
        return out;
    }
    std::optional<std::string> opt(const std::string& key) const {
        const auto v = all(key);
        if (v.size() > 1) fail("duplicate key '" + key + "'");
        if (v.empty()) return std::nullopt;
        return v[0];
    }
    std::string req(const std::string& key) const {
        auto v = opt(key);
        if (!v) fail("missing key '" + key + "'");
        return *v;
    }
    std::int64_t integer(const std::string& key, std::int64_t dflt) const {
        const auto v = opt(key);
        return v ? to_int(*v) : dflt;
    }
    std::int64_t to_int(const std::string& v) const {
        std::int64_t x = 0;
        const char* end = v.data() + v.size();
        auto [p, ec] = std::from_chars(v.data(), end, x);
        if (ec != std::errc() || p != end) fail("expected an integer, got '" + v + "'");
        return x;
    }
    bool flag(const std::string& key) const {
        const auto v = opt(key);
        if (!v) return false;
        if (*v == "true") return true;
        if (*v == "false") return false;
        fail("expected true or false for '" + key + "'");
    }
    BundleExpr expr(const std::string& v) const {
        try {
            return parse_expr(v);
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }
    Space space(const std::string& v) const {
        try {
            return sheafcoh::parse_space(v);
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }
    void only(std::initializer_list<const char*> keys) const {
        const std::set<std::string> ok(keys.begin(), keys.end());
        for (std::size_t i = 0; i < s_.entries.size(); ++i)
            if (!ok.count(s_.entries[i].first)) fail("unknown key '" + s_.entries[i].first + "'", s_.lines[i]);
    }

private:
    const Section& s_;
    std::string origin_;
};

// "k=1 j=-2 i=1 dim=1 mult=2 weight=1/2,1/2,1/2,1/2"
sheafcoh::ExpectedException parse_exception(const Reader& r, const std::string& v) {
    sheafcoh::ExpectedException e;
    std::istringstream is(v);
    std::string tok;
    bool have_i = false;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) r.fail("bad exception field '" + tok + "'");
        const auto key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "k") e.k = r.to_int(val);
        else if (key == "j") e.j = r.to_int(val);
        else if (key == "i") {
            e.i = static_cast<int>(r.to_int(val));
            have_i = true;
        } else if (key == "dim") e.dim = static_cast<std::uint64_t>(r.to_int(val));
        else if (key == "mult") e.mult = r.to_int(val);
        else if (key == "weight") {
            try {
                e.weight = rootsys::Weight::parse(val);
            } catch (const ParseError& ex) {
                r.fail(ex.what());
            }
        } else r.fail("bad exception field '" + tok + "'");
    }
    if (!have_i) r.fail("exception needs i=");
    return e;
}

TriangleTerm parse_term(const Reader& r, const std::string& v) {
    // "xplus: S(3)", "zero_section: O(-1) [-3]", "triangle: name"
    TriangleTerm t;
    const auto colon = v.find(':');
    if (colon == std::string::npos) r.fail("triangle term needs 'place: value', got '" + v + "'");
    const std::string place = trim(v.substr(0, colon));
    std::string rest = trim(v.substr(colon + 1));
    static const std::regex shift_re(R"(^(.*)\[\s*(-?\d+)\s*\]$)");
    std::smatch m;
    if (std::regex_match(rest, m, shift_re)) {
        t.shift = static_cast<int>(r.to_int(m[2].str()));
        rest = trim(m[1].str());
    }
    if (place == "triangle") {
        t.kind = TriangleTerm::Kind::Triangle;
        t.triangle = rest;
    } else if (place == "zero_section") {
        t.kind = TriangleTerm::Kind::ZeroSection;
        t.side = Space::Q6;
        t.bundle = r.expr(rest);
    } else {
        t.kind = TriangleTerm::Kind::Bundle;
        t.side = r.space(place);
        t.bundle = r.expr(rest);
    }
    return t;
}

std::pair<std::string, std::string> parse_pair(const Reader& r, const std::string& v) {
    const auto parts = split(v, ',');
    if (parts.size() != 2) r.fail("expected 'A, B', got '" + v + "'");
    return {parts[0], parts[1]};
}

Rule parse_rule(const Reader& r, const std::string& v) {
    if (v == "R4") return Rule::Triangle;
    if (v == "R5") return Rule::FlopTransfer;
    r.fail("only R4 and R5 are scripted; got '" + v + "'");
}

ClaimKind parse_kind(const Reader& r, const std::string& v) {
    if (v == "vanishing") return ClaimKind::Vanishing;
    if (v == "xcohomology") return ClaimKind::XCohomology;
    if (v == "ext") return ClaimKind::Ext;
    if (v == "collection") return ClaimKind::Collection;
    if (v == "theorem") return ClaimKind::Theorem;
    if (v == "endcompare") return ClaimKind::EndCompare;
    r.fail("unknown claim kind '" + v + "'");
}

std::vector<Section> sections(const std::string& text, const std::string& origin) {
    std::vector<Section> out;
    std::istringstream is(text);
    std::string raw;
    int n = 0;
    while (std::getline(is, raw)) {
        ++n;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            out.push_back({line.substr(1, line.size() - 2), n, {}, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(origin + ":" + std::to_string(n) + ": expected 'key = value'");
        if (out.empty()) throw ParseError(origin + ":" + std::to_string(n) + ": entry outside a section");
        out.back().entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        out.back().lines.push_back(n);
    }
    return out;
}

} // namespace

std::string Summand::key() const {
    if (bundle) return bundle->to_string();
    return object + "#" + std::to_string(twist);
}

std::string TriangleTerm::to_string() const {
    std::string s;
    switch (kind) {
    case Kind::Bundle: s = sheafcoh::to_string(side) + ": " + short_name(bundle); break;
    case Kind::ZeroSection: s = "zero_section: " + short_name(bundle); break;
    case Kind::Triangle: s = "triangle: " + triangle; break;
    }
    if (shift != 0) s += " [" + std::to_string(shift) + "]";
    return s;
}

std::string to_string(Rule r) {
    switch (r) {
    case Rule::Leaf: return "R1 LEAF";
    case Rule::SesLes: return "R2 SES-LES";
    case Rule::Semiuniv: return "R3 SEMIUNIV";
    case Rule::Triangle: return "R4 TRIANGLE";
    case Rule::FlopTransfer: return "R5 FLOP-TRANSFER";
    }
    return "?";
}

std::string to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::Vanishing: return "vanishing";
    case ClaimKind::XCohomology: return "xcohomology";
    case ClaimKind::Ext: return "ext";
    case ClaimKind::Collection: return "collection";
    case ClaimKind::Theorem: return "theorem";
    case ClaimKind::EndCompare: return "endcompare";
    }
    return "?";
}

std::optional<std::int64_t> line_twist(const BundleExpr& e) {
    if (e.has_sym_k() || !e.atoms().empty() || !e.twist().is_constant()) return std::nullopt;
    return e.twist().c;
}

Registry Registry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open registry '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

Registry Registry::parse(const std::string& text, const std::string& origin) {
    Registry reg;
    const auto secs = sections(text, origin);

    // Objects first: summand names in later sections refer to them.
    for (const auto& s : secs) {
        if (s.name != "object") continue;
        Reader r(s, origin);
        r.only({"name", "dual", "sub", "quot", "witness_twist", "cite"});
        ExtObject o;
        o.name = r.req("name");
        o.dual = r.req("dual");
        o.sub = r.expr(r.req("sub"));
        o.quot = r.expr(r.req("quot"));
        if (!o.sub.is_concrete() || !o.quot.is_concrete()) r.fail("filtration pieces must be concrete");
        o.witness_twist = r.integer("witness_twist", 0);
        o.cite = r.opt("cite").value_or("");
        if (reg.find_object(o.name)) r.fail("duplicate object '" + o.name + "'");
        reg.objects_.push_back(std::move(o));
    }
    for (const auto& o : reg.objects_)
        if (!reg.find_object(o.dual))
            throw ParseError(origin + ": object '" + o.name + "' names unknown dual '" + o.dual + "'");

    for (const auto& s : secs) {
        Reader r(s, origin);
        auto summand = [&](const std::string& v) {
            try {
                return reg.summand(v);
            } catch (const ParseError& e) {
                r.fail(e.what());
            }
        };
        if (s.name == "object") continue;
        if (s.name == "cite") {
            r.only({"key", "text"});
            reg.cites_.push_back({r.req("key"), r.req("text")});
        } else if (s.name == "triangle") {
            r.only({"name", "side", "target", "left", "right", "axiom", "cite"});
            Triangle t;
            t.name = r.req("name");
            t.side = r.space(r.opt("side").value_or("xplus"));
            if (auto v = r.opt("target")) t.target = summand(*v);
            t.left = parse_term(r, r.req("left"));
            t.right = parse_term(r, r.req("right"));
            t.axioms = r.all("axiom");
            t.cite = r.opt("cite").value_or("");
            if (reg.find_triangle(t.name)) r.fail("duplicate triangle '" + t.name + "'");
            reg.triangles_.push_back(std::move(t));
        } else if (s.name == "step") {
            r.only({"claim", "pair", "rule", "triangle", "degrees", "from", "cite"});
            ScriptStep st;
            st.claim = r.req("claim");
            const auto [a, b] = parse_pair(r, r.req("pair"));
            st.a = summand(a);
            st.b = summand(b);
            st.rule = parse_rule(r, r.req("rule"));
            if (st.rule == Rule::Triangle) st.triangle = r.req("triangle");
            if (st.rule == Rule::FlopTransfer) {
                const auto d = r.req("degrees");
                const auto dots = d.find("..");
                if (dots == std::string::npos) st.lo = st.hi = static_cast<int>(r.to_int(d));
                else {
                    st.lo = static_cast<int>(r.to_int(trim(d.substr(0, dots))));
                    st.hi = static_cast<int>(r.to_int(trim(d.substr(dots + 2))));
                }
                if (st.lo < 1 || st.hi < st.lo) r.fail("bad degree range '" + d + "'");
                if (st.hi > 2) r.fail("R5 transfers Ext^i only for i <= 2; got '" + d + "'");
                st.from = r.space(r.req("from"));
            }
            st.cite = r.opt("cite").value_or("");
            reg.steps_.push_back(std::move(st));
        } else if (s.name == "claim") {
            r.only({"id", "kind", "title", "cite", "family", "bundle", "kmin", "jmin", "cutoff", "exception",
                    "exact_exceptions", "require_dominant", "q6_check", "higher_total", "sides", "a", "b",
                    "members", "side", "axiom", "plus", "minus", "degree"});
            ClaimSpec c;
            c.id = r.req("id");
            c.kind = parse_kind(r, r.req("kind"));
            c.title = r.opt("title").value_or("");
            c.cite = r.opt("cite").value_or("");
            if (reg.find_claim(c.id)) r.fail("duplicate claim '" + c.id + "'");
            switch (c.kind) {
            case ClaimKind::Vanishing:
            case ClaimKind::XCohomology: {
                auto& v = c.vanishing;
                const auto jmin = r.opt("jmin");
                v.domain = rootsys::ParamDomain{r.integer("kmin", 0), std::nullopt, jmin.has_value(),
                                       jmin ? r.to_int(*jmin) : 0};
                if (c.kind == ClaimKind::Vanishing) {
                    v.family = r.expr(r.req("family"));
                    if (!v.family.has_sym_k()) r.fail("a vanishing family needs Sym^k(S)");
                } else {
                    c.bundle = r.expr(r.req("bundle"));
                    v.family = BundleExpr::sym_k() * BundleExpr::O(rootsys::AffineForm{2, 0, 0}) * c.bundle;
                }
                if (v.family.uses_j() != v.domain.has_j) r.fail("jmin must be given exactly when the family uses j");
                v.cutoff = static_cast<int>(r.integer("cutoff", 0));
                for (const auto& e : r.all("exception")) v.expected.push_back(parse_exception(r, e));
                v.exact_exceptions = r.flag("exact_exceptions");
                v.require_dominant = r.flag("require_dominant");
                if (auto q = r.opt("q6_check")) {
                    // "S * S : 1 = 1"
                    const auto colon = q->rfind(':');
                    const auto eq = q->rfind('=');
                    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
                        r.fail("q6_check needs 'EXPR : degree = dim'");
                    c.q6_expr = r.expr(trim(q->substr(0, colon)));
                    c.q6_degree = static_cast<int>(r.to_int(trim(q->substr(colon + 1, eq - colon - 1))));
                    c.q6_dim = static_cast<std::uint64_t>(r.to_int(trim(q->substr(eq + 1))));
                }
                if (auto h = r.opt("higher_total")) c.higher_total = static_cast<std::uint64_t>(r.to_int(*h));
                if (auto sd = r.opt("sides"))
                    for (const auto& x : split(*sd, ',')) c.sides.push_back(r.space(x));
                if (c.sides.empty()) c.sides.push_back(c.kind == ClaimKind::Vanishing ? Space::Q6 : Space::XPlus);
                break;
            }
            case ClaimKind::Ext: {
                c.ext_a = r.expr(r.req("a"));
                c.ext_b = r.expr(r.req("b"));
                if (!c.ext_a.is_concrete() || !c.ext_b.is_concrete()) r.fail("ext arguments must be concrete");
                c.vanishing.cutoff = static_cast<int>(r.integer("cutoff", 0));
                if (auto sd = r.opt("sides"))
                    for (const auto& x : split(*sd, ',')) c.sides.push_back(r.space(x));
                if (c.sides.empty()) c.sides.push_back(Space::XPlus);
                break;
            }
            case ClaimKind::Collection:
            case ClaimKind::Theorem: {
                c.members = split(r.req("members"), ',');
                if (c.members.size() < 2) r.fail("need at least two members");
                for (const auto& m : c.members) {
                    if (c.kind == ClaimKind::Collection) (void)r.expr(m);
                    else (void)summand(m);
                }
                c.side = r.space(r.opt("side").value_or(c.kind == ClaimKind::Collection ? "q6" : "xplus"));
                c.axioms = r.all("axiom");
                break;
            }
            case ClaimKind::EndCompare:
                c.plus_theorem = r.req("plus");
                c.minus_theorem = r.req("minus");
                c.degree = r.integer("degree", 6);
                if (c.degree < 1) r.fail("degree must be at least 1");
                break;
            }
            reg.claims_.push_back(std::move(c));
        } else {
            Reader(s, origin).fail("unknown section");
        }
    }

    for (const auto& t : reg.triangles_)
        for (const auto* term : {&t.left, &t.right})
            if (term->kind == TriangleTerm::Kind::Triangle && !reg.find_triangle(term->triangle))
                throw ParseError(origin + ": triangle '" + t.name + "' refers to unknown triangle '" +
                                 term->triangle + "'");
    for (const auto& st : reg.steps_) {
        if (!reg.find_claim(st.claim))
            throw ParseError(origin + ": step refers to unknown claim '" + st.claim + "'");
        if (st.rule == Rule::Triangle && !reg.find_triangle(st.triangle))
            throw ParseError(origin + ": step refers to unknown triangle '" + st.triangle + "'");
    }
    for (const auto& c : reg.claims_)
        if (c.kind == ClaimKind::EndCompare)
            for (const auto* id : {&c.plus_theorem, &c.minus_theorem}) {
                const auto* t = reg.find_claim(*id);
                if (!t || t->kind != ClaimKind::Theorem)
                    throw ParseError(origin + ": claim '" + c.id + "' needs theorem '" + *id + "'");
            }
    return reg;
}

const ClaimSpec* Registry::find_claim(const std::string& id) const {
    for (const auto& c : claims_)
        if (c.id == id) return &c;
    return nullptr;
}

const ExtObject* Registry::find_object(const std::string& name) const {
    for (const auto& o : objects_)
        if (o.name == name) return &o;
    return nullptr;
}

const Triangle* Registry::find_triangle(const std::string& name) const {
    for (const auto& t : triangles_)
        if (t.name == name) return &t;
    return nullptr;
}

std::string Registry::cite_text(const std::string& key) const {
    for (const auto& c : cites_)
        if (c.key == key) return c.text;
    return key;
}

Summand Registry::summand(const std::string& raw) const {
    const std::string name = trim(raw);
    static const std::regex obj_re(R"(^([A-Za-z][A-Za-z0-9_]*)(?:\(\s*(-?\d+)\s*\))?$)");
    std::smatch m;
    if (std::regex_match(name, m, obj_re) && find_object(m[1].str())) {
        Summand s;
        s.object = m[1].str();
        s.twist = m[2].matched ? std::stoll(m[2].str()) : 0;
        s.name = s.object + twist_suffix(s.twist);
        return s;
    }
    Summand s;
    s.bundle = parse_expr(name);
    if (!s.bundle->is_concrete()) throw ParseError("summand '" + name + "' must be concrete");
    s.name = short_name(*s.bundle);
    return s;
}

std::pair<Summand, Summand> Registry::filtration(const Summand& s) const {
    const auto* o = find_object(s.object);
    if (!o) throw std::invalid_argument("summand " + s.name + " is not an extension object");
    Summand a, b;
    a.bundle = o->sub * BundleExpr::O(s.twist);
    a.name = short_name(*a.bundle);
    b.bundle = o->quot * BundleExpr::O(s.twist);
    b.name = short_name(*b.bundle);
    return {a, b};
}

Summand Registry::dual(const Summand& s) const {
    if (s.bundle) {
        Summand d;
        d.bundle = s.bundle->dual();
        d.name = short_name(*d.bundle);
        return d;
    }
    Summand d;
    d.object = find_object(s.object)->dual;
    d.twist = -s.twist;
    d.name = d.object + twist_suffix(d.twist);
    return d;
}

Summand Registry::twisted(const Summand& s, std::int64_t t) const {
    Summand r = s;
    if (s.bundle) {
        r.bundle = *s.bundle * BundleExpr::O(t);
        r.name = short_name(*r.bundle);
    } else {
        r.twist += t;
        r.name = r.object + twist_suffix(r.twist);
    }
    return r;
}

std::optional<Summand> Registry::hom_summand(const Summand& a, const Summand& b) const {
    if (a.bundle) {
        if (const auto t = line_twist(*a.bundle)) return twisted(b, -*t);
    }
    if (b.bundle) {
        if (const auto t = line_twist(*b.bundle)) return twisted(dual(a), *t);
    }
    return std::nullopt;
}

Summand Registry::sigma(const Summand& s) const {
    if (s.bundle) {
        const auto t = line_twist(*s.bundle);
        if (!t) throw std::invalid_argument("no flop counterpart for " + s.name);
        return twisted(s, -2 * *t);
    }
    return twisted(s, -2 * s.twist);
}

} // namespace bbwtilt::tiltproof
