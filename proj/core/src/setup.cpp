#include "taut/setup.hpp"

#include "taut/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

namespace taut {

namespace {

constexpr int kMaxDegree = 4000;

struct Statement {
    std::string text;
    SourcePos pos;
};

struct Section {
    std::string header;
    SourcePos pos;
    std::vector<Statement> stmts;
};

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

SourcePos advance(SourcePos p, const std::string& text, std::size_t from, std::size_t to)
{
    for (std::size_t i = from; i < to && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Splits the text into sections and statements; comments are blanked out so
// positions stay intact.
std::vector<Section> split_sections(std::string text)
{
    bool comment = false;
    for (char& c : text) {
        if (c == '#')
            comment = true;
        if (c == '\n')
            comment = false;
        else if (comment)
            c = ' ';
    }
    static const std::set<std::string> headers{"fiber", "lie_model", "xi", "holonomy", "options"};
    std::vector<Section> out;
    std::set<std::string> seen;
    std::size_t i = 0;
    SourcePos pos;
    auto move_to = [&](std::size_t j) {
        pos = advance(pos, text, i, j);
        i = j;
    };
    auto skip_space = [&] {
        std::size_t j = i;
        while (j < text.size() && is_space(text[j]))
            ++j;
        move_to(j);
    };
    for (;;) {
        skip_space();
        if (i >= text.size())
            break;
        if (!is_identifier_start(text[i]))
            throw ParseError(pos, std::string("expected a section name, found '") + text[i] + "'");
        std::size_t j = i;
        while (j < text.size() && is_identifier_char(text[j]))
            ++j;
        Section s;
        s.header = text.substr(i, j - i);
        s.pos = pos;
        if (!headers.count(s.header))
            throw ParseError(pos, "unknown section '" + s.header + "'");
        if (!seen.insert(s.header).second)
            throw ParseError(pos, "section '" + s.header + "' appears twice");
        move_to(j);
        skip_space();
        if (i >= text.size() || text[i] != '{')
            throw ParseError(pos, "expected '{' after '" + s.header + "'");
        move_to(i + 1);
        bool closed = false;
        while (i < text.size()) {
            std::size_t k = i;
            while (k < text.size() && (is_space(text[k]) || text[k] == ';'))
                ++k;
            move_to(k);
            if (i >= text.size())
                break;
            if (text[i] == '}') {
                move_to(i + 1);
                closed = true;
                break;
            }
            std::size_t e = i;
            while (e < text.size() && text[e] != '\n' && text[e] != ';' && text[e] != '}')
                ++e;
            std::size_t end = e;
            while (end > i && is_space(text[end - 1]))
                --end;
            s.stmts.push_back({text.substr(i, end - i), pos});
            move_to(e);
        }
        if (!closed)
            throw ParseError(pos, "missing '}' for section '" + s.header + "'");
        out.push_back(std::move(s));
    }
    return out;
}

bool is_identifier(const std::string& s)
{
    if (s.empty() || !is_identifier_start(s[0]))
        return false;
    return std::all_of(s.begin(), s.end(), is_identifier_char);
}

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && is_space(s[a]))
        ++a;
    while (b > a && is_space(s[b - 1]))
        --b;
    return s.substr(a, b - a);
}

// Position of the first non-space character of s.substr(from) within the
// statement.
SourcePos pos_at(const Statement& st, std::size_t from)
{
    while (from < st.text.size() && is_space(st.text[from]))
        ++from;
    return advance(st.pos, st.text, 0, from);
}

int parse_int(const std::string& text, SourcePos pos, const std::string& what)
{
    std::string t = trim(text);
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+'))
        ++i;
    if (i == t.size() || t.size() > 9)
        throw ParseError(pos, "expected an integer " + what);
    for (std::size_t j = i; j < t.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(t[j])))
            throw ParseError(pos, "expected an integer " + what);
    return std::stoi(t);
}

// Upper bound for the degree of an expression; rejects absurd powers before
// they are expanded.
long max_degree(const ExprPtr& e, const std::function<int(const std::string&)>& deg)
{
    switch (e->kind) {
    case Expr::Kind::Number:
        return 0;
    case Expr::Kind::Symbol:
        return deg(e->symbol);
    case Expr::Kind::Sum: {
        long m = 0;
        for (const auto& a : e->args)
            m = std::max(m, max_degree(a, deg));
        return m;
    }
    case Expr::Kind::Product: {
        long m = 0;
        for (const auto& a : e->args)
            m = std::min<long>(m + max_degree(a, deg), 1L << 40);
        return m;
    }
    case Expr::Kind::Power:
        return std::min<long>(max_degree(e->args.front(), deg) * e->exponent, 1L << 40);
    case Expr::Kind::Negate:
        return max_degree(e->args.front(), deg);
    }
    return 0;
}

Element evaluate_checked(const std::string& text, SourcePos pos, const AlgebraPtr& alg)
{
    ExprPtr e = parse_expr(text, pos);
    auto deg = [&](const std::string& name) {
        auto i = alg->index_of(name);
        return i ? std::max(alg->degree(*i), 1) : 0;
    };
    if (max_degree(e, deg) > kMaxDegree)
        throw ParseError(pos, "expression degree exceeds " + std::to_string(kMaxDegree));
    return evaluate_in(e, alg);
}

// "a op b" split at the first occurrence of op.
std::optional<std::pair<std::string, std::size_t>> split_at(const std::string& s, const std::string& op)
{
    auto k = s.find(op);
    if (k == std::string::npos)
        return std::nullopt;
    return std::make_pair(s.substr(0, k), k + op.size());
}

std::string derivation_symbol(const std::string& gen)
{
    return "D_" + gen;
}

// Rewrites d/d<gen>, d/<gen> and d<gen> into placeholder symbols.
std::string rewrite_derivations(const Statement& st, const std::string& text, const AlgebraPtr& fiber)
{
    std::string out;
    std::size_t i = 0;
    auto is_gen = [&](const std::string& n) { return fiber->index_of(n).has_value(); };
    while (i < text.size()) {
        const bool boundary = i == 0 || !is_identifier_char(text[i - 1]);
        if (!boundary || !is_identifier_start(text[i])) {
            out += text[i++];
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && is_identifier_char(text[j]))
            ++j;
        std::string word = text.substr(i, j - i);
        if (word == "d" && j < text.size() && text[j] == '/') {
            std::size_t k = j + 1;
            while (k < text.size() && is_space(text[k]))
                ++k;
            std::size_t l = k;
            while (l < text.size() && is_identifier_char(text[l]))
                ++l;
            std::string target = text.substr(k, l - k);
            std::string gen;
            if (is_gen(target))
                gen = target;
            else if (target.size() > 1 && target[0] == 'd' && is_gen(target.substr(1)))
                gen = target.substr(1);
            else
                throw ParseError(pos_at(st, k), "'d/" + target + "' is not a derivative along a fiber generator");
            out += derivation_symbol(gen);
            i = l;
            continue;
        }
        if (!is_gen(word) && word.size() > 1 && word[0] == 'd' && is_gen(word.substr(1))) {
            out += derivation_symbol(word.substr(1));
            i = j;
            continue;
        }
        out += word;
        i = j;
    }
    return out;
}

std::string coefficient_prefix(const std::string& coeff, bool first)
{
    if (coeff == "1")
        return first ? "" : " + ";
    if (coeff == "-1")
        return first ? "-" : " - ";
    const bool single = coeff.find(" + ") == std::string::npos && coeff.find(" - ") == std::string::npos;
    if (single) {
        if (coeff[0] == '-')
            return (first ? "-" : " - ") + coeff.substr(1) + "*";
        return (first ? "" : " + ") + coeff + "*";
    }
    return (first ? "(" : " + (") + coeff + ")*";
}

void check_name(const std::string& name, SourcePos pos, const std::string& what)
{
    if (!is_identifier(name))
        throw ParseError(pos, "invalid " + what + " name '" + name + "'");
    if (name == "d")
        throw ParseError(pos, "'d' is reserved for the differential");
}

void parse_fiber(const Section& sec, SetupSpec& s)
{
    std::set<std::string> names;
    std::vector<const Statement*> diffs;
    for (const auto& st : sec.stmts) {
        auto eq = split_at(st.text, "=");
        if (eq) {
            diffs.push_back(&st);
            continue;
        }
        auto colon = split_at(st.text, ":");
        if (!colon)
            throw ParseError(st.pos, "expected 'name : degree' or 'd name = expression'");
        std::string name = trim(colon->first);
        check_name(name, st.pos, "generator");
        if (!names.insert(name).second)
            throw ParseError(st.pos, "generator '" + name + "' declared twice");
        const SourcePos dp = pos_at(st, colon->second);
        int deg = parse_int(st.text.substr(colon->second), dp, "degree");
        if (deg < 1 || deg > 200)
            throw ParseError(dp, "generator degree must be between 1 and 200");
        s.fiber.push_back({name, deg, st.pos});
    }
    if (s.fiber.empty())
        throw ParseError(sec.pos, "the fiber needs at least one generator");
    AlgebraPtr A = s.fiber_algebra();
    std::map<std::string, Element> values;
    std::map<std::string, const Statement*> where;
    for (const Statement* st : diffs) {
        auto eq = split_at(st->text, "=");
        std::string lhs = trim(eq->first);
        if (lhs.size() < 2 || lhs[0] != 'd' || !is_space(lhs[1]))
            throw ParseError(st->pos, "expected 'd name = expression'");
        std::string gen = trim(lhs.substr(1));
        auto gi = A->index_of(gen);
        if (!gi)
            throw ParseError(pos_at(*st, 1), "unknown generator '" + gen + "'");
        if (values.count(gen))
            throw ParseError(st->pos, "differential of '" + gen + "' given twice");
        Element v = evaluate_checked(st->text.substr(eq->second), pos_at(*st, eq->second), A);
        if (!v.is_zero() && (!v.is_homogeneous() || v.degree() != A->degree(*gi) + 1))
            throw ParseError(st->pos, "degree mismatch: d " + gen + " must have degree " +
                                          std::to_string(A->degree(*gi) + 1));
        values.emplace(gen, v);
        where.emplace(gen, st);
    }
    std::map<std::size_t, Element> images;
    for (const auto& [gen, v] : values)
        if (!v.is_zero())
            images.emplace(A->require(gen), v);
    Derivation d(A, 1, images);
    for (const auto& g : s.fiber) {
        auto it = values.find(g.name);
        if (it == values.end())
            continue;
        const Statement* st = where.at(g.name);
        if (!d.apply(it->second).is_zero())
            throw ParseError(st->pos, "d^2 != 0 on '" + g.name + "'");
        s.differentials.push_back({g.name, to_string(it->second), st->pos});
    }
}

void parse_lie(const Section& sec, SetupSpec& s)
{
    std::set<std::string> names;
    std::set<std::string> duals;
    for (const auto& st : sec.stmts) {
        auto arrow = split_at(st.text, "->");
        std::string left = arrow ? st.text.substr(0, arrow->second - 2) : st.text;
        auto colon = split_at(left, ":");
        if (!colon)
            throw ParseError(st.pos, "expected 'name : degree -> class'");
        SetupSpec::LieElement e;
        e.name = trim(colon->first);
        e.pos = st.pos;
        check_name(e.name, st.pos, "Lie basis");
        const SourcePos dp = pos_at(st, colon->second);
        e.degree = parse_int(left.substr(colon->second), dp, "degree");
        if (e.degree < 1 || e.degree > 200)
            throw ParseError(dp, "Lie degree must be between 1 and 200");
        e.dual = e.name;
        if (arrow) {
            std::string right = st.text.substr(arrow->second);
            auto c2 = split_at(right, ":");
            e.dual = trim(c2 ? c2->first : right);
            check_name(e.dual, pos_at(st, arrow->second), "class");
            if (c2) {
                const SourcePos q = pos_at(st, arrow->second + c2->second);
                if (parse_int(right.substr(c2->second), q, "degree") != e.degree + 1)
                    throw ParseError(q, "degree mismatch: class '" + e.dual + "' must have degree " +
                                            std::to_string(e.degree + 1));
            }
        }
        if (!names.insert(e.name).second)
            throw ParseError(st.pos, "Lie basis element '" + e.name + "' declared twice");
        if (!duals.insert(e.dual).second)
            throw ParseError(st.pos, "class '" + e.dual + "' declared twice");
        s.lie_model.push_back(std::move(e));
    }
}

void parse_xi(const Section& sec, SetupSpec& s)
{
    AlgebraPtr A = s.fiber_algebra();
    Cdga c = s.fiber_cdga();
    std::set<std::string> seen;
    for (const auto& st : sec.stmts) {
        auto eq = split_at(st.text, "=");
        if (!eq)
            throw ParseError(st.pos, "expected 'class = expression'");
        std::string cls = trim(eq->first);
        auto it = std::find_if(s.lie_model.begin(), s.lie_model.end(),
                               [&](const SetupSpec::LieElement& e) { return e.dual == cls; });
        if (it == s.lie_model.end())
            throw ParseError(st.pos, "unknown class '" + cls + "'");
        if (!seen.insert(cls).second)
            throw ParseError(st.pos, "class '" + cls + "' given twice");
        Element v = evaluate_checked(st.text.substr(eq->second), pos_at(st, eq->second), A);
        if (!v.is_zero() && (!v.is_homogeneous() || v.degree() != it->degree + 1))
            throw ParseError(st.pos, "degree mismatch: '" + cls + "' must have degree " + std::to_string(it->degree + 1));
        if (!c.differential(v).is_zero())
            throw ParseError(st.pos, "value of '" + cls + "' is not a cocycle");
        s.xi.push_back({cls, to_string(v), st.pos});
    }
}

void parse_holonomy(const Section& sec, SetupSpec& s)
{
    AlgebraPtr A = s.fiber_algebra();
    std::vector<GenSymbol> ext = A->gens();
    for (const auto& g : A->gens()) {
        if (A->index_of(derivation_symbol(g.name)))
            throw ParseError(sec.pos, "generator name '" + derivation_symbol(g.name) + "' is reserved");
        ext.push_back({derivation_symbol(g.name), 2, ""});
    }
    AlgebraPtr E = make_algebra(ext);
    const std::size_t n = A->size();
    for (const auto& st : sec.stmts) {
        SetupSpec::HolonomyElement h;
        h.pos = st.pos;
        std::string body = st.text;
        if (auto arrow = split_at(st.text, "->")) {
            body = st.text.substr(0, arrow->second - 2);
            h.dual = trim(st.text.substr(arrow->second));
            check_name(h.dual, pos_at(st, arrow->second), "class");
        }
        Element v = evaluate_checked(rewrite_derivations(st, body, A), st.pos, E);
        if (v.is_zero())
            throw ParseError(st.pos, "holonomy element is zero");
        std::map<std::size_t, Element> coeffs;
        for (const auto& [m, c] : v.terms()) {
            std::optional<std::size_t> g;
            int count = 0;
            for (std::size_t i = n; i < E->size(); ++i)
                if (m.exps[i]) {
                    count += m.exps[i];
                    g = i - n;
                }
            if (count != 1)
                throw ParseError(st.pos, "each term must contain exactly one derivative d/d<generator>");
            Monomial coeff{std::vector<std::uint16_t>(m.exps.begin(), m.exps.begin() + static_cast<long>(n))};
            auto [it, unused] = coeffs.emplace(*g, Element(A));
            it->second.add_term(coeff, c);
        }
        std::optional<int> degree;
        for (const auto& [g, c] : coeffs) {
            if (c.is_zero())
                continue;
            if (!c.is_homogeneous())
                throw ParseError(st.pos, "holonomy element is not homogeneous");
            const int dg = c.degree() - A->degree(g);
            if (degree && *degree != dg)
                throw ParseError(st.pos, "holonomy element is not homogeneous");
            degree = dg;
            h.terms.push_back({A->gen(g).name, to_string(c)});
        }
        if (!degree)
            throw ParseError(st.pos, "holonomy element is zero");
        if (*degree >= 0)
            throw ParseError(st.pos, "holonomy derivations must have negative degree");
        s.holonomy.push_back(std::move(h));
    }
}

void parse_options(const Section& sec, SetupSpec& s)
{
    auto& o = s.options;
    AlgebraPtr A = s.fiber_algebra();
    for (const auto& st : sec.stmts) {
        auto eq = split_at(st.text, "=");
        if (!eq)
            throw ParseError(st.pos, "expected 'option = value'");
        std::string key = trim(eq->first);
        std::string value = trim(st.text.substr(eq->second));
        const SourcePos vp = pos_at(st, eq->second);
        std::string slot = key;
        auto choose = [&](std::string& field, std::initializer_list<const char*> allowed) {
            for (const char* a : allowed)
                if (value == a) {
                    field = value;
                    return;
                }
            std::string list;
            for (const char* a : allowed)
                list += std::string(list.empty() ? "" : ", ") + a;
            throw ParseError(vp, "option '" + key + "' must be one of: " + list);
        };
        if (key.rfind("sign", 0) == 0 && key.size() > 4 && is_space(key[4])) {
            std::string gen = trim(key.substr(4));
            if (!A->index_of(gen))
                throw ParseError(st.pos, "unknown generator '" + gen + "'");
            int v = parse_int(value, vp, "sign");
            if (v != 1 && v != -1)
                throw ParseError(vp, "sign must be 1 or -1");
            slot = "sign " + gen;
            o.signs[gen] = v;
        } else if (key == "cutoff") {
            o.cutoff = parse_int(value, vp, "cutoff");
            if (o.cutoff < 0 || o.cutoff > 400)
                throw ParseError(vp, "cutoff must be between 0 and 400");
        } else if (key == "verify") {
            o.verify = parse_int(value, vp, "verification degree");
            if (*o.verify < 0 || *o.verify > 400)
                throw ParseError(vp, "verification degree must be between 0 and 400");
        } else if (key == "lambda_model") {
            choose(o.lambda_model, {"cohomology", "full"});
        } else if (key == "naming") {
            choose(o.naming, {"suffix", "bar"});
        } else if (key == "pushforward") {
            choose(o.pushforward, {"auto", "free", "contractible"});
        } else if (key == "rank") {
            o.rank = parse_int(value, vp, "rank");
            if (*o.rank < 0 || *o.rank > 400)
                throw ParseError(vp, "rank must be between 0 and 400");
        } else if (key == "contract") {
            if (!A->index_of(value))
                throw ParseError(vp, "unknown generator '" + value + "'");
            o.contract = value;
        } else if (key == "trivialize") {
            if (!is_identifier(value))
                throw ParseError(vp, "expected a class name");
            o.trivialize = value;
        } else if (key == "classes") {
            o.classes.clear();
            std::size_t start = 0;
            while (start <= value.size()) {
                std::size_t comma = value.find(',', start);
                std::string item = value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                const SourcePos ip = pos_at(st, eq->second + (st.text.substr(eq->second).find(value)) + start);
                ExprPtr e = parse_expr(item, ip);
                o.classes.push_back(to_string(e));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
        } else {
            throw ParseError(st.pos, "unknown option '" + key + "'");
        }
        if (o.positions.count(slot))
            throw ParseError(st.pos, "option '" + slot + "' given twice");
        o.positions.emplace(slot, st.pos);
    }
}

// Expression normal form for class lists: parenthesized sums stay as given.
std::string strip_outer(const std::string& s)
{
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
            if (depth == 0 && i + 1 < s.size())
                return s;
        }
        return s.substr(1, s.size() - 2);
    }
    return s;
}

}  // namespace

AlgebraPtr SetupSpec::fiber_algebra() const
{
    std::vector<GenSymbol> gens;
    for (const auto& g : fiber)
        gens.push_back({g.name, g.degree, ""});
    static std::mutex mutex;
    static std::map<std::vector<std::pair<std::string, int>>, AlgebraPtr> cache;
    std::vector<std::pair<std::string, int>> key;
    for (const auto& g : gens)
        key.emplace_back(g.name, g.degree);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    if (cache.size() > 256)
        cache.clear();
    AlgebraPtr a = make_algebra(std::move(gens));
    cache.emplace(std::move(key), a);
    return a;
}

Cdga SetupSpec::fiber_cdga() const
{
    AlgebraPtr A = fiber_algebra();
    std::map<std::size_t, Element> images;
    for (const auto& d : differentials) {
        Element v = parse_element(d.value, A);
        if (!v.is_zero())
            images.emplace(A->require(d.generator), v);
    }
    return Cdga(A, Derivation(A, 1, images));
}

Element SetupSpec::xi_value(const std::string& cls) const
{
    AlgebraPtr A = fiber_algebra();
    for (const auto& x : xi)
        if (x.cls == cls)
            return parse_element(x.value, A);
    return Element(A);
}

Derivation SetupSpec::holonomy_derivation(std::size_t i) const
{
    AlgebraPtr A = fiber_algebra();
    const auto& h = holonomy.at(i);
    std::map<std::size_t, Element> images;
    int degree = 0;
    for (const auto& [gen, value] : h.terms) {
        Element v = parse_element(value, A);
        const std::size_t g = A->require(gen);
        degree = v.degree() - A->degree(g);
        images.emplace(g, v);
    }
    return Derivation(A, degree, images);
}

std::string SetupSpec::holonomy_dual(std::size_t i) const
{
    const auto& h = holonomy.at(i);
    if (!h.dual.empty())
        return h.dual;
    // dual cochain degree is 1 - (derivation degree)
    const int deg = 1 - holonomy_derivation(i).degree();
    return deg % 2 == 0 ? "a" + std::to_string(deg / 2) : "b" + std::to_string(deg);
}

std::string SetupSpec::holonomy_string(std::size_t i) const
{
    std::string out;
    for (const auto& [gen, coeff] : holonomy.at(i).terms)
        out += coefficient_prefix(coeff, out.empty()) + "d/d" + gen;
    return out;
}

bool operator==(const SetupSpec& a, const SetupSpec& b)
{
    return print_setup(a) == print_setup(b);
}

SetupSpec parse_setup(const std::string& text)
{
    std::vector<Section> sections = split_sections(text);
    auto find = [&](const std::string& h) -> const Section* {
        for (const auto& s : sections)
            if (s.header == h)
                return &s;
        return nullptr;
    };
    SetupSpec s;
    const Section* fiber = find("fiber");
    if (!fiber)
        throw ParseError({1, 1}, "missing 'fiber' section");
    parse_fiber(*fiber, s);
    if (const Section* sec = find("lie_model"))
        parse_lie(*sec, s);
    if (const Section* sec = find("xi"))
        parse_xi(*sec, s);
    if (const Section* sec = find("holonomy"))
        parse_holonomy(*sec, s);
    if (const Section* sec = find("options"))
        parse_options(*sec, s);
    std::set<std::string> classes;
    for (const auto& l : s.lie_model)
        classes.insert(l.dual);
    for (std::size_t i = 0; i < s.holonomy.size(); ++i)
        if (!classes.insert(s.holonomy_dual(i)).second)
            throw ParseError(s.holonomy[i].pos, "class name '" + s.holonomy_dual(i) + "' is used twice");
    return s;
}

std::string print_setup(const SetupSpec& s)
{
    std::ostringstream out;
    out << "fiber {\n";
    for (const auto& g : s.fiber)
        out << "  " << g.name << " : " << g.degree << "\n";
    for (const auto& d : s.differentials)
        out << "  d " << d.generator << " = " << d.value << "\n";
    out << "}\n";
    if (!s.lie_model.empty()) {
        out << "lie_model {\n";
        for (const auto& l : s.lie_model)
            out << "  " << l.name << " : " << l.degree << " -> " << l.dual << "\n";
        out << "}\n";
    }
    if (!s.xi.empty()) {
        out << "xi {\n";
        for (const auto& x : s.xi)
            out << "  " << x.cls << " = " << x.value << "\n";
        out << "}\n";
    }
    if (!s.holonomy.empty()) {
        out << "holonomy {\n";
        for (std::size_t i = 0; i < s.holonomy.size(); ++i) {
            out << "  " << s.holonomy_string(i);
            if (!s.holonomy[i].dual.empty())
                out << " -> " << s.holonomy[i].dual;
            out << "\n";
        }
        out << "}\n";
    }
    const auto& o = s.options;
    std::ostringstream opts;
    if (o.cutoff != 40)
        opts << "  cutoff = " << o.cutoff << "\n";
    if (o.verify)
        opts << "  verify = " << *o.verify << "\n";
    if (o.lambda_model != "cohomology")
        opts << "  lambda_model = " << o.lambda_model << "\n";
    if (o.naming != "suffix")
        opts << "  naming = " << o.naming << "\n";
    if (o.pushforward != "auto")
        opts << "  pushforward = " << o.pushforward << "\n";
    if (!o.contract.empty())
        opts << "  contract = " << o.contract << "\n";
    if (o.rank)
        opts << "  rank = " << *o.rank << "\n";
    for (const auto& [gen, sign] : o.signs)
        opts << "  sign " << gen << " = " << sign << "\n";
    if (!o.trivialize.empty())
        opts << "  trivialize = " << o.trivialize << "\n";
    if (!o.classes.empty()) {
        opts << "  classes = ";
        for (std::size_t i = 0; i < o.classes.size(); ++i)
            opts << (i ? ", " : "") << strip_outer(o.classes[i]);
        opts << "\n";
    }
    if (!opts.str().empty())
        out << "options {\n" << opts.str() << "}\n";
    return out.str();
}

std::string fnv1a_hex(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string setup_hash(const SetupSpec& s)
{
    return fnv1a_hex(print_setup(s));
}

}  // namespace taut
