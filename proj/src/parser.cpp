#include "cyq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyq {

std::string Diagnostic::to_string() const
{
    return std::to_string(line) + ":" + std::to_string(column) + ": " + code + ": " + message;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& d)
{
    std::string s;
    for (const auto& x : d) {
        if (!s.empty())
            s += "\n";
        s += x.to_string();
    }
    return s;
}

enum class Tok { word, sym, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t column = 0;
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct LexError {
    std::size_t column;
    std::string message;
};

std::vector<Token> lex(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (word_char(c)) {
            std::size_t j = i;
            while (j < line.size() && word_char(line[j]))
                ++j;
            out.push_back({Tok::word, std::string(line.substr(i, j - i)), i + 1});
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Tok::sym, "->", i + 1});
            i += 2;
            continue;
        }
        if (std::string_view(":=+-*/[]").find(c) != std::string_view::npos) {
            out.push_back({Tok::sym, std::string(1, c), i + 1});
            ++i;
            continue;
        }
        throw LexError{i + 1, std::string("unexpected character '") + c + "'"};
    }
    out.push_back({Tok::end, "", line.size() + 1});
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> toks, std::size_t line, std::vector<Diagnostic>& diags)
        : toks_(std::move(toks)), line_(line), diags_(diags)
    {
    }

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at_sym(std::string_view s) const { return peek().kind == Tok::sym && peek().text == s; }
    bool at_word(std::string_view s) const { return peek().kind == Tok::word && peek().text == s; }
    bool at_end() const { return peek().kind == Tok::end; }

    void error(const std::string& code, std::size_t column, const std::string& msg)
    {
        diags_.push_back({code, line_, column, msg});
    }

    // Returns false (after a diagnostic) on mismatch.
    bool expect_sym(std::string_view s)
    {
        if (at_sym(s)) {
            next();
            return true;
        }
        error("E001", peek().column, "expected '" + std::string(s) + "'" + found());
        return false;
    }

    std::optional<Token> expect_word(const std::string& what)
    {
        if (peek().kind == Tok::word)
            return next();
        error("E001", peek().column, "expected " + what + found());
        return std::nullopt;
    }

    bool expect_end()
    {
        if (at_end())
            return true;
        error("E001", peek().column, "unexpected '" + peek().text + "'");
        return false;
    }

    std::string found() const
    {
        return at_end() ? " at end of line" : ", found '" + peek().text + "'";
    }

    // Returns nullopt after reporting diagnostics.
    std::optional<AlgebraElement> expression(const QuiverPtr& q)
    {
        AlgebraElement out(q);
        bool ok = true;
        bool first = true;
        if (at_word("0") && (peek(1).kind == Tok::end)) {
            next();
            return out;
        }
        while (true) {
            Rational sign = 1;
            if (at_sym("+") || at_sym("-")) {
                if (at_sym("-"))
                    sign = -1;
                next();
            } else if (!first) {
                if (!at_end()) {
                    error("E001", peek().column, "expected '+' or '-'" + found());
                    return std::nullopt;
                }
                break;
            }
            first = false;
            auto t = term(q);
            if (!t) {
                ok = false;
                // resynchronize at the next top-level sign
                while (!at_end() && !at_sym("+") && !at_sym("-"))
                    next();
                if (at_end())
                    break;
                continue;
            }
            out.add_term(t->first, sign * t->second);
            if (at_end())
                break;
        }
        if (!ok)
            return std::nullopt;
        return out;
    }

private:
    std::optional<std::pair<PathWord, Rational>> term(const QuiverPtr& q)
    {
        Rational coeff = 1;
        std::optional<PathWord> word;
        bool ok = true;
        const std::size_t start = peek().column;
        while (true) {
            const Token& t = peek();
            if (t.kind != Tok::word) {
                error("E001", t.column, "expected a scalar, arrow or e[vertex]" + found());
                return std::nullopt;
            }
            next();
            if (all_digits(t.text)) {
                std::string lit = t.text;
                if (at_sym("/")) {
                    next();
                    if (peek().kind != Tok::word || !all_digits(peek().text)) {
                        error("E001", peek().column, "expected a denominator" + found());
                        return std::nullopt;
                    }
                    lit += "/" + next().text;
                }
                try {
                    coeff *= parse_rational(lit);
                } catch (const ValidationError& e) {
                    error("E001", t.column, e.what());
                    ok = false;
                }
            } else {
                std::optional<PathWord> factor;
                if (t.text == "e" && at_sym("[")) {
                    next();
                    const Token v = peek();
                    if (v.kind != Tok::word) {
                        error("E001", v.column, "expected a vertex id" + found());
                        return std::nullopt;
                    }
                    next();
                    if (!expect_sym("]"))
                        return std::nullopt;
                    if (auto vi = q->find_vertex(v.text))
                        factor = PathWord::lazy(*q, *vi);
                    else {
                        error("E004", v.column, "unknown vertex '" + v.text + "'");
                        ok = false;
                    }
                } else if (auto a = q->find_arrow(t.text)) {
                    factor = PathWord::from_arrows(*q, {*a});
                } else {
                    error(q->find_vertex(t.text) ? "E001" : "E005", t.column,
                          q->find_vertex(t.text) ? "vertex '" + t.text + "' used as a factor; write e[" + t.text + "]"
                                                 : "unknown arrow '" + t.text + "'");
                    ok = false;
                }
                if (factor && ok) {
                    if (!word) {
                        word = factor;
                    } else if (auto c = concat(*word, *factor)) {
                        word = c;
                    } else {
                        error("E006", t.column,
                              "'" + word->to_string(*q) + "' cannot be composed after '" + factor->to_string(*q) +
                                  "': source of the left factor must equal target of the right");
                        ok = false;
                    }
                }
            }
            if (at_sym("*")) {
                next();
                continue;
            }
            break;
        }
        if (!ok)
            return std::nullopt;
        if (!word) {
            error("E001", start, "scalar term without a path");
            return std::nullopt;
        }
        return std::make_pair(*word, coeff);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::vector<Diagnostic>& diags_;
};

struct Line {
    std::size_t number;
    std::vector<Token> toks;
};

void check_relation(const GradedQuiver& q, const AlgebraElement& r, std::size_t line, std::size_t col,
                    std::vector<Diagnostic>& diags)
{
    if (r.is_zero())
        return;
    const PathWord& first = r.terms().begin()->first;
    for (const auto& [w, c] : r.terms())
        if (w.source() != first.source() || w.target() != first.target()) {
            diags.push_back({"E009", line, col,
                             "relation mixes paths " + first.to_string(q) + " and " + w.to_string(q) +
                                 " with different endpoints"});
            return;
        }
}

} // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : ValidationError("parse", summarize(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

QuiverFile parse_quiver_file(std::string_view text)
{
    std::vector<Diagnostic> diags;
    std::vector<Line> lines;
    {
        std::size_t n = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view raw = text.substr(start, end - start);
            if (!raw.empty() && raw.back() == '\r')
                raw.remove_suffix(1);
            ++n;
            try {
                auto toks = lex(raw);
                if (toks.front().kind != Tok::end)
                    lines.push_back({n, std::move(toks)});
            } catch (const LexError& e) {
                diags.push_back({"E001", n, e.column, e.message});
            }
            if (end == text.size())
                break;
            start = end + 1;
        }
    }

    // Pass 1: declarations.
    GradedQuiver q;
    std::vector<const Line*> rest;
    for (const auto& l : lines) {
        LineParser p(l.toks, l.number, diags);
        const Token head = p.next();
        if (head.kind != Tok::word) {
            p.error("E001", head.column, "expected a statement keyword");
            continue;
        }
        if (head.text == "vertex") {
            auto id = p.expect_word("a vertex id");
            if (!id)
                continue;
            bool frozen = false;
            if (p.at_word("frozen")) {
                p.next();
                frozen = true;
            }
            if (!p.expect_end())
                continue;
            if (q.has_id(id->text)) {
                p.error("E003", id->column, "duplicate id '" + id->text + "'");
                continue;
            }
            q.add_vertex(id->text, frozen);
        } else if (head.text == "arrow") {
            auto id = p.expect_word("an arrow id");
            if (!id || !p.expect_sym(":"))
                continue;
            auto src = p.expect_word("a source vertex");
            if (!src || !p.expect_sym("->"))
                continue;
            auto tgt = p.expect_word("a target vertex");
            if (!tgt)
                continue;
            int degree = 0;
            bool frozen = false;
            bool bad = false;
            while (!p.at_end() && !bad) {
                if (p.at_word("deg")) {
                    p.next();
                    int sign = 1;
                    if (p.at_sym("-")) {
                        p.next();
                        sign = -1;
                    }
                    const Token d = p.peek();
                    if (d.kind != Tok::word || !all_digits(d.text) || d.text.size() > 6) {
                        p.error("E001", d.column, "expected an integer degree" + p.found());
                        bad = true;
                        break;
                    }
                    p.next();
                    degree = sign * std::stoi(d.text);
                } else if (p.at_word("frozen")) {
                    p.next();
                    frozen = true;
                } else {
                    p.error("E001", p.peek().column, "unexpected '" + p.peek().text + "'");
                    bad = true;
                }
            }
            if (bad)
                continue;
            if (all_digits(id->text)) {
                p.error("E001", id->column, "arrow id '" + id->text + "' must not be numeric");
                continue;
            }
            if (q.has_id(id->text)) {
                p.error("E003", id->column, "duplicate id '" + id->text + "'");
                continue;
            }
            auto s = q.find_vertex(src->text);
            auto t = q.find_vertex(tgt->text);
            if (!s)
                p.error("E004", src->column, "unknown vertex '" + src->text + "'");
            if (!t)
                p.error("E004", tgt->column, "unknown vertex '" + tgt->text + "'");
            if (!s || !t)
                continue;
            if (frozen && !(q.vertex(*s).frozen && q.vertex(*t).frozen)) {
                p.error("E007", id->column, "frozen arrow '" + id->text + "' must have frozen source and target");
                continue;
            }
            q.add_arrow(id->text, *s, *t, degree, frozen);
        } else if (head.text == "potential" || head.text == "relation" || head.text == "differential") {
            rest.push_back(&l);
        } else {
            p.error("E001", head.column, "unknown statement '" + head.text + "'");
        }
    }
    if (q.vertex_count() == 0 && diags.empty())
        diags.push_back({"E002", 1, 1, "no vertices"});
    if (!diags.empty())
        throw ParseError(std::move(diags));

    // Pass 2: expressions over the declared quiver.
    QuiverFile f;
    f.quiver = share(std::move(q));
    const GradedQuiver& g = *f.quiver;
    std::vector<bool> assigned(g.arrow_count(), false);
    std::size_t potential_line = 0;
    for (const Line* l : rest) {
        LineParser p(l->toks, l->number, diags);
        const Token head = p.next();
        if (head.text == "potential") {
            if (!p.expect_sym("="))
                continue;
            const std::size_t col = p.peek().column;
            auto x = p.expression(f.quiver);
            if (!x)
                continue;
            if (potential_line) {
                p.error("E011", head.column,
                        "potential already given on line " + std::to_string(potential_line));
                continue;
            }
            potential_line = l->number;
            try {
                f.potential = cyclic_normalize(*x);
            } catch (const ValidationError& e) {
                p.error("E008", col, e.what());
            }
        } else if (head.text == "relation") {
            const std::size_t col = p.peek().column;
            auto x = p.expression(f.quiver);
            if (!x)
                continue;
            check_relation(g, *x, l->number, col, diags);
            f.relations.push_back(std::move(*x));
        } else {
            auto id = p.expect_word("an arrow id");
            if (!id || !p.expect_sym("="))
                continue;
            const std::size_t col = p.peek().column;
            auto a = g.find_arrow(id->text);
            if (!a) {
                p.error("E005", id->column, "unknown arrow '" + id->text + "'");
                continue;
            }
            auto x = p.expression(f.quiver);
            if (!x)
                continue;
            if (assigned[*a]) {
                p.error("E010", id->column, "differential of '" + id->text + "' assigned twice");
                continue;
            }
            const Arrow& arr = g.arrow(*a);
            bool ok = true;
            for (const auto& [w, c] : x->terms()) {
                if (w.source() != arr.source || w.target() != arr.target) {
                    p.error("E010", col, "d(" + arr.id + ") term " + w.to_string(g) + " has the wrong endpoints");
                    ok = false;
                    break;
                }
                if (w.degree() != arr.degree + 1) {
                    p.error("E010", col,
                            "d(" + arr.id + ") term " + w.to_string(g) + " has degree " + std::to_string(w.degree()) +
                                ", expected " + std::to_string(arr.degree + 1));
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            if (f.differential.empty())
                f.differential.assign(g.arrow_count(), AlgebraElement(f.quiver));
            assigned[*a] = true;
            f.differential[*a] = std::move(*x);
        }
    }
    if (!diags.empty())
        throw ParseError(std::move(diags));
    return f;
}

AlgebraElement parse_element(const QuiverPtr& q, std::string_view text)
{
    std::vector<Diagnostic> diags;
    std::vector<Token> toks;
    try {
        toks = lex(text);
    } catch (const LexError& e) {
        throw ParseError({{"E001", 1, e.column, e.message}});
    }
    LineParser p(std::move(toks), 1, diags);
    auto x = p.expression(q);
    if (!x || !diags.empty())
        throw ParseError(std::move(diags));
    return *x;
}

std::string print_quiver_file(const QuiverFile& f)
{
    std::ostringstream out;
    const GradedQuiver& q = *f.quiver;
    for (const auto& v : q.vertices())
        out << "vertex " << v.id << (v.frozen ? " frozen" : "") << "\n";
    for (const auto& a : q.arrows()) {
        out << "arrow " << a.id << " : " << q.vertex(a.source).id << " -> " << q.vertex(a.target).id;
        if (a.degree != 0)
            out << " deg " << a.degree;
        if (a.frozen)
            out << " frozen";
        out << "\n";
    }
    if (f.potential)
        out << "potential = " << f.potential->to_string() << "\n";
    for (const auto& r : f.relations)
        out << "relation " << r.to_string() << "\n";
    if (f.has_differential()) {
        bool any = false;
        for (std::size_t i = 0; i < f.differential.size(); ++i)
            if (!f.differential[i].is_zero()) {
                out << "differential " << q.arrow(static_cast<ArrowIndex>(i)).id << " = "
                    << f.differential[i].to_string() << "\n";
                any = true;
            }
        if (!any && q.arrow_count() > 0)
            out << "differential " << q.arrow(0).id << " = 0\n";
    }
    return out.str();
}

bool operator==(const QuiverFile& x, const QuiverFile& y)
{
    if (!same_quiver(x.quiver, y.quiver))
        return false;
    if (x.potential.has_value() != y.potential.has_value())
        return false;
    if (x.potential && !(*x.potential == *y.potential))
        return false;
    return x.relations == y.relations && x.differential == y.differential;
}

IceQuiverWithPotential QuiverFile::ice() const
{
    IceQuiverWithPotential out{quiver, potential ? *potential : Potential(quiver)};
    out.validate();
    return out;
}

Presentation QuiverFile::presentation() const
{
    Presentation p{quiver, relations};
    p.validate();
    return p;
}

DgPresentation QuiverFile::dg() const
{
    if (!has_differential())
        return DgPresentation::unverified(quiver, std::vector<AlgebraElement>(quiver->arrow_count(),
                                                                              AlgebraElement(quiver)));
    return DgPresentation::unverified(quiver, differential);
}

QuiverFile to_quiver_file(const DgPresentation& p, const std::optional<Potential>& w)
{
    QuiverFile f;
    f.quiver = p.quiver();
    if (w && !w->is_zero())
        f.potential = cyclic_normalize(transport(w->cycles(), p.quiver()));
    f.differential = p.differentials();
    return f;
}

QuiverFile to_quiver_file(const Presentation& p)
{
    QuiverFile f;
    f.quiver = p.quiver;
    f.relations = p.relations;
    return f;
}

} // namespace cyq
