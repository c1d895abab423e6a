#include "uniauto/machine_file.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace uniauto {

namespace {

struct Token {
    std::string text;
    bool lambda = false;
};

std::vector<Token> tokenize(const std::string& line, std::size_t line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#')
            break;
        Token t;
        bool escaped_any = false;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            if (line[i] == '\\') {
                if (i + 1 >= line.size())
                    throw ParseError("dangling backslash", line_no);
                t.text += line[i + 1];
                escaped_any = true;
                i += 2;
                continue;
            }
            t.text += line[i++];
        }
        t.lambda = !escaped_any && t.text == "_";
        out.push_back(std::move(t));
    }
    return out;
}

std::string escape(const std::string& s)
{
    if (s == "_")
        return "\\_";
    std::string out;
    for (char c : s) {
        if (c == '\\' || c == '#' || std::isspace(static_cast<unsigned char>(c)))
            out += '\\';
        out += c;
    }
    return out;
}

std::string field(const Word& w) { return w.empty() ? "_" : escape(to_utf8(w)); }
std::string field(Symbol s) { return s == kLambda ? "_" : escape(to_utf8(s)); }

enum class Kind { nfa, pda, fst, pdt, fst2, pdt2 };

bool has_stack(Kind k) { return k == Kind::pda || k == Kind::pdt || k == Kind::pdt2; }
bool has_output(Kind k) { return k != Kind::nfa && k != Kind::pda; }
bool has_move(Kind k) { return k == Kind::fst2 || k == Kind::pdt2; }

std::size_t arity(Kind k) { return 3 + has_output(k) + 2 * has_stack(k) + has_move(k); }

struct Parser {
    std::size_t line_no = 0;
    std::optional<std::string> name;
    std::optional<Kind> kind;
    std::optional<int> states;
    std::set<State> finals;
    std::optional<Alphabet> input, output, stack;
    bool ended = false;

    struct RawTransition {
        State from, to;
        Symbol input;
        Word output, pop, push;
        Move move = Move::R;
    };
    std::vector<RawTransition> transitions;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no); }

    Word word_of(const Token& t) const
    {
        if (t.lambda)
            return {};
        try {
            return from_utf8(t.text);
        } catch (const InputError& e) {
            fail(e.what());
        }
    }

    Symbol symbol_of(const Token& t) const
    {
        Word w = word_of(t);
        if (w.size() != 1)
            fail("expected a single symbol, got '" + t.text + "'");
        return w[0];
    }

    State state_of(const Token& t) const
    {
        int v = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || p != t.text.data() + t.text.size())
            fail("expected a state number, got '" + t.text + "'");
        if (!states)
            fail("'states' must precede state references");
        if (v < 1 || v > *states)
            fail("state out of range");
        return v;
    }

    Alphabet alphabet_of(const std::vector<Token>& toks) const
    {
        Alphabet a;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            Symbol s = symbol_of(toks[i]);
            if (a.contains(s))
                fail("duplicate symbol '" + symbol_name(s) + "'");
            a.insert(s);
        }
        return a;
    }

    void check_declared(const Word& w, const std::optional<Alphabet>& a, const char* what) const
    {
        if (w.empty())
            return;
        if (!a)
            fail(std::string("'") + what + "' must be declared before transitions");
        for (Symbol s : w)
            if (!a->contains(s))
                fail("undeclared " + std::string(what) + " symbol '" + symbol_name(s) + "'");
    }

    void line(const std::vector<Token>& toks)
    {
        if (toks.empty())
            return;
        if (ended)
            fail("content after 'end'");
        const std::string& key = toks[0].text;
        if (!name && key != "machine")
            fail("expected 'machine' header");
        if (key == "machine") {
            if (name)
                fail("duplicate 'machine' header");
            std::string n;
            for (std::size_t i = 1; i < toks.size(); ++i)
                n += (i > 1 ? " " : "") + toks[i].text;
            name = n;
        } else if (key == "type") {
            if (toks.size() != 2)
                fail("'type' takes one argument");
            const auto& t = toks[1].text;
            if (t == "nfa")
                kind = Kind::nfa;
            else if (t == "pda")
                kind = Kind::pda;
            else if (t == "fst")
                kind = Kind::fst;
            else if (t == "pdt")
                kind = Kind::pdt;
            else if (t == "2fst")
                kind = Kind::fst2;
            else if (t == "2pdt")
                kind = Kind::pdt2;
            else
                fail("unknown type '" + t + "'");
        } else if (key == "states") {
            if (toks.size() != 2)
                fail("'states' takes one argument");
            int v = 0;
            auto [p, ec] = std::from_chars(toks[1].text.data(), toks[1].text.data() + toks[1].text.size(), v);
            if (ec != std::errc{} || p != toks[1].text.data() + toks[1].text.size() || v < 1)
                fail("'states' needs a positive integer");
            states = v;
        } else if (key == "final") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                finals.insert(state_of(toks[i]));
        } else if (key == "input") {
            input = alphabet_of(toks);
        } else if (key == "output") {
            output = alphabet_of(toks);
        } else if (key == "stack") {
            if (toks.size() < 2 || symbol_of(toks[1]) != kBottom)
                fail("'stack' must list $ first");
            stack = alphabet_of(toks);
        } else if (key == "t") {
            transition(toks);
        } else if (key == "end") {
            if (toks.size() != 1)
                fail("'end' takes no arguments");
            ended = true;
        } else {
            fail("unknown keyword '" + key + "'");
        }
    }

    void transition(const std::vector<Token>& toks)
    {
        if (!kind)
            fail("'type' must precede transitions");
        if (toks.size() - 1 != arity(*kind))
            fail("expected " + std::to_string(arity(*kind)) + " fields for this type, got " +
                 std::to_string(toks.size() - 1));
        RawTransition r;
        std::size_t i = 1;
        r.from = state_of(toks[i++]);
        const Token& in = toks[i++];
        r.input = in.lambda ? kLambda : symbol_of(in);
        if (r.input != kLambda)
            check_declared(Word(1, r.input), input, "input");
        if (has_output(*kind)) {
            r.output = word_of(toks[i++]);
            check_declared(r.output, output, "output");
        }
        if (has_stack(*kind)) {
            r.pop = word_of(toks[i++]);
            r.push = word_of(toks[i++]);
            if (!stack)
                stack = Alphabet{kBottom};
            check_declared(r.pop, stack, "stack");
            check_declared(r.push, stack, "stack");
        }
        if (has_move(*kind)) {
            const auto& m = toks[i++].text;
            if (m == "L")
                r.move = Move::L;
            else if (m == "R")
                r.move = Move::R;
            else if (m == "M")
                r.move = Move::M;
            else
                fail("move must be L, R or M, got '" + m + "'");
        }
        r.to = state_of(toks[i]);
        transitions.push_back(std::move(r));
    }

    template <class M>
    M common() const
    {
        M m;
        m.name = name.value_or("");
        m.states = *states;
        m.finals = finals;
        m.input = input.value_or(Alphabet{});
        if constexpr (requires { m.output; })
            m.output = output.value_or(Alphabet{});
        if constexpr (requires { m.stack; })
            m.stack = stack.value_or(Alphabet{kBottom});
        return m;
    }

    AnyMachine finish()
    {
        if (!ended)
            fail("missing 'end'");
        if (!kind)
            fail("missing 'type'");
        if (!states)
            fail("missing 'states'");
        if (has_output(*kind) && !output)
            output = Alphabet{};
        if (!has_stack(*kind) && stack)
            fail("'stack' given for a machine without a stack");
        if (!has_output(*kind) && output && output->size() > 0)
            fail("'output' given for a machine without output");
        AnyMachine result = build();
        try {
            std::visit([](const auto& m) { m.validate(); }, result);
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            fail(e.what());
        }
        return result;
    }

    AnyMachine build() const
    {
        switch (*kind) {
        case Kind::nfa: {
            auto m = common<Nfa>();
            for (const auto& r : transitions)
                m.transitions.push_back({r.from, r.input, r.to});
            return m;
        }
        case Kind::pda: {
            auto m = common<Pda>();
            for (const auto& r : transitions)
                m.transitions.push_back({r.from, r.input, r.pop, r.push, r.to});
            return m;
        }
        case Kind::fst: {
            auto m = common<Fst>();
            for (const auto& r : transitions)
                m.transitions.push_back({r.from, r.input, r.output, r.to});
            return m;
        }
        case Kind::pdt: {
            auto m = common<Pdt>();
            for (const auto& r : transitions)
                m.transitions.push_back({r.from, r.input, r.output, r.pop, r.push, r.to});
            return m;
        }
        case Kind::fst2: {
            auto m = common<TwoWayFst>();
            for (const auto& r : transitions)
                m.transitions.push_back({r.from, r.input, r.output, r.move, r.to});
            return m;
        }
        case Kind::pdt2: {
            auto m = common<TwoWayPdt>();
            for (const auto& r : transitions)
                m.transitions.push_back({r.from, r.input, r.output, r.pop, r.push, r.move, r.to});
            return m;
        }
        }
        fail("unknown type");
    }
};

std::string alphabet_line(const char* key, const Alphabet& a, bool bottom_first = false)
{
    std::string s = key;
    if (bottom_first)
        s += " $";
    for (Symbol x : a)
        if (!(bottom_first && x == kBottom))
            s += " " + field(x);
    return s + "\n";
}

const char* move_name(Move m) { return m == Move::L ? "L" : m == Move::R ? "R" : "M"; }

}  // namespace

AnyMachine parse_machine(const std::string& text)
{
    Parser p;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++p.line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        p.line(tokenize(line, p.line_no));
    }
    return p.finish();
}

std::string type_name(const AnyMachine& m)
{
    static const char* names[] = {"nfa", "pda", "fst", "pdt", "2fst", "2pdt"};
    return names[m.index()];
}

std::string print_machine(const AnyMachine& any)
{
    return std::visit(
        [&](const auto& m) {
            std::ostringstream out;
            out << "machine " << escape(m.name) << "\n";
            out << "type " << type_name(any) << "\n";
            out << "states " << m.states << "\n";
            out << "final";
            for (State f : m.finals)
                out << " " << f;
            out << "\n" << alphabet_line("input", m.input);
            if constexpr (requires { m.stack; })
                out << alphabet_line("stack", m.stack, true);
            if constexpr (requires { m.output; })
                out << alphabet_line("output", m.output);
            for (const auto& t : m.transitions) {
                out << "t " << t.from << " " << field(t.input);
                if constexpr (requires { t.output; })
                    out << " " << field(t.output);
                if constexpr (requires { t.pop; })
                    out << " " << field(t.pop) << " " << field(t.push);
                if constexpr (requires { t.move; })
                    out << " " << move_name(t.move);
                out << " " << t.to << "\n";
            }
            out << "end\n";
            return out.str();
        },
        any);
}

}  // namespace uniauto
