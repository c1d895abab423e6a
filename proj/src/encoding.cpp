#include "uniauto/encoding.hpp"

#include <algorithm>
#include <map>

namespace uniauto::encoding {

namespace {

bool is_bit(Symbol s) { return s == U'0' || s == U'1'; }

const Word kBlockSymbols = U"DSABP01";

}  // namespace

void Representation::validate() const
{
    if (tuples.empty())
        throw InputError("representation is empty; it needs at least the marker");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const auto& t = tuples[i];
        if (t.source < 1 || t.target < 1)
            throw InputError("tuple " + std::to_string(i + 1) + ": state indices start at 1");
        if (t.pop < 0 || t.push < 0)
            throw InputError("tuple " + std::to_string(i + 1) + ": negative stack index");
        if (!is_bit(t.input))
            throw InputError("tuple " + std::to_string(i + 1) + ": input must be 0 or 1");
    }
    if (tuples.back() != marker())
        throw InputError("representation must end with the marker (2, 0, λ, λ, 2)");
}

Symbol stack_symbol_for_index(int index)
{
    if (index == kBottomIndex)
        return kBottom;
    if (index >= 2 && index < 2 + 26)
        return static_cast<Symbol>(U'a' + (index - 2));
    if (index >= 2)
        return static_cast<Symbol>(0xE000 + index);
    throw InputError("stack index " + std::to_string(index) + " has no symbol");
}

Representation rep_list(const Pda& m)
{
    m.validate();
    if (!m.lettering())
        throw InputError("rep_list: machine '" + m.name + "' is not lettering");
    for (Symbol s : m.input)
        if (!is_bit(s))
            throw InputError("rep_list: input alphabet must be a subset of {0,1}");
    if (m.finals.size() != 1)
        throw InputError("rep_list: machine must have exactly one final state");
    const State final_state = *m.finals.begin();
    if (final_state == 1)
        throw InputError("rep_list: the initial state must not be final");

    std::vector<bool> reached(static_cast<std::size_t>(m.states) + 1, false);
    std::vector<State> work{1};
    reached[1] = true;
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        for (const auto& t : m.transitions)
            if (t.from == q && !reached[static_cast<std::size_t>(t.to)]) {
                reached[static_cast<std::size_t>(t.to)] = true;
                work.push_back(t.to);
            }
    }
    if (!reached[static_cast<std::size_t>(final_state)])
        throw InputError("rep_list: the final state is unreachable");

    std::vector<State> renumber(static_cast<std::size_t>(m.states) + 1, 0);
    renumber[1] = 1;
    renumber[static_cast<std::size_t>(final_state)] = 2;
    State next = 3;
    for (State q = 2; q <= m.states; ++q)
        if (q != final_state)
            renumber[static_cast<std::size_t>(q)] = next++;

    std::map<Symbol, int> stack_index{{kBottom, kBottomIndex}};
    int next_index = 2;
    for (Symbol s : m.stack)
        if (s != kBottom)
            stack_index[s] = next_index++;
    auto index_of = [&](const Word& part) { return part.empty() ? kLambdaIndex : stack_index.at(part[0]); };

    Representation r;
    for (const auto& t : m.transitions)
        r.tuples.push_back({renumber[static_cast<std::size_t>(t.from)], t.input, index_of(t.pop), index_of(t.push),
                            renumber[static_cast<std::size_t>(t.to)]});
    r.tuples.push_back(Representation::marker());
    return r;
}

Pda reconstruct(const Representation& r)
{
    r.validate();
    Pda m;
    m.name = "reconstructed";
    m.input = {U'0', U'1'};
    m.finals = {2};
    m.states = 2;
    auto part = [](int index) { return index == kLambdaIndex ? Word{} : Word(1, stack_symbol_for_index(index)); };
    for (std::size_t i = 0; i + 1 < r.tuples.size(); ++i) {
        const auto& t = r.tuples[i];
        m.states = std::max({m.states, t.source, t.target});
        for (int idx : {t.pop, t.push})
            if (idx != kLambdaIndex)
                m.stack.insert(stack_symbol_for_index(idx));
        m.transitions.push_back({t.source, t.input, part(t.pop), part(t.push), t.target});
    }
    m.validate();
    return m;
}

Word rep_word_generic(const Nfa& m)
{
    m.validate();
    auto unary = [](Symbol head, std::size_t count) {
        Word w(1, head);
        w.append(count, U'a');
        return w;
    };
    Word out;
    for (const auto& t : m.transitions) {
        out += unary(U'q', static_cast<std::size_t>(t.from));
        out += t.input == kLambda ? Word(U"*") : unary(U'x', m.input.index_of(t.input));
        out += unary(U'q', static_cast<std::size_t>(t.to));
    }
    return out;
}

Nfa generic_representation_set()
{
    Nfa f;
    f.name = "F";
    f.states = 8;
    f.input = {U'q', U'a', U'x', U'*'};
    f.finals = {8};
    f.transitions = {
        {1, U'q', 2}, {2, U'a', 3}, {3, U'a', 3}, {3, U'x', 4}, {4, U'a', 5}, {5, U'a', 5}, {5, U'q', 6},
        {3, U'*', 7}, {7, U'q', 6}, {6, U'a', 8}, {8, U'a', 8}, {8, U'q', 2},
    };
    return f;
}

SigmaWord sigma_encode(const RepTuple& t)
{
    if (t.source < 1 || t.target < 1)
        throw InputError("sigma_encode: state index must be at least 1");
    if (t.pop < 0 || t.push < 0)
        throw InputError("sigma_encode: negative stack index");
    if (!is_bit(t.input))
        throw InputError("sigma_encode: input must be 0 or 1");
    SigmaWord w = U"DS";
    w.append(static_cast<std::size_t>(t.source), U'A');
    w += t.input;
    w += U'P';
    w.append(static_cast<std::size_t>(t.pop), U'B');
    w += U'P';
    w.append(static_cast<std::size_t>(t.push), U'B');
    w += U'S';
    w.append(static_cast<std::size_t>(t.target), U'A');
    return w;
}

SigmaWord sigma_encode(const Representation& r)
{
    SigmaWord w;
    for (const auto& t : r.tuples)
        w += sigma_encode(t);
    return w;
}

namespace {

// Parses one block starting at pos; advances pos past it.
RepTuple parse_block(const SigmaWord& w, std::size_t& pos)
{
    auto fail = [&](const char* what) {
        throw InputError(std::string("malformed σ-block at position ") + std::to_string(pos) + ": " + what);
    };
    auto expect = [&](Symbol s, const char* what) {
        if (pos >= w.size() || w[pos] != s)
            fail(what);
        ++pos;
    };
    auto run_of = [&](Symbol s) {
        std::size_t n = 0;
        while (pos < w.size() && w[pos] == s) {
            ++n;
            ++pos;
        }
        return n;
    };
    RepTuple t;
    expect(U'D', "expected D");
    expect(U'S', "expected S after D");
    auto i = run_of(U'A');
    if (i == 0)
        fail("source state needs at least one A");
    if (pos >= w.size() || !is_bit(w[pos]))
        fail("expected input bit");
    t.input = w[pos++];
    expect(U'P', "expected P after the input bit");
    auto j = run_of(U'B');
    expect(U'P', "expected P between stack components");
    auto k = run_of(U'B');
    expect(U'S', "expected S before the target state");
    auto l = run_of(U'A');
    if (l == 0)
        fail("target state needs at least one A");
    t.source = static_cast<State>(i);
    t.pop = static_cast<int>(j);
    t.push = static_cast<int>(k);
    t.target = static_cast<State>(l);
    return t;
}

std::vector<RepTuple> parse_blocks_until(const SigmaWord& w, std::size_t& pos, Symbol terminator)
{
    std::vector<RepTuple> out;
    while (pos < w.size() && w[pos] == U'D')
        out.push_back(parse_block(w, pos));
    if (out.empty())
        throw InputError("expected at least one σ-block at position " + std::to_string(pos));
    if (terminator != kLambda) {
        if (pos >= w.size() || w[pos] != terminator)
            throw InputError("expected '" + symbol_name(terminator) + "' at position " + std::to_string(pos));
        ++pos;
    }
    return out;
}

}  // namespace

RepTuple sigma_decode(const SigmaWord& block)
{
    std::size_t pos = 0;
    auto t = parse_block(block, pos);
    if (pos != block.size())
        throw InputError("trailing symbols after σ-block");
    return t;
}

std::vector<RepTuple> parse_sigma_blocks(const SigmaWord& word)
{
    std::size_t pos = 0;
    auto out = parse_blocks_until(word, pos, kLambda);
    if (pos != word.size())
        throw InputError("unexpected symbol at position " + std::to_string(pos));
    return out;
}

SigmaWord encode_input(const Representation& r, const Word& w)
{
    r.validate();
    for (Symbol s : w)
        if (!is_bit(s))
            throw InputError("encode_input: input word must be over {0,1}");
    const SigmaWord section = sigma_encode(r) + U'T';
    SigmaWord out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += w[i];
        if (i + 1 < w.size())
            out += section;
    }
    out += U'%';
    out += section;
    return out;
}

EncodedInput parse_encoded_input(const SigmaWord& word)
{
    EncodedInput in;
    std::size_t pos = 0;
    while (pos < word.size() && is_bit(word[pos])) {
        in.bits += word[pos++];
        if (pos < word.size() && word[pos] == U'%')
            break;
        in.sections.push_back(parse_blocks_until(word, pos, U'T'));
    }
    if (pos >= word.size() || word[pos] != U'%')
        throw InputError("expected '%' at position " + std::to_string(pos));
    ++pos;
    in.sections.push_back(parse_blocks_until(word, pos, U'T'));
    if (pos != word.size())
        throw InputError("trailing symbols after the final section");
    return in;
}

Word serialize_section(const Representation& r)
{
    r.validate();
    return U'T' + sigma_encode(r);
}

Word encoder_input(const Representation& r, const Word& w) { return serialize_section(r) + U'#' + w; }

TwoWayPdt build_encoder_2pdt()
{
    enum : State {
        init = 1,
        scan,
        at_first,
        at_next,
        back_w,
        back_r,
        copy,
        forward,
        back_w_last,
        back_r_last,
        copy_last,
        done,
    };
    TwoWayPdt t;
    t.name = "encoder";
    t.states = done;
    t.input = Alphabet(Word(U"TDSABP01#"));
    t.output = Alphabet(Word(U"DSABP01T%"));
    t.stack = {kBottom, U'c'};
    t.finals = {done};
    auto add = [&](State from, Symbol in, Word out, Word pop, Word push, Move mv, State to) {
        t.transitions.push_back({from, in, std::move(out), std::move(pop), std::move(push), mv, to});
    };

    add(init, U'T', U"", U"", U"", Move::R, scan);
    for (Symbol s : kBlockSymbols)
        add(scan, s, U"", U"", U"", Move::R, scan);
    add(scan, U'#', U"", U"", U"", Move::R, at_first);

    // Empty w: nothing follows '#'. Only possible on the first visit.
    add(at_first, kLambda, U"%", U"$", U"$", Move::L, back_w_last);
    for (State at : {at_first, at_next}) {
        for (Symbol x : Word(U"01")) {
            add(at, x, Word(1, x), U"", U"c", Move::L, back_w);
            add(at, x, Word(1, x) + U'%', U"", U"c", Move::L, back_w_last);
        }
    }

    for (auto [bw, br, cp, after] : {std::tuple{back_w, back_r, copy, forward},
                                     std::tuple{back_w_last, back_r_last, copy_last, done}}) {
        for (Symbol x : Word(U"01"))
            add(bw, x, U"", U"", U"c", Move::L, bw);
        add(bw, U'#', U"", U"", U"", Move::L, br);
        for (Symbol s : kBlockSymbols)
            add(br, s, U"", U"", U"", Move::L, br);
        add(br, U'T', U"", U"", U"", Move::R, cp);
        for (Symbol s : kBlockSymbols)
            add(cp, s, Word(1, s), U"", U"", Move::R, cp);
        add(cp, U'#', U"T", U"", U"", Move::R, after);
        for (Symbol x : Word(U"01"))
            add(after, x, U"", U"c", U"", Move::R, after);
    }
    add(forward, kLambda, U"", U"$", U"$", Move::M, at_next);
    return t;
}

}  // namespace uniauto::encoding
