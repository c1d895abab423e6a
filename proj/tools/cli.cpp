#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "uniauto/encoding.hpp"
#include "uniauto/fixtures.hpp"
#include "uniauto/gadgets.hpp"
#include "uniauto/machine_file.hpp"
#include "uniauto/oracle.hpp"
#include "uniauto/simulate.hpp"
#include "uniauto/transition_system.hpp"
#include "uniauto/universal.hpp"

namespace uniauto::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Context {
    std::ostream& out;
    bool json_lines = false;
    SearchLimits limits;

    void emit(const json& record, const std::string& text) const
    {
        if (json_lines)
            out << record.dump() << "\n";
        else
            out << text << "\n";
    }
};

std::string show(const Word& w) { return w.empty() ? "λ" : to_utf8(w); }

int verdict_code(Outcome o) { return o == Outcome::accept ? kOk : o == Outcome::reject ? kNo : kUsage; }

AnyMachine load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_machine(buf.str());
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Pda as_acceptor(const AnyMachine& m, const std::string& path)
{
    if (auto* n = std::get_if<Nfa>(&m))
        return as_pda(*n);
    if (auto* p = std::get_if<Pda>(&m))
        return *p;
    throw InputError(path + ": expected an nfa or pda, found " + type_name(m));
}

Fst as_fst(const AnyMachine& m, const std::string& path)
{
    if (auto* f = std::get_if<Fst>(&m))
        return *f;
    throw InputError(path + ": expected an fst, found " + type_name(m));
}

OutputSet apply_any(const AnyMachine& m, const Word& w, const SearchLimits& limits)
{
    return std::visit(
        [&](const auto& t) -> OutputSet {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Fst>)
                return apply_fst(t, w, limits);
            else if constexpr (std::is_same_v<T, Pdt>)
                return apply_pdt(t, w, limits);
            else if constexpr (std::is_same_v<T, TwoWayFst>)
                return apply_2fst(t, w, limits);
            else if constexpr (std::is_same_v<T, TwoWayPdt>)
                return apply_2pdt(t, w, limits);
            else
                throw InputError("trans apply needs a transducer, found " + type_name(t));
        },
        m);
}

std::optional<AnyMachine> named_machine(const std::string& name)
{
    namespace fx = fixtures;
    if (name == "D01")
        return fx::d01();
    if (name == "M_odd")
        return fx::m_odd_nfa();
    if (name == "M01")
        return fx::m01();
    if (name == "M_anbn")
        return fx::anbn();
    if (name == "U")
        return build_universal_pda().machine;
    if (name == "encoder")
        return encoding::build_encoder_2pdt();
    for (auto n : fx::transducer_fixture_names())
        if (n == name)
            return std::visit([](const auto& t) -> AnyMachine { return t; }, fx::transducer_fixture(name));
    return std::nullopt;
}

std::vector<std::string> machine_names()
{
    std::vector<std::string> names{"D01", "M_odd", "M01", "M_anbn"};
    for (auto n : fixtures::transducer_fixture_names())
        names.emplace_back(n);
    names.emplace_back("U");
    names.emplace_back("encoder");
    return names;
}

Word bits(std::size_t n, unsigned long long value)
{
    Word w;
    for (std::size_t i = 0; i < n; ++i)
        w += (value >> (n - 1 - i) & 1) ? U'1' : U'0';
    return w;
}

struct Check {
    explicit Check(std::string n) : name(std::move(n)) {}
    std::string name;
    std::size_t cases = 0;
    std::string failure;
};

std::vector<Check> verify_fixtures(const SearchLimits& limits)
{
    namespace fx = fixtures;
    std::vector<Check> checks;
    auto expect = [&](Check& c, const OutputSet& got, const Word& in, const Word& want) {
        ++c.cases;
        if (c.failure.empty() && (got.exhausted || got.words != std::vector<Word>{want}))
            c.failure = "input " + show(in);
    };
    {
        Check c{"T1"};
        for (std::size_t n = 0; n <= 64; ++n) {
            Word in = Word(n, U'0') + U'1';
            expect(c, apply_pdt(fx::t1(), in, limits), in, Word(n, U'0') + Word(n, U'1'));
        }
        checks.push_back(c);
    }
    {
        Check c{"T2"};
        for (std::size_t n = 1; n <= 32; ++n) {
            const Word block = Word(n, U'0') + Word(n, U'1');
            expect(c, apply_pdt(fx::t2(), block + U'0', limits), block + U'0', block + block);
        }
        checks.push_back(c);
    }
    Check t3{"T3"}, t4{"T4"}, phi_psi{"phi/psi"};
    for (std::size_t n = 0; n <= 10; ++n)
        for (unsigned long long v = 0; v < (1ULL << n); ++v) {
            const Word w = bits(n, v);
            if (n >= 1 && n <= 6) {
                Word r(w.rbegin(), w.rend());
                const Word x = w + U'c' + r + U'c';
                expect(t3, apply_pdt(fx::t3(), x, limits), x, x + x);
                const Word y = U'a' + w + U'b';
                expect(t4, apply_2fst(fx::t4(), y, limits), y, U'a' + w + U'a' + w);
            }
            auto marked = apply_fst(fx::phi(), w, limits);
            expect(phi_psi, marked, w, fx::kInitialMarker + w + fx::kFinalMarker);
            if (marked.words.size() == 1)
                expect(phi_psi, apply_fst(fx::psi(), marked.words[0], limits), marked.words[0], w);
        }
    checks.push_back(t3);
    checks.push_back(t4);
    checks.push_back(phi_psi);

    Check enc{"encoder"}, uni{"U"};
    const auto encoder = encoding::build_encoder_2pdt();
    const auto u = build_universal_pda();
    for (const Pda& m : {fx::m_odd(), fx::m01(), fx::anbn()}) {
        const auto r = encoding::rep_list(m);
        for (std::size_t n = 0; n <= 6; ++n)
            for (unsigned long long v = 0; v < (1ULL << n); ++v) {
                const Word w = bits(n, v);
                if (n <= 4)
                    expect(enc, apply_2pdt(encoder, encoding::encoder_input(r, w), limits), w,
                           encoding::encode_input(r, w));
                ++uni.cases;
                const auto a = universal_run(u, m, w, limits);
                const auto b = pda_accepts(m, w, limits);
                if (uni.failure.empty() && (a.outcome != b.outcome || a.outcome == Outcome::budget_exhausted))
                    uni.failure = m.name + " on " + show(w);
            }
    }
    checks.push_back(enc);
    checks.push_back(uni);
    return checks;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Automata, transducers and a universal pushdown automaton", "uniauto"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    std::size_t budget = SearchLimits{}.budget;
    std::size_t stack_cap = 0;
    app.add_option("--format", format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
    app.add_option("--budget", budget, "search step budget");
    app.add_option("--stack-cap", stack_cap, "stack height cap (0: 2|w|+16)");

    std::string machine, word, machine_b, fixture, encoded, candidate, enc_path, dec_path, symbol;
    std::size_t max_len = 6;
    int qmax = 5;
    unsigned threads = 1;
    bool via_2pdt = false;
    bool symbolic = false;

    auto* sim = app.add_subcommand("sim", "run an nfa or pda on a word");
    sim->add_option("-m,--machine", machine, "machine file")->required();
    sim->add_option("-w,--word", word, "input word")->required();

    auto* trans = app.add_subcommand("trans", "transducers")->require_subcommand(1);
    auto* trans_apply = trans->add_subcommand("apply", "print the image of a word");
    auto* trans_m = trans_apply->add_option("-m,--machine", machine, "transducer file");
    trans_apply->add_option("--fixture", fixture, "built-in transducer (T1..T4, phi, psi)")->excludes(trans_m);
    trans_apply->add_option("-w,--word", word, "input word")->required();

    auto* encode = app.add_subcommand("encode", "print the encoded input for a lettering pda");
    encode->add_option("-m,--machine", machine, "machine file")->required();
    encode->add_option("-w,--word", word, "input word")->required();
    encode->add_flag("--via-2pdt", via_2pdt, "compute it with the encoder transducer");

    auto* upda = app.add_subcommand("upda", "universal pda")->require_subcommand(1);
    auto* upda_run = upda->add_subcommand("run", "simulate a machine through the universal pda");
    auto* upda_m = upda_run->add_option("-m,--machine", machine, "machine file");
    auto* upda_w = upda_run->add_option("-w,--word", word, "input word");
    upda_run->add_option("--input", encoded, "an already encoded input")->excludes(upda_m)->excludes(upda_w);
    upda_run->add_flag("--symbolic", symbolic, "use the tuple-symbol variant");

    auto* oracle = app.add_subcommand("oracle", "bounded languages")->require_subcommand(1);
    auto* enumerate = oracle->add_subcommand("enumerate", "list accepted words up to a length");
    enumerate->add_option("-m,--machine", machine, "machine file")->required();
    enumerate->add_option("--max-len", max_len, "length bound");
    auto* equal = oracle->add_subcommand("equal", "compare two bounded languages");
    equal->add_option("-a", machine, "first machine file")->required();
    equal->add_option("-b", machine_b, "second machine file")->required();
    equal->add_option("--max-len", max_len, "length bound");

    auto* ts = app.add_subcommand("ts", "transition systems")->require_subcommand(1);
    auto* refute_universal = ts->add_subcommand("refute-universal", "unary singleton counterexample");
    refute_universal->add_option("-m,--machine", machine, "nfa file")->required();
    refute_universal->add_option("--symbol", symbol, "unary letter (default: first input symbol)");

    auto* gadgets_cmd = app.add_subcommand("gadgets", "nonexistence gadgets")->require_subcommand(1);
    auto* verify_mu = gadgets_cmd->add_subcommand("verify-mu", "exhaustive M_mu check");
    verify_mu->add_option("--qmax", qmax, "largest state index");
    verify_mu->add_option("--threads", threads, "worker threads (0: all cores)");
    auto* refute = gadgets_cmd->add_subcommand("refute", "bounded refutation of a universal candidate");
    refute->add_option("--candidate", candidate, "nfa or pda file")->required();
    refute->add_option("--maxlen", max_len, "length bound k");
    auto* enc_opt = refute->add_option("--enc", enc_path, "deterministic fst encoding");
    refute->add_option("--dec", dec_path, "deterministic fst decoding")->needs(enc_opt);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "built-in machines")->require_subcommand(1);
    auto* fx_verify = fixtures_cmd->add_subcommand("verify", "check all built-in transducer images");
    auto* fx_list = fixtures_cmd->add_subcommand("list", "list built-in machines");
    auto* fx_print = fixtures_cmd->add_subcommand("print", "print a built-in machine");
    fx_print->add_option("name", fixture, "machine name")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    Context ctx{out, format == "json-lines", {budget, stack_cap}};
    try {
        if (sim->parsed()) {
            const Pda m = as_acceptor(load(machine), machine);
            const Word w = from_utf8(word);
            const auto v = pda_accepts(m, w, ctx.limits);
            ctx.emit({{"command", "sim"}, {"machine", m.name}, {"word", word}, {"verdict", to_string(v.outcome)}},
                     to_string(v.outcome));
            return verdict_code(v.outcome);
        }
        if (trans_apply->parsed()) {
            if (machine.empty() && fixture.empty())
                throw InputError("trans apply needs -m or --fixture");
            const Word w = from_utf8(word);
            OutputSet image;
            if (!fixture.empty())
                image = fixtures::apply_fixture(fixtures::transducer_fixture(fixture), w, ctx.limits);
            else
                image = apply_any(load(machine), w, ctx.limits);
            json outputs = json::array();
            std::string text;
            for (const auto& o : image.words) {
                outputs.push_back(to_utf8(o));
                text += (text.empty() ? "" : "\n") + show(o);
            }
            if (image.exhausted)
                text += std::string(text.empty() ? "" : "\n") + "budget_exhausted";
            if (text.empty())
                text = "empty";
            ctx.emit({{"command", "trans apply"}, {"word", word}, {"outputs", outputs}, {"exhausted", image.exhausted}},
                     text);
            return image.exhausted ? kUsage : image.words.empty() ? kNo : kOk;
        }
        if (encode->parsed()) {
            const Pda m = as_acceptor(load(machine), machine);
            const Word w = from_utf8(word);
            const auto r = encoding::rep_list(m);
            Word result;
            if (via_2pdt) {
                auto image = apply_2pdt(encoding::build_encoder_2pdt(), encoding::encoder_input(r, w), ctx.limits);
                if (image.exhausted)
                    throw BudgetExhausted("encoder transducer exhausted its budget");
                if (image.words.size() != 1)
                    throw InputError("encoder transducer produced " + std::to_string(image.words.size()) + " outputs");
                result = image.words[0];
            } else {
                result = encoding::encode_input(r, w);
            }
            ctx.emit({{"command", "encode"}, {"word", word}, {"encoding", to_utf8(result)}}, to_utf8(result));
            return kOk;
        }
        if (upda_run->parsed()) {
            Verdict v;
            if (!encoded.empty()) {
                if (symbolic)
                    throw InputError("--symbolic needs -m and -w");
                const Word in = from_utf8(encoded);
                encoding::parse_encoded_input(in);
                v = pda_accepts(build_universal_pda().machine, in, ctx.limits);
            } else {
                if (machine.empty() || upda_w->count() == 0)
                    throw InputError("upda run needs -m and -w, or --input");
                const Pda m = as_acceptor(load(machine), machine);
                const Word w = from_utf8(word);
                if (symbolic) {
                    auto [q, d] = symbolic_sizes(m);
                    v = pda_accepts(build_symbolic_upda(q, d), symbolic_input(m, w), ctx.limits);
                } else {
                    v = universal_run(build_universal_pda(), m, w, ctx.limits);
                }
            }
            ctx.emit({{"command", "upda run"}, {"verdict", to_string(v.outcome)}}, to_string(v.outcome));
            return verdict_code(v.outcome);
        }
        if (enumerate->parsed()) {
            const Pda m = as_acceptor(load(machine), machine);
            for (const auto& w : enumerate_language(m, max_len, {ctx.limits.budget * 10, ctx.limits.stack_cap}))
                ctx.emit({{"word", to_utf8(w)}}, show(w));
            return kOk;
        }
        if (equal->parsed()) {
            const Pda a = as_acceptor(load(machine), machine);
            const Pda b = as_acceptor(load(machine_b), machine_b);
            const SearchLimits lim{ctx.limits.budget * 10, ctx.limits.stack_cap};
            const auto r = compare_word_sets(enumerate_language(a, max_len, lim), enumerate_language(b, max_len, lim));
            if (r.equal) {
                ctx.emit({{"command", "oracle equal"}, {"equal", true}}, "equal");
                return kOk;
            }
            ctx.emit({{"command", "oracle equal"}, {"equal", false}, {"counterexample", to_utf8(r.counterexample)}},
                     "counterexample " + show(r.counterexample));
            return kNo;
        }
        if (refute_universal->parsed()) {
            const auto m = load(machine);
            const auto* n = std::get_if<Nfa>(&m);
            if (!n)
                throw InputError(machine + ": expected an nfa");
            Symbol a;
            if (!symbol.empty()) {
                Word s = from_utf8(symbol);
                if (s.size() != 1)
                    throw InputError("--symbol must be a single symbol");
                a = s[0];
            } else {
                if (n->input.size() == 0)
                    throw InputError("the machine has no input symbols; pass --symbol");
                a = *n->input.begin();
            }
            const auto r = reg_universality_counterexample(ts_from_fa(*n), a);
            json witnesses = json::array();
            std::string text = "n = " + std::to_string(r.n);
            for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
                witnesses.push_back(r.witnesses[k]);
                text += "\n" + to_utf8(a) + "^" + std::to_string(k) + ": state " + std::to_string(r.witnesses[k]);
            }
            ctx.emit({{"command", "ts refute-universal"}, {"n", r.n}, {"witnesses", witnesses}}, text);
            return kNo;
        }
        if (verify_mu->parsed()) {
            const auto r = gadgets::verify_mu_theorem(qmax, threads);
            if (r.confirmed) {
                ctx.emit({{"command", "gadgets verify-mu"}, {"qmax", qmax}, {"confirmed", true}, {"checked", r.checked}},
                         "confirmed (" + std::to_string(r.checked) + " index tuples)");
                return kOk;
            }
            ctx.emit({{"command", "gadgets verify-mu"},
                      {"qmax", qmax},
                      {"confirmed", false},
                      {"counterexample", r.counterexample->v}},
                     "counterexample " + r.counterexample->to_string());
            return kNo;
        }
        if (refute->parsed()) {
            const Pda u = as_acceptor(load(candidate), candidate);
            gadgets::Refutation r;
            if (enc_path.empty()) {
                r = gadgets::refute_candidate(u, max_len);
            } else {
                if (dec_path.empty())
                    throw InputError("--enc needs --dec");
                r = gadgets::refute_candidate(u, as_fst(load(enc_path), enc_path), as_fst(load(dec_path), dec_path),
                                              max_len);
            }
            if (!r.found) {
                ctx.emit({{"command", "gadgets refute"}, {"found", false}}, "none-found");
                return kOk;
            }
            ctx.emit({{"command", "gadgets refute"},
                      {"found", true},
                      {"counterexample", to_utf8(r.counterexample)},
                      {"produced", r.produced}},
                     "counterexample " + to_utf8(r.counterexample) +
                         (r.produced ? " (produced, not required)" : " (required, not produced)"));
            return kNo;
        }
        if (fx_verify->parsed()) {
            bool ok = true;
            for (const auto& c : verify_fixtures(ctx.limits)) {
                const bool pass = c.failure.empty();
                ok = ok && pass;
                ctx.emit({{"fixture", c.name}, {"pass", pass}, {"cases", c.cases}, {"failure", c.failure}},
                         std::string(pass ? "pass " : "FAIL ") + c.name + " (" + std::to_string(c.cases) + " cases)" +
                             (pass ? "" : ": " + c.failure));
            }
            return ok ? kOk : kNo;
        }
        if (fx_list->parsed()) {
            for (const auto& n : machine_names())
                ctx.emit({{"name", n}, {"type", type_name(*named_machine(n))}}, n);
            return kOk;
        }
        if (fx_print->parsed()) {
            auto m = named_machine(fixture);
            if (!m)
                throw InputError("unknown machine '" + fixture + "'");
            out << print_machine(*m);
            return kOk;
        }
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace uniauto::cli
