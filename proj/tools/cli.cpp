#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "betaseq/axioms.hpp"
#include "betaseq/codec.hpp"
#include "betaseq/errors.hpp"
#include "betaseq/serialize.hpp"
#include "betaseq/witness.hpp"

namespace betaseq::cli {

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    bool json = false;
};

// Thrown for bad user input; mapped to kUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const char* what) {
    auto n = Natural::parse(text);
    if (!n) {
        throw UsageError(std::string(what) + ": not a natural number: '" + text + "'");
    }
    return *std::move(n);
}

std::uint64_t parse_small(const std::string& text, const char* what) {
    auto n = parse_natural(text, what).to_u64();
    if (!n) {
        throw UsageError(std::string(what) + " exceeds 64 bits");
    }
    return *n;
}

// encode / decode / append

int cmd_encode(const std::vector<std::string>& values, std::ostream& out) {
    std::vector<Natural> xs;
    xs.reserve(values.size());
    for (const auto& v : values) {
        xs.push_back(parse_natural(v, "encode"));
    }
    out << to_json(seq_build(xs)).dump() << '\n';
    return kOk;
}

int cmd_decode(const std::string& len, const std::string& w, std::ostream& out) {
    const SeqHandle h{Natural(parse_small(len, "decode length")), parse_natural(w, "decode code")};
    const auto xs = seq_decode(h);
    out << to_json(std::span<const Natural>(xs)).dump() << '\n';
    return kOk;
}

int cmd_append(const Globals& g, const std::string& len, const std::string& w, const std::string& x,
               std::ostream& out) {
    const SeqHandle s{Natural(parse_small(len, "--len")), parse_natural(w, "--w")};
    const Natural value = parse_natural(x, "--x");
    const SeqHandle next = seq_append(s, value);
    const bool ok = verify_seq_step(s.w, s.len, value, next.w);
    if (g.json) {
        Json j = to_json(next);
        j["verify"] = ok;
        out << j.dump() << '\n';
    } else {
        out << "len     " << next.len << '\n'
            << "w       " << next.w << '\n'
            << "verify  " << (ok ? "true" : "false") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

// witnesses

std::string kind_of(const Certificate& c) {
    return std::visit(
        [](const auto& cert) -> std::string {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, InverseCertificate>) {
                return "inverse";
            } else if constexpr (std::is_same_v<T, StarWitness>) {
                return "star";
            } else {
                return "recode";
            }
        },
        c);
}

int cmd_verify_witness(const Globals& g, const std::string& path, std::ostream& out) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open certificate file '" + path + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("certificate is not valid JSON: ") + e.what());
    }
    const Certificate cert = certificate_from_json(j);
    const bool ok = verify(cert);
    if (g.json) {
        Json r;
        r["kind"] = kind_of(cert);
        r["valid"] = ok;
        out << r.dump() << '\n';
    } else {
        out << kind_of(cert) << " certificate: " << (ok ? "valid" : "INVALID") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

struct WitnessArgs {
    std::string kind;
    std::string k = "0", v = "0", i = "0", u = "0", vprime = "0", x = "0", kprime = "1", z = "0";
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
    Json j;
    if (a.kind == "inverse") {
        j = to_json(i1_inverse(parse_small(a.k, "--k"), parse_natural(a.v, "--v"),
                               parse_natural(a.i, "--i")));
    } else if (a.kind == "star") {
        j = to_json(star_identity(parse_natural(a.kprime, "--kprime"), parse_natural(a.i, "--i"),
                                  parse_natural(a.z, "--z")));
    } else {
        j = to_json(make_recode_certificate(parse_natural(a.u, "--u"), parse_natural(a.v, "--v"),
                                            parse_natural(a.vprime, "--vprime"),
                                            parse_natural(a.x, "--x"), parse_small(a.k, "--k")));
    }
    out << j.dump() << '\n';
    return kOk;
}

// axioms

void print_reports(const Globals& g, const std::vector<AxiomReport>& reports, std::ostream& out) {
    if (g.json) {
        for (const auto& r : reports) {
            out << to_json(r).dump() << '\n';
        }
        return;
    }
    out << std::left << std::setw(9) << "model" << std::setw(14) << "axiom" << std::setw(16)
        << "verdict" << std::setw(10) << "samples" << "counterexample" << '\n';
    for (const auto& r : reports) {
        out << std::left << std::setw(9) << r.model << std::setw(14) << r.axiom << std::setw(16)
            << (r.passed() ? "pass" : "counterexample");
        if (r.counterexample) {
            out << std::setw(10) << r.samples << r.counterexample->dump() << '\n';
        } else {
            out << r.samples << '\n';
        }
    }
}

/// True if every report matches its expected verdict and every
/// counterexample genuinely falsifies its axiom.
bool reports_as_expected(ModelId model, const std::vector<AxiomReport>& reports, std::ostream& err) {
    bool ok = true;
    for (const auto& r : reports) {
        if (r.axiom == "AUTOMORPHISM") {
            if (!r.passed()) {
                err << "automorphism check failed: " << r.counterexample->dump() << '\n';
                ok = false;
            }
            continue;
        }
        const AxiomId a = *parse_axiom(r.axiom);
        if (!r.passed() && reevaluate(model, a, *r.counterexample)) {
            err << r.axiom << ": reported counterexample does not falsify the axiom\n";
            ok = false;
        }
        if (!r.passed() && expected_to_hold(model, a)) {
            err << r.axiom << " failed on " << to_string(model) << '\n';
            ok = false;
        }
    }
    return ok;
}

int cmd_check_axioms(const Globals& g, const std::string& model_name,
                     const std::vector<std::string>& only, bool include_subtraction,
                     std::ostream& out, std::ostream& err) {
    const auto model = parse_model(model_name);
    if (!model) {
        throw UsageError("unknown model '" + model_name + "' (expected nat, polynat or qext)");
    }
    const SampleBudget budget{g.samples, g.seed};

    std::vector<AxiomId> axioms;
    bool automorphism = false;
    if (!only.empty()) {
        for (const auto& name : only) {
            const auto a = parse_axiom(name);
            if (!a) {
                throw UsageError("unknown axiom '" + name + "'");
            }
            if (*model == ModelId::qext && needs_order(*a)) {
                throw UsageError(name + " mentions <=, which qext does not define");
            }
            axioms.push_back(*a);
        }
    } else if (*model == ModelId::qext) {
        axioms.assign(q_axioms().begin(), q_axioms().end());
        automorphism = true;
    } else {
        axioms.assign(pa_minus_axioms().begin(), pa_minus_axioms().end());
        axioms.insert(axioms.end(), derived_properties().begin(), derived_properties().end());
        if (include_subtraction) {
            axioms.push_back(AxiomId::Subtraction);
        }
    }

    std::vector<AxiomReport> reports;
    for (const AxiomId a : axioms) {
        reports.push_back(check_axiom(*model, a, budget));
    }
    if (automorphism) {
        reports.push_back(verify_automorphism(budget));
    }
    print_reports(g, reports, out);
    return reports_as_expected(*model, reports, err) ? kOk : kVerificationFailed;
}

// demos

int demo_subtraction(const Globals& g, std::ostream& out) {
    const SampleBudget budget{g.samples, g.seed};
    const SubtractionCounterexample ce = subtraction_counterexample();
    const AxiomReport poly = check_axiom(ModelId::polynat, AxiomId::Subtraction, budget);
    const AxiomReport nat = check_axiom(ModelId::nat, AxiomId::Subtraction, budget);

    const Json expected = Json{{"x", polynat_to_json(ce.x)}, {"y", polynat_to_json(ce.y)}};
    const bool found_same = !poly.passed() && *poly.counterexample == expected &&
                            !reevaluate(ModelId::polynat, AxiomId::Subtraction, *poly.counterexample);
    const bool ok = found_same && nat.passed();

    if (g.json) {
        out << to_json(poly).dump() << '\n' << to_json(nat).dump() << '\n';
        Json summary;
        summary["demo"] = "subtraction";
        summary["x"] = polynat_to_json(ce.x);
        summary["y"] = polynat_to_json(ce.y);
        summary["blocking_degree"] = ce.degree;
        summary["x_le_y"] = lex_le(ce.x, ce.y);
        summary["ok"] = ok;
        out << summary.dump() << '\n';
    } else {
        out << "Semiring ℕ[X] of polynomials with natural coefficients, ordered\n"
               "lexicographically from the leading coefficient down.\n\n"
            << "  x = " << ce.x.to_string() << ",  y = " << ce.y.to_string() << '\n'
            << "  x <= y: " << (lex_le(ce.x, ce.y) ? "true" : "false") << '\n'
            << "  z + x = y forces, at degree " << ce.degree << ", z_" << ce.degree << " + "
            << ce.x.coeff(ce.degree) << " = " << ce.y.coeff(ce.degree)
            << ", which has no solution in ℕ.\n\n"
            << "Axiom checker, x <= y -> exists z (z + x = y):\n";
        print_reports(g, {poly, nat}, out);
        out << '\n'
            << (ok ? "OK: subtraction fails in ℕ[X] at (1, X) and holds in ℕ.\n"
                   : "UNEXPECTED: checker verdicts differ from the counterexample above.\n");
    }
    return ok ? kOk : kVerificationFailed;
}

constexpr const char* kPairingArgument =
    "Counting argument (prose, not machine-checked):\n"
    "  Let pi(x, y, p) be any formula that Q proves total and uniquely decodable.\n"
    "  In M, let p code the pair (a_i, a_j). Automorphisms preserve every formula,\n"
    "  so f(p) codes (a_{1-i}, a_{1-j}), a different pair. Hence f(p) != p, and\n"
    "  the only points f moves are a0 and a1, so every code of an atom pair is an\n"
    "  atom. Four atom pairs cannot have distinct codes among two atoms, so no\n"
    "  such pi exists: Q has no pairing and therefore is not sequential.\n";

int demo_q_pairing(const Globals& g, std::ostream& out) {
    const SampleBudget budget{g.samples, g.seed};
    const QElem a0 = QElem::atom(Atom::a0);
    const QElem a1 = QElem::atom(Atom::a1);
    const QElem three = QElem::standard(Natural(3));
    const QElem zero{};

    struct Row {
        std::string what;
        QElem got;
        QElem want;
    };
    const std::vector<Row> table{
        {"a0 + 3", qadd(a0, three), a0},     {"3 + a1", qadd(three, a1), a1},
        {"a0 + a1", qadd(a0, a1), a0},       {"3 * a0", qmul(three, a0), a0},
        {"0 * a1", qmul(zero, a1), a1},      {"a0 * 0", qmul(a0, zero), zero},
        {"a1 * 3", qmul(a1, three), a1},     {"S(a0)", qsucc(a0), a0},
        {"f(a0)", qext_swap(a0), a1},        {"f(3)", qext_swap(three), three},
    };
    bool ok = true;
    for (const auto& row : table) {
        ok = ok && row.got == row.want;
    }

    std::vector<AxiomReport> reports = check_q_axioms(budget);
    reports.push_back(verify_automorphism(budget));
    for (const auto& r : reports) {
        ok = ok && r.passed();
    }

    if (g.json) {
        for (const auto& row : table) {
            Json j;
            j["table"] = row.what;
            j["value"] = row.got.to_string();
            j["expected"] = row.want.to_string();
            out << j.dump() << '\n';
        }
        print_reports(g, reports, out);
        Json summary;
        summary["demo"] = "q-pairing";
        summary["pairs_of_atoms"] = 4;
        summary["atoms"] = 2;
        summary["argument"] = "prose";
        summary["ok"] = ok;
        out << summary.dump() << '\n';
    } else {
        out << "Model M = ℕ ∪ {a0, a1} with absorbing atoms.\n\nOperation table:\n";
        for (const auto& row : table) {
            out << "  " << std::left << std::setw(10) << row.what << "= " << row.got.to_string()
                << (row.got == row.want ? "" : "   (expected " + row.want.to_string() + ")")
                << '\n';
        }
        out << "\nQ axioms and the swap f(a_i) = a_{1-i}:\n";
        print_reports(g, reports, out);
        out << '\n' << kPairingArgument << '\n'
            << (ok ? "OK: M satisfies Q and f is an involutive automorphism.\n"
                   : "UNEXPECTED: a machine check above failed.\n");
    }
    return ok ? kOk : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beta-function sequence codes, their witnesses, and an axiom checker for "
                 "three arithmetic models.",
                 "betaseq"};
    app.require_subcommand(1, 1);

    Globals g;
    app.add_option("--seed", g.seed, "Seed for random sampling")->capture_default_str();
    app.add_option("--samples", g.samples, "Random samples per axiom")->capture_default_str();
    app.add_flag("--json", g.json, "Emit JSON lines instead of text");

    std::function<int()> action;

    auto* encode = app.add_subcommand("encode", "Build a sequence code from decimal values");
    std::vector<std::string> encode_values;
    encode->add_option("values", encode_values, "Entries, in order");
    encode->callback([&] { action = [&] { return cmd_encode(encode_values, out); }; });

    auto* decode = app.add_subcommand("decode", "Read the entries of (len, w)");
    std::string decode_len, decode_w;
    decode->add_option("len", decode_len)->required();
    decode->add_option("w", decode_w)->required();
    decode->callback([&] { action = [&] { return cmd_decode(decode_len, decode_w, out); }; });

    auto* append = app.add_subcommand("append", "Append x to (len, w) and verify the step");
    std::string append_len, append_w, append_x;
    append->add_option("--len", append_len)->required();
    append->add_option("--w", append_w)->required();
    append->add_option("--x", append_x)->required();
    append->callback(
        [&] { action = [&] { return cmd_append(g, append_len, append_w, append_x, out); }; });

    auto* verify_witness =
        app.add_subcommand("verify-witness", "Re-check a JSON certificate ('-' reads stdin)");
    std::string witness_path;
    verify_witness->add_option("file", witness_path)->required();
    verify_witness->callback(
        [&] { action = [&] { return cmd_verify_witness(g, witness_path, out); }; });

    auto* witness = app.add_subcommand("witness", "Produce a certificate as JSON");
    WitnessArgs wa;
    witness->add_option("kind", wa.kind)
        ->required()
        ->check(CLI::IsMember({"inverse", "star", "recode"}));
    witness->add_option("--k", wa.k, "Level (inverse, recode)");
    witness->add_option("--v", wa.v);
    witness->add_option("--i", wa.i);
    witness->add_option("--kprime", wa.kprime);
    witness->add_option("--z", wa.z);
    witness->add_option("--u", wa.u);
    witness->add_option("--vprime", wa.vprime);
    witness->add_option("--x", wa.x);
    witness->callback([&] { action = [&] { return cmd_witness(wa, out); }; });

    auto* check = app.add_subcommand("check-axioms", "Test axioms on a model");
    std::string model_name;
    std::vector<std::string> only;
    bool include_subtraction = false;
    check->add_option("--model", model_name, "nat, polynat or qext")->required();
    check->add_option("--axiom", only, "Restrict to these axioms (repeatable)");
    check->add_flag("--include-subtraction", include_subtraction,
                    "Also test x <= y -> exists z (z + x = y)");
    check->callback([&] {
        action = [&] {
            return cmd_check_axioms(g, model_name, only, include_subtraction, out, err);
        };
    });

    auto* demo = app.add_subcommand("demo", "Countermodel demonstrations");
    std::string demo_name;
    demo->add_option("which", demo_name)
        ->required()
        ->check(CLI::IsMember({"subtraction", "q-pairing"}));
    demo->callback([&] {
        action = [&] {
            return demo_name == "subtraction" ? demo_subtraction(g, out) : demo_q_pairing(g, out);
        };
    });

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace betaseq::cli
