// kvb: batch front end for products, coproducts, braidings and the axiom suites.
//
// Exit status: 0 every requested check passed, 1 a check failed, 2 a check was
// inconclusive, 3 malformed input, 4 degenerate kernel, 5 internal error.
// Command-line usage errors use CLI11's own codes, all above 100.
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kvb/axioms.hpp"
#include "kvb/errors.hpp"
#include "kvb/poly_json.hpp"

using namespace kvb;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInconclusive = 2, kStructural = 3, kDegenerate = 4, kInternal = 5 };

int exit_code(Verdict v) { return v == Verdict::Pass ? kPass : v == Verdict::Fail ? kFail : kInconclusive; }

struct Config {
    std::string quiver;
    std::string kind;
    std::string convention;
    std::string wheel_convention = "kernel";
    std::string alpha, beta;
    std::string f, g, h;
    std::string form = "auto";
    std::string twist;
    std::string suite = "all";
    std::string mode = "auto";
    std::string output;
    std::string report;
    int order = -kDefaultWindow;
    unsigned max_dim = 2;
    unsigned max_total = 5;
    unsigned jobs = 0;
    uint64_t seed = 1;
    bool table = false;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

json builtin_quiver(const std::string& name) {
    json j;
    if (name == "edgeless") j = Quiver::edgeless().to_json();
    else if (name == "jordan") j = Quiver::jordan().to_json();
    else if (name == "a2") j = Quiver::a2().to_json();
    else return nullptr;
    j.erase("kind");
    j.erase("convention");
    return j;
}

// --kind overrides the file; without either the quiver is tripled.
Quiver load_quiver(const Config& c, const std::string& fallback = "edgeless") {
    std::string src = c.quiver.empty() ? fallback : c.quiver;
    json j = builtin_quiver(src);
    if (j.is_null()) j = read_json(src);
    if (!c.kind.empty()) j["kind"] = c.kind;
    else if (!j.contains("kind")) j["kind"] = "triple";
    if (!c.convention.empty()) j["convention"] = c.convention;
    try {
        return Quiver::from_json(j);
    } catch (const json::exception& e) {
        throw StructuralError(src + ": " + e.what());
    }
}

DimVector parse_dims(const Quiver& q, const std::string& flag, const std::string& text) {
    if (text.empty()) throw StructuralError(flag + " is required");
    std::vector<unsigned> d;
    std::string s = text;
    for (char& ch : s)
        if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
    std::istringstream in(s);
    long x;
    while (in >> x) {
        if (x < 0) throw StructuralError(flag + ": negative component in '" + text + "'");
        d.push_back(unsigned(x));
    }
    if (!in.eof()) throw StructuralError(flag + ": cannot parse '" + text + "'");
    if (d.size() != q.num_vertices())
        throw StructuralError(flag + ": '" + text + "' has " + std::to_string(d.size()) + " components, the quiver has " +
                              std::to_string(q.num_vertices()) + " vertices");
    return DimVector(d);
}

// A class file holds a polynomial, or {"dim": [...], "value": polynomial}.
// Slot variables are read as s(v,k) or s(T,v,k) and land on tag.
LaurentPoly load_class(const Quiver& q, const std::string& flag, const std::string& path, Tag tag) {
    if (path.empty()) throw StructuralError(flag + " is required");
    json j = read_json(path);
    if (j.is_object() && j.contains("value")) j = j.at("value");
    try {
        LaurentPoly p = poly_from_json(j, q.vars(), tag);
        return p.transform([&](const Monomial& m) {
            Monomial::Storage e;
            for (const auto& [v, x] : m.entries()) e.emplace_back(v.is_slot() ? v.with_tag(tag) : v, x);
            return Monomial::from_entries(std::move(e));
        });
    } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
    }
}

void check_slots(const KClass& f, const std::string& flag) {
    for (const auto& [m, c] : f.value.sorted_terms())
        for (const auto& [v, x] : m.entries())
            if (v.is_slot() && (v.vertex() >= f.dim.size() || v.slot_index() >= f.dim[v.vertex()]))
                throw StructuralError(flag + ": slot variable outside dimension " + f.dim.str());
}

void emit(const Config& c, const json& out) {
    std::string text = out.dump(2) + "\n";
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw StructuralError("cannot write " + c.output);
    f << text;
}

void write_report(const Config& c, const json& r) {
    if (c.report.empty()) return;
    std::ofstream f(c.report);
    if (!f) throw StructuralError("cannot write " + c.report);
    f << r.dump(2) << "\n";
}

int run_product(const Config& c) {
    Quiver q = load_quiver(c);
    KClass f{parse_dims(q, "--alpha", c.alpha), kTagA, load_class(q, "--f", c.f, kTagA)};
    KClass g{parse_dims(q, "--beta", c.beta), kTagB, load_class(q, "--g", c.g, kTagB)};
    check_slots(f, "--f");
    check_slots(g, "--g");
    HallForm form = c.form == "full"    ? HallForm::Full
                    : c.form == "coset" ? HallForm::Coset
                    // The coset form only matches the full form under the default sign.
                    : q.convention() == SignConvention::VertexMinusEdge ? HallForm::Coset
                                                                         : HallForm::Full;
    ShuffleResult r;
    std::string kind = "hall";
    if (c.twist.empty()) {
        r = hall_product(q, f, g, form);
    } else {
        TwistOrientation o = c.twist == "ab" || c.twist == "AB"   ? TwistOrientation::AB
                             : c.twist == "ba" || c.twist == "BA" ? TwistOrientation::BA
                                                                  : throw StructuralError("--twist must be ab or ba");
        r = twisted_product(q, f, g, o, form);
        kind = "twisted-" + c.twist;
    }
    if (c.table) {
        std::cout << "product " << kind << " of " << f.dim.str() << " and " << g.dim.str() << " ("
                  << (form == HallForm::Full ? "full" : "coset") << " form, " << r.terms << " terms)\n"
                  << "  " << to_string(r.value.value, q.vars()) << "\n";
        return kPass;
    }
    emit(c, {{"command", "product"},
             {"product", kind},
             {"quiver", q.to_json()},
             {"alpha", dims_json(f.dim)},
             {"beta", dims_json(g.dim)},
             {"form", form == HallForm::Full ? "full" : "coset"},
             {"dim", dims_json(r.value.dim)},
             {"value", to_json(r.value.value, q.vars())}});
    return kPass;
}

int run_coproduct(const Config& c) {
    Quiver q = load_quiver(c);
    DimVector alpha = parse_dims(q, "--alpha", c.alpha), beta = parse_dims(q, "--beta", c.beta);
    KClass h{alpha + beta, kTagA, load_class(q, "--h", c.h, kTagA)};
    check_slots(h, "--h");
    CoproductValue y = vertex_coproduct(q, h, alpha, beta, Monomial::var(kZ), -c.order);
    if (c.table) {
        std::cout << "Y_{" << alpha.str() << "," << beta.str() << "}(z)h, alpha on s(A,.), beta on s(B,.)\n"
                  << to_string(y.series, q.vars()) << "\n";
        return kPass;
    }
    json out{{"command", "coproduct"}, {"quiver", q.to_json()}, {"alpha", dims_json(alpha)},
             {"beta", dims_json(beta)}, {"series", to_json(y.series, q.vars())}};
    if (y.series.is_exact()) out["value"] = to_json(y.series.to_poly(), q.vars());
    emit(c, out);
    return kPass;
}

int run_braiding(const Config& c) {
    Quiver q = load_quiver(c);
    KClass u{parse_dims(q, "--alpha", c.alpha), kTagA, load_class(q, "--f", c.f, kTagA)};
    KClass v{parse_dims(q, "--beta", c.beta), kTagB, load_class(q, "--g", c.g, kTagB)};
    check_slots(u, "--f");
    check_slots(v, "--g");
    BraidedPair b = braiding_apply(q, u, v, Monomial::var(kZ), -c.order);
    if (c.table) {
        std::cout << "S(z)(u (x) v), beta on s(A,.), alpha on s(B,.)\n" << to_string(b.series, q.vars()) << "\n";
        return kPass;
    }
    emit(c, {{"command", "braiding"},
             {"quiver", q.to_json()},
             {"alpha", dims_json(u.dim)},
             {"beta", dims_json(v.dim)},
             {"series", to_json(b.series, q.vars())}});
    return kPass;
}

// Without --f the wheel class of the quiver is built and checked.
int run_wheel(const Config& c) {
    Quiver q = load_quiver(c);
    WheelConvention wc = wheel_convention_from_string(c.wheel_convention);
    DimVector d = parse_dims(q, "--alpha", c.alpha);
    KClass f = c.f.empty() ? wheel_class(q, d, wc) : KClass{d, kTagA, load_class(q, "--f", c.f, kTagA)};
    check_slots(f, "--f");
    CheckReport r = wheel_check(q, f, wc);
    write_report(c, r.to_json());
    if (c.table) {
        std::cout << "wheel " << to_string(wc) << " " << d.str() << ": " << to_string(r.verdict) << " (" << r.cases
                  << " loci)\n";
        if (!r.passed()) std::cout << "  " << r.witness << "\n";
        return exit_code(r.verdict);
    }
    emit(c, {{"command", "wheel"},
             {"quiver", q.to_json()},
             {"dim", dims_json(d)},
             {"class", to_json(f.value, q.vars())},
             {"report", r.to_json()}});
    return exit_code(r.verdict);
}

std::string quiver_label(const Quiver& q) {
    std::string base = q.num_vertices() == 2 ? "A2" : q.base_edges().empty() ? "edgeless" : "Jordan";
    return base + " " + to_string(q.kind()) + " " + to_string(q.convention());
}

int run_check(const Config& c) {
    static const std::vector<std::string> suites{"coalgebra", "bialgebra", "shuffle", "wheel", "all"};
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end())
        throw StructuralError("unknown suite '" + c.suite + "'");
    std::vector<Quiver> quivers;
    if (c.quiver.empty() && c.kind.empty() && c.convention.empty())
        quivers = test_quivers();
    else
        quivers.push_back(load_quiver(c));

    SuiteOptions o;
    o.max_component = c.max_dim;
    o.max_total = c.max_total;
    o.jobs = c.jobs ? c.jobs : std::max(1u, std::thread::hardware_concurrency());
    o.check.window_low = -c.order;
    o.check.mode = series_mode_from_string(c.mode);

    auto wants = [&](const std::string& s) { return c.suite == s || c.suite == "all"; };
    CheckReport total("check", {{"suite", c.suite}, {"order", c.order}, {"max_dim", c.max_dim}});
    json runs = json::array();
    auto add = [&](const std::string& quiver, const CheckReport& r) {
        json j = r.to_json();
        j["quiver"] = quiver;
        runs.push_back(j);
        total.absorb(r);
        if (c.table)
            std::cout << std::left << std::setw(34) << quiver << std::setw(18) << r.name << std::setw(14)
                      << to_string(r.verdict) << r.cases << " cases\n"
                      << std::flush;
    };
    for (const Quiver& q : quivers) {
        const std::string name = quiver_label(q);
        if (wants("coalgebra")) add(name, coalgebra_suite(q, o));
        if (wants("bialgebra")) add(name, bialgebra_suite(q, o));
        if (wants("shuffle")) add(name, shuffle_suite(q, o));
        if (wants("wheel")) {
            if (q.kind() == QuiverKind::Tripled) add(name, wheel_suite(q, o));
            else if (c.suite == "wheel") throw StructuralError("the wheel suite needs a tripled quiver");
        }
        if (c.suite == "all") add(name, kernel_identity_suite(q));
    }
    if (c.suite == "all") {
        add("-", knorrer_identity_check());
        add("-", ring_axiom_check(c.seed));
    }
    json rep = total.to_json();
    rep["runs"] = runs;
    write_report(c, rep);
    if (c.table) {
        std::cout << "overall: " << to_string(total.verdict) << " (" << total.cases << " cases)\n";
        if (!total.passed()) std::cout << "  " << total.witness << "\n";
    } else {
        emit(c, rep);
    }
    return exit_code(total.verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex coalgebra and shuffle algebra checks for quiver K-theoretic Hall algebras"};
    // Long form only: --h is the class of the coproduct.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* s) {
        s->add_option("--quiver", c.quiver, "Quiver JSON file, or edgeless | jordan | a2 (default edgeless)");
        s->add_option("--kind", c.kind, "plain | double | triple; overrides the file (default triple)");
        s->add_option("--convention", c.convention, "Sign of the bilinear class: default | literal");
        s->add_option("--output,-o", c.output, "Write the JSON result here instead of stdout");
        s->add_flag("--table", c.table, "Print a human-readable table instead of JSON");
    };
    auto window = [&](CLI::App* s) {
        s->add_option("--order", c.order, "Expansion order: keep z-degrees down to -order")->check(CLI::NonNegativeNumber);
    };

    CLI::App* product = app.add_subcommand("product", "Hall product f * g, or the twisted product with --twist");
    common(product);
    product->add_option("--alpha", c.alpha, "Dimension of f, e.g. 1,0")->required();
    product->add_option("--beta", c.beta, "Dimension of g")->required();
    product->add_option("--f", c.f, "Polynomial JSON of f")->required();
    product->add_option("--g", c.g, "Polynomial JSON of g")->required();
    product->add_option("--form", c.form, "auto | coset | full")->check(CLI::IsMember({"auto", "coset", "full"}));
    product->add_option("--twist", c.twist, "Orientation of the twist: ab | ba");

    CLI::App* coproduct = app.add_subcommand("coproduct", "Y_{alpha,beta}(z)h expanded for z -> oo");
    common(coproduct);
    window(coproduct);
    coproduct->add_option("--alpha", c.alpha, "First factor")->required();
    coproduct->add_option("--beta", c.beta, "Second factor")->required();
    coproduct->add_option("--h", c.h, "Polynomial JSON of h in dimension alpha + beta")->required();

    CLI::App* braiding = app.add_subcommand("braiding", "S(z)(u (x) v) expanded for z -> oo");
    common(braiding);
    window(braiding);
    braiding->add_option("--alpha", c.alpha, "Dimension of u")->required();
    braiding->add_option("--beta", c.beta, "Dimension of v")->required();
    braiding->add_option("--f", c.f, "Polynomial JSON of u")->required();
    braiding->add_option("--g", c.g, "Polynomial JSON of v")->required();

    CLI::App* wheel = app.add_subcommand("wheel", "Wheel condition of a class on a tripled quiver");
    common(wheel);
    wheel->add_option("--alpha", c.alpha, "Dimension vector")->required();
    wheel->add_option("--f", c.f, "Polynomial JSON of the class (default: the wheel class of the quiver)");
    wheel->add_option("--wheel-convention", c.wheel_convention, "kernel | literal")
        ->check(CLI::IsMember({"kernel", "literal"}));
    wheel->add_option("--report", c.report, "Write the check report here");

    CLI::App* check = app.add_subcommand("check", "Run an axiom suite; without --quiver, on every test quiver");
    common(check);
    window(check);
    check->add_option("--suite", c.suite, "coalgebra | bialgebra | shuffle | wheel | all");
    check->add_option("--max-dim", c.max_dim, "Largest component of a test dimension vector");
    check->add_option("--max-total", c.max_total, "Largest total dimension of a test vector");
    check->add_option("--jobs,-j", c.jobs, "Worker threads (default: hardware concurrency)");
    check->add_option("--mode", c.mode, "Series arithmetic: auto | exact | modular")
        ->check(CLI::IsMember({"auto", "exact", "modular"}));
    check->add_option("--seed", c.seed, "Seed of the randomized ring-axiom tests run by --suite all");
    check->add_option("--report", c.report, "Write the full report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (product->parsed()) return run_product(c);
        if (coproduct->parsed()) return run_coproduct(c);
        if (braiding->parsed()) return run_braiding(c);
        if (wheel->parsed()) return run_wheel(c);
        return run_check(c);
    } catch (const DegenerateKernelError& e) {
        std::cerr << "kvb: degenerate kernel at root " << e.root() << ": " << e.what() << "\n";
        write_report(c, {{"name", "error"}, {"verdict", "error"}, {"error", e.what()}, {"root", e.root()}});
        return kDegenerate;
    } catch (const StructuralError& e) {
        std::cerr << "kvb: " << e.what() << "\n";
        return kStructural;
    } catch (const CancellationError& e) {
        // A product that is not a Laurent polynomial.
        std::cerr << "kvb: " << e.what() << "\n";
        return kFail;
    } catch (const WindowError& e) {
        std::cerr << "kvb: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "kvb: internal error: " << e.what() << "\n";
        return kInternal;
    }
}
