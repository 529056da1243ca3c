#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "paragrass/serialize.hpp"
#include "paragrass/verify.hpp"

namespace {

using namespace paragrass;

struct Options {
    std::string command;  // tables / verify / expand
    std::string kind;     // subcommand positional
    std::string backend;  // exact / float64 (empty: env, then exact)
    std::string format = "text";
    std::string alpha;
    int n = 2;
    int n_max = 8;
    bool normalized = false;
    double tolerance = 1e-10;
    unsigned long seed = 12345;
    int corrupt_g = -1;
};

void emit(const json& j, const std::string& csv, const std::string& text, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: std::cout << j.dump(2) << "\n"; break;
        case OutputFormat::Csv: std::cout << csv; break;
        case OutputFormat::Text: std::cout << text; break;
    }
}

template <class C>
LadderSpec<C> spec_from_options(const Options& opt, bool required) {
    if (opt.alpha.empty()) {
        if (required) throw std::invalid_argument("--alpha is required for this table kind");
        return LadderSpec<C>::unit(opt.n);
    }
    LadderSpec<C> spec{opt.n, parse_alpha<C>(opt.alpha, opt.n)};
    spec.validate();
    return spec;
}

template <class C>
int run_tables(const Options& opt, OutputFormat format) {
    check_degree<C>(opt.n);  // the g recurrence alone would run past the cap
    RunConfig cfg;
    cfg.corrupt_g_index = opt.corrupt_g;
    GTable table = cfg.g_table(opt.n);

    if (opt.kind == "g") {
        emit(g_table_to_json(table), g_table_to_csv(table), g_table_to_text(table), format);
        return 0;
    }

    std::vector<C> values;
    std::vector<C> alpha;
    if (opt.kind == "a") {
        LadderSpec<C> spec = spec_from_options<C>(opt, true);
        alpha = spec.alpha;
        values = normalization_coeffs(spec).a;
    } else if (opt.kind == "w" || opt.kind == "wtilde") {
        LadderSpec<C> spec = spec_from_options<C>(opt, true);
        alpha = spec.alpha;
        values = solve_weight(spec, opt.kind == "w", table).w;
    } else if (opt.kind == "wD" || opt.kind == "wDprime") {
        DisplacementVariant v = (opt.kind == "wD") ? DisplacementVariant::Linear
                                                   : DisplacementVariant::PowerSum;
        values = solve_weight_displaced<C>(opt.n, v, table).w;
    } else {
        throw std::invalid_argument("unknown table kind: " + opt.kind);
    }
    emit(scalar_table_to_json(opt.n, opt.kind, alpha, values), scalar_table_to_csv(values),
         scalar_table_to_text(opt.kind, values), format);
    return 0;
}

template <class C>
int run_expand(const Options& opt, OutputFormat format) {
    Element<C> state = Element<C>::zero(opt.n, PayloadKind::Ket);
    std::vector<C> alpha;
    if (opt.kind == "right" || opt.kind == "left") {
        LadderSpec<C> spec = spec_from_options<C>(opt, false);
        alpha = spec.alpha;
        state = (opt.kind == "right") ? right_cs(spec, opt.normalized) : left_cs(spec, opt.normalized);
    } else if (opt.kind == "D" || opt.kind == "Dprime") {
        DisplacementVariant v = (opt.kind == "D") ? DisplacementVariant::Linear
                                                  : DisplacementVariant::PowerSum;
        state = displaced_state<C>(opt.n, v);
    } else {
        throw std::invalid_argument("unknown expansion kind: " + opt.kind);
    }
    emit(element_to_json(state, opt.kind, alpha), element_to_csv(state), state.to_string() + "\n",
         format);
    return 0;
}

template <class C>
int run_verify(const Options& opt, OutputFormat format) {
    check_degree<C>(opt.n_max);  // fail fast instead of mid-suite
    RunConfig cfg;
    cfg.n_max = opt.n_max;
    cfg.seed = opt.seed;
    cfg.corrupt_g_index = opt.corrupt_g;
    Report rep = run_scope<C>(opt.kind, cfg);
    emit(report_to_json(rep), report_to_csv(rep), report_to_text(rep), format);
    return rep.all_pass() ? 0 : 1;
}

template <class C>
int run(const Options& opt) {
    OutputFormat format = parse_format(opt.format);
    if (opt.command == "tables") return run_tables<C>(opt, format);
    if (opt.command == "expand") return run_expand<C>(opt, format);
    if (opt.command == "verify") return run_verify<C>(opt, format);
    throw std::invalid_argument("unknown command: " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"para-Grassmann coherent-state engine: tables, expansions, verification"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", opt.backend, "scalar backend: exact or float64");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--tolerance", opt.tolerance, "absolute tolerance (float64 backend)");
    };

    CLI::App* tables = app.add_subcommand("tables", "print a coefficient table");
    tables->add_option("kind", opt.kind, "g | a | w | wtilde | wD | wDprime")
        ->required()
        ->check(CLI::IsMember({"g", "a", "w", "wtilde", "wD", "wDprime"}));
    tables->add_option("--n", opt.n, "nilpotency degree")->required();
    tables->add_option("--alpha", opt.alpha, "ladder parameters, comma-separated");
    tables->add_option("--corrupt-g", opt.corrupt_g, "test hook: add 1 to g_k before use");
    add_common(tables);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("scope", opt.kind, "core | berezin | right | left | displacement | all")
        ->required()
        ->check(CLI::IsMember({"core", "berezin", "right", "left", "displacement", "all"}));
    verify->add_option("--n-max", opt.n_max, "verify n = 1 .. n-max");
    verify->add_option("--seed", opt.seed, "seed for randomized ladder parameters");
    verify->add_option("--corrupt-g", opt.corrupt_g, "test hook: add 1 to g_k before use");
    add_common(verify);

    CLI::App* expand = app.add_subcommand("expand", "print a coherent / displaced state expansion");
    expand->add_option("kind", opt.kind, "right | left | D | Dprime")
        ->required()
        ->check(CLI::IsMember({"right", "left", "D", "Dprime"}));
    expand->add_option("--n", opt.n, "nilpotency degree")->required();
    expand->add_option("--alpha", opt.alpha, "ladder parameters, comma-separated");
    expand->add_flag("--normalized", opt.normalized, "apply the normalization factor");
    add_common(expand);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly; usage errors are code 2
    }

    for (CLI::App* sub : {tables, verify, expand})
        if (sub->parsed()) opt.command = sub->get_name();

    std::string backend = opt.backend;
    if (backend.empty()) {
        const char* env = std::getenv("PARAGRASS_BACKEND");
        backend = env ? env : "exact";
    }

    try {
        if (backend == "exact") return run<paragrass::GaussianRational>(opt);
        if (backend == "float64") {
            paragrass::float_tolerance() = opt.tolerance;
            return run<paragrass::Complex64>(opt);
        }
        std::cerr << "error: unknown backend '" << backend << "'\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
