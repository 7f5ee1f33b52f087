#include "qkp/correspond.hpp"
#include "qkp/json_io.hpp"
#include "qkp/psdo.hpp"
#include "qkp/qpsdo.hpp"
#include "qkp/starcalc.hpp"
#include "qkp/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

qkp::RunConfig make_config(const std::string& q_text, const std::string& kappa_text, int depth,
                           int lambda_order, std::uint64_t seed, const std::string& output) {
    qkp::RunConfig cfg;
    cfg.q = qkp::QValue::parse(q_text);
    cfg.kappa = qkp::Rational::parse(kappa_text);
    cfg.depth = depth;
    cfg.lambda_order = lambda_order;
    cfg.seed = seed;
    if (output == "text") cfg.output = qkp::OutputMode::text;
    else if (output == "json") cfg.output = qkp::OutputMode::json;
    else throw std::invalid_argument("output must be 'text' or 'json'");
    cfg.validate();
    return cfg;
}

qkp::PhaseSymbol load_phase_symbol(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open operand file '" + path + "'");
    qkp::Json j = qkp::Json::parse(in);  // throws with byte location on parse failure
    return qkp::phase_symbol_from_json(j);
}

int cmd_verify(const std::string& suite, const qkp::RunConfig& cfg) {
    std::vector<qkp::CheckResult> results = qkp::run_suite(suite, cfg);
    if (cfg.output == qkp::OutputMode::json)
        std::cout << qkp::render_json(results).dump(2) << "\n";
    else
        std::cout << qkp::render_text(results);
    return qkp::all_passed(results) ? 0 : 1;
}

int cmd_flow(const std::string& kind, int n, const qkp::RunConfig& cfg) {
    if (n < 1 || n > 3) {
        std::cerr << "flow index must be in [1,3]\n";
        return 2;
    }
    qkp::Json eqs = qkp::Json::array();
    auto emit = [&](int index, const std::string& rhs) {
        if (cfg.output == qkp::OutputMode::json)
            eqs.push_back(qkp::Json{{"u", index}, {"rhs", rhs}});
        else
            std::cout << "d" << n << " u" << index << " = " << rhs << "\n";
    };

    if (kind == "kp") {
        qkp::DSeries F = qkp::kp_flow_rhs(qkp::make_lax_kp(cfg.depth), n);
        for (int i = 2; -(i - 1) >= F.s.low(); ++i) emit(i, F.s.coeff(-(i - 1)).str());
    } else if (kind == "moyal" || kind == "dkp") {
        qkp::Rational kap = kind == "dkp" ? qkp::Rational(0) : cfg.kappa;
        qkp::MoyalCoeffs u{qkp::SatoCoeffs::generators(cfg.depth).v};
        auto G = qkp::moyal_kp_flow_rhs(u, n, kap);
        for (int k = 0; -(k + 1) >= G.low(); ++k) emit(k + 2, G.coeff(-(k + 1)).str());
    } else if (kind == "qkp") {
        // concrete sample profile a_i(x) = x, stated in the output
        qkp::QOperatorSeries L(1, cfg.depth + 2, cfg.q);
        L.s.set(1, qkp::XLaurent(1));
        for (int i = 1; i <= cfg.depth; ++i) L.s.set(-i, qkp::XLaurent::monomial(1));
        if (cfg.output == qkp::OutputMode::text)
            std::cout << "profile: a_i(x) = x for i = 1.." << cfg.depth << ", a_0 = 0\n";
        qkp::QOperatorSeries F = qkp::qkp_flow_rhs(L, n);
        for (int p = F.s.effective_top(); p >= F.s.low(); --p) {
            if (cfg.output == qkp::OutputMode::json)
                eqs.push_back(qkp::Json{{"power", p}, {"rhs", F.s.coeff(p).str()}});
            else
                std::cout << "Dq^" << p << " coefficient of dL/dt" << n << " = "
                          << F.s.coeff(p).str() << "\n";
        }
    } else {
        std::cerr << "unknown flow kind '" << kind << "'\n";
        return 2;
    }
    if (cfg.output == qkp::OutputMode::json)
        std::cout << qkp::Json{{"flow", kind}, {"n", n}, {"equations", eqs}}.dump(2) << "\n";
    return 0;
}

int cmd_star(const std::string& product, const std::string& lhs_path, const std::string& rhs_path,
             const qkp::RunConfig& cfg) {
    static const std::map<std::string, qkp::StarProduct> products = {
        {"moyal", qkp::StarProduct::moyal},       {"qplane", qkp::StarProduct::qplane},
        {"qweyl", qkp::StarProduct::qweyl},       {"qstandard", qkp::StarProduct::qstandard},
        {"qantistandard", qkp::StarProduct::qantistandard}, {"circ", qkp::StarProduct::circ}};
    auto it = products.find(product);
    if (it == products.end()) {
        std::cerr << "unknown star product '" << product << "'\n";
        return 2;
    }
    qkp::PhaseSymbol f = load_phase_symbol(lhs_path);
    qkp::PhaseSymbol g = load_phase_symbol(rhs_path);
    qkp::PhaseSymbol result = qkp::apply_star(it->second, f, g, cfg.kappa, cfg.q);
    std::cout << qkp::to_json(result).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbol calculus workbench: truncated pseudodifferential algebras, "
                 "q-deformations, phase-space star products, and their identity suites"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options after the subcommand too

    std::string q_text = "3/2", kappa_text = "1/2", output = "text";
    int depth = 6, lambda_order = 8;
    std::uint64_t seed = 1;
    app.add_option("--q", q_text, "deformation parameter, exact rational p/r")->envname("QKP_Q");
    app.add_option("--kappa", kappa_text, "composition weight, exact rational")->envname("QKP_KAPPA");
    app.add_option("--depth", depth, "series window depth (<= 10)")->envname("QKP_DEPTH");
    app.add_option("--lambda-order", lambda_order, "sine-bracket truncation order (even, <= 12)")
        ->envname("QKP_LAMBDA_ORDER");
    app.add_option("--seed", seed, "seed for randomized suites")->envname("QKP_SEED");
    app.add_option("--output", output, "report format: text | json")->envname("QKP_OUTPUT");

    auto* verify = app.add_subcommand("verify", "run a named identity suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name or 'all'")->required();

    auto* flow = app.add_subcommand("flow", "print hierarchy flow equations");
    std::string flow_kind;
    int flow_n = 1;
    flow->add_option("kind", flow_kind, "kp | qkp | moyal | dkp")->required();
    flow->add_option("n", flow_n, "flow index (<= 3)")->required();

    auto* star = app.add_subcommand("star", "multiply two phase-space symbols from JSON files");
    std::string product, lhs_path, rhs_path;
    star->add_option("product", product, "moyal | qplane | qweyl | qstandard | qantistandard | circ")
        ->required();
    star->add_option("lhs", lhs_path, "left operand file")->required();
    star->add_option("rhs", rhs_path, "right operand file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        qkp::RunConfig cfg = make_config(q_text, kappa_text, depth, lambda_order, seed, output);
        if (verify->parsed()) return cmd_verify(suite, cfg);
        if (flow->parsed()) return cmd_flow(flow_kind, flow_n, cfg);
        if (star->parsed()) return cmd_star(product, lhs_path, rhs_path, cfg);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
