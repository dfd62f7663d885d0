#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hecke/io.hpp"

using namespace hecke;
using nlohmann::ordered_json;

namespace {

struct Options {
    long q = 3;
    std::string form, matrix, dmax;
    bool text = false;
    long precision_bits = 128;
    int threads = 1;
};

std::string poly_text(const std::vector<mpz_class>& coeffs, const std::string& var) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        mpz_class mag = abs(coeffs[i]);
        std::string term;
        if (i == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str();
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = (coeffs[i] < 0 ? "-" : "") + term;
        else
            out += (coeffs[i] < 0 ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_info(const Options& opt) {
    ContextPtr ctx = RingContext::make(opt.q);
    Generators gen = generators(ctx);
    std::string lambda_dec = ctx->lambda_decimal(opt.precision_bits);

    ordered_json j;
    j["q"] = ctx->q();
    j["degree"] = ctx->degree();
    ordered_json mp = ordered_json::array();
    for (const auto& c : ctx->min_poly()) mp.push_back(c.get_str());
    j["min_poly"] = mp;
    j["min_poly_text"] = poly_text(ctx->min_poly(), "x");
    j["lambda"] = {{"text", "L"}, {"decimal", lambda_dec}};
    j["delta0"] = {{"text", "L"}, {"decimal", lambda_dec}};
    j["generators"] = {{"S", to_json(gen.S)}, {"T", to_json(gen.T)}, {"U", to_json(gen.U)}};
    ordered_json ginv = ordered_json::array();
    ordered_json intervals = ordered_json::array();
    for (long k = 1; k <= ctx->q() - 1; ++k) {
        ginv.push_back(to_json(gen.g_inv[k - 1]));
        intervals.push_back({{"k", k},
                             {"left", to_text(gen.left[k - 1])},
                             {"right", to_text(gen.right[k - 1])}});
    }
    j["g_inv"] = ginv;
    j["intervals"] = intervals;

    if (!opt.text) {
        emit(j);
        return 0;
    }
    std::cout << "Hecke triangle group parameter q = " << ctx->q() << "\n"
              << "degree of Q(lambda): " << ctx->degree() << "\n"
              << "minimal polynomial of lambda: " << j["min_poly_text"].get<std::string>()
              << "\n"
              << "lambda = 2cos(pi/q) = " << lambda_dec << "\n"
              << "delta0 (decision-step decrease) = lambda\n"
              << "S = " << to_text(gen.S) << "\nT = " << to_text(gen.T)
              << "\nU = " << to_text(gen.U) << "\n";
    for (long k = 1; k <= ctx->q() - 1; ++k)
        std::cout << "g" << k << "^-1 = " << to_text(gen.g_inv[k - 1]) << "   interval ["
                  << to_text(gen.left[k - 1]) << ", " << to_text(gen.right[k - 1]) << ")\n";
    return 0;
}

int run_reduce(const Options& opt) {
    if (opt.form.empty() == opt.matrix.empty())
        throw ParseError("reduce needs exactly one of --form or --matrix");
    ContextPtr ctx = RingContext::make(opt.q);
    ProjForm F = opt.form.empty() ? psi2_inv(parse_matrix(ctx, opt.matrix))
                                  : parse_form(ctx, opt.form);
    ReductionResult r = reduce(F);
    if (!opt.text) {
        emit(to_json(r));
        return 0;
    }
    std::cout << "input form: " << to_text(F) << "\nlevel: " << r.level << "\npreperiod:";
    for (const auto& f : r.preperiod) std::cout << " " << to_text(f);
    std::cout << "\nperiod:";
    for (const auto& f : r.period) std::cout << " " << to_text(f);
    std::cout << "\nconjugator: " << to_text(r.conjugator) << "\nperiod word:";
    for (long k : r.period_word) std::cout << " g" << k << "^-1";
    std::cout << "\nhyperbolic element: " << to_text(r.hyperbolic_element) << "\n"
              << "displacement length: "
              << displacement(r.hyperbolic_element, opt.precision_bits).decimal << "\n";
    return 0;
}

int run_decide(const Options& opt) {
    ContextPtr ctx = RingContext::make(opt.q);
    ProjMatrix g = parse_matrix(ctx, opt.matrix);
    DecisionResult r = decide(g);
    if (!opt.text) {
        emit(to_json(r));
        return 0;
    }
    if (r.member) {
        std::cout << "member of Gamma_" << opt.q << ": yes\nword:";
        if (r.word.empty()) std::cout << " (empty)";
        for (const auto& t : r.word) std::cout << " " << t.str();
        std::cout << "\n";
    } else {
        std::cout << "member of Gamma_" << opt.q << ": no\n";
    }
    std::cout << "iterations: " << r.iterations << " (bound " << r.bound << ")\n";
    return 0;
}

int run_enumerate(const Options& opt) {
    ContextPtr ctx = RingContext::make(opt.q);
    mpq_class dmax;
    try {
        dmax = mpq_class(opt.dmax);
        dmax.canonicalize();
    } catch (const std::exception&) {
        throw ParseError("invalid rational bound '" + opt.dmax + "'");
    }
    EnumerationReport rep = enumerate_reduced(dmax, ctx, opt.threads);
    if (!opt.text) {
        emit(to_json(rep));
        return 0;
    }
    std::cout << "reduced Gamma_" << opt.q << "-forms with discriminant <= "
              << dmax.get_str() << " (word cap " << rep.word_length_cap << ", explored "
              << rep.explored << " nodes):\n";
    for (const auto& f : rep.forms) {
        std::cout << to_text(f.form) << "   D = " << to_text(f.discriminant) << "   word:";
        for (long k : f.word) std::cout << " g" << k << "^-1";
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reduction theory and membership for Hecke triangle groups"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* info = app.add_subcommand("info", "ring and generator data for Gamma_q");
    CLI::App* red = app.add_subcommand("reduce", "run the reduction algorithm on a form");
    CLI::App* dec = app.add_subcommand("decide", "decide membership of a matrix in Gamma_q");
    CLI::App* enu = app.add_subcommand("enumerate",
                                       "list all reduced forms up to a discriminant bound");
    for (CLI::App* sub : {info, red, dec, enu}) {
        sub->add_option("--q", opt.q, "Hecke triangle group parameter (q >= 3)")->required();
        sub->add_flag("--text", opt.text, "human-readable output instead of JSON");
    }
    info->add_option("--precision-bits", opt.precision_bits, "decimal display precision");
    red->add_option("--precision-bits", opt.precision_bits,
                    "displacement display precision (text mode)");
    red->add_option("--form", opt.form, "projective oriented form [A;B;C;s]");
    red->add_option("--matrix", opt.matrix, "hyperbolic matrix [[a,b],[c,d]]");
    dec->add_option("--matrix", opt.matrix, "matrix [[a,b],[c,d]]")->required();
    enu->add_option("--dmax", opt.dmax, "discriminant bound (integer or rational)")
        ->required();
    enu->add_option("--threads", opt.threads, "worker threads for the search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return run_info(opt);
        if (red->parsed()) return run_reduce(opt);
        if (dec->parsed()) return run_decide(opt);
        if (enu->parsed()) return run_enumerate(opt);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const DiagnosticError& e) {
        std::cerr << "internal diagnostic: " << e.what() << "\n";
        return 4;
    }
}
