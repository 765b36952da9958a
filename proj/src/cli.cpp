#include "ncprob/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ncprob/appell.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/documents.hpp"
#include "ncprob/error.hpp"
#include "ncprob/fock.hpp"
#include "ncprob/meixner.hpp"

namespace ncprob::cli {
namespace {

using documents::Json;

struct Options {
    std::vector<std::string> inputs;
    std::string params;
    std::string t;
    std::string beta;
    std::string alpha;
    std::string b;
    std::string c;
    std::string word;
    std::string groups;
    int degree = -1;
    int n = -1;
    int cutoff = -1;
};

struct Context {
    Options opt;
    std::istream& in;
    std::ostream& out;
    bool stdin_used = false;
};

// Result of a subcommand: the document to print and whether its check passed.
struct Outcome {
    Json doc;
    bool passed = true;
};

std::string read_text(Context& ctx, const std::string& path) {
    if (path == "-") {
        if (ctx.stdin_used) throw ParseError("standard input can be read only once");
        ctx.stdin_used = true;
        std::stringstream buffer;
        buffer << ctx.in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file \"" + path + "\"");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<Json> inputs(Context& ctx, std::size_t min, std::size_t max) {
    std::vector<std::string> paths = ctx.opt.inputs;
    if (paths.empty() && min <= 1) paths.push_back("-");
    if (paths.size() < min || paths.size() > max) {
        const std::string range = min == max ? std::to_string(min) : std::to_string(min) + ".." + std::to_string(max);
        throw ParseError("expected " + range + " --in documents, got " + std::to_string(paths.size()));
    }
    std::vector<Json> out;
    for (const std::string& path : paths) out.push_back(documents::parse(read_text(ctx, path)));
    return out;
}

Json single(Context& ctx) { return inputs(ctx, 1, 1).front(); }

Rational flag_rational(const std::string& text, const std::string& name) {
    if (text.empty()) throw ParseError("missing required flag --" + name);
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError("flag --" + name + ": " + e.what());
    }
}

int flag_int(int value, const std::string& name) {
    if (value < 0) throw ParseError("missing or negative flag --" + name);
    return value;
}

Json report(const std::map<std::string, bool>& checks) {
    Json doc = Json::object();
    bool all = true;
    for (const auto& [name, ok] : checks) {
        doc[name] = ok;
        all = all && ok;
    }
    doc["passed"] = all;
    return doc;
}

Outcome checked(Json doc) {
    const bool ok = doc.at("passed").get<bool>();
    return {std::move(doc), ok};
}

Functional moments_in(Context& ctx) { return documents::functional_from_json(single(ctx)); }

std::vector<std::vector<int>> parse_groups(const std::string& text, int d) {
    if (text.empty()) throw ParseError("missing required flag --groups");
    std::vector<std::vector<int>> out;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, '|')) {
        try {
            const MultiIndex letters = MultiIndex::parse(d, part);
            out.emplace_back(letters.letters().begin(), letters.letters().end());
        } catch (const ParseError& e) {
            throw ParseError("flag --groups: " + std::string(e.what()));
        }
    }
    return out;
}

bool is_params(const Json& doc) { return doc.is_object() && doc.contains("T") && !doc.contains("depth"); }

using Handler = std::function<Outcome(Context&)>;

std::map<std::string, Handler> handlers() {
    std::map<std::string, Handler> h;
    h["m2bc"] = [](Context& ctx) { return Outcome{documents::series_to_json(boolean_cumulants(moments_in(ctx)))}; };
    h["bc2m"] = [](Context& ctx) {
        return Outcome{documents::functional_to_json(moments_from_boolean_cumulants(documents::series_from_json(single(ctx))))};
    };
    h["m2fc"] = [](Context& ctx) { return Outcome{documents::series_to_json(free_cumulants(moments_in(ctx)))}; };
    h["fc2m"] = [](Context& ctx) {
        return Outcome{documents::functional_to_json(moments_from_free_cumulants(documents::series_from_json(single(ctx))))};
    };
    auto binary = [](Functional (*op)(const Functional&, const Functional&)) {
        return [op](Context& ctx) {
            const auto docs = inputs(ctx, 2, 2);
            return Outcome{documents::functional_to_json(
                op(documents::functional_from_json(docs[0]), documents::functional_from_json(docs[1])))};
        };
    };
    h["bconv"] = binary(&boolean_convolve);
    h["fconv"] = binary(&free_convolve);
    auto power = [](Functional (*op)(const Functional&, const Rational&)) {
        return [op](Context& ctx) {
            const Rational t = flag_rational(ctx.opt.t, "t");
            return Outcome{documents::functional_to_json(op(moments_in(ctx), t))};
        };
    };
    h["bpow"] = power(&boolean_power);
    h["fpow"] = power(&free_power);
    auto product = [](Functional (*op)(const std::vector<Functional>&)) {
        return [op](Context& ctx) {
            std::vector<Functional> factors;
            for (const Json& doc : inputs(ctx, 1, 64)) factors.push_back(documents::functional_from_json(doc));
            return Outcome{documents::functional_to_json(op(factors))};
        };
    };
    h["bprod"] = product(&boolean_product);
    h["fprod"] = product(&free_product);
    h["appell"] = [](Context& ctx) {
        const Functional phi = moments_in(ctx);
        MultiIndex u;
        try {
            u = MultiIndex::parse(phi.alphabet(), ctx.opt.word);
        } catch (const ParseError& e) {
            throw ParseError("flag --word: " + std::string(e.what()));
        }
        return Outcome{documents::polynomial_to_json(boolean_appell(phi, u))};
    };
    h["uni-appell"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.n, "n");
        Json clauses = Json::array();
        bool all = true;
        for (const ClauseResult& r : univariate_appell_suite(moments_in(ctx), n)) {
            clauses.push_back({{"counterexample", r.counterexample}, {"name", r.name}, {"passed", r.passed}});
            all = all && r.passed;
        }
        return Outcome{{{"clauses", clauses}, {"passed", all}}, all};
    };
    h["fock-moments"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.degree, "degree");
        return Outcome{documents::functional_to_json(fock_functional(documents::fock_from_json(single(ctx)), n))};
    };
    h["motzkin-moments"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.degree, "degree");
        const FockData data = documents::fock_from_json(single(ctx));
        NCSeries m(data.d, n);
        for (const MultiIndex& u : words_up_to(data.d, n)) m.set(u, motzkin_moment(data, u));
        return Outcome{documents::functional_to_json(Functional(m))};
    };
    h["cfrac"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.degree, "degree");
        const FockData data = documents::fock_from_json(single(ctx));
        const NCSeries m = ctx.opt.cutoff < 0 ? continued_fraction_moments(data, n)
                                              : continued_fraction_moments(data, n, ctx.opt.cutoff);
        return Outcome{documents::functional_to_json(Functional(m))};
    };
    h["mops-check"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.n, "n");
        const FockData data = documents::fock_from_json(single(ctx));
        return checked(report({{"orthogonal", mops_orthogonality_check(data, n)},
                               {"commutation", data.satisfies_commutation()}}));
    };
    h["bpow-fock"] = [](Context& ctx) {
        const Rational t = flag_rational(ctx.opt.t, "t");
        return Outcome{documents::fock_to_json(boolean_power_fock(documents::fock_from_json(single(ctx)), t))};
    };
    h["fock-cumulants"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.degree, "degree");
        return Outcome{documents::series_to_json(boolean_cumulants_from_fock(documents::fock_from_json(single(ctx)), n))};
    };
    h["gbf-decompose"] = [](Context& ctx) {
        const auto [x, omega] = documents::matrix_model_from_json(single(ctx));
        const BooleanFockDecomposition dec = general_boolean_fock_decompose(x, omega);
        Json doc = documents::decomposition_to_json(dec);
        if (ctx.opt.degree >= 0) doc["cumulants"] = documents::series_to_json(dec.boolean_cumulants(ctx.opt.degree));
        return Outcome{doc};
    };
    h["ebf-moments"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.degree, "degree");
        std::vector<Rational> m = extended_boolean_fock_moments(flag_rational(ctx.opt.b, "b"), flag_rational(ctx.opt.c, "c"),
                                                                flag_rational(ctx.opt.t, "t"), n);
        m.erase(m.begin());
        return Outcome{documents::functional_to_json(Functional::from_moments(m))};
    };
    h["pde-check"] = [](Context& ctx) {
        const Functional phi = moments_in(ctx);
        if (ctx.opt.params.empty()) throw ParseError("missing required flag --params");
        const MeixnerParams p = documents::params_from_json(documents::parse(read_text(ctx, ctx.opt.params)));
        const int free_deg = lowest_residual_degree(free_pde_residual(phi, p));
        const int bool_deg = lowest_residual_degree(boolean_pde_residual(phi, p));
        const bool ok = free_deg < 0 && bool_deg < 0;
        return Outcome{{{"boolean_lowest_degree", bool_deg}, {"free_lowest_degree", free_deg}, {"passed", ok}}, ok};
    };
    h["bt"] = [](Context& ctx) {
        const Rational t = flag_rational(ctx.opt.t, "t");
        const Json doc = single(ctx);
        if (is_params(doc)) return Outcome{documents::params_to_json(bt_transform_params(documents::params_from_json(doc), t))};
        return Outcome{documents::functional_to_json(bt_transform_series(documents::functional_from_json(doc), t))};
    };
    h["bp"] = [](Context& ctx) {
        const Json doc = single(ctx);
        if (is_params(doc)) return Outcome{documents::params_to_json(bp_bijection_params(documents::params_from_json(doc)))};
        return Outcome{documents::functional_to_json(bp_bijection_series(documents::functional_from_json(doc)))};
    };
    h["bernoulli"] = [](Context& ctx) {
        const Rational beta = flag_rational(ctx.opt.beta, "beta");
        return Outcome{documents::functional_to_json(bernoulli_functional(beta, flag_int(ctx.opt.degree, "degree")))};
    };
    h["cfree"] = [](Context& ctx) {
        const auto docs = inputs(ctx, 2, 4);
        std::vector<Functional> f;
        for (const Json& doc : docs) f.push_back(documents::functional_from_json(doc));
        if (f.size() == 2) return Outcome{documents::series_to_json(cfree_c_transform(f[0], f[1]))};
        if (f.size() != 4) throw ParseError("cfree takes 2 documents (mu, nu) or 4 (mu1, nu1, mu2, nu2)");
        const auto [mu, nu] = cfree_convolve({f[0], f[1]}, {f[2], f[3]});
        return Outcome{{{"mu", documents::functional_to_json(mu)}, {"nu", documents::functional_to_json(nu)}}};
    };
    h["laha-lukacs"] = [](Context& ctx) {
        const int n = flag_int(ctx.opt.n, "n");
        std::pair<Functional, Functional> xy = [&] {
            if (!ctx.opt.inputs.empty()) {
                const auto docs = inputs(ctx, 2, 2);
                return std::pair{documents::functional_from_json(docs[0]), documents::functional_from_json(docs[1])};
            }
            return laha_lukacs_pair(flag_rational(ctx.opt.alpha, "alpha"), flag_rational(ctx.opt.b, "b"), n + 2);
        }();
        const LahaLukacsReport r = laha_lukacs_check(xy.first, xy.second, n);
        Json doc = report({{"cumulants_proportional", r.cumulants_proportional},
                           {"mixed_cumulants", r.mixed_cumulants},
                           {"moment_relation", r.moment_relation},
                           {"variance_identity", r.variance_identity}});
        doc["alpha"] = to_string(r.alpha);
        doc["beta"] = to_string(r.beta);
        return checked(doc);
    };
    h["indep-check"] = [](Context& ctx) {
        const Functional phi = moments_in(ctx);
        const IndependenceReport r = check_boolean_independence(phi, parse_groups(ctx.opt.groups, phi.alphabet()));
        Json doc = {{"factorizes", r.factorizes}, {"mixed_cumulants_vanish", r.mixed_cumulants_vanish}, {"passed", r.independent()}};
        if (r.cumulant_witness) doc["cumulant_witness"] = r.cumulant_witness->to_string();
        if (r.factorization_witness) doc["factorization_witness"] = r.factorization_witness->to_string();
        return Outcome{doc, r.independent()};
    };
    return h;
}

void add_options(CLI::App& sub, Options& opt, const std::string& name) {
    sub.add_option("--in", opt.inputs, "input document (\"-\" for standard input)");
    auto has = [&](std::initializer_list<const char*> names) {
        for (const char* n : names) {
            if (name == n) return true;
        }
        return false;
    };
    if (has({"bpow", "fpow", "bpow-fock", "ebf-moments", "bt"})) sub.add_option("--t", opt.t, "rational parameter t")->required();
    if (has({"fock-moments", "motzkin-moments", "cfrac", "fock-cumulants", "ebf-moments", "bernoulli"})) {
        sub.add_option("--degree", opt.degree, "maximal degree")->required()->check(CLI::NonNegativeNumber);
    }
    if (name == "gbf-decompose") sub.add_option("--degree", opt.degree, "also emit Boolean cumulants to this degree")->check(CLI::NonNegativeNumber);
    if (has({"uni-appell", "mops-check", "laha-lukacs"})) sub.add_option("--n", opt.n, "order")->required()->check(CLI::NonNegativeNumber);
    if (name == "cfrac") sub.add_option("--cutoff", opt.cutoff, "truncation level")->check(CLI::NonNegativeNumber);
    if (name == "appell") sub.add_option("--word", opt.word, "multi-index, e.g. 1,2")->required();
    if (name == "bernoulli") sub.add_option("--beta", opt.beta, "atom parameter")->required();
    if (name == "ebf-moments") {
        sub.add_option("--b", opt.b, "a^0 coefficient")->required();
        sub.add_option("--c", opt.c, "a~ coefficient")->required();
    }
    if (name == "laha-lukacs") {
        sub.add_option("--alpha", opt.alpha, "variance of X");
        sub.add_option("--b", opt.b, "third moment of X + Y");
    }
    if (name == "pde-check") sub.add_option("--params", opt.params, "Meixner parameter document")->required();
    if (name == "indep-check") sub.add_option("--groups", opt.groups, "variable groups, e.g. 1|2,3")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto table = handlers();
    Options opt;
    CLI::App app("Exact noncommutative moment and cumulant transforms", "ncprob");
    app.require_subcommand(1);
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, handler] : table) {
        CLI::App* sub = app.add_subcommand(name);
        add_options(*sub, opt, name);
        subs[name] = sub;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "ncprob: " << e.what() << "\n";
        return kValidationError;
    }
    for (const auto& [name, sub] : subs) {
        if (!sub->parsed()) continue;
        Context ctx{opt, in, out};
        try {
            const Outcome result = table.at(name)(ctx);
            out << documents::dump(result.doc);
            if (!result.passed) {
                err << "ncprob " << name << ": check failed\n";
                return kCheckFailed;
            }
            return kSuccess;
        } catch (const ParseError& e) {
            err << "ncprob " << name << ": " << e.what() << "\n";
            return kValidationError;
        } catch (const ShapeError& e) {
            err << "ncprob " << name << ": " << e.what() << "\n";
            return kValidationError;
        } catch (const Json::exception& e) {
            err << "ncprob " << name << ": " << e.what() << "\n";
            return kValidationError;
        } catch (const Error& e) {
            err << "ncprob " << name << ": " << e.what() << "\n";
            return kPreconditionError;
        }
    }
    return kValidationError;
}

}  // namespace ncprob::cli
