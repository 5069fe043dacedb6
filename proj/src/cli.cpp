#include "hallwc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hallwc/errors.hpp"
#include "hallwc/freewall.hpp"
#include "hallwc/khallvect.hpp"
#include "hallwc/repchar.hpp"
#include "hallwc/serialize.hpp"
#include "hallwc/series.hpp"
#include "hallwc/torus.hpp"

namespace hallwc {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ParseError(std::string("bad ") + what + " entry '" + item + "'", 0);
        }
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what, 0);
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

Quiver load_quiver(const std::string& spec) {
    if (spec == "vect") return Quiver::vect();
    if (spec == "a2") return Quiver::a2();
    if (spec == "kronecker2") return Quiver::kronecker(2);
    return quiver_from_json(read_json_file(spec));
}

struct StabilityFlags {
    std::string theta, kappa, file;

    void add_to(CLI::App* cmd, const std::string& prefix, const std::string& what) {
        cmd->add_option("--" + prefix + "theta", theta, what + " theta, comma-separated integers");
        cmd->add_option("--" + prefix + "kappa", kappa, what + " kappa, comma-separated positive integers");
        cmd->add_option("--" + prefix + "stability", file, what + " stability as a JSON file");
    }

    SlopeFunction get(std::size_t nvertices) const {
        if (!file.empty()) return stability_from_json(read_json_file(file), nvertices);
        std::vector<int> th = theta.empty() ? std::vector<int>(nvertices, 0) : parse_int_list(theta, "theta");
        std::vector<int> ka = kappa.empty() ? std::vector<int>(nvertices, 1) : parse_int_list(kappa, "kappa");
        if (th.size() != nvertices || ka.size() != nvertices)
            throw DimMismatch("stability needs " + std::to_string(nvertices) + " entries");
        return SlopeFunction(std::move(th), std::move(ka));
    }
};

DimVector dim_for(const Quiver& q, const std::string& text) {
    DimVector d = DimVector::parse(text);
    q.check_dim(d);
    if (d.is_zero()) throw InvalidInput("dimension vector must be nonzero");
    return d;
}

Json types_json(const std::vector<Decomposition>& types) {
    Json out = Json::array();
    for (const auto& t : types) out.push_back(to_json(t));
    return out;
}

int exit_code_for(const Error& e) {
    static const char* const input_kinds[] = {"ParseError",   "InvalidInput",   "DimMismatch", "VarCountMismatch",
                                              "VariableMismatch", "NonDominant", "SizeCap",     "DegreeOverflow",
                                              "NotAcyclic",   "ZeroDenominator", "DivisionByZero"};
    if (e.kind() == "PoleAtOne") return 3;
    for (const char* k : input_kinds)
        if (e.kind() == k) return 2;
    return 1;
}

Json error_record(const std::string& kind, const std::string& message) {
    Json inner;
    inner["kind"] = kind;
    inner["message"] = message;
    Json out;
    out["error"] = inner;
    return out;
}

BigRational epsilon_eval_jobs(int n, const Character& chi, unsigned jobs) {
    if (jobs <= 1) return epsilon_eval(n, chi);
    const auto comps = compositions(n);
    std::vector<BigRational> parts(comps.size());
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < comps.size(); i += jobs) {
                    const long k = static_cast<long>(comps[i].size());
                    parts[i] = BigRational(BigInt(k % 2 ? 1 : -1), BigInt(k)) *
                               khall_product_eval(BlockProfile(comps[i]), chi);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    BigRational acc = 0;
    for (const auto& p : parts) acc += p;  // fixed order keeps output independent of jobs
    return acc;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hall-algebra wall-crossing computations", "hallwc"};
    app.require_subcommand(1);

    unsigned jobs = 1;
    std::string output;
    int max_order = kDefaultExpansionOrder;
    app.add_option("--jobs", jobs, "worker threads for parallel evaluations")->check(CLI::Range(1u, 256u));
    app.add_option("--output", output, "write the record to this file instead of stdout");
    app.add_option("--max-order", max_order, "series expansion order")->check(CLI::Range(0, 512));

    std::string quiver_spec = "vect", dim_text;
    std::optional<std::string> q_at;
    StabilityFlags stab, wall_stab;

    auto* qdt = app.add_subcommand("quiver-dt", "delta, epsilon and DT invariant of a quiver class");
    qdt->add_option("--quiver", quiver_spec, "builtin (vect, a2, kronecker2) or JSON file");
    stab.add_to(qdt, "", "slope");
    qdt->add_option("--dim", dim_text, "dimension vector")->required();
    qdt->add_option("--q-at", q_at, "also evaluate at this rational q");

    auto* hn = app.add_subcommand("hn-check", "HN types and the stability-independent HN sum");
    hn->add_option("--quiver", quiver_spec, "builtin (vect, a2, kronecker2) or JSON file");
    stab.add_to(hn, "", "slope");
    hn->add_option("--dim", dim_text, "dimension vector")->required();

    auto* wc = app.add_subcommand("wallcross-check", "dominant wall-crossing identity at one class");
    wc->add_option("--quiver", quiver_spec, "builtin (vect, a2, kronecker2) or JSON file");
    wall_stab.add_to(wc, "wall-", "wall");
    stab.add_to(wc, "", "chamber");
    wc->add_option("--dim", dim_text, "dimension vector")->required();

    std::string path_file;
    bool all_entries = false;
    auto* co = app.add_subcommand("coeffs", "S, U and commutator-form coefficient tables of a path");
    co->add_option("--path", path_file, "path JSON file")->required();
    co->add_flag("--all", all_entries, "include single-letter entries");

    std::string op = "epsilon", char_text, blocks_text;
    int n = 0;
    auto* ve = app.add_subcommand("vect", "K-Hall functionals on vector spaces");
    ve->add_option("--op", op, "delta, epsilon, product or blockwise")
        ->check(CLI::IsMember({"delta", "epsilon", "product", "blockwise"}));
    ve->add_option("--n", n, "rank");
    ve->add_option("--blocks", blocks_text, "block sizes for product/blockwise, e.g. 1,1");
    ve->add_option("--char", char_text, "character expression, e.g. s[1,-1]^2 - 2*s[0,0]")->required();

    std::string f_text;
    auto* re = app.add_subcommand("residue", "residue at u=1 of u^-1 f du");
    re->add_option("--f", f_text, "rational function in u")->required();

    std::string lambda_text;
    auto* we = app.add_subcommand("weyl", "constant term of gamma_minus(n) times a Schur character");
    we->add_option("--n", n, "rank")->required();
    we->add_option("--lambda", lambda_text, "highest weight, e.g. 1,0,-1")->required();

    std::string ratfunc_text, weight_text;
    auto* pa = app.add_subcommand("parse", "canonical form of an expression");
    auto* pa_rf = pa->add_option("--ratfunc", ratfunc_text, "rational function");
    auto* pa_ch = pa->add_option("--char", char_text, "character expression");
    auto* pa_w = pa->add_option("--weight", weight_text, "highest weight");
    pa_rf->excludes(pa_ch)->excludes(pa_w);
    pa_ch->excludes(pa_w);

    auto emit = [&](const Json& record) {
        const std::string text = record.dump(2) + "\n";
        if (output.empty()) {
            out << text;
            return;
        }
        std::ofstream f(output);
        if (!f) {
            err << "cannot write " << output << "\n";
            out << text;
            return;
        }
        f << text;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        emit(error_record("UsageError", e.what()));
        return 2;
    }

    try {
        Json r;
        int code = 0;
        if (qdt->parsed()) {
            const Quiver q = load_quiver(quiver_spec);
            const DimVector alpha = dim_for(q, dim_text);
            DeltaEngine engine(q, stab.get(q.nvertices()));
            const InvariantFamily eps = epsilon_family(engine.family(alpha));
            const RatFunc& delta = engine.delta(alpha);
            const RatFunc& epsilon = eps.at(alpha);
            r["alpha"] = to_json(alpha);
            r["delta"] = to_json(delta);
            r["epsilon"] = to_json(epsilon);
            r["regular_at_one"] = regular_at_one(epsilon);
            if (q_at) {
                const BigRational q0 = BigRational::parse(*q_at);
                Json at;
                at["q"] = q0.str();
                auto value_or_null = [&](const RatFunc& f) -> Json {
                    try {
                        return eval_at(f, q0).str();
                    } catch (const PoleAtPoint&) {
                        return nullptr;
                    }
                };
                at["delta"] = value_or_null(delta);
                at["epsilon"] = value_or_null(epsilon);
                r["at_q"] = at;
            }
            try {
                r["dt"] = dt_extract(eps, alpha).str();
            } catch (const PoleAtOne& e) {
                r["dt"] = nullptr;
                r["error"] = error_record(e.kind(), e.what())["error"];
                code = 3;
            }
        } else if (hn->parsed()) {
            const Quiver q = load_quiver(quiver_spec);
            const DimVector alpha = dim_for(q, dim_text);
            DeltaEngine engine(q, stab.get(q.nvertices()));
            const TorusElem sum = hn_sum(engine, alpha);
            const RatFunc stack = stack_poincare(q, alpha, true);
            r["alpha"] = to_json(alpha);
            r["hn_types"] = types_json(enumerate_hn_types(alpha, engine.stability()));
            r["delta"] = to_json(engine.delta(alpha));
            r["hn_sum"] = to_json(sum.coeff(alpha));
            r["stack_poincare"] = to_json(stack);
            const bool equal = sum == TorusElem::monomial(alpha, stack);
            r["equal"] = equal;
            if (!equal) code = 1;
        } else if (wc->parsed()) {
            const Quiver q = load_quiver(quiver_spec);
            const DimVector alpha = dim_for(q, dim_text);
            const SlopeFunction wall = wall_stab.get(q.nvertices()), side = stab.get(q.nvertices());
            const DominantCheck c = dominant_wc_check(q, wall, side, alpha);
            r["alpha"] = to_json(alpha);
            r["hn_types"] = types_json(enumerate_hn_types(alpha, side, wall));
            r["wall_delta"] = to_json(c.wall_side);
            r["chamber_sum"] = to_json(c.chamber_side);
            r["holds"] = c.holds;
            if (!c.holds) code = 1;
        } else if (co->parsed()) {
            const PathSpec path = path_from_json(read_json_file(path_file));
            const CoeffTables t = wall_crossing_tables(path.hops, path.bound);
            const std::size_t min_len = all_entries ? 1 : 2;
            r["bound"] = to_json(t.bound);
            r["hops"] = path.hops.size();
            r["S"] = to_json(t.S, min_len);
            r["U"] = to_json(t.U, min_len);
            r["Utilde"] = to_json(t.Utilde, min_len);
            Json nullity = Json::array();
            for (const auto& [letters, k] : t.utilde_nullity)
                if (letters.size() >= min_len) nullity.push_back(Json{{"letters", to_json(letters)}, {"nullity", k}});
            r["utilde_nullity"] = nullity;
        } else if (ve->parsed()) {
            const Character chi = parse_character(char_text);
            r["op"] = op;
            r["char"] = to_json(chi.poly());
            if (op == "delta" || op == "epsilon") {
                if (n == 0) n = chi.n();
                r["n"] = n;
                r["value"] = (op == "delta" ? delta_eval(n, chi) : epsilon_eval_jobs(n, chi, jobs)).str();
            } else {
                if (blocks_text.empty()) throw InvalidInput("--blocks is required for " + op);
                const BlockProfile blocks(parse_int_list(blocks_text, "block"));
                r["blocks"] = blocks.sizes;
                r["value"] = (op == "product" ? khall_product_eval(blocks, chi)
                                              : khall_product_eval_blockwise(blocks, chi)).str();
            }
        } else if (re->parsed()) {
            const RatFunc f = parse_ratfunc(f_text);
            if (f.variable() != Variable::u && !f.is_constant()) throw InvalidInput("residues take a function of u");
            r["f"] = f.str();
            r["residue"] = residue_at_one(f).str();
            r["via_expansions"] = residue_via_expansions(f).str();
            r["via_principal_part"] = residue_via_principal_part(f).str();
            r["expansion_zero"] = to_json(expand(f, ExpansionPoint::zero, max_order));
            r["expansion_infinity"] = to_json(expand(f, ExpansionPoint::infinity, max_order));
        } else if (we->parsed()) {
            const HighestWeight lambda = HighestWeight::parse(lambda_text);
            if (lambda.n() != n) throw DimMismatch("weight has " + std::to_string(lambda.n()) + " entries, n = " +
                                                   std::to_string(n));
            const Character s = schur_char(lambda);
            const BigRational ct = constant_term_of_product(gamma_minus(n), s.poly());
            r["n"] = n;
            r["lambda"] = lambda.parts();
            r["weight_zero"] = s.weight_zero();
            r["constant_term"] = ct.str();
            r["invariant_dim"] = (ct / BigRational(factorial(static_cast<unsigned>(n)))).str();
        } else if (pa->parsed()) {
            if (!ratfunc_text.empty()) {
                const RatFunc f = parse_ratfunc(ratfunc_text);
                r["kind"] = "ratfunc";
                r["canonical"] = f.str();
                r["value"] = to_json(f);
            } else if (!char_text.empty()) {
                const Character chi = parse_character(char_text);
                r["kind"] = "character";
                r["n"] = chi.n();
                r["weight_zero"] = chi.weight_zero();
                r["terms"] = to_json(chi.poly());
                Json dec = Json::array();
                for (const auto& [lambda, mult] : decompose(chi))
                    dec.push_back(Json{{"lambda", lambda.parts()}, {"multiplicity", mult.get_str()}});
                r["decomposition"] = dec;
            } else if (!weight_text.empty()) {
                const HighestWeight lambda = HighestWeight::parse(weight_text);
                r["kind"] = "weight";
                r["lambda"] = lambda.parts();
                r["schur"] = to_json(schur_char(lambda).poly());
            } else {
                throw InvalidInput("parse needs one of --ratfunc, --char, --weight");
            }
        }
        emit(r);
        return code;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        emit(error_record(e.kind(), e.what()));
        return exit_code_for(e);
    } catch (const nlohmann::json::exception& e) {
        err << "InvalidInput: " << e.what() << "\n";
        emit(error_record("InvalidInput", e.what()));
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        emit(error_record("InternalError", e.what()));
        return 1;
    }
}

}  // namespace hallwc
