#include "rhoform/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ostream>
#include <sstream>

#include "rhoform/checks.hpp"
#include "rhoform/json_io.hpp"
#include "rhoform/omega_derivation.hpp"
#include "rhoform/parser.hpp"
#include "rhoform/printer.hpp"

namespace rhoform {

namespace {

struct CommonOpts {
    std::string algebra;
    std::string phi_spec;
    int root = 0; // 0: use the presentation's natural order
    std::string format = "text";
    unsigned long seed = 1;
};

struct Session {
    PresentationPtr pres;
    GradedUnitHom phi;
    EvalContext ctx;
};

Session open_session(const CommonOpts& opts) {
    if (opts.algebra.empty())
        fail(ErrorKind::BadArgument, "--algebra is required for this subcommand");
    PresentationPtr pres = AlgebraPresentation::from_spec(opts.algebra);
    int eps_order = opts.root > 0 ? opts.root : pres->root_order();
    GradedUnitHom phi = GradedUnitHom::trivial(pres->group());
    if (!opts.phi_spec.empty() && opts.phi_spec != "1") {
        std::vector<Scalar> values;
        std::string body = opts.phi_spec;
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string piece =
                body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            values.push_back(parse_scalar(piece, eps_order));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        phi = GradedUnitHom(pres->group(), std::move(values));
    }
    EvalContext ctx{pres, phi, eps_order};
    return Session{std::move(pres), std::move(phi), std::move(ctx)};
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct SpecTokens {
    long k = 0;
    bool has_k = false;
    bool has_deg = false;
    std::string deg;
    std::vector<std::pair<std::string, std::string>> mappings; // name -> expr
};

SpecTokens parse_spec_tokens(const std::vector<std::string>& tokens, size_t start) {
    SpecTokens spec;
    for (size_t i = start; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t.rfind("k=", 0) == 0) {
            spec.k = std::stol(t.substr(2));
            spec.has_k = true;
        } else if (t.rfind("deg=", 0) == 0) {
            spec.deg = t.substr(4);
            spec.has_deg = true;
        } else {
            size_t arrow = t.find("->");
            if (arrow == std::string::npos)
                fail(ErrorKind::BadArgument, "expected name->expr in spec, got '" + t + "'");
            spec.mappings.emplace_back(t.substr(0, arrow), t.substr(arrow + 2));
        }
    }
    return spec;
}

AlgebraElement eval_element(const std::string& text, const Session& s) {
    Form f = parse_and_eval(text, s.ctx);
    if (!f.is_element())
        fail(ErrorKind::BadArgument, "expected an element of A, got a form: " + text);
    return f.to_element();
}

Derivation parse_deriv_spec(const std::string& text, const Session& s) {
    auto tokens = split_ws(text);
    if (tokens.empty() || tokens[0] != "deriv")
        fail(ErrorKind::BadArgument, "derivation spec must start with 'deriv'");
    SpecTokens spec = parse_spec_tokens(tokens, 1);
    if (!spec.has_deg) fail(ErrorKind::BadArgument, "derivation spec needs deg=(...)");
    Grade deg = parse_grade(spec.deg, s.pres->group());
    std::vector<AlgebraElement> values(static_cast<size_t>(s.pres->generator_count()),
                                       AlgebraElement::zero(s.pres));
    for (const auto& [name, expr] : spec.mappings) {
        int i = s.pres->generator_index(name);
        if (i < 0) fail(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
        values[static_cast<size_t>(i)] = eval_element(expr, s);
    }
    return Derivation(s.pres, std::move(deg), std::move(values));
}

FieldValuedForm parse_fvform_spec(const std::string& text, const Session& s) {
    auto tokens = split_ws(text);
    if (tokens.empty()) fail(ErrorKind::BadArgument, "empty field-valued form spec");
    // a derivation spec denotes the corresponding field
    if (tokens[0] == "deriv")
        return FieldValuedForm::from_derivation(parse_deriv_spec(text, s), s.phi);
    if (tokens[0] == "id") return FieldValuedForm::identity(s.pres, s.phi);
    if (tokens[0] != "fvform")
        fail(ErrorKind::BadArgument, "spec must start with 'fvform', 'deriv' or 'id'");
    SpecTokens spec = parse_spec_tokens(tokens, 1);
    if (!spec.has_k || !spec.has_deg)
        fail(ErrorKind::BadArgument, "fvform spec needs k=<int> and deg=(...)");
    Grade alpha = parse_grade(spec.deg, s.pres->group());
    std::vector<Form> values(static_cast<size_t>(s.pres->generator_count()),
                             Form::zero(s.pres, s.phi));
    for (const auto& [name, expr] : spec.mappings) {
        int i = s.pres->generator_index(name);
        if (i < 0) fail(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
        values[static_cast<size_t>(i)] = parse_and_eval(expr, s.ctx);
    }
    return FieldValuedForm(s.pres, s.phi, spec.k, std::move(alpha), std::move(values));
}

OmegaDerivation parse_omegaderiv_spec(const std::string& text, const Session& s) {
    auto tokens = split_ws(text);
    if (tokens.empty() || tokens[0] != "omegaderiv")
        fail(ErrorKind::BadArgument, "spec must start with 'omegaderiv'");
    SpecTokens spec = parse_spec_tokens(tokens, 1);
    if (!spec.has_k || !spec.has_deg)
        fail(ErrorKind::BadArgument, "omegaderiv spec needs k=<int> and deg=(...)");
    Bidegree deg{spec.k, parse_grade(spec.deg, s.pres->group())};
    std::vector<Form> on_gen(static_cast<size_t>(s.pres->generator_count()),
                             Form::zero(s.pres, s.phi));
    std::vector<Form> on_dgen = on_gen;
    for (const auto& [name, expr] : spec.mappings) {
        bool differential = name.size() > 1 && name[0] == 'd' &&
                            s.pres->generator_index(name.substr(1)) >= 0;
        std::string gen = differential ? name.substr(1) : name;
        int i = s.pres->generator_index(gen);
        if (i < 0) fail(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
        (differential ? on_dgen : on_gen)[static_cast<size_t>(i)] = parse_and_eval(expr, s.ctx);
    }
    return OmegaDerivation(s.pres, s.phi, std::move(deg), std::move(on_gen), std::move(on_dgen));
}

AlgebraHom parse_hom_spec(const std::string& text, const Session& s) {
    auto tokens = split_ws(text);
    if (tokens.empty() || tokens[0] != "hom")
        fail(ErrorKind::BadArgument, "hom spec must start with 'hom'");
    if (tokens.size() == 1 || (tokens.size() == 2 && tokens[1] == "id"))
        return AlgebraHom::identity(s.pres);
    SpecTokens spec = parse_spec_tokens(tokens, 1);
    std::vector<AlgebraElement> images(static_cast<size_t>(s.pres->generator_count()),
                                       AlgebraElement::zero(s.pres));
    for (const auto& [name, expr] : spec.mappings) {
        int i = s.pres->generator_index(name);
        if (i < 0) fail(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
        images[static_cast<size_t>(i)] = eval_element(expr, s);
    }
    Grade deg = Grade::zero(s.pres->group());
    if (spec.has_deg) {
        deg = parse_grade(spec.deg, s.pres->group());
    } else {
        // infer from the first nonzero image
        for (int i = 0; i < s.pres->generator_count(); ++i) {
            const auto& img = images[static_cast<size_t>(i)];
            if (!img.is_zero()) {
                deg = img.grade() - s.pres->generator(i).grade;
                break;
            }
        }
    }
    return AlgebraHom(s.pres, s.pres, std::move(deg), std::move(images));
}

std::string fvform_to_text(const FieldValuedForm& k) {
    std::ostringstream os;
    os << "fvform k=" << k.target_degree() << " deg=(";
    for (size_t i = 0; i < k.grade().comps.size(); ++i)
        os << (i ? "," : "") << k.grade().comps[i];
    os << ")";
    for (int i = 0; i < k.presentation()->generator_count(); ++i) {
        std::string v = form_to_string(k.value(i));
        os << " " << k.presentation()->generator(i).name << "->" << v;
    }
    return os.str();
}

std::string betti_to_text(const BettiResult& b) {
    std::ostringstream os;
    auto list = [&os](const char* label, const std::vector<long>& v) {
        os << label << ": [";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        os << "]\n";
    };
    list("betti", b.betti);
    list("dims", b.dims);
    return os.str();
}

std::string report_to_text(const NaturalityReport& rep) {
    std::ostringstream os;
    os << "preconditions: " << (rep.preconditions_ok ? "ok" : "FAILED " + rep.precondition_witness)
       << "\n";
    for (const auto& item : rep.items) {
        os << "item (" << item.item << "): " << (item.passed ? "pass" : "FAIL");
        if (!item.passed && !item.witness.empty()) os << " [" << item.witness << "]";
        os << "\n";
    }
    os << (rep.all_passed() ? "all items passed" : "REPORT FAILED") << "\n";
    return os.str();
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rhoform: fields, forms and exact cohomology on rho-commutative algebras"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<std::string> pos; // positional expressions per subcommand
    std::string grade_text = "0";
    int max_degree = 2;
    std::string suite = "all";
    int scale = 100;
    int degree_bound = 2;

    auto add_common = [&](CLI::App* cmd, int positionals, bool needs_algebra = true) {
        if (needs_algebra) cmd->add_option("--algebra", opts.algebra, "presentation spec");
        cmd->add_option("--phi", opts.phi_spec, "phi values per group generator, comma separated");
        cmd->add_option("--root", opts.root, "override the eps root-of-unity order");
        cmd->add_option("--format", opts.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", opts.seed, "seed for randomized evaluation");
        if (positionals > 0)
            cmd->add_option("exprs", pos, "expressions / specs")->expected(positionals);
        return cmd;
    };

    auto* c_normalize = add_common(app.add_subcommand("normalize", "normal form of an element"), 1);
    auto* c_commutator =
        add_common(app.add_subcommand("commutator", "rho-commutator of two elements"), 2);
    auto* c_apply = add_common(app.add_subcommand("apply-deriv", "apply a derivation"), 2);
    auto* c_d = add_common(app.add_subcommand("d", "differential of a form"), 1);
    auto* c_wedge = add_common(app.add_subcommand("wedge", "product of two forms"), 2);
    auto* c_contract = add_common(app.add_subcommand("contract", "contraction j_K(w)"), 2);
    auto* c_lie = add_common(app.add_subcommand("lie", "Lie derivative L_K(w)"), 2);
    auto* c_nij = add_common(app.add_subcommand("nijenhuis", "Nijenhuis bracket [K,L]^D"), 2);
    auto* c_fn = add_common(app.add_subcommand("fn-bracket", "Frolicher-Nijenhuis bracket"), 2);
    auto* c_dec = add_common(app.add_subcommand("decompose", "D = L_K + j_L decomposition"), 1);
    auto* c_omega = add_common(app.add_subcommand("omega-map", "apply Omega(f)"), 2);
    auto* c_rel = add_common(app.add_subcommand("related", "check f-relatedness"), 3);
    auto* c_nat = add_common(app.add_subcommand("naturality", "naturality battery for related pairs"), 5);
    c_nat->add_option("--degree-bound", degree_bound, "sample form degree bound");
    auto* c_coh = add_common(app.add_subcommand("cohomology", "per-grade Betti numbers"), 0);
    c_coh->add_option("--grade", grade_text, "grade components, comma separated")->required();
    c_coh->add_option("--max-degree", max_degree, "highest form degree");
    auto* c_check = add_common(app.add_subcommand("check", "run property suites"), 0, false);
    c_check->add_option("--suite", suite, "suite name or 'all'");
    c_check->add_option("--scale", scale, "percentage of the full sample counts");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        out << json_error(ErrorKind::SyntaxError, e.what(), 0, 0) << "\n";
        return 2;
    }

    try {
        bool json_fmt = opts.format == "json";
        auto emit_form = [&](const Form& w) {
            if (json_fmt)
                out << json_form_result(args, opts.algebra, w) << "\n";
            else
                out << form_to_string(w) << "\n";
        };
        auto emit_element = [&](const AlgebraElement& u) {
            if (json_fmt)
                out << json_element_result(args, opts.algebra, u) << "\n";
            else
                out << element_to_string(u) << "\n";
        };
        auto emit_fvform = [&](const FieldValuedForm& k) {
            if (json_fmt)
                out << json_fvform_result(args, opts.algebra, k) << "\n";
            else
                out << fvform_to_text(k) << "\n";
        };

        if (c_normalize->parsed()) {
            Session s = open_session(opts);
            emit_element(eval_element(pos[0], s));
        } else if (c_commutator->parsed()) {
            Session s = open_session(opts);
            emit_element(rho_commutator(eval_element(pos[0], s), eval_element(pos[1], s)));
        } else if (c_apply->parsed()) {
            Session s = open_session(opts);
            Derivation x = parse_deriv_spec(pos[0], s);
            emit_element(x.apply(eval_element(pos[1], s)));
        } else if (c_d->parsed()) {
            Session s = open_session(opts);
            emit_form(parse_and_eval(pos[0], s.ctx).differential());
        } else if (c_wedge->parsed()) {
            Session s = open_session(opts);
            emit_form(parse_and_eval(pos[0], s.ctx) * parse_and_eval(pos[1], s.ctx));
        } else if (c_contract->parsed()) {
            Session s = open_session(opts);
            emit_form(contract(parse_fvform_spec(pos[0], s), parse_and_eval(pos[1], s.ctx)));
        } else if (c_lie->parsed()) {
            Session s = open_session(opts);
            emit_form(lie_derivative(parse_fvform_spec(pos[0], s), parse_and_eval(pos[1], s.ctx)));
        } else if (c_nij->parsed()) {
            Session s = open_session(opts);
            emit_fvform(nijenhuis_bracket(parse_fvform_spec(pos[0], s),
                                          parse_fvform_spec(pos[1], s)));
        } else if (c_fn->parsed()) {
            Session s = open_session(opts);
            emit_fvform(fn_bracket(parse_fvform_spec(pos[0], s), parse_fvform_spec(pos[1], s)));
        } else if (c_dec->parsed()) {
            Session s = open_session(opts);
            auto [k, l] = decompose_derivation(parse_omegaderiv_spec(pos[0], s));
            if (json_fmt) {
                out << json_decompose_result(args, opts.algebra, k, l) << "\n";
            } else {
                out << "K: " << fvform_to_text(k) << "\n";
                out << "L: " << fvform_to_text(l) << "\n";
            }
        } else if (c_omega->parsed()) {
            Session s = open_session(opts);
            emit_form(parse_hom_spec(pos[0], s).apply_form(parse_and_eval(pos[1], s.ctx)));
        } else if (c_rel->parsed()) {
            Session s = open_session(opts);
            bool related = check_f_related(parse_hom_spec(pos[0], s),
                                           parse_fvform_spec(pos[1], s),
                                           parse_fvform_spec(pos[2], s));
            if (json_fmt)
                out << json_related_result(args, opts.algebra, related) << "\n";
            else
                out << (related ? "true" : "false") << "\n";
        } else if (c_nat->parsed()) {
            Session s = open_session(opts);
            NaturalityReport rep = naturality_report(
                parse_hom_spec(pos[0], s), parse_fvform_spec(pos[1], s),
                parse_fvform_spec(pos[2], s), parse_fvform_spec(pos[3], s),
                parse_fvform_spec(pos[4], s), degree_bound, opts.seed);
            if (json_fmt)
                out << json_report_result(args, opts.algebra, rep) << "\n";
            else
                out << report_to_text(rep);
            return rep.all_passed() ? 0 : 1;
        } else if (c_coh->parsed()) {
            Session s = open_session(opts);
            Grade alpha = parse_grade(grade_text, s.pres->group());
            BettiResult b = betti_numbers(s.pres, s.phi, alpha, max_degree);
            if (json_fmt)
                out << json_betti_result(args, opts.algebra, b) << "\n";
            else
                out << betti_to_text(b);
        } else if (c_check->parsed()) {
            CheckConfig cfg;
            cfg.seed = opts.seed;
            cfg.scale_percent = scale;
            bool all_ok = true;
            bool matched = false;
            for (const auto& [name, fn] : all_check_suites()) {
                if (suite != "all" && suite != name) continue;
                matched = true;
                auto t0 = std::chrono::steady_clock::now();
                CheckResult res = fn(cfg);
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                // stdout stays deterministic for a fixed seed; timing goes to err
                out << "suite " << res.name << ": " << (res.passed ? "PASS" : "FAIL") << " ("
                    << res.cases << " cases, seed " << cfg.seed << ")\n";
                for (const auto& f : res.failures) out << "  failure: " << f << "\n";
                err << "suite " << res.name << ": " << ms << " ms\n";
                all_ok = all_ok && res.passed;
            }
            if (!matched) fail(ErrorKind::BadArgument, "unknown suite '" + suite + "'");
            return all_ok ? 0 : 1;
        }
        return 0;
    } catch (const Error& e) {
        out << json_error(e.kind(), e.what(), e.line(), e.col()) << "\n";
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::SyntaxError ? 2 : 1;
    } catch (const std::exception& e) {
        out << json_error(ErrorKind::BadArgument, e.what(), 0, 0) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace rhoform
