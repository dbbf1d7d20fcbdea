#include "cyq/cli.hpp"

#include "cyq/completions.hpp"
#include "cyq/cyclic.hpp"
#include "cyq/errors.hpp"
#include "cyq/parser.hpp"
#include "cyq/rewriting.hpp"
#include "cyq/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cyq::cli {

using nlohmann::json;

std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw InvariantViolation("SHA-256 digest failed");
    std::ostringstream s;
    for (unsigned int i = 0; i < len; ++i)
        s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return s.str();
}

namespace {

struct Options {
    std::string command;
    std::string file;
    std::string field = "q";
    std::string via;
    int n = 3;
    std::size_t max_len = 24;
    long max_weight = 8;
    int min_degree = -4;
    std::size_t max_n = 3;
    std::size_t cols = 4;
    std::uint64_t seed = 1;
    std::size_t trials = 50;
    std::string against;
    std::optional<std::size_t> basis_cap;
};

json quiver_json(const GradedQuiver& q)
{
    json vs = json::array(), as = json::array();
    for (const auto& v : q.vertices())
        vs.push_back({{"id", v.id}, {"frozen", v.frozen}});
    for (const auto& a : q.arrows())
        as.push_back({{"id", a.id},
                      {"source", q.vertex(a.source).id},
                      {"target", q.vertex(a.target).id},
                      {"degree", a.degree},
                      {"frozen", a.frozen}});
    return {{"vertices", vs}, {"arrows", as}};
}

json dg_json(const DgPresentation& p, const std::optional<Potential>& w = std::nullopt)
{
    json d = json::array();
    for (std::size_t i = 0; i < p.graph().arrow_count(); ++i)
        d.push_back({{"arrow", p.graph().arrow(static_cast<ArrowIndex>(i)).id},
                     {"d", p.differentials()[i].to_string()}});
    json out{{"quiver", quiver_json(p.graph())},
             {"differential", d},
             {"file", print_quiver_file(to_quiver_file(p, w))}};
    if (w)
        out["potential"] = w->to_string();
    return out;
}

json table_json(const std::map<std::pair<long, int>, std::size_t>& t)
{
    json out = json::array();
    for (const auto& [k, v] : t)
        out.push_back({k.first, k.second, v});
    return out;
}

json sizes(const std::vector<std::size_t>& v) { return json(v); }

json weights_json(const WeightAssignment& w)
{
    json out = json::object();
    for (std::size_t i = 0; i < w.values().size(); ++i)
        out[w.quiver()->arrow(static_cast<ArrowIndex>(i)).id] = w.values()[i];
    return out;
}

json field_cert(const Field& f)
{
    return {{"kind", "field"}, {"name", f.name()}, {"ranks_certified_over_Q", f.is_rational()}};
}

json profile_json(const DimensionProfile& p)
{
    return {{"max_len", p.max_len},
            {"per_length", sizes(p.per_length)},
            {"total", p.total},
            {"stable", p.stable},
            {"finite", p.finite}};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("io", "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::set<std::string> frozen_ids(const GradedQuiver& q)
{
    std::set<std::string> out;
    for (const auto& v : q.vertices())
        if (v.frozen)
            out.insert(v.id);
    return out;
}

Potential potential_or_zero(const QuiverFile& f) { return f.potential ? *f.potential : Potential(f.quiver); }

DgPresentation construct(const std::string& how, const QuiverFile& f, const Options& o)
{
    if (how == "ginzburg3")
        return ginzburg3(f.quiver, potential_or_zero(f));
    if (how == "rel-ginzburg3") {
        IceQuiverWithPotential ice{f.quiver, potential_or_zero(f)};
        return relative_ginzburg3(ice);
    }
    if (how == "cy-complete")
        return cy_complete_hereditary(f.quiver, o.n);
    if (how == "rel-preproj2")
        return relative_preprojective2(f.quiver, frozen_ids(*f.quiver));
    if (how == "partial-resolution")
        return partial_resolution(f.quiver, f.relations);
    throw ValidationError("parameter", "unknown --via '" + how + "'");
}

DgPresentation dg_input(const QuiverFile& f, const Options& o)
{
    if (!o.via.empty())
        return construct(o.via, f, o);
    if (!f.has_differential())
        throw ValidationError("no-differential", "input has no differential lines; pass --via <constructor>");
    return f.dg();
}

Presentation presentation_input(const QuiverFile& f, const Options& o)
{
    if (!o.via.empty())
        return h0_presentation(construct(o.via, f, o));
    return f.presentation();
}

DgPresentation certified(const DgPresentation& p)
{
    auto cert = check_d_squared(p);
    if (!cert.ok())
        throw ValidationError("d-squared", "d^2 != 0 on arrow '" + p.graph().arrow(cert.failures.front().arrow).id +
                                               "': " + cert.failures.front().value.to_string());
    return p;
}

struct Output {
    json parameters = json::object();
    json result = json::object();
    json certificates = json::array();
    json bounds = json::object();
    int code = exit_ok;
};

Output dispatch(const Options& o, const QuiverFile* f)
{
    Output r;
    const Field field = parse_field(o.field);
    r.parameters["field"] = field.name();
    if (!o.via.empty())
        r.parameters["via"] = o.via;
    if (o.via == "cy-complete")
        r.parameters["n"] = o.n;
    CohomologyOptions copt;
    copt.field = field;
    CyclicOptions yopt;
    yopt.field = field;
    if (o.basis_cap) {
        copt.basis_cap = *o.basis_cap;
        yopt.basis_cap = *o.basis_cap;
        r.parameters["basis_cap"] = *o.basis_cap;
    }
    const std::string& c = o.command;

    if (c == "check-d2") {
        auto p = dg_input(*f, o);
        auto cert = check_d_squared(p);
        json fails = json::array();
        for (const auto& x : cert.failures)
            fails.push_back({{"arrow", p.graph().arrow(x.arrow).id}, {"d2", x.value.to_string()}});
        r.result = {{"ok", cert.ok()}, {"failures", fails}, {"warnings", p.warnings()}};
        r.certificates.push_back({{"kind", "d_squared"}, {"verified", cert.ok()}});
        if (!cert.ok())
            r.code = exit_validation;
    } else if (c == "ginzburg3" || c == "rel-ginzburg3" || c == "cy-complete" || c == "rel-preproj2") {
        if (c == "cy-complete")
            r.parameters["n"] = o.n;
        auto p = construct(c, *f, o);
        std::optional<Potential> w;
        if (c == "ginzburg3" || c == "rel-ginzburg3")
            w = potential_or_zero(*f);
        r.result = dg_json(p, w);
        r.certificates.push_back({{"kind", "d_squared"}, {"verified", p.certified()}});
    } else if (c == "relation-complete") {
        auto rc = relation_completion(f->quiver, f->relations);
        QuiverFile out;
        out.quiver = rc.quiver;
        out.potential = rc.potential;
        r.result = {{"quiver", quiver_json(*rc.quiver)},
                    {"potential", rc.potential.to_string()},
                    {"file", print_quiver_file(out)}};
    } else if (c == "weights") {
        auto p = certified(dg_input(*f, o));
        r.result = {{"weights", weights_json(infer_weights(p))}};
        r.certificates.push_back({{"kind", "d_squared"}, {"verified", true}});
    } else if (c == "cohomology" || c == "stalk") {
        auto p = certified(dg_input(*f, o));
        auto w = infer_weights(p);
        auto pw = p.with_weights(w);
        r.bounds = {{"max_weight", o.max_weight}, {"min_degree", o.min_degree}};
        r.certificates.push_back({{"kind", "d_squared"}, {"verified", true}});
        r.certificates.push_back({{"kind", "weight_grading"}, {"weights", weights_json(w)}});
        r.certificates.push_back(field_cert(field));
        if (c == "cohomology") {
            auto t = cohomology(pw, o.max_weight, o.min_degree, copt);
            r.result = {{"table", table_json(t.entries)}, {"chain_dims", table_json(t.chain_dims)}};
        } else {
            auto v = stalk_check(pw, o.max_weight, o.min_degree, copt);
            r.result = {{"verdict", v.stalk() ? "stalk" : "not-stalk"},
                        {"counterexample", nullptr},
                        {"table", table_json(v.table.entries)}};
            if (v.counterexample)
                r.result["counterexample"] = {{"weight", v.counterexample->weight},
                                              {"degree", v.counterexample->degree},
                                              {"dim", v.counterexample->dim}};
        }
    } else if (c == "h0") {
        auto p = dg_input(*f, o);
        auto h = h0_presentation(p);
        json rels = json::array();
        for (const auto& x : h.relations)
            rels.push_back(x.to_string());
        r.result = {{"quiver", quiver_json(*h.quiver)},
                    {"relations", rels},
                    {"file", print_quiver_file(to_quiver_file(h))}};
    } else if (c == "dims") {
        r.parameters["max_len"] = o.max_len;
        r.bounds = {{"max_len", o.max_len}};
        auto p = presentation_input(*f, o);
        if (!o.against.empty()) {
            auto other = parse_quiver_file(read_file(o.against));
            r.parameters["against_digest"] = sha256_hex(read_file(o.against));
            auto v = dims_equal(p, other.presentation(), o.max_len);
            r.result = {{"agree", v.agree},
                        {"label", v.label()},
                        {"first_difference", nullptr},
                        {"left", profile_json(v.left)},
                        {"right", profile_json(v.right)}};
            if (v.first_difference)
                r.result["first_difference"] = *v.first_difference;
        } else {
            auto rs = complete(p, o.max_len);
            auto prof = dimension_profile(rs);
            r.result = profile_json(prof);
            r.certificates.push_back({{"kind", "rewriting"},
                                      {"rules", rs.rules().size()},
                                      {"stable", rs.stable()},
                                      {"overlaps_resolved", rs.overlaps_resolved()},
                                      {"finite", prof.finite}});
        }
    } else if (c == "hochschild" || c == "cyclic" || c == "negative-cyclic") {
        r.parameters["max_n"] = o.max_n;
        r.parameters["max_len"] = o.max_len;
        r.bounds = {{"max_n", o.max_n}};
        auto a = FiniteDimAlgebra::from_presentation(presentation_input(*f, o), o.max_len);
        r.certificates.push_back({{"kind", "finite_dimensional"}, {"dim", a.dim()}, {"max_len", o.max_len}});
        r.certificates.push_back(field_cert(field));
        if (c == "hochschild") {
            r.result = {{"dims", sizes(hochschild(a, o.max_n, yopt))},
                        {"algebra_dim", a.dim()},
                        {"commutator_quotient", commutator_quotient(a, field)}};
        } else if (c == "cyclic") {
            auto bi = cyclic(a, o.max_n, yopt);
            auto mixed = cyclic_from_mixed(mixed_complex(a, o.max_n + 1, yopt), o.max_n, field);
            r.result = {{"dims", sizes(bi)}, {"algebra_dim", a.dim()}};
            r.certificates.push_back({{"kind", "mixed_complex_cross_check"}, {"agree", bi == mixed}});
            if (bi != mixed)
                throw InvariantViolation("bicomplex and mixed-complex cyclic homology disagree");
        } else {
            r.parameters["cols"] = o.cols;
            r.bounds["columns"] = o.cols;
            auto hn = negative_cyclic(a, o.max_n, o.cols, yopt);
            r.result = {{"dims", sizes(hn.dims)},
                        {"next_dims", sizes(hn.next_dims)},
                        {"surviving", sizes(hn.surviving)},
                        {"stabilized", hn.stabilized},
                        {"label", hn.stabilized ? "stabilized" : "unstabilized"},
                        {"algebra_dim", a.dim()}};
            r.certificates.push_back(
                {{"kind", "column_truncation"}, {"columns", o.cols}, {"stabilized", hn.stabilized}});
        }
    } else if (c == "rel-cyclic") {
        r.parameters["max_n"] = o.max_n;
        r.parameters["max_len"] = o.max_len;
        r.bounds = {{"max_n", o.max_n}};
        auto fm = frozen_inclusion(f->presentation(), o.max_len);
        auto rel = relative_cyclic(fm, o.max_n, yopt);
        json les = json::array();
        for (const auto& s : rel.les)
            les.push_back({{"group", s.group},
                           {"n", s.n},
                           {"dim", s.dim},
                           {"rank_in", s.rank_in},
                           {"rank_out", s.rank_out},
                           {"exact", s.exact()}});
        r.result = {{"hh", sizes(rel.hh)},
                    {"hc", sizes(rel.hc)},
                    {"hh_source", sizes(rel.hh_source)},
                    {"hh_target", sizes(rel.hh_target)},
                    {"source_dim", fm.source().dim()},
                    {"target_dim", fm.target().dim()},
                    {"les", les}};
        r.certificates.push_back({{"kind", "long_exact_sequence"}, {"exact", rel.les_exact()}});
        r.certificates.push_back(field_cert(field));
    } else if (c == "self-test") {
        r.parameters["seed"] = o.seed;
        r.parameters["trials"] = o.trials;
        auto rep = constructor_self_test(o.seed, o.trials);
        r.result = {{"trials", rep.trials}, {"checks", rep.checks}, {"failures", rep.failures}, {"ok", rep.ok()}};
        r.certificates.push_back({{"kind", "d_squared"}, {"verified", rep.ok()}});
        if (!rep.ok())
            r.code = exit_internal;
    } else {
        throw ValidationError("parameter", "unknown command '" + c + "'");
    }
    return r;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json error_json(const std::string& command, const std::string& digest, const std::string& kind,
                const std::string& code, const std::string& message)
{
    json j{{"schema_version", schema_version},
           {"command", command},
           {"error", {{"kind", kind}, {"code", code}, {"message", message}, {"diagnostics", json::array()}}}};
    if (!digest.empty())
        j["input_digest"] = digest;
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Calabi-Yau completions and cyclic homology at desk scale", "cyq"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", o.field, "q or p<prime>")->capture_default_str();
    app.add_option("--via", o.via,
                   "build the dg algebra first: ginzburg3, rel-ginzburg3, cy-complete, rel-preproj2, "
                   "partial-resolution");
    app.add_option("--n", o.n, "Calabi-Yau dimension for cy-complete")->capture_default_str();
    app.add_option("--max-len", o.max_len, "path length bound for rewriting")->capture_default_str();
    app.add_option("--basis-cap", o.basis_cap, "override the basis cap (also CYQ_BASIS_CAP)");

    struct Sub {
        const char* name;
        const char* help;
        bool file;
    };
    const std::vector<Sub> subs = {
        {"check-d2", "verify d^2 = 0 on a dg file", true},
        {"ginzburg3", "3-dimensional Ginzburg algebra of a quiver with potential", true},
        {"rel-ginzburg3", "relative 3-dimensional Ginzburg algebra of an ice quiver with potential", true},
        {"cy-complete", "n-Calabi-Yau completion of a path algebra", true},
        {"rel-preproj2", "relative 2-Calabi-Yau completion, frozen vertices from the file", true},
        {"relation-complete", "quiver and potential from relations", true},
        {"weights", "minimal positive weight grading", true},
        {"cohomology", "weight-truncated cohomology table", true},
        {"stalk", "stalk check up to the bounds", true},
        {"h0", "H^0 presentation", true},
        {"dims", "dimension profile by rewriting", true},
        {"hochschild", "Hochschild homology", true},
        {"cyclic", "cyclic homology", true},
        {"negative-cyclic", "negative cyclic homology with column truncation", true},
        {"rel-cyclic", "relative groups of the frozen inclusion", true},
        {"self-test", "randomized d^2 checks of every constructor", false},
    };
    for (const auto& s : subs) {
        auto* sc = app.add_subcommand(s.name, s.help);
        if (s.file)
            sc->add_option("file", o.file, "input .quiver file")->required();
        const std::string n = s.name;
        if (n == "cohomology" || n == "stalk") {
            auto* w = sc->add_option("--max-weight", o.max_weight)->capture_default_str();
            auto* p = sc->add_option("--min-degree", o.min_degree)->capture_default_str();
            if (n == "cohomology") {
                w->required();
                p->required();
            }
        }
        if (n == "dims")
            sc->add_option("--against", o.against, "second file for a profile comparison");
        if (n == "hochschild" || n == "cyclic" || n == "negative-cyclic" || n == "rel-cyclic")
            sc->add_option("--max-n", o.max_n)->capture_default_str();
        if (n == "negative-cyclic")
            sc->add_option("--cols", o.cols)->capture_default_str();
        if (n == "self-test") {
            sc->add_option("--seed", o.seed)->capture_default_str();
            sc->add_option("--trials", o.trials)->capture_default_str();
        }
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_validation;
    }
    for (auto* sc : app.get_subcommands())
        o.command = sc->get_name();

    if (!o.basis_cap)
        if (const char* env = std::getenv("CYQ_BASIS_CAP")) {
            try {
                o.basis_cap = static_cast<std::size_t>(std::stoull(env));
            } catch (const std::exception&) {
                err << "cyq: ignoring malformed CYQ_BASIS_CAP\n";
            }
        }

    std::string digest;
    try {
        std::optional<QuiverFile> f;
        std::string text;
        if (o.command != "self-test") {
            text = read_file(o.file);
            digest = sha256_hex(text);
            f = parse_quiver_file(text);
        } else {
            digest = sha256_hex("");
        }
        Output r = dispatch(o, f ? &*f : nullptr);
        json j{{"schema_version", schema_version},
               {"command", o.command},
               {"input_digest", digest},
               {"parameters", r.parameters},
               {"result", r.result},
               {"certificates", r.certificates},
               {"bounds", r.bounds}};
        emit(out, j);
        return r.code;
    } catch (const ParseError& e) {
        auto j = error_json(o.command, digest, "validation", e.code(), e.what());
        for (const auto& d : e.diagnostics())
            j["error"]["diagnostics"].push_back(
                {{"code", d.code}, {"line", d.line}, {"column", d.column}, {"message", d.message}});
        emit(out, j);
        err << "cyq: " << e.what() << "\n";
        return exit_validation;
    } catch (const WeightGradingError& e) {
        auto j = error_json(o.command, digest, "validation", e.code(), e.what());
        j["error"]["constraints"] = e.constraints();
        emit(out, j);
        err << "cyq: " << e.what() << "\n";
        return exit_validation;
    } catch (const ValidationError& e) {
        emit(out, error_json(o.command, digest, "validation", e.code(), e.what()));
        err << "cyq: " << e.what() << "\n";
        return exit_validation;
    } catch (const ResourceError& e) {
        emit(out, error_json(o.command, digest, "resource", "resource-cap", e.what()));
        err << "cyq: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        emit(out, error_json(o.command, digest, "internal", "invariant", e.what()));
        err << "cyq: internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace cyq::cli
