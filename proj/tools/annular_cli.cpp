// annular: command-line front end for the enumeration, counting, moment and
// Monte Carlo routines. Exit codes: 0 ok, 1 usage, 2 disagreement, 3 bound.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "annular/config.hpp"
#include "annular/mc.hpp"
#include "annular/moments.hpp"
#include "annular/noncrossing.hpp"
#include "annular/pperm.hpp"
#include "annular/quotient.hpp"
#include "annular/verify.hpp"
#include "json.hpp"

using namespace annular;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitBound = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    int threads = 0;
    int max_m = 0;
    std::string format = "text";
    std::string output;
} g;

std::ostringstream out;

Shape shape_from(const std::string& shape, int n)
{
    if (!shape.empty() && n > 0)
        throw UsageError("give either --shape or --n/--m, not both");
    if (n > 0)
        return Shape({n});
    if (shape.empty())
        throw UsageError("a --shape (or --n/--m) is required");
    return Shape::parse(shape);
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// rows of (column -> value); emitted in the chosen format with a count header
void emit_listing(const std::string& what, const std::vector<std::string>& columns,
                  const std::vector<std::vector<std::string>>& rows)
{
    if (g.format == "json") {
        json items = json::array();
        for (auto& r : rows) {
            json o = json::object();
            for (std::size_t i = 0; i < columns.size(); ++i)
                o[columns[i]] = r[i];
            items.push_back(o);
        }
        out << json{{"class", what}, {"count", rows.size()}, {"items", items}}.dump(2) << "\n";
    } else if (g.format == "csv") {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << "\n";
        for (auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                out << (i ? "," : "") << csv_quote(r[i]);
            out << "\n";
        }
    } else {
        out << what << ": " << rows.size() << "\n";
        for (auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                out << (i ? "  " : "") << r[i];
            out << "\n";
        }
    }
}

// --- enumerate / count ---------------------------------------------------

struct ClassArgs {
    std::string kind;
    std::string shape;
    int n = 0;
    int k = 0;
    std::string family;
    int max_cycle = 0;
};

AnnularClass annular_class(const ClassArgs& a)
{
    Shape s = shape_from(a.shape, a.n);
    if (a.kind == "nc") {
        if (s.r() != 1)
            throw UsageError("nc takes a single circle");
        return AnnularClass::nc(s.m());
    }
    if (a.kind == "nc2")
        return AnnularClass::nc2(s);
    if (a.kind == "snc")
        return AnnularClass::snc(s);
    if (s.r() != 2)
        throw UsageError("nc2-through needs --shape m1,m2");
    if (a.k < 1)
        throw UsageError("nc2-through needs --k >= 1");
    return AnnularClass::nc2_through(s.part(0), s.part(1), a.k);
}

void cmd_enumerate(const ClassArgs& a)
{
    if (a.kind == "psnc" || a.kind == "family") {
        Shape s = shape_from(a.shape, a.n);
        std::vector<PSItem> items;
        std::string what = "PS_NC(" + s.str() + ")";
        if (a.kind == "psnc") {
            if (s.r() > 3)
                throw UsageError("psnc supports up to three circles");
            items = enumerate_ps_nc(s, a.max_cycle);
        } else {
            if (a.family.empty())
                throw UsageError("family needs --family NAME");
            auto f = family_from_name(a.family);
            items = enumerate_family(s, f, a.max_cycle);
            what = family_name(f) + "(" + s.str() + ")";
        }
        std::vector<std::vector<std::string>> rows;
        for (auto& it : items)
            rows.push_back({it.pp.v.str(), it.pp.p.str(), family_name(it.family)});
        emit_listing(what, {"v", "pi", "family"}, rows);
        return;
    }
    if (a.kind == "limit") {
        Shape s = shape_from(a.shape, a.n);
        if (s.r() != 3)
            throw UsageError("limit needs a three-circle --shape");
        check_bound(s.m(), "limit graph sweep over P(" + std::to_string(s.m()) + ")");
        std::vector<std::vector<std::string>> rows;
        if (s.m() % 2 == 0) {
            auto gr = build(s);
            sweep_partitions(s.m(), s.m() / 2 - 1, 1, [&](int, const std::vector<int>& lab) {
                auto pi = SetPartition::from_labels(lab);
                auto c = classify(quotient(gr, pi));
                if (c.is_limit())
                    rows.push_back({pi.str(), kind_name(c.kind), weight(c).str()});
            });
        }
        emit_listing("limit graphs on (" + s.str() + ")", {"pi", "kind", "weight"}, rows);
        return;
    }
    auto cls = annular_class(a);
    std::vector<std::vector<std::string>> rows;
    for (auto& p : enumerate(cls))
        rows.push_back({p.str()});
    emit_listing(cls.str(), {"pi"}, rows);
}

void cmd_count(const ClassArgs& a)
{
    json rec;
    if (a.kind == "limit") {
        Shape s = shape_from(a.shape, a.n);
        if (s.r() != 3)
            throw UsageError("limit needs a three-circle --shape");
        auto en = count_limit_graphs_enumerated(s);
        auto cl = count_limit_graphs_closed(s);
        rec = {{"class", "limit graphs (" + s.str() + ")"}, {"enumerated", en.to_json()}, {"closed", cl.to_json()}};
        if (!(en == cl))
            throw Disagreement(rec.dump());
    } else if (a.kind == "family" || a.kind == "psnc") {
        Shape s = shape_from(a.shape, a.n);
        if (a.kind == "psnc") {
            rec = {{"class", "PS_NC(" + s.str() + ")"}, {"enumerated", enumerate_ps_nc(s, a.max_cycle).size()}};
        } else {
            if (a.family.empty())
                throw UsageError("family needs --family NAME");
            auto f = family_from_name(a.family);
            rec = {{"class", family_name(f) + "(" + s.str() + ")"}, {"enumerated", family_count_enumerated(s, f)}};
            if (auto c = family_count_closed(s, f))
                rec["closed"] = *c;
        }
    } else if (a.kind == "double-tree" || a.kind == "double-uniloop" || a.kind == "double-unicircuit") {
        Shape s = shape_from(a.shape, a.n);
        auto kind = a.kind == "double-tree"      ? DoubleStructure::Tree
                    : a.kind == "double-uniloop" ? DoubleStructure::Uniloop
                                                 : DoubleStructure::Unicircuit;
        rec = {{"class", a.kind + "(" + s.str() + ")"}, {"enumerated", count_double_structures(s, kind, a.k)}};
        if (auto c = count_double_structures_closed(s, kind, a.k))
            rec["closed"] = *c;
    } else {
        auto cls = annular_class(a);
        rec = {{"class", cls.str()}, {"enumerated", count(cls)}};
        if (auto c = count_closed(cls))
            rec["closed"] = *c;
    }
    if (rec.contains("closed") && rec["closed"] != rec["enumerated"])
        throw Disagreement(rec.dump());
    if (g.format == "json")
        out << rec.dump(2) << "\n";
    else if (g.format == "csv") {
        out << "class,enumerated,closed\n"
            << csv_quote(rec["class"].get<std::string>()) << "," << rec["enumerated"].dump() << ","
            << (rec.contains("closed") ? rec["closed"].dump() : "") << "\n";
    } else {
        out << rec["class"].get<std::string>() << ": " << rec["enumerated"].dump();
        if (rec.contains("closed"))
            out << " (closed form " << rec["closed"].dump() << ")";
        out << "\n";
    }
}

// --- classify --------------------------------------------------------------

void cmd_classify(const std::string& shape_s, const std::string& pi_s, bool dot)
{
    Shape s = Shape::parse(shape_s);
    auto pi = SetPartition::parse(pi_s, s.m());
    auto qg = quotient(build(s), pi);
    auto el = elementarize(qg);
    json rec = {{"shape", s.str()}, {"pi", pi.str()}, {"pibar", el.pibar().str()}};
    if (s.r() == 3) {
        auto c = classify(qg);
        rec["kind"] = kind_name(c.kind);
        rec["reason"] = reason_name(c.reason);
        rec["q"] = c.q.str();
        if (c.is_limit())
            rec["weight"] = weight(c).str();
    } else
        rec["q"] = q_vec(s, pi).str();
    if (dot) {
        out << to_dot(qg) << to_dot(qg, el);
        return;
    }
    if (g.format == "json")
        out << rec.dump(2) << "\n";
    else
        for (auto& [k, v] : rec.items())
            out << k << ": " << v.get<std::string>() << "\n";
}

// --- alpha -----------------------------------------------------------------

struct AlphaArgs {
    int order = 0;
    std::string shape;
    int m = 0;
    std::string route = "closed";
    bool symbolic = false;
    std::string k4, k6, kdiag4;
};

void cmd_alpha(const AlphaArgs& a)
{
    Shape s = shape_from(a.shape, a.m);
    int r = s.r();
    if (a.order && a.order != r)
        throw UsageError("--order " + std::to_string(a.order) + " does not match a shape with " + std::to_string(r) +
                         " parts");
    if (r > 3)
        throw UsageError("orders 1 to 3 only");
    bool numeric = !a.k4.empty() || !a.k6.empty() || !a.kdiag4.empty();
    if (numeric && a.symbolic)
        throw UsageError("--symbolic conflicts with cumulant values");
    if (numeric && (a.k4.empty() || a.k6.empty() || a.kdiag4.empty()))
        throw UsageError("numeric mode needs all of --k4, --k6, --kdiag4");

    std::vector<std::string> routes;
    if (a.route == "all")
        routes = r == 3 ? std::vector<std::string>{"closed", "graphsum", "psnc"}
                        : std::vector<std::string>{"closed", "psnc"};
    else
        routes = {a.route};
    const auto& p = s.parts();
    std::vector<std::pair<std::string, Poly>> results;
    for (auto& route : routes) {
        Poly v;
        if (route == "psnc")
            v = alpha_from_cumulants(p, wigner_cumulants());
        else if (route == "closed")
            v = r == 1 ? Poly(alpha_first(p[0])) : r == 2 ? alpha_second(p[0], p[1]) : alpha_third_closed(p[0], p[1], p[2]);
        else if (route == "graphsum") {
            if (r != 3)
                throw UsageError("the graphsum route is for order 3");
            v = alpha_third_graphsum(p[0], p[1], p[2]);
        } else
            throw UsageError("unknown route " + route);
        results.emplace_back(route, v);
    }
    std::map<std::string, Rational> values;
    if (numeric)
        values = {{"k4", parse_rational(a.k4)}, {"k6", parse_rational(a.k6)}, {"kdiag4", parse_rational(a.kdiag4)}};
    auto render = [&](const Poly& v) { return numeric ? rational_str(v.evaluate(values)) : v.str(); };

    bool agree = true;
    for (auto& [route, v] : results)
        agree = agree && (numeric ? v.evaluate(values) == results[0].second.evaluate(values) : v == results[0].second);

    if (g.format == "json") {
        json rec = {{"shape", s.str()}, {"order", r}, {"agree", agree}};
        for (auto& [route, v] : results)
            rec["routes"][route] = numeric ? json(rational_str(v.evaluate(values))) : v.to_json();
        out << rec.dump(2) << "\n";
    } else if (g.format == "csv") {
        out << "shape,route,value\n";
        for (auto& [route, v] : results)
            out << csv_quote(s.str()) << "," << route << "," << csv_quote(render(v)) << "\n";
    } else {
        for (auto& [route, v] : results)
            out << (results.size() > 1 ? route + ": " : "") << render(v) << "\n";
    }
    if (!agree)
        throw Disagreement("routes disagree for shape " + s.str());
}

// --- expand (formal moment-cumulant sums) ------------------------------------

void cmd_expand(const std::string& shape_s, bool invert)
{
    Shape s = Shape::parse(shape_s);
    if (s.r() > 3)
        throw UsageError("orders 1 to 3 only");
    Poly v = invert ? cumulant_from_moments(s.parts(), IndexedTable::symbolic("alpha"))
                    : alpha_from_cumulants(s.parts(), IndexedTable::symbolic("kappa"));
    std::string lhs = index_symbol(invert ? "kappa" : "alpha", s.parts());
    if (g.format == "json")
        out << json{{"lhs", lhs}, {"value", v.to_json()}}.dump(2) << "\n";
    else
        out << lhs << " = " << v.str() << "\n";
}

// --- verify ------------------------------------------------------------------

void cmd_verify(const std::string& suite, int max_m, int max_closed, int samples, std::uint64_t seed)
{
    Report rep;
    if (suite == "identities")
        rep = verify_identities(std::max(max_closed, max_m), max_m);
    else if (suite == "parity")
        rep = verify_parity(max_m, samples, seed);
    else if (suite == "oracle")
        rep = verify_oracle(max_m);
    else
        throw UsageError("unknown suite " + suite);
    if (g.format == "json")
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.text();
    if (!rep.ok())
        throw Disagreement(suite + " suite failed");
}

// --- simulate ------------------------------------------------------------------

struct SimArgs {
    std::string model = "gaussian";
    std::string diag = "gaussian";
    std::string spread = "0";
    std::string shape;
    int order = 0;
    int n = 100;
    std::int64_t samples = 1000;
    std::uint64_t seed = 1;
    int batches = 50;
    double gate = 0;
};

void cmd_simulate(const SimArgs& a)
{
    auto model = EntryModel::parse(a.model, a.diag, a.spread);
    Shape s = Shape::parse(a.shape);
    if (a.order && a.order != s.r())
        throw UsageError("--order does not match the shape");
    if (s.r() > 3)
        throw UsageError("orders 1 to 3 only");
    MCOptions o;
    o.n = a.n;
    o.samples = a.samples;
    o.seed = a.seed;
    o.batches = a.batches;
    auto e = estimate_alpha(model, s.parts(), o);
    double theory = theory_value(model, s.parts());
    double z = (e.estimate - theory) / e.se;
    json rec = e.to_json();
    rec["model"] = model.to_json();
    rec["theory"] = theory;
    rec["z_score"] = z;
    auto cum = analytic_cumulants(model);
    rec["cumulants"] = {{"k4", rational_str(cum.k4)}, {"k6", rational_str(cum.k6)}, {"kdiag4", rational_str(cum.kdiag4)}};
    if (g.format == "json")
        out << rec.dump(2) << "\n";
    else if (g.format == "csv") {
        out << "model,shape,N,samples,seed,estimate,se,theory,z_score\n";
        out << csv_quote(model.name()) << "," << csv_quote(s.str()) << "," << e.n << "," << e.samples << "," << e.seed
            << "," << json(e.estimate).dump() << "," << json(e.se).dump() << "," << json(theory).dump() << ","
            << json(z).dump() << "\n";
    } else {
        out << "model " << model.name() << ", shape " << s.str() << ", N " << e.n << ", samples " << e.samples
            << ", seed " << e.seed << "\n"
            << "estimate " << json(e.estimate).dump() << " +- " << json(e.se).dump() << "\n"
            << "theory " << json(theory).dump() << "\n"
            << "z " << json(z).dump() << "\n";
    }
    if (a.gate > 0 && !(std::abs(z) <= a.gate))
        throw Disagreement("|z| = " + json(std::abs(z)).dump() + " exceeds the gate " + json(a.gate).dump());
}

void flush()
{
    if (g.output.empty()) {
        std::cout << out.str();
        std::cout.flush();
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + g.output);
    f << out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"annular: annular non-crossing combinatorics and third-order Wigner moments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", g.threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-m", g.max_m, "enumeration bound on m (default 14, or ANNULAR_MAX_M)")
        ->check(CLI::Range(1, 63));
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("-o,--output", g.output, "write to this file instead of stdout");

    ClassArgs ca;
    auto add_class_opts = [&](CLI::App* c) {
        c->add_option("kind", ca.kind, "nc | nc2 | snc | nc2-through | psnc | family | limit")->required();
        c->add_option("--shape", ca.shape, "circle sizes, e.g. 2,2,2");
        c->add_option("--n", ca.n, "single circle of this size");
        c->add_option("--k", ca.k, "through strings (nc2-through) or circuit length (double-unicircuit)");
        c->add_option("--family", ca.family, "PS_NC family name, e.g. NC2_111");
        c->add_option("--max-cycle", ca.max_cycle, "drop elements with longer cycles");
    };
    auto* en = app.add_subcommand("enumerate", "list an annular class, PS_NC family or the limit graphs");
    add_class_opts(en);
    auto* co = app.add_subcommand("count", "count a class, comparing with its closed form");
    add_class_opts(co);

    std::string cl_shape, cl_pi;
    bool cl_dot = false;
    auto* cl = app.add_subcommand("classify", "classify the quotient graph of a partition");
    cl->add_option("--shape", cl_shape)->required();
    cl->add_option("--pi", cl_pi, "partition, e.g. {1,3|2|4}")->required();
    cl->add_flag("--dot", cl_dot, "print Graphviz DOT for the graph and its elementarization");

    AlphaArgs aa;
    auto* al = app.add_subcommand("alpha", "Wigner moment alpha_{m1,..,mr} for r <= 3");
    al->add_option("--order", aa.order)->check(CLI::Range(1, 3));
    al->add_option("--shape", aa.shape);
    al->add_option("--m", aa.m, "single circle of this size");
    al->add_option("--route", aa.route)->check(CLI::IsMember({"closed", "graphsum", "psnc", "all"}));
    al->add_flag("--symbolic", aa.symbolic, "polynomial in k4, k6, kdiag4 (default)");
    al->add_option("--k4", aa.k4, "exact rational, e.g. -1 or 1/2");
    al->add_option("--k6", aa.k6);
    al->add_option("--kdiag4", aa.kdiag4);

    std::string ex_shape;
    bool ex_invert = false;
    auto* ex = app.add_subcommand("expand", "formal moment-cumulant expansion");
    ex->add_option("--shape", ex_shape)->required();
    ex->add_flag("--invert", ex_invert, "express the cumulant through moments instead");

    std::string suite;
    int v_max_m = 10, v_max_closed = 18, v_samples = 1000;
    std::uint64_t v_seed = 1;
    auto* ve = app.add_subcommand("verify", "run an identity suite");
    ve->add_option("suite", suite, "identities | parity | oracle")
        ->required()
        ->check(CLI::IsMember({"identities", "parity", "oracle"}));
    ve->add_option("--max-m", v_max_m, "largest m for enumeration");
    ve->add_option("--max-closed", v_max_closed, "largest m for closed forms (identities)");
    ve->add_option("--samples", v_samples, "random partitions per shape (parity)");
    ve->add_option("--seed", v_seed);

    SimArgs sa;
    auto* si = app.add_subcommand("simulate", "Monte Carlo estimate of alpha against the engine");
    si->add_option("--model", sa.model)->check(CLI::IsMember({"gaussian", "phase-rademacher"}));
    si->add_option("--diag", sa.diag, "diagonal law")->check(CLI::IsMember({"gaussian", "rademacher"}));
    si->add_option("--spread", sa.spread, "phase-rademacher radius spread in [0,1]; k4 = spread^2 - 1");
    si->add_option("--shape", sa.shape)->required();
    si->add_option("--order", sa.order)->check(CLI::Range(1, 3));
    si->add_option("--N", sa.n, "matrix size")->check(CLI::PositiveNumber);
    si->add_option("--samples", sa.samples)->check(CLI::PositiveNumber);
    si->add_option("--seed", sa.seed);
    si->add_option("--batches", sa.batches, "jackknife batches (>= 10)");
    si->add_option("--gate", sa.gate, "fail (exit 2) when |z| exceeds this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (g.threads > 0)
            set_worker_threads(g.threads);
        if (g.max_m > 0)
            set_enumeration_bound(g.max_m);
        if (*en)
            cmd_enumerate(ca);
        else if (*co)
            cmd_count(ca);
        else if (*cl)
            cmd_classify(cl_shape, cl_pi, cl_dot);
        else if (*al)
            cmd_alpha(aa);
        else if (*ex)
            cmd_expand(ex_shape, ex_invert);
        else if (*ve)
            cmd_verify(suite, v_max_m, v_max_closed, v_samples, v_seed);
        else if (*si)
            cmd_simulate(sa);
        flush();
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const Disagreement& e) {
        flush();
        std::cerr << "disagreement: " << e.what() << "\n";
        return kExitDisagree;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
