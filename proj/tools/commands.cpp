#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nielsen/element_expr.hpp"
#include "nielsen/selfcoincidence.hpp"

namespace nielsen::cli {

using Json = nlohmann::ordered_json;

namespace {

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rendering

Json to_json(const InvariantValue& v)
{
    Json j;
    switch (v.kind()) {
    case InvariantValue::Kind::Finite:
        j["kind"] = "finite";
        j["value"] = v.value();
        break;
    case InvariantValue::Kind::Infinite: j["kind"] = "infinite"; break;
    case InvariantValue::Kind::Unknown:
        j["kind"] = "unknown";
        j["reason"] = v.reason();
        break;
    }
    return j;
}

Json to_json(const Report& r)
{
    Json j;
    j["target"] = r.target;
    j["m"] = r.m;
    j["n"] = r.n;
    j["f1"] = r.f1;
    j["f2"] = r.f2;
    j["R"] = to_json(r.R);
    j["MCC"] = to_json(r.MCC);
    j["MC"] = to_json(r.MC);
    j["N_sharp"] = to_json(r.N_sharp);
    j["N_tilde"] = to_json(r.N_tilde);
    j["N_plain"] = to_json(r.N_plain);
    j["N_z"] = to_json(r.N_z);
    j["hypothesis_notes"] = r.hypothesis_notes;
    j["derivation"] = r.derivation;
    j["kervaire_flag"] = r.kervaire_flag;
    ChainCheck c = chain_check(r);
    j["chain_ok"] = c.ok;
    j["chain_violations"] = c.violations;
    return j;
}

std::string summary(const Report& r)
{
    return "R=" + r.R.to_string() + " MCC=" + r.MCC.to_string() + " MC=" + r.MC.to_string() +
           " N^#=" + r.N_sharp.to_string() + " Ñ=" + r.N_tilde.to_string() + " N=" + r.N_plain.to_string() +
           " N^Z=" + r.N_z.to_string();
}

void render(std::ostream& out, const Report& r)
{
    out << "target " << r.target << ", m = " << r.m << "\n";
    out << "f1 = " << r.f1 << ", f2 = " << r.f2 << "\n";
    out << summary(r) << "\n";
    const std::pair<const char*, const InvariantValue*> vals[] = {
        {"R", &r.R},         {"MCC", &r.MCC},     {"MC", &r.MC},  {"N^#", &r.N_sharp},
        {"Ñ", &r.N_tilde}, {"N", &r.N_plain}, {"N^Z", &r.N_z}};
    for (const auto& [name, v] : vals)
        if (v->is_unknown())
            out << "  " << name << " unknown: " << v->reason() << "\n";
    for (const auto& n : r.hypothesis_notes)
        out << "  note: " << n << "\n";
    for (const auto& d : r.derivation)
        out << "  " << d << "\n";
    if (r.kervaire_flag)
        out << "  non-Wecken: Kervaire exception\n";
    ChainCheck c = chain_check(r);
    out << "  chain: " << (c.ok ? "ok" : "VIOLATED") << "\n";
    for (const auto& v : c.violations)
        out << "    " << v << "\n";
}

bool has_unknown(const Report& r)
{
    for (const InvariantValue* v : {&r.R, &r.MCC, &r.MC, &r.N_sharp, &r.N_tilde, &r.N_plain, &r.N_z})
        if (v->is_unknown())
            return true;
    return false;
}

std::string tri_word(Tri t)
{
    return to_string(t);
}

Json to_json(const EquivalenceVerdict& v)
{
    Json j;
    j["target"] = v.target;
    j["m"] = v.m;
    j["relations"] = v.relations();
    j["N_sharp_eq_N_tilde"] = tri_word(v.sharp_tilde);
    j["N_tilde_eq_N"] = tri_word(v.tilde_plain);
    j["N_eq_0"] = tri_word(v.plain_zero);
    j["N_eq_N_z"] = tri_word(v.plain_z);
    j["N_z_eq_0"] = tri_word(v.z_zero);
    j["notes"] = v.notes;
    return j;
}

std::pair<int, int> parse_range(const std::string& s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw DomainError("range must look like A..B, got '" + s + "'");
    try {
        std::size_t p1 = 0, p2 = 0;
        std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        int lo = std::stoi(a, &p1);
        int hi = std::stoi(b, &p2);
        if (p1 != a.size() || p2 != b.size())
            throw DomainError("bad range");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw DomainError("range must look like A..B, got '" + s + "'");
    }
}

// ---------------------------------------------------------------------------
// Context shared by the subcommands

struct Context {
    std::string tables_path;
    bool machine = false;
    bool strict = false;
    std::optional<TableSet> loaded;

    const TableSet& tables()
    {
        std::string path = tables_path;
        if (path.empty())
            if (const char* env = std::getenv("NIELSEN_TABLES"))
                path = env;
        if (path.empty())
            return default_tables();
        if (!loaded) {
            try {
                loaded = load_tables_file(path);
            } catch (const std::exception& e) {
                throw DataError(std::string("invalid table data: ") + e.what());
            }
        }
        return *loaded;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Shared computations

std::vector<Witness> witnesses(const TableSet& t, char claim)
{
    std::vector<Witness> out;
    auto proj = [&](FieldTag tag, int np, int m, const std::string& expr, const std::string& label) {
        ProjSpace s = space(tag, np);
        SphereElement f = parse_element(t, m, s.q, expr);
        out.push_back({label, projective_report(t, constant_map(t, s, m), map_class(t, s, m, f))});
    };
    auto sphere = [&](int n, int m, const std::string& expr, const std::string& label) {
        SphereElement f = parse_element(t, m, n, expr);
        out.push_back({label, sphere_report(t, t.zero(m, n), f)});
    };
    switch (claim) {
    case 'a':
        sphere(5, 9, "whitehead(5)", "S^5, m = 9, f = [iota_5, iota_5]");
        proj(FieldTag::C, 2, 9, "whitehead(5)", "CP(2), m = 9, lift [iota_5, iota_5]");
        proj(FieldTag::R, 5, 9, "whitehead(5)", "RP(5), m = 9, lift [iota_5, iota_5]");
        break;
    case 'b':
        proj(FieldTag::R, 5, 6, "susp(hopfC, 3)", "RP(5), m = 6, lift E^3 hopfC = eta_5");
        proj(FieldTag::C, 2, 8, "12*nu_5", "CP(2), m = 8, lift 12 nu_5 = eta_5^3");
        sphere(4, 7, "24*hopfH", "HP(1) = S^4, m = 7, f = 24 hopfH");
        proj(FieldTag::H, 2, 12, "eta_11", "HP(2), m = 12, lift eta_11");
        break;
    case 'c':
        sphere(5, 8, "susp(alpha1_3, 2)", "S^5, m = 8, f = E^2 alpha1_3");
        proj(FieldTag::R, 5, 8, "susp(alpha1_3, 2)", "RP(5), m = 8, lift E^2 alpha1_3");
        proj(FieldTag::C, 2, 6, "eta_5", "CP(2), m = 6, lift eta_5");
        sphere(4, 7, "hopfH", "HP(1) = S^4, m = 7, f = hopfH");
        proj(FieldTag::H, 2, 14, "nu_11", "HP(2), m = 14, lift nu_11");
        break;
    default: throw DomainError(std::string("unknown claim '") + claim + "', expected a, b or c");
    }
    return out;
}

std::vector<EquivalenceVerdict> compare_surface(const TableSet& t, const std::string& surface, int lo, int hi)
{
    ProjSpace s;
    if (surface == "CP1")
        s = space(FieldTag::C, 1);
    else if (surface == "RP2")
        s = space(FieldTag::R, 2);
    else
        throw DomainError("unknown surface '" + surface + "', expected CP1 or RP2");
    std::vector<EquivalenceVerdict> out;
    for (int m = lo; m <= hi; ++m) {
        if (m < 1)
            throw DomainError("m must be at least 1");
        out.push_back(equivalence_scan(t, s, m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Nielsen coincidence numbers for maps from spheres to spheres and projective spaces", "nielsen"};
    app.require_subcommand(1);
    Context ctx;
    app.add_option("--tables", ctx.tables_path, "Table data file (default: $NIELSEN_TABLES, then built-in)");
    app.add_flag("--machine", ctx.machine, "Emit one JSON document");
    app.add_flag("--strict", ctx.strict, "Exit 1 on unknown values or violated invariants");

    int pi_m = 0, pi_q = 0;
    auto* pi = app.add_subcommand("pi", "Describe pi_m(S^q)");
    pi->add_option("m", pi_m)->required();
    pi->add_option("q", pi_q)->required();

    int stem_k = 0;
    auto* stems = app.add_subcommand("stems", "Describe the stable stem pi_k^S");
    stems->add_option("k", stem_k)->required();

    std::string field_name;
    int nprime = 0, sphere_n = 0, m = 0;
    std::string f1_expr = "zero", f2_expr = "zero";
    bool assume = false;
    auto* nielsen = app.add_subcommand("nielsen", "Invariants of a pair of maps");
    auto* opt_field = nielsen->add_option("--field", field_name, "R, C or H");
    auto* opt_nprime = nielsen->add_option("--nprime", nprime, "n' of KP(n')");
    auto* opt_sphere = nielsen->add_option("--sphere", sphere_n, "Sphere target S^n instead of KP(n')");
    opt_field->needs(opt_nprime);
    opt_sphere->excludes(opt_field);
    nielsen->add_option("--m", m, "Domain dimension")->required();
    nielsen->add_option("--f1", f1_expr, "First map (lift for projective targets)");
    nielsen->add_option("--f2", f2_expr, "Second map (lift for projective targets)");
    nielsen->add_flag("--assume-self-loose", assume, "Take (f1, f1) loose as granted");

    std::string surface, range;
    auto* compare = app.add_subcommand("compare", "Equivalences between the Nielsen numbers");
    compare->add_option("--surface", surface, "CP1 or RP2")->required();
    compare->add_option("--m-range", range, "A..B")->required();

    std::string claim;
    auto* wit = app.add_subcommand("witnesses", "Witnesses for the inequivalences of Nielsen numbers");
    wit->add_option("--claim", claim, "a, b or c")->required()->check(CLI::IsMember({"a", "b", "c"}));

    std::string sl_field;
    int sl_nprime = 0, sl_m = 0;
    bool fiber = false;
    auto* selfloose = app.add_subcommand("selfloose", "Looseness of (f, f)");
    selfloose->add_option("--field", sl_field, "R, C or H")->required();
    selfloose->add_option("--nprime", sl_nprime, "n' of KP(n')")->required();
    auto* opt_slm = selfloose->add_option("--m", sl_m, "Domain dimension");
    auto* opt_fiber = selfloose->add_flag("--fiber", fiber, "The fiber projection S^{d(n'+1)-1} -> KP(n')");
    opt_slm->excludes(opt_fiber);

    std::string vs_field;
    int vs_nprime = 1;
    std::size_t vs_samples = 1000;
    std::uint64_t vs_seed = 1;
    auto* verify = app.add_subcommand("verify-s", "Check the self-map s exactly");
    verify->add_option("--field", vs_field, "R, C or H")->required();
    verify->add_option("--nprime", vs_nprime, "odd n'");
    verify->add_option("--samples", vs_samples, "Number of seeded samples");
    verify->add_option("--seed", vs_seed, "Sampling seed");

    auto* validate_data = app.add_subcommand("validate-data", "Check the table data for internal consistency");

    std::vector<std::string> argv_store{"nielsen"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*pi) {
            const TableSet& t = ctx.tables();
            SphereGroupEntry e = t.lookup(pi_m, pi_q);
            if (ctx.machine) {
                Json j{{"m", pi_m}, {"q", pi_q}, {"group", e.group.to_string()}, {"generators", e.generator_names()}};
                out << j.dump(2) << "\n";
            } else {
                out << e.group.to_string() << "\n";
                if (!e.generators.empty()) {
                    out << "generators:";
                    for (const auto& g : e.generators)
                        out << " " << g.name;
                    out << "\n";
                }
            }
            return kOk;
        }
        if (*stems) {
            const TableSet& t = ctx.tables();
            const StableStem& s = t.ring.stem(stem_k);
            if (ctx.machine) {
                Json j{{"k", stem_k}, {"group", s.group.to_string()}, {"generators", s.generator_names}};
                out << j.dump(2) << "\n";
            } else {
                out << s.group.to_string() << "\n";
                if (!s.generator_names.empty()) {
                    out << "generators:";
                    for (const auto& g : s.generator_names)
                        out << " " << g;
                    out << "\n";
                }
            }
            return kOk;
        }
        if (*nielsen) {
            const TableSet& t = ctx.tables();
            Report r;
            if (*opt_sphere) {
                SphereElement a = parse_element(t, m, sphere_n, f1_expr);
                SphereElement b = parse_element(t, m, sphere_n, f2_expr);
                r = sphere_report(t, a, b);
            } else {
                if (!*opt_field)
                    throw DomainError("give --field and --nprime, or --sphere");
                ProjSpace s = space(parse_field(field_name).tag, nprime);
                SphereElement a = parse_element(t, m, s.q, f1_expr);
                SphereElement b = parse_element(t, m, s.q, f2_expr);
                r = projective_report(t, map_class(t, s, m, a), map_class(t, s, m, b), assume);
            }
            if (ctx.machine)
                out << to_json(r).dump(2) << "\n";
            else
                render(out, r);
            if (ctx.strict && (has_unknown(r) || !chain_check(r).ok || !dichotomy_holds(r)))
                return kViolation;
            return kOk;
        }
        if (*compare) {
            const TableSet& t = ctx.tables();
            auto [lo, hi] = parse_range(range);
            auto rows = compare_surface(t, surface, lo, hi);
            if (ctx.machine) {
                Json j;
                j["surface"] = surface;
                j["rows"] = Json::array();
                for (const auto& v : rows)
                    j["rows"].push_back(to_json(v));
                out << j.dump(2) << "\n";
            } else {
                for (const auto& line : format_compare_rows(rows))
                    out << line << "\n";
            }
            if (ctx.strict)
                for (const auto& v : rows)
                    if (v.relations().find('?') != std::string::npos)
                        return kViolation;
            return kOk;
        }
        if (*wit) {
            const TableSet& t = ctx.tables();
            auto ws = witnesses(t, claim[0]);
            bool bad = false;
            if (ctx.machine) {
                Json j;
                j["claim"] = claim;
                j["witnesses"] = Json::array();
                for (const auto& w : ws) {
                    Json wj = to_json(w.report);
                    wj["label"] = w.label;
                    j["witnesses"].push_back(wj);
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& w : ws) {
                    out << "== " << w.label << "\n";
                    render(out, w.report);
                }
            }
            for (const auto& w : ws)
                bad = bad || has_unknown(w.report) || !chain_check(w.report).ok;
            return ctx.strict && bad ? kViolation : kOk;
        }
        if (*selfloose) {
            FieldTag tag = parse_field(sl_field).tag;
            Looseness l;
            if (fiber)
                l = fiber_projection_self_loose(tag, sl_nprime);
            else if (*opt_slm)
                l = self_loose(tag, sl_m, sl_nprime);
            else
                throw DomainError("give --m or --fiber");
            if (ctx.machine)
                out << Json{{"verdict", to_string(l.verdict)}, {"reason", l.reason}}.dump(2) << "\n";
            else
                out << to_string(l.verdict) << ": " << l.reason << "\n";
            return ctx.strict && l.verdict == LooseVerdict::Unknown ? kViolation : kOk;
        }
        if (*verify) {
            Field f = parse_field(vs_field);
            Json j;
            bool ok = true;
            if (f.tag == FieldTag::H) {
                Counterexample c = quaternion_counterexample(vs_nprime);
                KVector sx = selfmap_s(c.x);
                KVector lx = scale_left(c.lambda, c.x);
                Rational res = residual_not_parallel(c.x);
                ok = sx == lx && res == 0;
                if (ctx.machine) {
                    j = {{"field", "H"},
                         {"x", c.x.to_string()},
                         {"s(x)", sx.to_string()},
                         {"lambda", c.lambda.to_string()},
                         {"lambda*x", lx.to_string()},
                         {"exact", sx == lx},
                         {"residual", res.str()}};
                } else {
                    out << "x = " << c.x.to_string() << "\n";
                    out << "s(x) = " << sx.to_string() << "\n";
                    out << c.lambda.to_string() << " * x = " << lx.to_string() << "\n";
                    out << "s(x) = " << c.lambda.to_string() << " x holds exactly: " << (sx == lx ? "yes" : "no")
                        << "\n";
                    out << "residual = " << res.str() << "\n";
                }
            } else {
                auto samples = sample_unit_vectors(f, vs_nprime, vs_samples, vs_seed);
                std::optional<Rational> min;
                for (const auto& x : samples) {
                    Rational r = residual_not_parallel(x);
                    if (!min || r < *min)
                        min = r;
                }
                ok = !min || *min > 0;
                std::string ms = min ? min->str() : std::string("none");
                if (ctx.machine) {
                    j = {{"field", f.name()},   {"nprime", vs_nprime}, {"samples", vs_samples},
                         {"seed", vs_seed},     {"min_residual", ms},   {"all_positive", ok}};
                } else {
                    out << vs_samples << " samples in " << f.name() << "^" << vs_nprime + 1 << ", seed " << vs_seed
                        << "\n";
                    out << "minimum residual = " << ms << "\n";
                    out << "s(x) is never in K x: " << (ok ? "yes" : "no") << "\n";
                }
            }
            if (ctx.machine)
                out << j.dump(2) << "\n";
            return ok ? kOk : kViolation;
        }
        if (*validate_data) {
            ValidationReport rep;
            std::string path = ctx.tables_path;
            if (path.empty())
                if (const char* env = std::getenv("NIELSEN_TABLES"))
                    path = env;
            if (path.empty()) {
                rep = validate(default_tables());
            } else {
                std::ifstream in(path, std::ios::binary);
                if (!in)
                    throw DataError("cannot open table file '" + path + "'");
                std::ostringstream buf;
                buf << in.rdbuf();
                rep = validate_source(buf.str());
            }
            if (ctx.machine) {
                Json j;
                j["violations"] = Json::array();
                for (const auto& v : rep.violations)
                    j["violations"].push_back({{"check", v.check}, {"path", v.path}, {"message", v.message}});
                out << j.dump(2) << "\n";
            } else {
                for (const auto& v : rep.violations)
                    out << v.check << ": " << v.path << ": " << v.message << "\n";
                out << rep.violations.size() << " violations\n";
            }
            return rep.ok() ? kOk : kDataError;
        }
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace nielsen::cli
