#include "nielsen/invariants.hpp"

#include "nielsen/selfcoincidence.hpp"

namespace nielsen {

namespace {

std::string sphere_name(int n)
{
    return "S^" + std::to_string(n);
}

InvariantValue indicator(bool nonzero, Int r)
{
    return InvariantValue::finite(nonzero ? r : 0);
}

InvariantValue indicator(Tri zero, Int r, const std::string& reason)
{
    switch (zero) {
    case Tri::Yes: return InvariantValue::finite(0);
    case Tri::No: return InvariantValue::finite(r);
    case Tri::Unknown: return InvariantValue::unknown(reason);
    }
    return InvariantValue::unknown(reason);
}

std::string describe_gamma(const TableSet& t, const GammaValue& g)
{
    std::string out = "(";
    for (std::size_t k = 0; k < g.components.size(); ++k) {
        if (k)
            out += ", ";
        out += g.components[k] ? t.ring.describe(*g.components[k]) : "?";
    }
    return out + ")";
}

std::string join_missing(const GammaValue& g)
{
    return g.missing.empty() ? std::string("Gamma not determined") : g.missing.front();
}

void set_all(Report& r, const InvariantValue& v)
{
    r.MCC = r.MC = r.N_sharp = r.N_tilde = r.N_plain = r.N_z = v;
}

bool is_kervaire(FieldTag tag, int n, int m)
{
    return tag == FieldTag::R && (n == 16 || n == 32 || n == 64) && m == 2 * n - 2;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sphere targets

Report sphere_report(const TableSet& t, const SphereElement& f1, const SphereElement& f2)
{
    if (f1.m != f2.m || f1.q != f2.q)
        throw DomainError("both maps must lie in the same pi_m(S^n)");
    const int m = f1.m;
    const int n = f1.q;
    if (m < 1 || n < 1)
        throw DomainError("sphere targets need m, n >= 1");
    Report r;
    r.target = sphere_name(n);
    r.m = m;
    r.n = n;
    r.f1 = t.describe(f1);
    r.f2 = t.describe(f2);

    if (m == 1 && n == 1) {
        const Int diff = checked::sub(f1.value.coeffs()[0], f2.value.coeffs()[0]);
        const Int absdiff = diff < 0 ? checked::neg(diff) : diff;
        r.R = absdiff == 0 ? InvariantValue::infinite() : InvariantValue::finite(absdiff);
        set_all(r, InvariantValue::finite(absdiff));
        r.derivation.push_back("m = n = 1: every number is |deg f1 - deg f2| = " + std::to_string(absdiff));
        return r;
    }
    if (n == 1) {
        r.R = InvariantValue::infinite();
        set_all(r, InvariantValue::finite(0));
        r.derivation.push_back("target S^1 with m >= 2: pi_m(S^1) = 0, every number vanishes");
        return r;
    }
    r.R = InvariantValue::finite(1);

    const Partial<SphereElement> af2 = antipodal_compose(t, f2);
    std::optional<SphereElement> f;
    if (af2.is_known()) {
        f = f1 - *af2;
        r.derivation.push_back("[f] = f1 - a o f2 = " + t.describe(*f));
    } else {
        r.derivation.push_back("a o f2 unknown: " + af2.reason);
    }
    const std::string no_f = "a o f2 unknown: " + af2.reason;

    if (m == n) {
        // All six numbers agree in the equidimensional case.
        set_all(r, f ? indicator(!f->is_zero(), 1) : InvariantValue::unknown(no_f));
        r.hypothesis_notes.push_back("m = n: MC, MCC and all four Nielsen numbers coincide");
        return r;
    }

    r.MCC = f ? indicator(!f->is_zero(), 1) : InvariantValue::unknown(no_f);
    r.N_sharp = r.MCC;
    if (!f) {
        r.MC = InvariantValue::unknown(no_f);
    } else if (f->is_zero()) {
        r.MC = InvariantValue::finite(0);
    } else if (m < n) {
        r.MC = InvariantValue::finite(0);
    } else {
        Tri in_image = suspension_image_contains(t, *f);
        r.derivation.push_back("[f] in E(pi_" + std::to_string(m - 1) + "(S^" + std::to_string(n - 1) +
                               ")): " + to_string(in_image));
        if (in_image == Tri::Yes)
            r.MC = InvariantValue::finite(1);
        else if (in_image == Tri::No)
            r.MC = InvariantValue::infinite();
        else
            r.MC = InvariantValue::unknown("suspension image membership not determined");
    }

    if (f) {
        GammaValue g = gamma(t, *f);
        r.derivation.push_back("Gamma([f]) = " + describe_gamma(t, g));
        r.N_tilde = indicator(g.is_zero(), 1, join_missing(g));
    } else {
        r.N_tilde = InvariantValue::unknown(no_f);
    }

    auto s1 = stabilize(t, f1);
    auto s2 = stabilize(t, f2);
    if (s1.is_known() && s2.is_known()) {
        StableElement rhs = n % 2 == 1 ? *s2 : s2->scale(-1);
        r.derivation.push_back("E^inf f1 = " + t.ring.describe(*s1) + ", (-1)^(n+1) E^inf f2 = " +
                               t.ring.describe(rhs));
        r.N_plain = indicator(*s1 != rhs, 1);
    } else {
        r.N_plain = InvariantValue::unknown(s1.is_known() ? s2.reason : s1.reason);
    }
    r.N_z = InvariantValue::finite(0);
    return r;
}

// ---------------------------------------------------------------------------
// Projective targets

Report projective_report(const TableSet& t, const MapClass& f1, const MapClass& f2, bool assume_self_loose)
{
    if (f1.space != f2.space || f1.m != f2.m)
        throw DomainError("both maps must share target and domain");
    const ProjSpace& s = f1.space;
    const int m = f1.m;
    Report r;
    r.target = s.name();
    r.m = m;
    r.n = s.n;
    r.projective = true;
    r.f1 = t.describe(f1.lift);
    r.f2 = t.describe(f2.lift);
    r.R = reidemeister(s, m);
    r.hypothesis_notes.push_back("lift decomposition valid");
    r.hypothesis_notes.push_back("N is reported for the difference lift(f1) - lift(f2)");
    if (s.n_prime == 1)
        r.hypothesis_notes.push_back(s.name() + " = S^" + std::to_string(s.field.d) +
                                     ": values agree with the sphere closed forms");
    if (is_kervaire(s.field.tag, s.n, m)) {
        r.kervaire_flag = true;
        r.hypothesis_notes.push_back("Kervaire exception: some (f, f) is not loose and MCC(f, f) = 1 != N^#(f, f)");
    }

    const Looseness loose = self_loose(s.field.tag, m, s.n_prime);
    if (loose.verdict == LooseVerdict::Loose) {
        r.hypothesis_notes.push_back("(f1, f1) loose: " + loose.reason);
    } else if (f1.is_constant()) {
        r.hypothesis_notes.push_back("(f1, f1) loose: f1 is constant");
    } else if (assume_self_loose) {
        r.hypothesis_notes.push_back("(f1, f1) loose: assumed by request (" + loose.reason + ")");
    } else {
        r.hypothesis_notes.push_back("(f1, f1) loose not established: " + loose.reason);
        set_all(r, InvariantValue::unknown("hypothesis (f1, f1) loose not established"));
        return r;
    }

    const Int rn = r.R.is_finite() ? r.R.value() : 0;
    const SphereElement delta = f1.lift - f2.lift;
    r.derivation.push_back("delta = lift(f1) - lift(f2) = " + t.describe(delta) + " in pi_" + std::to_string(m) +
                           "(S^" + std::to_string(s.q) + ")");

    r.MCC = indicator(!delta.is_zero(), rn);
    r.N_sharp = r.MCC;
    r.MC = delta.is_zero() ? InvariantValue::finite(0)
                           : InvariantValue::unknown("MC is only determined for sphere targets");

    GammaValue g = gamma(t, delta);
    r.derivation.push_back("Gamma(delta) = " + describe_gamma(t, g));
    r.N_tilde = indicator(g.is_zero(), rn, join_missing(g));

    const StableElement h = hopf_stable(t, s.field.tag);
    auto sd = stabilize(t, delta);
    if (!sd.is_known()) {
        r.N_plain = InvariantValue::unknown(sd.reason);
    } else if (auto p = t.ring.multiply(h, *sd)) {
        r.derivation.push_back("h_K * E^inf delta = " + t.ring.describe(h) + " * " + t.ring.describe(*sd) + " = " +
                               t.ring.describe(*p));
        r.N_plain = indicator(!p->is_zero(), rn);
    } else {
        r.N_plain = InvariantValue::unknown("stable product " + t.ring.describe(h) + " * " + t.ring.describe(*sd) +
                                            " is not tabulated");
    }

    r.N_z = indicator(m == s.n && !delta.is_zero(), rn);
    return r;
}

// ---------------------------------------------------------------------------
// Equivalence scan

std::string EquivalenceVerdict::relations() const
{
    auto rel = [](Tri x) -> std::string {
        switch (x) {
        case Tri::Yes: return "≡";
        case Tri::No: return "≢";
        case Tri::Unknown: return "?";
        }
        return "?";
    };
    return "N^#" + rel(sharp_tilde) + "Ñ" + rel(tilde_plain) + "N" + rel(plain_z) + "N^Z" + rel(z_zero) + "0";
}

namespace {

EquivalenceVerdict chain_verdict(const TableSet& t, int m, int q, int n, const StableElement& h)
{
    EquivalenceVerdict v;
    v.m = m;
    v.n = n;
    try {
        KernelChain kc = kernel_chain(t, m, q, h);
        v.sharp_tilde = tri_of(kc.ker_gamma.is_trivial());
        v.tilde_plain = tri_of(subgroup_cmp(kc.ker_gamma, kc.ker_hopf_stab) == SubgroupRelation::Equal);
        v.plain_zero = tri_of(kc.ker_hopf_stab.is_whole());
        if (m == n) {
            v.plain_z = tri_of(kc.ker_hopf_stab.is_trivial());
            v.z_zero = tri_of(kc.whole.is_trivial());
        } else {
            v.plain_z = v.plain_zero;
            v.z_zero = Tri::Yes;
        }
        v.notes.push_back("Ker Gamma = " + kc.ker_gamma.to_string() + ", Ker(h E^inf) = " +
                          kc.ker_hopf_stab.to_string() + ", whole = " + kc.whole.to_string());
    } catch (const IncompleteData& e) {
        v.notes.push_back(e.what());
    }
    return v;
}

}  // namespace

EquivalenceVerdict sphere_equivalence_scan(const TableSet& t, int m, int n)
{
    if (m < 1 || n < 1)
        throw DomainError("sphere targets need m, n >= 1");
    EquivalenceVerdict v = chain_verdict(t, m, n, n, t.ring.element(0, {1}));
    v.target = sphere_name(n);
    return v;
}

EquivalenceVerdict equivalence_scan(const TableSet& t, const ProjSpace& s, int m)
{
    if (s.n_prime == 1) {
        EquivalenceVerdict v = sphere_equivalence_scan(t, m, s.field.d);
        v.target = s.name();
        v.notes.insert(v.notes.begin(), s.name() + " = S^" + std::to_string(s.field.d));
        return v;
    }
    EquivalenceVerdict v;
    v.target = s.name();
    v.m = m;
    v.n = s.n;
    const Looseness loose = self_loose(s.field.tag, m, s.n_prime);
    if (loose.verdict != LooseVerdict::Loose) {
        v.notes.push_back("hypothesis (f, f) loose for all f not established: " + loose.reason);
        return v;
    }
    EquivalenceVerdict c = chain_verdict(t, m, s.q, s.n, hopf_stable(t, s.field.tag));
    c.target = v.target;
    return c;
}

std::vector<std::string> format_compare_rows(const std::vector<EquivalenceVerdict>& verdicts)
{
    std::vector<std::string> rows;
    std::size_t i = 0;
    while (i < verdicts.size()) {
        const std::string rel = verdicts[i].relations();
        std::string ms = std::to_string(verdicts[i].m);
        std::size_t j = i + 1;
        while (j < verdicts.size() && verdicts[j].relations() == rel && verdicts[j].m == verdicts[j - 1].m + 1) {
            ms += "," + std::to_string(verdicts[j].m);
            ++j;
        }
        rows.push_back("m=" + ms + ": " + rel);
        i = j;
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Wecken statements

KervaireResult kervaire_exception(FieldTag tag, int n, int m)
{
    KervaireResult out;
    if (tag == FieldTag::R && n == 128 && m == 2 * n - 2) {
        out.note = "n = 128 is unresolved: a Kervaire invariant one element may or may not exist";
        return out;
    }
    if (!is_kervaire(tag, n, m)) {
        out.note = "not a Kervaire exception";
        return out;
    }
    Report r;
    r.target = "RP(" + std::to_string(n) + ")";
    r.m = m;
    r.n = n;
    r.projective = true;
    r.f1 = r.f2 = "f with Kervaire invariant one lift";
    r.R = InvariantValue::finite(2);
    r.MCC = InvariantValue::finite(1);
    r.MC = InvariantValue::unknown("MC is only determined for sphere targets");
    r.N_sharp = r.N_tilde = r.N_plain = r.N_z = InvariantValue::finite(0);
    r.kervaire_flag = true;
    r.hypothesis_notes.push_back("(f, f) is not loose, so the lift criteria do not apply");
    r.derivation.push_back("N^#(f, f) = MCC(lift, lift) = 0 while MCC(f, f) = 1 != R = 2");
    out.report = std::move(r);
    out.note = "MCC = N^# fails for RP(" + std::to_string(n) + ") at m = " + std::to_string(m);
    return out;
}

std::string to_string(WeckenStatus w)
{
    switch (w) {
    case WeckenStatus::Holds: return "Holds";
    case WeckenStatus::FailsWithWitness: return "FailsWithWitness";
    case WeckenStatus::Unknown: return "Unknown";
    }
    return "?";
}

WeckenResult wecken_status(const ProjSpace& s, int m)
{
    if (congruence_condition(s.field.tag, s.n_prime))
        return {WeckenStatus::Holds, "MCC = N^# for all pairs into " + s.name()};
    auto k = kervaire_exception(s.field.tag, s.n, m);
    if (k.report)
        return {WeckenStatus::FailsWithWitness, k.note};
    if (s.field.tag != FieldTag::R)
        return {WeckenStatus::Unknown, "open question: Is MCC ≡ N^# whenever K = C or H?"};
    if (k.note.rfind("n = 128", 0) == 0)
        return {WeckenStatus::Unknown, k.note};
    return {WeckenStatus::Unknown, "not decided for K = R with n' even"};
}

// ---------------------------------------------------------------------------
// Chain and dichotomy

ChainCheck chain_check(const Report& r)
{
    ChainCheck c;
    const std::pair<const char*, const InvariantValue*> chain[] = {
        {"MC", &r.MC},       {"MCC", &r.MCC},   {"N^#", &r.N_sharp},
        {"N~", &r.N_tilde}, {"N", &r.N_plain}, {"N^Z", &r.N_z}};
    auto geq = [](const InvariantValue& a, const InvariantValue& b) {
        if (a.is_infinite())
            return true;
        if (b.is_infinite())
            return false;
        return a.value() >= b.value();
    };
    for (std::size_t i = 0; i < std::size(chain); ++i) {
        const InvariantValue& a = *chain[i].second;
        if (a.is_unknown())
            continue;
        if (a.is_finite() && a.value() < 0)
            c.violations.push_back(std::string(chain[i].first) + " is negative");
        for (std::size_t j = i + 1; j < std::size(chain); ++j) {
            const InvariantValue& b = *chain[j].second;
            if (!b.is_unknown() && !geq(a, b))
                c.violations.push_back(std::string(chain[i].first) + " = " + a.to_string() + " < " +
                                       chain[j].first + " = " + b.to_string());
        }
    }
    if (!r.MCC.is_unknown() && !r.R.is_unknown() && !geq(r.R, r.MCC)) {
        std::string msg = "MCC = " + r.MCC.to_string() + " > R = " + r.R.to_string();
        if (r.n == 2)
            c.notes.push_back(msg);
        else
            c.violations.push_back(msg);
    }
    c.ok = c.violations.empty();
    return c;
}

bool dichotomy_holds(const Report& r)
{
    // The Kervaire pairs violate the looseness hypothesis behind the dichotomy.
    if (!r.projective || r.kervaire_flag)
        return true;
    for (const InvariantValue* v : {&r.MCC, &r.N_sharp, &r.N_tilde, &r.N_plain, &r.N_z}) {
        if (!v->is_finite() || v->value() == 0)
            continue;
        if (!r.R.is_finite() || v->value() != r.R.value())
            return false;
    }
    return true;
}

}  // namespace nielsen
