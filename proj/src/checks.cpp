#include "chowforge/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace chowforge {

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    }
    return "skipped";
}

namespace {

std::string side_name(int side, const char* first, const char* second)
{
    return side == 0 ? first : second;
}

CheckOutcome equality_outcome(const Presentation& lhs, const char* lhs_name,
                              const Presentation& rhs, const char* rhs_name)
{
    EqualityVerdict v = ideal_equal(lhs, rhs);
    if (v.equal)
        return {true, {}};
    const int side = v.witness_side;
    return {false, side_name(side, lhs_name, rhs_name) + " generator " +
                       canonical_string(*v.witness) + " (degree " +
                       std::to_string(v.witness_degree) + ") not in the " +
                       side_name(side, rhs_name, lhs_name) + " ideal"};
}

std::string membership_witness(const Membership& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.cofactors.size(); ++i) {
        if (i)
            out += "; ";
        out += "h" + std::to_string(i + 1) + " = " + canonical_string(m.cofactors[i]);
    }
    return out;
}

}  // namespace

CheckOutcome check_rh_even_derivation(const Params& p)
{
    return equality_outcome(derive_rh_even(p).result(), "derived", rh_even_presentation(p),
                            "closed-form");
}

CheckOutcome check_wrh_odd_derivation(const Params& p)
{
    return equality_outcome(derive_wrh_odd(p).result(), "derived", wrh_odd_presentation(p),
                            "closed-form");
}

CheckOutcome check_graded_agreement(const Params& p, long deg_max)
{
    const bool even = *p.g % 2 == 0;
    Presentation direct = even ? rh_even_presentation(p) : wrh_odd_presentation(p);
    Presentation derived = even ? derive_rh_even(p).result() : derive_wrh_odd(p).result();
    for (long d = 0; d <= deg_max; ++d) {
        std::string x = quotient_graded_invariants(direct, d).to_string();
        std::string y = quotient_graded_invariants(derived, d).to_string();
        if (x != y)
            return {false, "degree " + std::to_string(d) + ": closed-form " + x + ", derived " + y};
    }
    return {true, {}};
}

CheckOutcome check_superfluity(long j)
{
    SuperfluityCheck c = torus_superfluity(j);
    if (!c.certificate.member)
        return {false, canonical_string(c.target) + " not in the torus squaring ideal"};
    return {true, {}};
}

CheckOutcome check_m2_reduction(const Params& p)
{
    Membership m = m2_reduction(p);
    if (!m.member) {
        Polynomial diff = multiplication_classes(p).m2_one - m2_reduced_class(p);
        return {false, canonical_string(diff) + " not in the six-generator ideal"};
    }
    // the reverse direction: the reduced class lies in six generators plus M_{2*}(1)
    Presentation seven = envelope_ideal(p);
    if (!contains(seven, m2_reduced_class(p)).member)
        return {false, canonical_string(m2_reduced_class(p)) + " not in the seven-generator ideal"};
    return {true, {}};
}

CheckOutcome check_m2_nonredundant(const Params& p)
{
    if (!m2_nonredundant(p))
        return {false, "M2*(1) = " + canonical_string(multiplication_classes(p).m2_one) +
                           " lies in the six-generator ideal"};
    return {true, {}};
}

CheckOutcome check_envelope_equality(const Params& p)
{
    return equality_outcome(excised_pair_presentation(p), "presentation", envelope_ideal(p),
                            "pushforward");
}

CheckOutcome check_squaring_coefficients(const Params& p)
{
    const Presentation pres = excised_pair_presentation(p);
    const auto& rows = pres.relations();
    SquaringClasses s = squaring_classes(p);
    if (rows.size() != 7)
        return {false, "expected 7 relations, got " + std::to_string(rows.size())};
    if (!(rows[1] == s.f_xi))
        return {false, "row 2 " + canonical_string(rows[1]) + " vs F1*(xi1) " +
                           canonical_string(s.f_xi)};
    if (!(rows[3] == s.g_xi))
        return {false, "row 4 " + canonical_string(rows[3]) + " vs G1*(xi1) " +
                           canonical_string(s.g_xi)};
    return {true, {}};
}

CheckOutcome check_tau_pullback()
{
    PullbackDictionary d = pullback_gl2_from_pgl2(1, 1);
    const Polynomial tau = Polynomial::variable(d.source, "tau");
    const Polynomial c2 = Polynomial::variable(d.source, "c2");
    const Polynomial f = d.apply(tau * tau + c2);
    const Polynomial bundle = rebase(proj_bundle_relation(sym_dual_roots(1, 0, 0), "xi1"), d.target);
    Presentation ideal(d.target, {bundle});
    Membership m = contains(ideal, f);
    if (!m.member)
        return {false, canonical_string(f) + " not in (" + canonical_string(bundle) + ")"};
    const Polynomial four = Polynomial::constant(d.target, 4);
    if (!(m.cofactors.at(0) == four))
        return {false, "certificate " + membership_witness(m) + ", expected h1 = 4"};
    return {true, membership_witness(m)};
}

CheckOutcome check_chern_twist()
{
    ChernRootSet roots = sym_dual_roots(1, 0, -1);
    const Polynomial k1 = roots.chern_class(1);
    const Polynomial k2 = roots.chern_class(2);
    const Ring& r = k1.ring();
    const Polynomial t = Polynomial::variable(r, "t");
    const Polynomial c1 = Polynomial::variable(r, "c1");
    const Polynomial c2 = Polynomial::variable(r, "c2");

    if (!(k1 == -c1 - 2 * t))
        return {false, "first Chern class " + canonical_string(k1) + ", expected -c1 - 2*t"};
    if (!(k2 == c2 + t * c1 + t * t))
        return {false, "second Chern class " + canonical_string(k2) + ", expected root value"};
    Images flip{{"t", -t}, {"c1", c1}, {"c2", c2}};
    const Polynomial flipped = substitute(k2, flip, r);
    if (!(flipped == c2 - t * c1 + t * t))
        return {false, "second Chern class under t -> -t is " + canonical_string(flipped)};
    return {true, "c1 = " + canonical_string(k1) + "; c2 = " + canonical_string(k2) +
                      "; c2 under t -> -t = " + canonical_string(flipped)};
}

CheckOutcome check_graded_base_case()
{
    AbelianInvariants inv = quotient_graded_invariants(rh_even_presentation(Params::from_gn(2, 1)), 1);
    AbelianInvariants want{0, {2, 2}};
    if (inv.free_rank != want.free_rank || inv.torsion != want.torsion)
        return {false, "degree 1: " + inv.to_string() + ", expected " + want.to_string()};
    return {true, {}};
}

CheckOutcome check_external_root_gerbe(const Params& p, const Presentation& external)
{
    Presentation extended = wrh_odd_even_from_external(p, external);
    std::vector<Polynomial> expected;
    for (const auto& r : external.relations())
        expected.push_back(rebase(r, extended.ring()));
    auto var = [&](const char* n) { return Polynomial::variable(extended.ring(), n); };
    expected.push_back(2 * var("t2a") - var("xi2a"));
    expected.push_back(2 * var("t2b") - var("xi2b"));
    for (const auto& f : expected)
        if (!contains(extended, f).member)
            return {false, canonical_string(f) + " not in the extended ideal"};
    return {true, "degree 1: " + quotient_graded_invariants(extended, 1).to_string()};
}

Suite parse_suite(const std::string& name)
{
    if (name == "all") return Suite::All;
    if (name == "derivations") return Suite::Derivations;
    if (name == "lemma34") return Suite::Superfluity;
    if (name == "remark37") return Suite::M2Generator;
    if (name == "identities") return Suite::Identities;
    throw Error("unknown suite '" + name + "'");
}

namespace {

std::vector<Params> rh_even_grid(long g_max)
{
    std::vector<Params> out;
    for (long g = 2; g <= g_max; g += 2)
        for (long n = 1; n <= g / 2; ++n)
            out.push_back(Params::from_gn(g, n));
    return out;
}

std::vector<Params> wrh_odd_grid(long g_max)
{
    std::vector<Params> out;
    for (long g = 3; g <= g_max; g += 2)
        for (long n = 1; n <= (g - 1) / 2; n += 2)
            out.push_back(Params::from_gn(g, n));
    return out;
}

std::vector<Params> ab_grid(long ab_max)
{
    std::vector<Params> out;
    for (long a = 1; a <= ab_max; ++a)
        for (long b = 1; b <= ab_max; ++b)
            out.push_back(Params::from_ab(a, b));
    return out;
}

// torus_superfluity(j) depends only on j; pair checks share it.
class SuperfluityCache {
public:
    CheckOutcome get(long j)
    {
        std::shared_future<CheckOutcome> f;
        bool owner = false;
        std::promise<CheckOutcome> promise;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(j);
            if (it == cache_.end()) {
                f = promise.get_future().share();
                cache_.emplace(j, f);
                owner = true;
            } else {
                f = it->second;
            }
        }
        if (owner) {
            try {
                promise.set_value(check_superfluity(j));
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return f.get();
    }

private:
    std::mutex mu_;
    std::map<long, std::shared_future<CheckOutcome>> cache_;
};

}  // namespace

std::vector<CheckTask> build_suite(Suite suite, long g_max, long ab_max)
{
    std::vector<CheckTask> tasks;
    const bool all = suite == Suite::All;

    if (all || suite == Suite::Derivations) {
        for (const Params& p : rh_even_grid(g_max)) {
            tasks.push_back({"rh-even-derivation", p, [p] { return check_rh_even_derivation(p); }});
            tasks.push_back({"graded-agreement", p, [p] { return check_graded_agreement(p, 4); }});
        }
        for (const Params& p : wrh_odd_grid(g_max)) {
            tasks.push_back({"wrh-odd-derivation", p, [p] { return check_wrh_odd_derivation(p); }});
            tasks.push_back({"graded-agreement", p, [p] { return check_graded_agreement(p, 4); }});
        }
    }
    if (all || suite == Suite::Superfluity) {
        auto cache = std::make_shared<SuperfluityCache>();
        for (const Params& p : ab_grid(ab_max))
            tasks.push_back({"torus-superfluity", p, [p, cache] {
                                 CheckOutcome x = cache->get(p.a);
                                 if (!x.pass)
                                     return CheckOutcome{false, "a side: " + x.witness};
                                 CheckOutcome y = cache->get(p.b);
                                 if (!y.pass)
                                     return CheckOutcome{false, "b side: " + y.witness};
                                 return CheckOutcome{true, {}};
                             }});
    }
    if (all || suite == Suite::M2Generator) {
        for (const Params& p : ab_grid(ab_max)) {
            tasks.push_back({"m2-reduction", p, [p] { return check_m2_reduction(p); }});
            tasks.push_back({"m2-nonredundant", p, [p] { return check_m2_nonredundant(p); }});
            tasks.push_back({"envelope-equality", p, [p] { return check_envelope_equality(p); }});
        }
    }
    if (all || suite == Suite::Identities) {
        for (const Params& p : ab_grid(std::max(ab_max, 12L)))
            tasks.push_back({"squaring-coefficients", p, [p] { return check_squaring_coefficients(p); }});
        tasks.push_back({"tau-pullback", Params{}, [] { return check_tau_pullback(); }});
        tasks.push_back({"chern-twist", Params{}, [] { return check_chern_twist(); }});
        tasks.push_back({"graded-base-case", Params::from_gn(2, 1),
                         [] { return check_graded_base_case(); }});
    }
    return tasks;
}

std::vector<CheckTask> external_checks(const Presentation& external, std::optional<Params> p)
{
    std::vector<CheckTask> tasks;
    tasks.push_back({"external-ideal", Params{}, [external] {
                         for (const auto& r : external.relations())
                             if (!is_homogeneous(r))
                                 return CheckOutcome{false, canonical_string(r) + " is not homogeneous"};
                         return CheckOutcome{true, std::to_string(external.relations().size()) +
                                                       " relation(s) over " + external.ring()->header()};
                     }});
    if (p)
        tasks.push_back({"external-root-gerbe", *p,
                         [external, q = *p] { return check_external_root_gerbe(q, external); }});
    return tasks;
}

namespace {

auto sort_key(const CheckReport& r)
{
    return std::make_tuple(r.check_id, r.params.g.value_or(-1), r.params.n.value_or(-1),
                           r.params.a, r.params.b);
}

CheckReport run_one(const CheckTask& task)
{
    CheckReport r;
    r.check_id = task.check_id;
    r.params = task.params;
    auto start = std::chrono::steady_clock::now();
    try {
        CheckOutcome o = task.run();
        r.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
        r.witness = o.witness;
        if (!o.pass && r.witness.empty())
            r.witness = "check failed without a witness";
    } catch (const std::exception& e) {
        r.verdict = Verdict::Fail;
        r.witness = std::string("error: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return r;
}

}  // namespace

std::vector<CheckReport> run_checks(const std::vector<CheckTask>& tasks, unsigned jobs)
{
    std::vector<CheckReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            reports[i] = run_one(tasks[i]);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < jobs; ++k)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& x, const CheckReport& y) { return sort_key(x) < sort_key(y); });
    return reports;
}

std::string report_json(const CheckReport& r)
{
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    nlohmann::ordered_json params;
    params["g"] = r.params.g ? nlohmann::ordered_json(*r.params.g) : nullptr;
    params["n"] = r.params.n ? nlohmann::ordered_json(*r.params.n) : nullptr;
    params["a"] = r.params.a ? nlohmann::ordered_json(r.params.a) : nullptr;
    params["b"] = r.params.b ? nlohmann::ordered_json(r.params.b) : nullptr;
    j["params"] = params;
    j["verdict"] = verdict_name(r.verdict);
    j["witness"] = r.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.witness);
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::string params_text(const Params& p)
{
    std::string out;
    auto put = [&](const char* k, long v) {
        if (!out.empty())
            out += ' ';
        out += std::string(k) + "=" + std::to_string(v);
    };
    if (p.g) put("g", *p.g);
    if (p.n) put("n", *p.n);
    if (p.a) put("a", p.a);
    if (p.b) put("b", p.b);
    return out;
}

std::string report_text(const CheckReport& r)
{
    std::string out = r.verdict == Verdict::Pass ? "PASS " : r.verdict == Verdict::Fail ? "FAIL " : "SKIP ";
    out += r.check_id;
    std::string ps = params_text(r.params);
    if (!ps.empty())
        out += " " + ps;
    if (r.verdict == Verdict::Fail)
        out += ": " + r.witness;
    return out;
}

}  // namespace chowforge
