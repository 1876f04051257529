#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

#include "verify/runners.hpp"

namespace liecomp {

bool Report::pass() const {
    if (claims.empty()) return false;
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

namespace {

using Runner = std::function<Report(const CaseSpec&)>;

#define LIECOMP_RUNNER(id, fn)                                                                    \
    {                                                                                             \
        id, [](const CaseSpec& c) {                                                               \
            return dispatch_field(c.field, [&](auto tag) {                                        \
                using S = typename decltype(tag)::type;                                           \
                return vdetail::fn<S>(c);                                                         \
            });                                                                                   \
        }                                                                                         \
    }

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> table{
        LIECOMP_RUNNER("thm1.1", run_thm_1_1),
        LIECOMP_RUNNER("thm1.2", run_thm_1_2),
        LIECOMP_RUNNER("thm1.3", run_thm_1_3),
        LIECOMP_RUNNER("thm1.4", run_thm_1_4),
        LIECOMP_RUNNER("sl-series", run_sl_series),
        LIECOMP_RUNNER("sp-so-embedding", run_sp_so_embedding),
        LIECOMP_RUNNER("sl4-so6", run_sl4_so6),
        LIECOMP_RUNNER("block-irreducibles", run_block_irreducibles),
        LIECOMP_RUNNER("heisenberg", run_heisenberg),
    };
    return table;
}

#undef LIECOMP_RUNNER

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Report& r) {
    ordered_json claims = ordered_json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"label", c.label},
                          {"paper_ref", c.paper_ref},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass},
                          {"method", c.method}});
    return {{"case", r.case_id},
            {"field", {{"char", r.field.characteristic}, {"degree", r.field.degree}}},
            {"m", r.m},
            {"claims", claims},
            {"pass", r.pass()}};
}

CaseSpec make(std::string id, FieldSpec f, Index m, std::uint64_t budget) {
    CaseSpec c;
    c.id = std::move(id);
    c.field = f;
    c.m = m;
    c.budget = budget;
    return c;
}

}  // namespace

const std::vector<std::string>& case_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : runners()) out.push_back(k);
        return out;
    }();
    return ids;
}

Report run_case(const CaseSpec& spec) {
    const auto it = runners().find(spec.id);
    if (it == runners().end()) throw std::invalid_argument("unknown case id '" + spec.id + "'");
    return it->second(spec);
}

std::vector<CaseSpec> default_grid(std::uint64_t budget) {
    const FieldSpec q = FieldSpec::rationals(), f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3),
                    f5 = FieldSpec::prime(5), f7 = FieldSpec::prime(7), f9 = FieldSpec::quadratic(3),
                    f13 = FieldSpec::prime(13), f25 = FieldSpec::quadratic(5);
    std::vector<CaseSpec> g;
    for (Index m : {2, 4, 6, 8, 10}) g.push_back(make("thm1.1", f2, m, budget));
    for (Index m : {2, 3, 4, 5, 6}) g.push_back(make("thm1.2", f2, m, budget));
    for (const auto& f : {f3, f5, f7, q})
        for (Index m : {2, 4, 6, 8, 10}) g.push_back(make("thm1.3", f, m, budget));
    for (const auto& f : {f3, f5, f7, q})
        for (Index m : {2, 3, 4, 5, 6, 7, 8, 9, 10}) {
            CaseSpec c = make("thm1.4", f, m, budget);
            if (m == 4) {
                // Nonsquare discriminant; the D = I case is listed separately.
                c.form = FormKind::diagonal;
                c.diagonal = {"1", "1", "1", f.characteristic == 0 ? "2" : std::to_string(quadratic_nonresidue(f.characteristic))};
            }
            g.push_back(c);
        }
    for (const auto& f : {f3, f5, f7, q}) g.push_back(make("thm1.4", f, 4, budget));
    g.push_back(make("thm1.4", f9, 2, budget));
    g.push_back(make("thm1.4", f9, 3, budget));
    g.push_back(make("thm1.4", f25, 2, budget));
    for (const auto& f : {f2, f3, f5, q})
        for (Index m : {2, 3, 4, 5, 6}) {
            if (m == 2 && f.characteristic == 2) continue;
            g.push_back(make("sl-series", f, m, budget));
        }
    g.push_back(make("sl-series", f2, 8, budget));
    g.push_back(make("sp-so-embedding", f13, 2, budget));
    g.push_back(make("sp-so-embedding", f5, 2, budget));
    g.push_back(make("sp-so-embedding", q, 2, budget));
    g.push_back(make("sp-so-embedding", q, 3, budget));
    g.push_back(make("sl4-so6", f7, 4, budget));
    g.push_back(make("sl4-so6", q, 4, budget));
    for (const auto& f : {f2, f3, f5})
        for (Index n : {2, 3, 4}) g.push_back(make("block-irreducibles", f, n, budget));
    for (const auto& [f, n] : std::vector<std::pair<FieldSpec, Index>>{{f2, 1}, {f3, 1}, {f2, 2}, {f3, 2}, {f5, 1}, {f2, 3}})
        g.push_back(make("heisenberg", f, n, budget));
    return g;
}

std::vector<Report> run_all(const std::vector<CaseSpec>& grid) {
    std::vector<Report> out;
    for (const auto& c : grid) {
        try {
            out.push_back(run_case(c));
        } catch (const std::exception& e) {
            Report r;
            r.case_id = c.id;
            r.field = c.field;
            r.m = c.m;
            r.claims.push_back(Claim{"case ran", c.id + "/run", "completed", std::string("error: ") + e.what(), false,
                                     "direct"});
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string report_to_json(const Report& r, int indent) { return to_json(r).dump(indent); }

std::string reports_to_json(const std::vector<Report>& rs, int indent) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr.dump(indent);
}

Report report_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Report r;
        r.case_id = j.at("case").get<std::string>();
        const auto& f = j.at("field");
        r.field.characteristic = f.at("char").get<std::uint32_t>();
        r.field.degree = f.at("degree").get<int>();
        if (r.field.characteristic != 0) {
            r.field = r.field.degree == 2 ? FieldSpec::quadratic(r.field.characteristic)
                                          : FieldSpec::prime(r.field.characteristic);
        }
        r.m = j.at("m").get<Index>();
        for (const auto& c : j.at("claims"))
            r.claims.push_back(Claim{c.at("label").get<std::string>(), c.at("paper_ref").get<std::string>(),
                                     c.at("expected").get<std::string>(), c.at("computed").get<std::string>(),
                                     c.at("pass").get<bool>(), c.at("method").get<std::string>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << r.case_id << "  field " << r.field.name() << "  m=" << r.m << "  " << (r.pass() ? "PASS" : "FAIL") << "\n";
    if (!r.ladder.empty()) {
        os << "  chain dims:";
        for (std::size_t i = 0; i < r.ladder.size(); ++i) os << (i ? " < " : " ") << r.ladder[i];
        os << "\n";
    }
    for (const auto& c : r.claims) {
        os << "  " << (c.pass ? "✓" : "✗") << " " << c.label << ": expected " << c.expected << ", computed "
           << c.computed;
        if (c.method != "direct") os << "  [" << c.method << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace liecomp
