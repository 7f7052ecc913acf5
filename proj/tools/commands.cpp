#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "radalg/construction.hpp"
#include "radalg/enumeration.hpp"
#include "radalg/errors.hpp"
#include "radalg/field.hpp"
#include "radalg/quotient.hpp"
#include "radalg/report.hpp"
#include "radalg/schedule.hpp"
#include "radalg/state_io.hpp"
#include "radalg/verifier.hpp"

namespace radalg::cli {

namespace {

constexpr std::uint64_t max_depth = 20;

std::optional<std::uint32_t> field_prime(const std::string& field) {
    if (field == "rationals") return std::nullopt;
    if (!field.starts_with("gf:")) throw ConfigError("field must be \"rationals\" or \"gf:<prime>\", got '" + field + "'");
    std::uint64_t p = 0;
    try {
        std::size_t pos = 0;
        p = std::stoull(field.substr(3), &pos);
        if (pos != field.size() - 3) throw std::invalid_argument(field);
    } catch (const std::exception&) {
        throw ConfigError("field '" + field + "': modulus is not a number");
    }
    if (p < 2 || p >= (std::uint64_t{1} << 31)) throw ConfigError("field '" + field + "': modulus must be a prime below 2^31");
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw ConfigError("field '" + field + "': " + std::to_string(p) + " is not prime");
    return static_cast<std::uint32_t>(p);
}

void write_file(const Config& c, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(c.out);
    std::ofstream f(std::filesystem::path(c.out) / name, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + (std::filesystem::path(c.out) / name).string());
    f << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string verdict_line(bool pass) { return pass ? "result: pass\n" : "result: FAIL (see report above)\n"; }

template <FieldScalar S>
std::shared_ptr<const FProvider<S>> make_provider(const std::string& name) {
    if (name == "zero") return std::make_shared<const ZeroProvider<S>>();
    // Linear forms x, y and x + y.
    const S o = one<S>(), z{};
    return std::make_shared<const ResidualProvider<S>>(
        std::vector<std::array<S, 3>>{{o, z, z}, {z, o, z}, {o, o, z}});
}

template <FieldScalar S>
Tower<S> obtain_tower(const Config& c, std::uint64_t at_least = 0) {
    if (!c.state.empty()) {
        std::ifstream f(c.state, std::ios::binary);
        if (!f) throw ConfigError("cannot read state file " + c.state);
        auto t = load_state<S>(f);
        if (t.depth() < at_least) t.build_to(at_least);
        return t;
    }
    Tower<S> t(Schedule::parse(c.schedule), make_provider<S>(c.provider));
    t.build_to(std::max(c.depth, at_least));
    return t;
}

MembershipOptions membership(const Config& c) { return {c.caps.e_member_budget, c.seed}; }

template <FieldScalar S>
std::size_t rank_of_level(const LevelData<S>& l) {
    return wproj_rank(l);
}

template <FieldScalar S>
int cmd_build(const Config& c, std::ostream& os) {
    const auto t = obtain_tower<S>(c);
    std::ostringstream state;
    save_state(state, t);
    write_file(c, "state.txt", state.str());
    std::ostringstream csv;
    csv << "n,case,dim,wproj_rank,nonzero_slots\n";
    os << "field " << S::field_name() << ", schedule " << t.schedule().to_string() << ", depth " << t.depth() << "\n";
    os << std::setw(5) << "n" << std::setw(8) << "case" << std::setw(8) << "dim" << std::setw(8) << "rank" << "  nonzero slots\n";
    for (const auto& l : t.levels()) {
        const std::string cs = l.produced_by ? to_string(*l.produced_by) : "-";
        std::string slots;
        for (auto s : l.nonzero_slots) slots += (slots.empty() ? "" : " ") + std::to_string(s);
        const auto r = rank_of_level(l);
        csv << l.n << ',' << cs << ',' << l.dim << ',' << r << ",\"" << slots << "\"\n";
        os << std::setw(5) << l.n << std::setw(8) << cs << std::setw(8) << l.dim << std::setw(8) << r << "  " << slots << "\n";
    }
    write_file(c, "build_summary.csv", csv.str());
    os << "wrote " << (std::filesystem::path(c.out) / "state.txt").string() << "\n";
    return exit_pass;
}

template <FieldScalar S>
std::optional<OracleState<S>> largest_oracle(const Tower<S>& t, std::uint64_t depth, unsigned alphabet) {
    for (auto d = std::min(depth, t.depth());; --d) {
        try {
            return build_oracle<S>(t.schedule(), d, OracleOptions{alphabet, 256, false, false});
        } catch (const CapExceeded&) {
            if (d == 0) return std::nullopt;
        }
    }
}

template <FieldScalar S>
CheckResult witness_check(const Tower<S>& t, const Config& c, Json* detail) {
    CheckResult r{"nonnil_witness", "every level has a nonzero projected w-word and rank >= 2"};
    const auto w = nonnil_witness(t);
    Json levels = Json::array();
    for (const auto& l : w.levels) {
        ++r.instances;
        levels.push_back(Json{{"n", l.n}, {"nonzero_slots", l.nonzero_slots}, {"rank", l.rank}});
        if (l.nonzero_slots.empty() || l.rank < 2) r.fail(Json{{"level", l.n}, {"rank", l.rank}});
    }
    // Explicit cross-check: expand w(2^n, i) and project it directly.
    CheckResult e{"witness_explicit", "explicitly expanded w-words project to the recursive slots"};
    for (const auto& l : t.levels()) {
        const std::size_t len = std::size_t{1} << l.n;
        if (len > c.caps.explicit_w) break;
        for (std::size_t i = 0; i <= len; ++i) {
            ++e.instances;
            if (t.project_poly(w_poly<S>(len, i, c.caps.explicit_w)) != l.wproj_vector(i))
                e.fail(Json{{"level", l.n}, {"i", i}});
        }
    }
    if (detail) {
        *detail = Json{{"levels", levels},
                       {"certified_log_exponent", w.certified_log_exponent ? Json(*w.certified_log_exponent) : Json()},
                       {"explicit", Json{{"pass", e.pass}, {"instances", e.instances}}}};
    }
    if (!e.pass) r.fail(e.counterexample);
    return r;
}

template <FieldScalar S>
int cmd_verify(const Config& c, std::ostream& os) {
    const auto t = obtain_tower<S>(c);
    Report rep = check_conditions(t, VerifyOptions{c.seed, 16, 12});
    rep.merge(check_lemmas(t));
    rep.add(check_case3_dual_route(t));
    rep.add(witness_check(t, c, nullptr));
    if (c.caps.oracle_level > 0) {
        if (auto o = largest_oracle(t, c.caps.oracle_level, 2)) rep.merge(check_projection_agreement(t, *o));
        if (auto o = largest_oracle(t, std::min<std::uint64_t>(c.caps.oracle_level, 2), 3))
            rep.merge(check_projection_agreement(t, *o));
    }
    Json j = rep.to_json();
    j["field"] = S::field_name();
    j["schedule"] = t.schedule().to_string();
    j["depth"] = t.depth();
    write_file(c, "verify_report.json", dump(j));
    os << rep.to_table() << verdict_line(rep.all_pass());
    return rep.all_pass() ? exit_pass : exit_check_failed;
}

template <FieldScalar S>
int cmd_witness(const Config& c, std::ostream& os) {
    const auto t = obtain_tower<S>(c);
    Json detail;
    const auto r = witness_check(t, c, &detail);
    write_file(c, "witness.json", dump(detail));
    for (const auto& l : detail["levels"]) os << "level " << l["n"] << ": rank " << l["rank"] << ", nonzero slots " << l["nonzero_slots"].dump() << "\n";
    if (!detail["certified_log_exponent"].is_null())
        os << "certified: (x+Xy)^(2^" << detail["certified_log_exponent"] << ") is not in E[X]\n";
    if (!r.pass) os << "counterexample: " << r.counterexample.dump() << "\n";
    os << verdict_line(r.pass);
    return r.pass ? exit_pass : exit_check_failed;
}

template <FieldScalar S>
int cmd_growth(const Config& c, std::ostream& os) {
    const auto t = obtain_tower<S>(c);
    const auto table = growth_table(t, c.caps.growth_degree, c.caps.growth_degree, c.jobs);
    Report rep = check_growth(t, table, 4, 6);
    std::optional<GrowthCheck> g;
    if (table.rows.size() >= 4) g = check_growth_bound(table, 4);
    std::ostringstream csv;
    csv << "d,dim,cumulative,bound\n";
    for (const auto& r : table.rows) {
        csv << r.d << ',' << r.dim << ',' << r.cumulative << ',';
        if (g) csv << std::fixed << std::setprecision(6) << static_cast<double>(growth_bound(g->C, r.d));
        csv << '\n';
    }
    write_file(c, "growth.csv", csv.str());
    Json j = rep.to_json();
    if (g) j["C"] = static_cast<double>(g->C);
    if (table.cap_note) j["note"] = *table.cap_note;
    write_file(c, "growth_check.json", dump(j));
    os << csv.str();
    if (g) os << "C fitted at d = 4: " << std::setprecision(6) << static_cast<double>(g->C) << "\n";
    os << rep.to_table() << verdict_line(rep.all_pass());
    return rep.all_pass() ? exit_pass : exit_check_failed;
}

template <FieldScalar S>
int cmd_quasi(const Config& c, std::ostream& os) {
    const auto f = Poly<S>::parse(c.poly);
    if (f.has_constant_term()) throw ConfigError("quasi: the polynomial must have no constant term");
    const auto D = static_cast<std::size_t>(c.quasi_length);
    const auto g = truncated_quasi_inverse(f, D);
    const auto res = quasi_residual(f, g);
    auto expected = f.pow(D + 1);
    if (D % 2 == 1) expected = expected.scaled(-one<S>());
    const bool identity = res == expected;
    Json j{{"f", f.to_string()}, {"D", D}, {"g", g.to_string()}, {"residual", res.to_string()}, {"telescoping", identity}};
    os << "f        = " << f.to_string() << "\ng        = " << g.to_string() << "\nf+g+fg   = " << res.to_string()
       << "\ntelescoping identity " << (identity ? "holds" : "FAILS") << "\n";
    if (!res.is_zero()) {
        const auto t = obtain_tower<S>(c, required_depth(res.degree()));
        const auto v = p_is_zero(t, PElement<S>(res), membership(c));
        j["residual_verdict"] = to_string(v.verdict);
        os << "residual in E: " << to_string(v.verdict) << "\n";
    }
    write_file(c, "quasi.json", dump(j));
    os << verdict_line(identity);
    return identity ? exit_pass : exit_check_failed;
}

template <FieldScalar S>
int cmd_nilpotency(const Config& c, std::ostream& os) {
    const auto f = PElement<S>::parse(c.poly);
    const auto need = required_depth(std::max<std::size_t>(1, f.rep().degree() * c.caps.max_power));
    const auto t = obtain_tower<S>(c, need);
    const auto r = nilpotency_search(t, f, c.caps.max_power, membership(c));
    Json verdicts = Json::array();
    for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
        verdicts.push_back(to_string(r.verdicts[k]));
        os << "f^" << k + 1 << ": " << to_string(r.verdicts[k]) << "\n";
    }
    Json j{{"f", f.to_string()}, {"max_power", c.caps.max_power}, {"verdicts", verdicts}};
    j["nilpotent_at"] = r.power ? Json(*r.power) : Json();
    j["first_inconclusive"] = r.inconclusive ? Json(*r.inconclusive) : Json();
    write_file(c, "nilpotency.json", dump(j));
    if (r.power)
        os << "f^" << *r.power << " = 0 in P\n";
    else
        os << "no vanishing power up to " << c.caps.max_power << "\n";
    os << verdict_line(true);
    return exit_pass;
}

std::vector<std::vector<std::string>> split_matrix(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        rows.emplace_back();
        std::stringstream es(row);
        std::string e;
        while (std::getline(es, e, ',')) rows.back().push_back(e);
    }
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw ConfigError("matrix must be square: rows separated by ';', entries by ','");
    return rows;
}

template <FieldScalar S>
int cmd_matrix_demo(const Config& c, std::ostream& os) {
    PMatrix<S> m;
    std::size_t deg = 1;
    for (const auto& row : split_matrix(c.matrix)) {
        m.emplace_back();
        for (const auto& e : row) {
            m.back().push_back(PElement<S>::parse(e));
            deg = std::max(deg, m.back().back().rep().degree());
        }
    }
    const auto t = obtain_tower<S>(c, required_depth(deg * c.caps.max_power));
    const auto d = matrix_power_demo(t, m, c.caps.max_power, membership(c));
    Json powers = Json::array();
    for (const auto& r : d.powers) {
        Json rows = Json::array();
        for (const auto& row : r.entries) {
            Json jr = Json::array();
            for (auto v : row) jr.push_back(to_string(v));
            rows.push_back(jr);
        }
        powers.push_back(Json{{"power", r.power}, {"overall", to_string(r.overall)}, {"entries", rows}});
        os << "M^" << r.power << ": " << to_string(r.overall) << "\n";
    }
    Json j{{"matrix", c.matrix}, {"powers", powers}};
    j["vanishing_power"] = d.vanishing_power ? Json(*d.vanishing_power) : Json();
    write_file(c, "matrix_demo.json", dump(j));
    os << verdict_line(true);
    return exit_pass;
}

template <FieldScalar S>
int cmd_enum_check(const Config& c, std::ostream& os) {
    const PolyEnumerator<S> en(c.horizon);
    CheckResult ineq{"enumeration_degree_bound", "i > 3^(2 deg + 2) (deg + 1)^2 for every i in Z"};
    CheckResult inj{"enumeration_injective", "distinct indices carry distinct polynomials"};
    CheckResult sur{"enumeration_degree_one_probe", "every nonzero linear polynomial appears below the horizon"};
    std::set<std::string> seen;
    for (std::uint64_t i = 1; i <= c.horizon; ++i) {
        const auto f = en.enumerate_f(i);
        if (!f) continue;
        ++ineq.instances;
        const auto b = degree_bound(f->degree());
        if (!b || i <= *b) ineq.fail(Json{{"i", i}, {"f", f->to_string()}});
        ++inj.instances;
        if (!seen.insert(f->to_string()).second || en.index_of(*f) != i) inj.fail(Json{{"i", i}, {"f", f->to_string()}});
    }
    Json placed;
    if (const auto q = S::cardinality(); q && *q <= 16) {
        for (std::uint64_t a = 0; a < *q; ++a)
            for (std::uint64_t b = 0; b < *q; ++b)
                for (std::uint64_t e = 0; e < *q; ++e) {
                    if (a == 0 && b == 0 && e == 0) continue;
                    HomogPoly<S> h(1);
                    h.add_term(Monomial::from_string("x"), S::nth(a));
                    h.add_term(Monomial::from_string("y"), S::nth(b));
                    h.add_term(Monomial::from_string("z"), S::nth(e));
                    const Poly<S> f(h);
                    ++sur.instances;
                    const auto idx = en.index_of(f);
                    if (!idx) sur.fail(Json{{"f", f.to_string()}, {"horizon", c.horizon}});
                    else placed[f.to_string()] = *idx;
                }
    }
    Report rep;
    rep.add(ineq);
    rep.add(inj);
    if (sur.instances > 0) rep.add(sur);
    Json j = rep.to_json();
    j["horizon"] = c.horizon;
    j["count_in_Z"] = en.count_in_Z(c.horizon);
    if (!placed.is_null()) j["degree_one_indices"] = placed;
    write_file(c, "enum_check.json", dump(j));
    os << "|Z cap [1," << c.horizon << "]| = " << en.count_in_Z(c.horizon) << "\n" << rep.to_table() << verdict_line(rep.all_pass());
    return rep.all_pass() ? exit_pass : exit_check_failed;
}

template <FieldScalar S>
int dispatch(const std::string& command, const Config& c, std::ostream& os) {
    if (command == "build") return cmd_build<S>(c, os);
    if (command == "verify") return cmd_verify<S>(c, os);
    if (command == "witness") return cmd_witness<S>(c, os);
    if (command == "growth") return cmd_growth<S>(c, os);
    if (command == "quasi") return cmd_quasi<S>(c, os);
    if (command == "nilpotency") return cmd_nilpotency<S>(c, os);
    if (command == "matrix-demo") return cmd_matrix_demo<S>(c, os);
    if (command == "enum-check") return cmd_enum_check<S>(c, os);
    throw ConfigError("unknown command '" + command + "'");
}

}  // namespace

void validate(const Config& c) {
    field_prime(c.field);
    Schedule::parse(c.schedule);
    if (c.depth > max_depth)
        throw ConfigError("depth " + std::to_string(c.depth) + " exceeds " + std::to_string(max_depth) +
                          " (the w-word tables hold 2^depth + 1 slots per level)");
    const std::pair<const char*, std::uint64_t> caps[] = {{"caps.oracle_level", c.caps.oracle_level},
                                                          {"caps.explicit_w", c.caps.explicit_w},
                                                          {"caps.e_member_budget", c.caps.e_member_budget},
                                                          {"caps.growth_degree", c.caps.growth_degree},
                                                          {"caps.max_power", c.caps.max_power}};
    for (const auto& [name, v] : caps)
        if (v == 0) throw ConfigError(std::string(name) + " must be positive");
    if (c.provider != "zero" && c.provider != "residual")
        throw ConfigError("provider must be \"zero\" or \"residual\", got '" + c.provider + "'");
    if (c.jobs == 0) throw ConfigError("jobs must be positive");
}

int run(const std::string& command, const Config& c, std::ostream& os) {
    validate(c);
    const auto p = field_prime(c.field);
    if (!p) return dispatch<Rational>(command, c, os);
    ModulusScope scope(*p);
    return dispatch<ModP>(command, c, os);
}

}  // namespace radalg::cli
