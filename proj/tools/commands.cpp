#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmcoset/closed2.hpp"
#include "rmcoset/errors.hpp"
#include "rmcoset/oracle.hpp"
#include "rmcoset/rghw.hpp"
#include "rmcoset/scheme.hpp"
#include "rmcoset/tables.hpp"

namespace rmcoset::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
    std::string format = "table";
    std::uint64_t seed = 0;
    std::uint64_t budget = oracle::kDefaultBudget;
    unsigned threads = 1;
};

struct PairArgs {
    int q = 0, s = 0, u1 = 0, u2 = -1;
    std::string reduction_poly;

    CodePair pair() const { return CodePair{q, s, u1, u2}; }
};

void add_pair(CLI::App* app, PairArgs& p) {
    app->add_option("--q", p.q, "field size, a prime power")->required();
    app->add_option("--s", p.s, "number of variables")->required();
    app->add_option("--u1", p.u1, "order of C_1")->required();
    app->add_option("--u2", p.u2, "order of C_2, -1 for the zero code")->required();
}

void add_poly(CLI::App* app, std::string& poly) {
    app->add_option("--reduction-poly", poly, "monic modulus, ascending coefficients, e.g. 1,1,0,1");
}

std::optional<std::vector<std::uint32_t>> parse_poly(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) fail(Errc::InvalidParameters, "bad coefficient '" + item + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string vec(const Exponent& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
    return out + ")";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_table(std::ostream& out, const Globals& g, const tables::Table& t) {
    if (g.format == "csv") {
        out << tables::to_csv(t);
    } else if (g.format == "json") {
        print_json(out, json{{"id", t.id}, {"caption", t.caption}, {"header", t.header}, {"rows", t.rows},
                             {"footnotes", t.footnotes}});
    } else {
        out << tables::to_text(t);
    }
}

void print_values(std::ostream& out, const Globals& g, json head, const std::string& label,
                  const std::vector<std::uint64_t>& values, std::uint64_t first = 1) {
    if (g.format == "json") {
        head["first"] = first;
        head["values"] = values;
        print_json(out, head);
    } else if (g.format == "csv") {
        out << "m," << label << '\n';
        for (std::size_t i = 0; i < values.size(); ++i) out << first + i << ',' << values[i] << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) out << std::setw(6) << first + i << "  " << values[i] << '\n';
    }
}

// ---- share files -------------------------------------------------------------

struct ShareFile {
    CodePair pair;
    std::optional<std::vector<std::uint32_t>> modulus;
    PartialShares values;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::Io, "cannot open '" + path + "'");
    return in;
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) fail(Errc::Io, "cannot write '" + path + "'");
    f << text;
    if (!f) fail(Errc::Io, "write to '" + path + "' failed");
}

std::string share_header(const CodePair& p, const std::string& poly) {
    std::string h = "# rmcoset-shares v1 q=" + std::to_string(p.q) + " s=" + std::to_string(p.s) +
                    " u1=" + std::to_string(p.u1) + " u2=" + std::to_string(p.u2) + " points=" + kPointOrderTag;
    if (!poly.empty()) h += " poly=" + poly;
    return h + "\n";
}

ShareFile read_shares(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# rmcoset-shares v1", 0) != 0)
        fail(Errc::Io, "'" + path + "' lacks the rmcoset-shares v1 header");
    std::map<std::string, std::string> kv;
    std::istringstream hs(line.substr(19));
    std::string tok;
    while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) fail(Errc::Io, "malformed header token '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    for (const char* key : {"q", "s", "u1", "u2", "points"})
        if (!kv.count(key)) fail(Errc::Io, std::string("header misses ") + key);
    if (kv["points"] != kPointOrderTag) fail(Errc::Io, "unsupported point order '" + kv["points"] + "'");
    ShareFile f;
    try {
        f.pair = CodePair{std::stoi(kv["q"]), std::stoi(kv["s"]), std::stoi(kv["u1"]), std::stoi(kv["u2"])};
    } catch (const std::exception&) {
        fail(Errc::Io, "non-numeric header field");
    }
    if (kv.count("poly")) f.modulus = parse_poly(kv["poly"]);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "?" || line == "-") {
            f.values.emplace_back(std::nullopt);
            continue;
        }
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(line, &used);
            if (used != line.size()) throw std::invalid_argument(line);
            f.values.emplace_back(static_cast<gf::Value>(v));
        } catch (const std::exception&) {
            fail(Errc::Io, "bad share value '" + line + "'");
        }
    }
    return f;
}

std::vector<gf::Value> read_values(const std::string& path) {
    auto in = open_in(path);
    std::vector<gf::Value> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(line, &used);
            if (used != line.size()) throw std::invalid_argument(line);
            out.push_back(static_cast<gf::Value>(v));
        } catch (const std::exception&) {
            fail(Errc::Io, "bad value '" + line + "'");
        }
    }
    return out;
}

Decoder parse_decoder(const std::string& d) {
    if (d == "A" || d == "a") return Decoder::A;
    if (d == "B" || d == "b") return Decoder::B;
    fail(Errc::InvalidParameters, "decoder must be A or B");
}

json simulation_json(const CodePair& p, const SimulationConfig& cfg, const SimulationResult& r) {
    return json{{"q", p.q},
                {"s", p.s},
                {"u1", p.u1},
                {"u2", p.u2},
                {"decoder", to_string(cfg.decoder)},
                {"delta", cfg.delta},
                {"seed", cfg.seed},
                {"trials", r.trials},
                {"errors_per_word", r.errors_per_word},
                {"failures", r.failures},
                {"decoding_failures", r.decoding_failures},
                {"failure_rate", r.failure_rate},
                {"bound", r.bound},
                {"queries", r.queries},
                {"t1", r.t1},
                {"t2", r.t2},
                {"r1", r.r1},
                {"queries_exceed_t1", r.queries_exceed_t1},
                {"queries_below_r1", r.queries_below_r1},
                {"at_most_one_qbit_leaked", r.at_most_one_qbit}};
}

void print_simulation(std::ostream& out, const Globals& g, const json& j) {
    if (g.format == "json") {
        print_json(out, j);
        return;
    }
    if (g.format == "csv") {
        std::string keys, vals;
        for (auto it = j.begin(); it != j.end(); ++it) {
            keys += (keys.empty() ? "" : ",") + it.key();
            vals += (vals.empty() ? "" : ",") + (it->is_string() ? it->get<std::string>() : it->dump());
        }
        out << keys << '\n' << vals << '\n';
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        out << std::left << std::setw(24) << it.key() << (it->is_string() ? it->get<std::string>() : it->dump())
            << '\n';
}

struct SimArgs {
    PairArgs p;
    std::string decoder = "A";
    double delta = 0.0;
    std::uint64_t trials = 1000;
    double sigma = -1.0;
};

void add_sim(CLI::App* app, SimArgs& a) {
    add_pair(app, a.p);
    app->add_option("--decoder", a.decoder, "A (u1+1 queries) or B (q-1 queries)")
        ->check(CLI::IsMember({"A", "B", "a", "b"}));
    app->add_option("--delta", a.delta, "fraction of corrupted positions")->check(CLI::Range(0.0, 1.0));
    app->add_option("--trials", a.trials, "number of trials");
    app->add_option("--sigma", a.sigma, "rate parameter checked for decoder B");
}

void run_sim(const SimArgs& a, const Globals& g, std::ostream& out) {
    SimulationConfig cfg;
    cfg.decoder = parse_decoder(a.decoder);
    cfg.delta = a.delta;
    cfg.trials = a.trials;
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    if (a.sigma >= 0) cfg.sigma = a.sigma;
    const CodePair p = a.p.pair();
    const SimulationResult r = simulate_correction(p, cfg);
    print_simulation(out, g, simulation_json(p, cfg, r));
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"RGHWs of q-ary Reed-Muller codes and the ramp schemes built on them"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--seed", g.seed, "64-bit seed for randomized commands");
    app.add_option("--budget", g.budget, "node budget of the brute-force oracles");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));

    // rghw
    auto* c_rghw = app.add_subcommand("rghw", "relative generalized Hamming weights M_m(C_1,C_2)");
    PairArgs rghw_p;
    std::uint64_t rghw_m = 0;
    bool rghw_explain = false;
    add_pair(c_rghw, rghw_p);
    auto* o_m = c_rghw->add_option("--m", rghw_m, "index m");
    auto* o_all = c_rghw->add_flag("--all", "the whole hierarchy");
    o_m->excludes(o_all);
    c_rghw->add_flag("--explain", rghw_explain, "print a, r and t");

    // ghw
    auto* c_ghw = app.add_subcommand("ghw", "generalized Hamming weights d_r(RM_q(u,s))");
    int ghw_q = 0, ghw_s = 0, ghw_u = 0;
    std::uint64_t ghw_r = 0;
    c_ghw->add_option("--q", ghw_q)->required();
    c_ghw->add_option("--s", ghw_s)->required();
    c_ghw->add_option("--u", ghw_u)->required();
    auto* o_r = c_ghw->add_option("--r", ghw_r, "index r");
    auto* o_gall = c_ghw->add_flag("--all", "the whole hierarchy");
    o_r->excludes(o_gall);

    // veca
    auto* c_veca = app.add_subcommand("veca", "M-th element of F_q((A,B),(0,V),S) in anti-lex order");
    int va = 0, vb = 0, vv = 0, vs = 0, vq = 0;
    std::uint64_t vm = 0;
    bool vtrace = false;
    c_veca->add_option("--a", va)->required();
    c_veca->add_option("--b", vb)->required();
    c_veca->add_option("--v", vv)->required();
    c_veca->add_option("--s", vs)->required();
    c_veca->add_option("--m", vm)->required();
    c_veca->add_option("--q", vq)->required();
    c_veca->add_flag("--trace", vtrace, "print the recursion");

    // rho
    auto* c_rho = app.add_subcommand("rho", "window sizes |F_q((a,b),s)|, optionally clipped by v <= a_s <= w");
    int ra = 0, rb = 0, rs = 0, rq = 0, rv = -1, rw = -1;
    c_rho->add_option("--a", ra)->required();
    c_rho->add_option("--b", rb)->required();
    c_rho->add_option("--s", rs)->required();
    c_rho->add_option("--q", rq)->required();
    auto* o_v = c_rho->add_option("--v", rv);
    auto* o_w = c_rho->add_option("--w", rw);
    o_v->needs(o_w);
    o_w->needs(o_v);

    // profile
    auto* c_prof = app.add_subcommand("profile", "leakage profile t, r and the GHW bounds t', r'");
    PairArgs prof_p;
    add_pair(c_prof, prof_p);

    // tables
    auto* c_tab = app.add_subcommand("tables", "regenerate a published table");
    std::string tab_id;
    c_tab->add_option("id", tab_id, "fig1, t1 ... t18");
    auto* o_list = c_tab->add_flag("--list", "list table ids");

    // oracle
    auto* c_or = app.add_subcommand("oracle", "brute-force validators");
    PairArgs or_p;
    std::string or_mode = "shadow";
    std::uint64_t or_m = 0;
    add_pair(c_or, or_p);
    c_or->add_option("--mode", or_mode)->check(CLI::IsMember({"shadow", "support", "profile"}));
    c_or->add_option("--m", or_m, "index m, all m when omitted");

    // shares
    auto* c_sh = app.add_subcommand("shares", "encode, reconstruct and correct share files");
    c_sh->require_subcommand(1);
    auto* c_enc = c_sh->add_subcommand("encode", "secret file to share file");
    PairArgs enc_p;
    std::string enc_secret, enc_out;
    add_pair(c_enc, enc_p);
    add_poly(c_enc, enc_p.reduction_poly);
    c_enc->add_option("--secret", enc_secret, "file with one field element per line")->required();
    c_enc->add_option("--out", enc_out, "share file, stdout when omitted");
    auto* c_rec = c_sh->add_subcommand("reconstruct", "recover the secret from a share file ('?' marks erasures)");
    std::string rec_in, rec_out;
    c_rec->add_option("--in", rec_in)->required();
    c_rec->add_option("--out", rec_out, "secret file, stdout when omitted");
    auto* c_cor = c_sh->add_subcommand("correct", "locally correct one position of a share file");
    std::string cor_in, cor_dec = "A";
    std::size_t cor_index = 0;
    c_cor->add_option("--in", cor_in)->required();
    c_cor->add_option("--index", cor_index, "0-based position")->required();
    c_cor->add_option("--decoder", cor_dec)->check(CLI::IsMember({"A", "B", "a", "b"}));
    auto* c_shsim = c_sh->add_subcommand("simulate", "Monte-Carlo local correction");
    SimArgs shsim;
    add_sim(c_shsim, shsim);

    // simulate
    auto* c_sim = app.add_subcommand("simulate", "Monte-Carlo local correction");
    SimArgs sim;
    add_sim(c_sim, sim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*c_rghw) {
            const CodePair p = rghw_p.pair();
            p.validate();
            json head{{"kind", "rghw"}, {"q", p.q}, {"s", p.s}, {"u1", p.u1}, {"u2", p.u2}};
            if (*o_m) {
                RghwExplain ex;
                const std::uint64_t v = rghw(p, rghw_m, &ex);
                if (g.format == "json") {
                    head["m"] = rghw_m;
                    head["value"] = v;
                    if (rghw_explain) head["explain"] = json{{"a", ex.a}, {"r", ex.r}, {"t", ex.t}};
                    print_json(out, head);
                } else if (g.format == "csv") {
                    out << (rghw_explain ? "m,M_m,a,r,t\n" : "m,M_m\n") << rghw_m << ',' << v;
                    if (rghw_explain) out << ",\"" << vec(ex.a) << "\"," << ex.r << ',' << ex.t;
                    out << '\n';
                } else {
                    out << v << '\n';
                    if (rghw_explain)
                        out << "a = " << vec(ex.a) << "\nr = " << ex.r << "\nt = " << ex.t << "\nM_" << rghw_m
                            << " = t - r + m = " << ex.t << " - " << ex.r << " + " << rghw_m << " = " << v << '\n';
                }
            } else {
                if (!*o_all) throw CLI::ValidationError("rghw needs --m or --all");
                print_values(out, g, head, "M_m", hierarchy(p, g.threads));
            }
        } else if (*c_ghw) {
            json head{{"kind", "ghw"}, {"q", ghw_q}, {"s", ghw_s}, {"u", ghw_u}};
            if (*o_r) {
                const std::uint64_t v = ghw(ghw_u, ghw_s, ghw_q, ghw_r);
                if (g.format == "json") {
                    head["r"] = ghw_r;
                    head["value"] = v;
                    print_json(out, head);
                } else if (g.format == "csv") {
                    out << "r,d_r\n" << ghw_r << ',' << v << '\n';
                } else {
                    out << v << '\n';
                }
            } else {
                if (!*o_gall) throw CLI::ValidationError("ghw needs --r or --all");
                print_values(out, g, head, "d_r", ghw_hierarchy(ghw_u, ghw_s, ghw_q, g.threads));
            }
        } else if (*c_veca) {
            std::vector<VecaStep> trace;
            const Exponent a = veca(va, vb, vv, vs, vm, vq, vtrace ? &trace : nullptr);
            if (g.format == "json") {
                json j{{"element", a}};
                if (vtrace) {
                    json steps = json::array();
                    for (const auto& st : trace)
                        steps.push_back(json{{"A", st.A}, {"B", st.B}, {"V", st.V}, {"S", st.S}, {"M", st.M},
                                             {"reset", st.reset}, {"rho", st.reset ? json(nullptr) : json(st.r)}});
                    j["trace"] = steps;
                }
                print_json(out, j);
            } else {
                out << vec(a) << '\n';
                for (const auto& st : trace) {
                    out << "A=" << st.A << " B=" << st.B << " V=" << st.V << " S=" << st.S << " M=" << st.M;
                    if (st.reset)
                        out << " reset";
                    else
                        out << " rho=" << st.r;
                    out << '\n';
                }
            }
        } else if (*c_rho) {
            const BigInt v = *o_v ? rho_clipped(ra, rb, rv, rw, rs, rq) : rho(ra, rb, rs, rq);
            const std::string text = v.str();
            if (g.format == "json")
                print_json(out, json{{"a", ra}, {"b", rb}, {"s", rs}, {"q", rq}, {"value", text}});
            else if (g.format == "csv")
                out << "value\n" << text << '\n';
            else
                out << text << '\n';
        } else if (*c_prof) {
            const CodePair p = prof_p.pair();
            p.validate();
            if (g.format == "json") {
                const LeakageProfile lp = profile(p);
                const QueryCounts qc = query_counts(p);
                json j{{"q", p.q}, {"s", p.s}, {"u1", p.u1}, {"u2", p.u2}, {"ell", lp.ell},
                       {"t", lp.t}, {"r", lp.r}, {"t_ghw", lp.t_ghw}, {"r_ghw", lp.r_ghw}};
                j["queries"] = json{{"decoder_a", qc.a_applicable ? json(qc.decoder_a) : json(nullptr)},
                                    {"decoder_b", p.u1 <= p.q - 2 ? json(qc.decoder_b) : json(nullptr)}};
                print_json(out, j);
            } else {
                print_table(out, g, tables::profile_table(p));
            }
        } else if (*c_tab) {
            if (*o_list) {
                for (const auto& id : tables::table_ids()) out << id << '\n';
            } else {
                if (tab_id.empty()) throw CLI::ValidationError("tables needs an id or --list");
                print_table(out, g, tables::make_table(tab_id));
            }
        } else if (*c_or) {
            const CodePair p = or_p.pair();
            p.validate();
            json head{{"kind", or_mode}, {"q", p.q}, {"s", p.s}, {"u1", p.u1}, {"u2", p.u2}};
            if (or_mode == "profile") {
                const oracle::Profile bp = oracle::brute_profile(p, g.budget);
                const LeakageProfile lp = profile(p);
                if (g.format == "json") {
                    head["t"] = bp.t;
                    head["r"] = bp.r;
                    head["matches_engine"] = bp.t == lp.t && bp.r == lp.r;
                    print_json(out, head);
                } else {
                    out << "oracle t: " << join(bp.t) << "\nengine t: " << join(lp.t) << "\noracle r: " << join(bp.r)
                        << "\nengine r: " << join(lp.r) << '\n';
                }
            } else {
                const std::uint64_t ell = p.ell();
                std::vector<std::uint64_t> ms;
                if (or_m)
                    ms.push_back(or_m);
                else
                    for (std::uint64_t m = 1; m <= ell; ++m) ms.push_back(m);
                json rows = json::array();
                if (g.format == "csv") out << "m,oracle,engine\n";
                for (auto m : ms) {
                    const std::uint64_t ov =
                        or_mode == "shadow"
                            ? oracle::brute_min_shadow(Window{p.q, p.s, p.u2 + 1, p.u1, std::nullopt}, m, g.budget).value
                            : oracle::brute_min_support(p, m, g.budget);
                    const std::uint64_t ev = rghw(p, m);
                    if (g.format == "json")
                        rows.push_back(json{{"m", m}, {"oracle", ov}, {"engine", ev}});
                    else if (g.format == "csv")
                        out << m << ',' << ov << ',' << ev << '\n';
                    else
                        out << std::setw(6) << m << "  " << ov << (ov == ev ? " == " : " != ") << ev << '\n';
                }
                if (g.format == "json") {
                    head["rows"] = rows;
                    print_json(out, head);
                }
            }
        } else if (*c_sh) {
            if (*c_enc) {
                const CodePair p = enc_p.pair();
                const Scheme scheme(p, parse_poly(enc_p.reduction_poly));
                const Secret secret = read_values(enc_secret);
                Mt64Source rng(derive_seed(g.seed, kStreamCodeword, 0));
                const Shares sh = scheme.encode(secret, rng);
                std::string text = share_header(p, enc_p.reduction_poly);
                for (auto v : sh) text += std::to_string(v) + "\n";
                write_file(enc_out, text, out);
            } else if (*c_rec) {
                const ShareFile f = read_shares(rec_in);
                const Scheme scheme(f.pair, f.modulus);
                const ReconstructResult res = scheme.reconstruct(f.values);
                if (const auto* sec = std::get_if<Secret>(&res)) {
                    if (g.format == "json") {
                        print_json(out, json{{"status", "secret"}, {"secret", *sec}});
                    } else {
                        std::string text;
                        for (auto v : *sec) text += std::to_string(v) + "\n";
                        write_file(rec_out, text, out);
                    }
                } else {
                    const auto& pi = std::get<PartialInfo>(res);
                    if (g.format == "json")
                        print_json(out, json{{"status", "partial"}, {"determined_qbits", pi.dim}, {"ell", scheme.ell()}});
                    else
                        out << "partial: " << pi.dim << " of " << scheme.ell() << " q-bits determined\n";
                }
            } else if (*c_cor) {
                const ShareFile f = read_shares(cor_in);
                const Scheme scheme(f.pair, f.modulus);
                Shares word;
                for (const auto& v : f.values) {
                    if (!v) fail(Errc::InvalidParameters, "local correction needs a share file without erasures");
                    word.push_back(*v);
                }
                Mt64Source rng(derive_seed(g.seed, kStreamDecoder, cor_index));
                const gf::Value v = scheme.correct(parse_decoder(cor_dec), word, cor_index, rng);
                if (g.format == "json")
                    print_json(out, json{{"index", cor_index}, {"decoder", cor_dec}, {"value", v}});
                else
                    out << v << '\n';
            } else if (*c_shsim) {
                run_sim(shsim, g, out);
            }
        } else if (*c_sim) {
            run_sim(sim, g, out);
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case Errc::BudgetExceeded:
                return kBudget;
            case Errc::Io:
                return kIo;
            default:
                return kDomain;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    out.flush();
    return kOk;
}

}  // namespace rmcoset::cli
