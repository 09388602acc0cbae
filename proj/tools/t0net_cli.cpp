// t0net command-line front end.
//
// Batch subcommands over digital nets generated by GF(2) matrices:
//
//   tvalue          exact t-value (rank criterion; --geometric cross-check)
//   verify-theorem  exhaustive scan for t(I,B,B^2) = 0 vs the conjugation orbit
//   points          point listing of a digital net
//   orbit           all L*P*J*L^-1 over unit lower-triangular L
//   decompose       conjugation witness L with B = L*P*J*L^-1
//   sequence        periodic recurrence x_{i+1} = B x_i and its overlapping tuples
//   identities      P^2 = J^2 = (PJ)^3 = I
//
// Matrix arguments accept the builtin names I, J, P (sized by -m), a
// row-string literal like "01,11", or a file with one row per line.
//
// Exit codes: 0 verified/ok, 1 falsified, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "t0net/t0net.hpp"

namespace {

int g_exit = 0;

t0net::BitMatrix resolve_matrix(const std::string& arg, int m) {
    if (arg == "I") return t0net::identity(m);
    if (arg == "J") return t0net::antidiag(m);
    if (arg == "P") return t0net::pascal(m);
    // commas mark a row-string literal; anything else 0/1-only is a 1x1 literal
    if (arg.find(',') != std::string::npos ||
        (!arg.empty() && arg.find_first_not_of("01") == std::string::npos))
        return t0net::parse_matrix(arg, m);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return t0net::parse_matrix(ss.str(), m);
}

t0net::NetSpec resolve_spec(const std::vector<std::string>& args, int m) {
    t0net::NetSpec spec{m, {}};
    for (const std::string& a : args) spec.mats.push_back(resolve_matrix(a, m));
    return spec;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write output file: " + out_path);
    f << text;
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

nlohmann::json points_json(int m, int s, std::span<const uint64_t> coords) {
    nlohmann::json pts = nlohmann::json::array();
    const uint64_t n = coords.size() / uint64_t(s);
    for (uint64_t l = 0; l < n; ++l) {
        nlohmann::json pt = nlohmann::json::array();
        for (int j = 0; j < s; ++j) pt.push_back(coords[l * uint64_t(s) + j]);
        pts.push_back(pt);
    }
    return nlohmann::json{{"m", m}, {"s", s}, {"points", pts}};
}

// Options shared by every subcommand; each subcommand owns one instance.
struct Cmd {
    int m = 0;
    std::string format;
    std::string out;
    std::vector<std::string> mats;
    bool geometric = false;
    bool csv = false;
    int workers = 1;
    std::string seed;
    int width = 1;
    int states = -1;

    CLI::App* add(CLI::App& app, const std::string& name, const std::string& desc,
                  const std::string& default_format) {
        format = default_format;
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("-m,--dim", m, "matrix dimension")->required()->check(CLI::Range(1, 64));
        cmd->add_option("--format", format, "output format (text|json)")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out, "write output to a file instead of stdout");
        return cmd;
    }
};

void run_tvalue(const Cmd& o) {
    const t0net::NetSpec spec = resolve_spec(o.mats, o.m);
    const t0net::TValueResult r = t0net::t_value_rank(spec);
    nlohmann::json j = t0net::to_json(r);
    if (o.geometric) {
        const int tg = t0net::t_value_geometric(spec);
        j["t_geometric"] = tg;
        if (tg != r.t) g_exit = 1;
    }
    if (o.format == "json") {
        emit_json(j, o.out);
        return;
    }
    std::string text = "t = " + std::to_string(r.t) + " (m = " + std::to_string(r.m) +
                       ", s = " + std::to_string(r.s) + ")\n";
    if (!r.witness.empty()) {
        text += "dependent composition:";
        for (int d : r.witness) text += " " + std::to_string(d);
        text += "\n";
    }
    if (o.geometric) text += "t_geometric = " + j["t_geometric"].dump() + "\n";
    emit(text, o.out);
}

void run_verify_theorem(const Cmd& o) {
    const t0net::SearchReport rep = t0net::exhaustive_search_t0(o.m, o.workers);
    const bool verified = rep.equal_sets && rep.all_cubes_identity;
    g_exit = verified ? 0 : 1;
    if (o.format == "json") {
        emit_json(t0net::to_json(rep), o.out);
        return;
    }
    std::string text;
    text += "m = " + std::to_string(rep.m) + ": scanned " + std::to_string(rep.candidates_scanned) +
            " candidates, " + std::to_string(rep.filter_pass) + " passed the t(I,B) = 0 filter\n";
    text += "found " + std::to_string(rep.found.size()) + " matrices with t(I,B,B^2) = 0; orbit has " +
            std::to_string(rep.orbit.size()) + "\n";
    text += std::string("sets equal: ") + (rep.equal_sets ? "yes" : "NO") + "; all cubes identity: " +
            (rep.all_cubes_identity ? "yes" : "NO") + "; primitive members: " +
            std::to_string(rep.primitive_members.size()) + "\n";
    text += std::string(verified ? "VERIFIED" : "FALSIFIED") + " in " +
            std::to_string(rep.elapsed_ms) + " ms\n";
    emit(text, o.out);
}

void run_points(const Cmd& o) {
    const t0net::NetSpec spec = resolve_spec(o.mats, o.m);
    const t0net::PointSet ps = t0net::generate_points(spec);
    if (o.format == "json")
        emit_json(points_json(ps.m, ps.s, ps.coords), o.out);
    else if (o.csv)
        emit(t0net::format_point_set_csv(ps), o.out);
    else
        emit(t0net::format_point_set(ps), o.out);
}

void run_orbit(const Cmd& o) {
    const std::vector<t0net::BitMatrix> orbit = t0net::conjugacy_orbit(o.m);
    if (o.format == "json") {
        emit_json(nlohmann::json{{"m", o.m},
                                 {"count", orbit.size()},
                                 {"orbit", t0net::matrices_to_json(orbit)}},
                  o.out);
        return;
    }
    std::string text;
    for (const t0net::BitMatrix& x : orbit) text += t0net::format_matrix_compact(x) + "\n";
    emit(text, o.out);
}

void run_decompose(const Cmd& o) {
    const t0net::BitMatrix b = resolve_matrix(o.mats.at(0), o.m);
    const t0net::DecomposeResult r = t0net::decompose_t0_triple(b);
    if (!r.ok()) {
        g_exit = 1;
        nlohmann::json j{{"m", o.m},
                         {"b", t0net::format_matrix_compact(b)},
                         {"t", r.obstruction->t},
                         {"witness", r.obstruction->witness}};
        if (o.format == "json")
            emit_json(j, o.out);
        else
            emit("t(I,B,B^2) = " + std::to_string(r.obstruction->t) + ", no decomposition\n", o.out);
        return;
    }
    if (o.format == "json") {
        emit_json(nlohmann::json{{"m", o.m},
                                 {"b", t0net::format_matrix_compact(b)},
                                 {"l", t0net::format_matrix_compact(*r.conjugator)},
                                 {"verified", true}},
                  o.out);
        return;
    }
    emit(t0net::format_matrix_compact(*r.conjugator) + "\n", o.out);
}

void run_sequence(const Cmd& o) {
    const t0net::BitMatrix b = resolve_matrix(o.mats.at(0), o.m);
    const t0net::BitVector seed =
        o.seed.empty() ? t0net::BitVector{o.m, 1} : t0net::parse_bitvector(o.seed, o.m);
    if (o.states >= 0) {
        const t0net::OrbitResult orb =
            t0net::recurrence_orbit({b, seed, uint64_t(o.states)});
        if (o.format == "json") {
            nlohmann::json states = nlohmann::json::array();
            for (uint64_t x : orb.states)
                states.push_back(t0net::format_bitvector(t0net::BitVector{o.m, x}));
            emit_json(nlohmann::json{{"m", o.m}, {"period", orb.period}, {"states", states}}, o.out);
            return;
        }
        std::string text;
        for (uint64_t x : orb.states)
            text += t0net::format_bitvector(t0net::BitVector{o.m, x}) + "\n";
        emit(text, o.out);
        return;
    }
    const t0net::TupleSet ts = t0net::overlapping_tuples({b, seed, 0}, o.width);
    if (o.format == "json") {
        nlohmann::json j = points_json(ts.m, ts.s, ts.coords);
        j["period"] = ts.period;
        emit_json(j, o.out);
    } else if (o.csv) {
        emit(t0net::detail::format_points_csv(ts.m, ts.s, ts.coords), o.out);
    } else {
        emit(t0net::detail::format_points_text(ts.m, ts.s, ts.coords), o.out);
    }
}

void run_identities(const Cmd& o) {
    const bool ok = t0net::pj_identities_check(o.m);
    g_exit = ok ? 0 : 1;
    if (o.format == "json")
        emit_json(nlohmann::json{{"m", o.m}, {"ok", ok}}, o.out);
    else
        emit(ok ? "pass\n" : "FAIL\n", o.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital nets over GF(2): exact t-values and t = 0 structure checks"};
    app.require_subcommand(1);

    Cmd tv;
    CLI::App* tvalue = tv.add(app, "tvalue", "exact t-value of a digital net", "json");
    tvalue->add_option("matrices", tv.mats, "generating matrices (I|J|P, literal, or file)")
        ->required()
        ->expected(-1);
    tvalue->add_flag("--geometric", tv.geometric, "cross-check with the elementary-interval count");
    tvalue->callback([&tv] { run_tvalue(tv); });

    Cmd vt;
    CLI::App* verify = vt.add(app, "verify-theorem",
                              "exhaustively compare {B : t(I,B,B^2) = 0} with {L*P*J*L^-1}", "json");
    verify->get_option("-m")->check(CLI::Range(1, 5));
    verify->add_option("--workers", vt.workers, "parallel scan threads")->check(CLI::Range(1, 256));
    verify->callback([&vt] { run_verify_theorem(vt); });

    Cmd pt;
    CLI::App* points = pt.add(app, "points", "point listing of a digital net", "text");
    points->add_option("matrices", pt.mats, "generating matrices (I|J|P, literal, or file)")
        ->required()
        ->expected(-1);
    points->add_flag("--csv", pt.csv, "CSV with float coordinates instead of k/2^m");
    points->callback([&pt] { run_points(pt); });

    Cmd ob;
    CLI::App* orbit = ob.add(app, "orbit", "all conjugates L*P*J*L^-1", "json");
    orbit->get_option("-m")->check(CLI::Range(1, 8));
    orbit->callback([&ob] { run_orbit(ob); });

    Cmd dc;
    CLI::App* decompose = dc.add(app, "decompose", "conjugation witness for a t = 0 triple", "json");
    decompose->add_option("matrix", dc.mats, "the matrix B (I|J|P, literal, or file)")
        ->required()
        ->expected(1);
    decompose->callback([&dc] { run_decompose(dc); });

    Cmd sq;
    CLI::App* sequence = sq.add(app, "sequence",
                                "periodic recurrence states or overlapping tuples", "text");
    sequence->add_option("matrix", sq.mats, "the recurrence matrix B (I|J|P, literal, or file)")
        ->required()
        ->expected(1);
    sequence->add_option("--seed", sq.seed, "seed vector as a bit string (default 10..0)");
    sequence->add_option("-s,--width", sq.width, "tuple width")->check(CLI::Range(1, 64));
    sequence->add_option("--states", sq.states, "emit this many raw states instead of tuples");
    sequence->add_flag("--csv", sq.csv, "CSV with float coordinates instead of k/2^m");
    sequence->callback([&sq] { run_sequence(sq); });

    Cmd id;
    CLI::App* identities = id.add(app, "identities", "check P^2 = J^2 = (PJ)^3 = I", "json");
    identities->callback([&id] { run_identities(id); });

    try {
        app.parse(argc, argv);
        return g_exit;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const t0net::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const t0net::TheoremViolation& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
