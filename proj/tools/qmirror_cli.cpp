// qmirror: exact periods, mirror map, instanton numbers, frames and the
// open-string data of the quintic, printed as JSON or CSV.

#include "qmirror/error.hpp"
#include "qmirror/numeric.hpp"
#include "qmirror/serialize.hpp"
#include "qmirror/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace qmirror;

namespace {

struct RunConfig {
    int order = 10;
    std::string sign = "standard-minus";
    std::string orientation = "plus";
    std::string format = "json";
    int precision = 0;
};

// One document: a JSON object, and the same data as CSV rows.
struct Doc {
    Json json = Json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const Doc& d, const RunConfig& cfg) {
    if (cfg.format == "json") {
        std::cout << d.json.dump(2) << "\n";
        return;
    }
    auto line = [](const std::vector<std::string>& row) {
        std::string s;
        for (size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + quote(row[i]);
        return s;
    };
    std::cout << line(d.csv_header) << "\n";
    for (const auto& r : d.csv_rows) std::cout << line(r) << "\n";
}

Json scalar_json(const ConstScalar& c, const RunConfig& cfg) {
    Json j = to_json(c);
    j["text"] = c.to_string();
    if (cfg.precision > 0) j["approx"] = format_approx(evaluate(c), cfg.precision);
    return j;
}

Json rational_map(const std::map<int, Rational>& m) {
    Json j = Json::object();
    for (const auto& [d, v] : m) j[std::to_string(d)] = to_string(v);
    return j;
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

void matrix_csv(Doc& d, const std::string& name, const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d.csv_rows.push_back({name, std::to_string(i), std::to_string(j), to_string(m(i, j))});
}

// rows: name, m2, logpow, value
void series_csv(Doc& d, const std::string& name, const HalfLogSeries& s, const RunConfig& cfg) {
    for (int m = 0; m < s.extent(); ++m)
        for (int k = 0; k <= HalfLogSeries::kMaxLog; ++k) {
            const auto& c = s.coeff(m, k);
            if (c.is_zero()) continue;
            std::vector<std::string> row{name, std::to_string(m), std::to_string(k), c.to_string()};
            if (cfg.precision > 0) row.push_back(format_approx(evaluate(c), cfg.precision));
            d.csv_rows.push_back(std::move(row));
        }
}

std::vector<std::string> series_header(const RunConfig& cfg) {
    std::vector<std::string> h{"name", "m2", "logpow", "value"};
    if (cfg.precision > 0) h.push_back("approx");
    return h;
}

Doc cmd_periods(const RunConfig& cfg) {
    auto b = frobenius_solutions(cfg.order);
    auto eta = integral_periods(b);
    Doc d;
    d.csv_header = series_header(cfg);
    for (int j = 0; j < 4; ++j) {
        d.json["y" + std::to_string(j)] = to_json(b.y[j]);
        series_csv(d, "y" + std::to_string(j), b.y[j], cfg);
    }
    for (int j = 0; j < 4; ++j) {
        d.json["eta" + std::to_string(j)] = to_json(eta[static_cast<size_t>(j)]);
        series_csv(d, "eta" + std::to_string(j), eta[static_cast<size_t>(j)], cfg);
    }
    return d;
}

Doc cmd_mirror_map(const RunConfig& cfg) {
    auto b = frobenius_solutions(cfg.order);
    auto map = build_mirror_map(b, cfg.order);
    Doc d;
    d.csv_header = series_header(cfg);
    d.json["q_of_z"] = to_json(map.q_of_z);
    d.json["z_of_q"] = to_json(map.z_of_q);
    series_csv(d, "q_of_z", map.q_of_z, cfg);
    series_csv(d, "z_of_q", map.z_of_q, cfg);
    return d;
}

Doc cmd_yukawa(const RunConfig& cfg) {
    auto sign = parse_sign_convention(cfg.sign);
    auto b = frobenius_solutions(cfg.order);
    auto map = build_mirror_map(b, cfg.order);
    auto yz = yukawa_z(b, map, sign);
    auto yq = yukawa_q(b, map, sign);
    Doc d;
    d.json["sign"] = to_string(sign);
    d.json["Y_z"] = to_json(yz);
    d.json["Y_q"] = to_json(yq);
    d.csv_header = series_header(cfg);
    series_csv(d, "Y_z", yz, cfg);
    series_csv(d, "Y_q", yq, cfg);
    return d;
}

Doc cmd_gw(const RunConfig& cfg) {
    auto p = build_pipeline(cfg.order, parse_sign_convention(cfg.sign));
    Doc d;
    d.json["sign"] = to_string(p.sign);
    d.json["n"] = rational_map(p.instantons.n);
    d.json["N"] = rational_map(p.instantons.N);
    d.json["integral"] = p.instantons.integral();
    d.csv_header = {"degree", "n_d", "N_d"};
    for (const auto& [deg, n] : p.instantons.n) d.csv_rows.push_back({std::to_string(deg), to_string(n), to_string(p.instantons.N.at(deg))});
    return d;
}

// --order counts half steps here.
Doc cmd_open_gw(const RunConfig& cfg) {
    auto o = parse_orientation(cfg.orientation);
    const int zorder = (cfg.order + 1) / 2;
    auto b = frobenius_solutions(zorder);
    auto map = build_mirror_map(b, zorder);
    auto t = tension_B(b, cfg.order, o);
    auto ta = tension_A(t, b, map);
    auto disk = open_invariants(ta, o);
    auto n = open_integer_invariants(disk);
    Doc d;
    d.json["orientation"] = to_string(o);
    d.json["a0"] = scalar_json(t.a0, cfg);
    d.json["tension_z"] = to_json(t.full);
    d.json["tension_q"] = to_json(ta);
    d.json["disk_invariants"] = rational_map(disk);
    d.json["n"] = rational_map(n);
    d.csv_header = {"degree", "disk", "n_d"};
    for (const auto& [deg, v] : disk) d.csv_rows.push_back({std::to_string(deg), to_string(v), to_string(n.at(deg))});
    return d;
}

Doc cmd_frames(const RunConfig& cfg) {
    auto p = build_pipeline(cfg.order, parse_sign_convention(cfg.sign));
    auto s = pairing_matrix();
    auto c = derive_cjk();
    Doc d;
    d.json["pairing"] = matrix_json(s);
    Json cj = Json::object();
    const std::pair<const char*, const ConstScalar*> named[] = {{"c10", &c.c10}, {"c21", &c.c21}, {"c20", &c.c20},
                                                                {"c32", &c.c32}, {"c31", &c.c31}, {"c30", &c.c30}};
    for (const auto& [name, v] : named) cj[name] = scalar_json(*v, cfg);
    d.json["cjk"] = cj;
    auto frame_json = [&](const FrameMatrix& f) {
        Json rows = Json::array();
        for (int i = 0; i < 4; ++i) {
            Json r = Json::array();
            for (int j = 0; j < 4; ++j) r.push_back(to_json(f(i, j)));
            rows.push_back(r);
        }
        return rows;
    };
    auto s5 = tilde_s_frame(p.potential);
    auto s6 = s_from_tilde_s(c);
    auto e = e_frame(p.potential, c);
    d.json["tilde_s_in_e"] = frame_json(s5);
    d.json["s_in_tilde_s"] = frame_json(s6);
    d.json["e_in_s"] = frame_json(e);

    d.csv_header = {"name", "row", "col", "value"};
    matrix_csv(d, "pairing", s);
    for (const auto& [name, v] : named) d.csv_rows.push_back({name, "", "", v->to_string()});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (!e(i, j).is_zero()) d.csv_rows.push_back({"e_in_s", std::to_string(i), std::to_string(j), e(i, j).to_string()});
        }
    return d;
}

Doc cmd_monodromy(const RunConfig& cfg) {
    auto n = monodromy_log();
    auto b = frobenius_solutions((cfg.order + 1) / 2);
    auto rep = verify_tension_monodromy(b, cfg.order);
    Doc d;
    d.json["N"] = matrix_json(n);
    d.json["expN"] = matrix_json(exp_nilpotent(n));
    d.json["N_by_shift"] = matrix_json(monodromy_log_by_shift());
    d.json["period_monodromy"] = matrix_json(period_monodromy());
    d.json["tension"] = {{"residual", to_json(rep.residual)},
                         {"branch_sum", to_json(rep.branch_sum)},
                         {"N_of_ratio", to_json(rep.n_of_ratio)},
                         {"ok", rep.ok}};
    d.csv_header = {"name", "row", "col", "value"};
    matrix_csv(d, "N", n);
    matrix_csv(d, "expN", exp_nilpotent(n));
    matrix_csv(d, "period_monodromy", period_monodromy());
    d.csv_rows.push_back({"tension_monodromy_ok", "", "", rep.ok ? "true" : "false"});
    if (!rep.ok) fail(ErrorKind::Inconsistency, "tension monodromy T_inf(T) = -(T + eta_1 + eta_0)");
    return d;
}

Doc cmd_normal_function(const RunConfig& cfg) {
    auto o = parse_orientation(cfg.orientation);
    const int zorder = (cfg.order + 1) / 2;
    auto b = frobenius_solutions(zorder);
    auto map = build_mirror_map(b, zorder);
    auto t = tension_B(b, cfg.order, o);
    auto x = normal_function(t, b, map);
    auto y = UPoly::from_series(yukawa_q(b, map, parse_sign_convention(cfg.sign)));
    if (!transversality_residual(x, y).is_zero()) fail(ErrorKind::Inconsistency, "transversality of 1_F - 1_Z");
    auto n = extended_monodromy_matrix();
    auto m = relative_weight_filtration(n, extended_weight_filtration());
    auto lp = log_point_restriction(o);

    Doc d;
    auto vec = [](auto const& v) {
        Json a = Json::array();
        for (const auto& c : v) a.push_back(to_json(c));
        return a;
    };
    d.json["orientation"] = to_string(o);
    d.json["one_Z"] = vec(x.one_Z);
    d.json["one_F_minus_one_Z"] = vec(x.one_F_minus_one_Z);
    d.json["one_Z_spl"] = vec(x.one_Z_spl);
    d.json["N_extended"] = matrix_json(n);
    Json mj = Json::object();
    for (const auto& [k, sub] : m.steps) mj[std::to_string(k)] = matrix_json(sub);
    d.json["M"] = mj;
    d.json["log_point"] = {{"tension", to_json(lp.tension)}, {"one_F_minus_one_Z", vec(lp.one_F_minus_one_Z)}};

    d.csv_header = {"name", "index", "value"};
    const char* names[] = {"s0", "s1", "s2", "s3", "1"};
    for (size_t i = 0; i < 5; ++i)
        if (!x.one_Z[i].is_zero()) d.csv_rows.push_back({"one_Z", names[i], x.one_Z[i].to_string()});
    for (size_t i = 0; i < 4; ++i)
        if (!x.one_F_minus_one_Z[i].is_zero())
            d.csv_rows.push_back({"one_F_minus_one_Z", "e" + std::to_string(i), x.one_F_minus_one_Z[i].to_string()});
    for (const auto& [k, sub] : m.steps) d.csv_rows.push_back({"dim_M", std::to_string(k), std::to_string(dim(sub))});
    return d;
}

int cmd_verify(const RunConfig& cfg) {
    auto results = run_invariant_suite(cfg.order);
    Doc d;
    Json arr = Json::array();
    d.csv_header = {"module", "check", "ok", "detail"};
    bool all = true;
    for (const auto& r : results) {
        arr.push_back({{"module", r.module}, {"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        d.csv_rows.push_back({r.module, r.name, r.ok ? "true" : "false", r.detail});
        all = all && r.ok;
    }
    d.json["order"] = cfg.order;
    d.json["checks"] = arr;
    d.json["ok"] = all;
    emit(d, cfg);
    for (const auto& r : results)
        if (!r.ok) std::cerr << "qmirror: invariant failed: " << r.module << "/" << r.name << " " << r.detail << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mirror-symmetry computations for the quintic threefold"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"periods", "Frobenius solutions y0..y3 and integral periods eta0..eta3"},
        {"mirror-map", "q(z) and z(q)"},
        {"yukawa", "Yukawa coupling in z and in q"},
        {"gw", "instanton numbers n_d and Gromov-Witten invariants N_d"},
        {"open-gw", "domainwall tension and open invariants (order in half steps)"},
        {"frames", "pairing matrix, c^{jk} and frame changes"},
        {"monodromy", "monodromy logarithm and the tension monodromy report (order in half steps)"},
        {"normal-function", "extension data and M(N,W) (order in half steps)"},
        {"verify", "run the invariant suite"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--order", cfg.order, "truncation order")->check(CLI::PositiveNumber);
        sub->add_option("--sign", cfg.sign, "discriminant sign convention")
            ->check(CLI::IsMember({"standard-minus", "paper-plus"}));
        sub->add_option("--orientation", cfg.orientation, "tension branch")->check(CLI::IsMember({"plus", "minus"}));
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--precision", cfg.precision, "digits for approximate numeric columns (0: none)")
            ->check(CLI::Range(0, 60));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "verify") return cmd_verify(cfg);
        Doc d;
        if (cmd == "periods") d = cmd_periods(cfg);
        else if (cmd == "mirror-map") d = cmd_mirror_map(cfg);
        else if (cmd == "yukawa") d = cmd_yukawa(cfg);
        else if (cmd == "gw") d = cmd_gw(cfg);
        else if (cmd == "open-gw") d = cmd_open_gw(cfg);
        else if (cmd == "frames") d = cmd_frames(cfg);
        else if (cmd == "monodromy") d = cmd_monodromy(cfg);
        else d = cmd_normal_function(cfg);
        emit(d, cfg);
    } catch (const MathError& e) {
        std::cerr << "qmirror: " << cmd << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Precondition ? 2 : 1;
    }
    return 0;
}
