// Command-line frontend: one computation per invocation, configured entirely
// by flags (plus the link description file for `shadow`).
//
// Exit codes: 0 ok, 2 configuration error, 3 computation rejected,
// 4 identity failure.

#include <complex>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtop/invariants.hpp"
#include "qtop/linkmodel.hpp"
#include "qtop/parallel.hpp"

using namespace qtop;

namespace {

constexpr const char* kVersion = "qtop 0.1.0";

enum ExitCode { kOk = 0, kConfigError = 2, kRejected = 3, kIdentityFailure = 4 };

struct Options {
    std::string group;
    std::int64_t level = 0;
    std::string cmd;
    std::string format = "table";
    std::string link_path;
    std::int64_t p = 1, q = 0;
    std::string color;
    std::vector<std::string> colors;
    int genus = 0;
    std::size_t weyl_cap = kDefaultWeylCap;
    double term_budget = 5e6;
    int threads = 1;
    double tol_identity = 1e-9;
    double tol_integer = 1e-7;
};

// weights rendered in the fundamental-weight basis, matching --color input
std::string fw_str(const RootSystem& rs, const Weight& w) {
    std::vector<Rat> c = rs.fw_coords(w);
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].str();
    }
    return out;
}

std::string complex_str(std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

class Report {
public:
    explicit Report(bool csv) : csv_(csv) {}

    void header(const std::vector<std::string>& cols) {
        cols_ = cols;
        if (csv_) {
            emit_row(cols);
        } else {
            widths_.assign(cols.size(), 0);
            rows_.push_back(cols);
        }
    }
    void row(const std::vector<std::string>& cells) {
        if (csv_) emit_row(cells);
        else rows_.push_back(cells);
    }
    void flush() {
        if (csv_) return;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i)
                widths_[i] = std::max(widths_[i], r[i].size());
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += "  ";
                line += r[i];
                if (i + 1 < r.size()) line.append(widths_[i] - r[i].size(), ' ');
            }
            std::printf("%s\n", line.c_str());
        }
        rows_.clear();
    }

private:
    void emit_row(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += ",";
            line += cells[i];
        }
        std::printf("%s\n", line.c_str());
    }
    bool csv_;
    std::vector<std::string> cols_;
    std::vector<std::size_t> widths_;
    std::vector<std::vector<std::string>> rows_;
};

std::vector<std::int64_t> parse_coords(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("empty coordinate in '" + text + "'");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::vector<Weight> parse_color_list(const RootSystem& rs, const std::vector<std::string>& texts) {
    std::vector<Weight> out;
    for (const auto& text : texts) {
        std::string cur;
        for (char ch : text + ";") {
            if (ch == ';') {
                if (!cur.empty()) out.push_back(rs.weight_from_fw_coords(parse_coords(cur)));
                cur.clear();
            } else {
                cur += ch;
            }
        }
    }
    return out;
}

void print_header(const Options& opt, const RootSystem& rs) {
    std::printf("# %s\n# group=%s level=%lld cmd=%s\n", kVersion, rs.name().c_str(),
                (long long)opt.level, opt.cmd.c_str());
}

int cmd_smatrix(const Options& opt, const LevelData& ld, Report& rep) {
    rep.header({"label", "weight", "qdim", "theta"});
    for (int i = 0; i < ld.n(); ++i) {
        char q[32];
        std::snprintf(q, sizeof q, "%.12g", ld.qdim[i]);
        rep.row({std::to_string(i), fw_str(ld.rs, ld.labels[i]), q, complex_str(ld.theta[i])});
    }
    rep.flush();
    std::printf("\n");
    rep.header({"i", "j", "S_ij"});
    for (int i = 0; i < ld.n(); ++i)
        for (int j = 0; j < ld.n(); ++j)
            rep.row({std::to_string(i), std::to_string(j), complex_str(ld.s(i, j))});
    rep.flush();
    return kOk;
}

int cmd_fusion(const Options& opt, const LevelData& ld, Report& rep) {
    std::vector<Weight> colors = parse_color_list(ld.rs, opt.colors);
    if (colors.size() != 2)
        throw std::invalid_argument("fusion needs --colors with exactly two weights, e.g. '1,0;0,1'");
    MultiplicityTable table = weight_multiplicities(ld.rs, colors[0]);
    int b = ld.index_of(colors[1]);
    rep.header({"nu", "weight", "N^nu", "verlinde"});
    for (int c = 0; c < ld.n(); ++c) {
        std::int64_t fused = fusion_racah(ld, table, ld.labels[c], ld.labels[b]);
        std::complex<double> verl = verlinde_number(ld, ld.index_of(colors[0]), b, ld.bar[c]);
        rep.row({std::to_string(c), fw_str(ld.rs, ld.labels[c]), std::to_string(fused), complex_str(verl)});
    }
    rep.flush();
    return kOk;
}

int cmd_verlinde_dim(const Options& opt, const LevelData& ld, Report& rep) {
    rep.header({"genus", "dim"});
    rep.row({std::to_string(opt.genus), std::to_string(verlinde_dim(ld, opt.genus))});
    rep.flush();
    return kOk;
}

int cmd_fiber(const Options& opt, const LevelData& ld, Report& rep) {
    std::vector<Weight> colors = parse_color_list(ld.rs, opt.colors);
    InvariantValue v = z_fiber_link(ld, opt.genus, colors);
    // genus-0 fiber links evaluate to fusion multiplicities; surface the integer
    double nearest = std::round(v.value.real());
    bool integral = std::abs(v.value - nearest) < 1e-7;
    rep.header({"genus", "colors", "value", "rounded"});
    rep.row({std::to_string(opt.genus), std::to_string(colors.size()), complex_str(v.value),
             integral ? std::to_string((long long)nearest) : std::string("-")});
    rep.flush();
    return kOk;
}

int cmd_torus_knot(const Options& opt, const LevelData& ld, Report& rep) {
    if (opt.color.empty()) throw std::invalid_argument("torus-knot needs --color");
    TorusKnotSpec spec{opt.p, opt.q, ld.rs.weight_from_fw_coords(parse_coords(opt.color))};
    rep.header({"p", "q", "color", "bracket"});
    InvariantValue v = bracket_torus_knot_s2s1(ld, spec);
    rep.row({std::to_string(opt.p), std::to_string(opt.q), fw_str(ld.rs, spec.color),
             complex_str(v.value)});
    rep.flush();
    return kOk;
}

int cmd_rosso_jones(const Options& opt, const LevelData& ld, Report& rep) {
    if (opt.color.empty()) throw std::invalid_argument("rosso-jones needs --color");
    TorusKnotSpec spec{opt.p, opt.q, ld.rs.weight_from_fw_coords(parse_coords(opt.color))};
    SurgeryCheck chk = surgery_check(ld, spec);
    char res[32];
    std::snprintf(res, sizeof res, "%.3g", chk.residual);
    rep.header({"p", "q", "color", "z_s3", "surgery_sum", "residual", "support_in_level"});
    rep.row({std::to_string(opt.p), std::to_string(opt.q), fw_str(ld.rs, spec.color),
             complex_str(chk.rosso_jones), complex_str(chk.surgery_sum), res,
             chk.support_in_level ? "yes" : "no"});
    rep.flush();
    return kOk;
}

int cmd_shadow(const Options& opt, const LevelData& ld, Report& rep) {
    if (opt.link_path.empty()) throw std::invalid_argument("shadow needs --link <file>");
    SurfaceLink link = load_link_file(ld.rs, opt.link_path);
    std::complex<double> raw = shadow_invariant(ld, link, opt.term_budget, opt.threads);
    std::complex<double> norm = normalized_shadow(ld, link, opt.term_budget, opt.threads);
    rep.header({"genus", "loops", "shadow", "bracket"});
    rep.row({std::to_string(link.genus), std::to_string(link.loops.size()), complex_str(raw),
             complex_str(norm)});
    rep.flush();
    return kOk;
}

int cmd_check(const Options& opt, const LevelData& ld, Report& rep) {
    const RootSystem& rs = ld.rs;
    struct Line {
        std::string name;
        double residual;
        double tol;
    };
    std::vector<Line> lines;

    ModularResiduals mr = verify_modular_identities(ld);
    lines.push_back({"s-symmetric", mr.symmetry, opt.tol_identity});
    lines.push_back({"s-unitary", mr.unitarity, opt.tol_identity});
    lines.push_back({"s-squared-is-c", mr.s2_vs_c, opt.tol_identity});
    lines.push_back({"c-squared-is-one", mr.c2, opt.tol_identity});

    double qd = 0, theta_mod = 0;
    std::vector<double> ratio(ld.n());
    for (int i = 0; i < ld.n(); ++i) {
        qd = std::max(qd, std::abs(ld.qdim[i] - qdim_sine_product(rs, ld.k, ld.labels[i])));
        theta_mod = std::max(theta_mod, std::abs(std::abs(ld.theta[i]) - 1.0));
        ratio[i] = det_sqrt_one_minus_exp_ad(rs, Rat(1, ld.k) * (ld.labels[i] + rs.rho())) / ld.s0(i);
    }
    double mean = 0;
    for (double r : ratio) mean += r;
    mean /= ld.n();
    double spread = 0;
    for (double r : ratio) spread = std::max(spread, std::abs(r - mean) / std::abs(mean));
    lines.push_back({"qdim-double-formula", qd, opt.tol_identity});
    lines.push_back({"twist-unit-modulus", theta_mod, opt.tol_identity});
    lines.push_back({"det-sqrt-proportionality", spread, opt.tol_identity});

    double weyl_char = 0, fusion = 0;
    for (int l = 0; l < ld.n(); ++l) {
        auto table = cached_multiplicities(rs, ld.labels[l]);
        for (int m = 0; m < ld.n(); ++m) {
            // character at the S evaluation point -(mu+rho)/k
            Weight b = Rat(-1, ld.k) * (ld.labels[m] + rs.rho());
            weyl_char = std::max(weyl_char,
                                 std::abs(character_eval(rs, *table, b) - ld.s(m, l) / ld.s(m, 0)));
            for (int c = 0; c < ld.n(); ++c) {
                std::int64_t racah = fusion_racah(ld, *table, ld.labels[c], ld.labels[m]);
                fusion = std::max(fusion,
                                  std::abs(verlinde_number(ld, l, m, ld.bar[c]) - double(racah)));
            }
        }
    }
    lines.push_back({"weyl-character-identity", weyl_char, opt.tol_identity});
    lines.push_back({"fusion-verlinde-vs-racah", fusion, opt.tol_integer});

    // star-action invariance of twists and dimensions on sampled elements
    auto weyl = weyl_group(rs, opt.weyl_cap);
    double star = 0;
    for (std::size_t t = 0; t < weyl.size(); ++t) {
        AffineElement tau{weyl[t], rs.coroot(rs.simple_roots()[t % rs.rank()])};
        for (int i = 0; i < ld.n(); ++i) {
            Weight img = star_action(rs, ld.k, tau, ld.labels[i]);
            star = std::max(star, std::abs(theta_pow(ld, img, Rat(1)) - ld.theta[i]));
            star = std::max(star,
                            std::abs(qdim_sine_product(rs, ld.k, img) - tau.sign() * ld.qdim[i]));
        }
    }
    lines.push_back({"star-action-invariance", star, opt.tol_identity});

    double empty = std::abs(z_fiber_link(ld, 0, {}).value - 1.0);
    lines.push_back({"empty-fiber-link-is-one", empty, 1e-10});

    rep.header({"identity", "residual", "tolerance", "status"});
    int failures = 0;
    for (const auto& line : lines) {
        bool ok = line.residual < line.tol;
        if (!ok) ++failures;
        char r[32], t[32];
        std::snprintf(r, sizeof r, "%.3g", line.residual);
        std::snprintf(t, sizeof t, "%.3g", line.tol);
        rep.row({line.name, r, t, ok ? "pass" : "FAIL"});
    }
    rep.flush();
    return failures == 0 ? kOk : kIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Level-k modular data, fusion rules, torus-knot and shadow invariants"};
    app.add_option("--group", opt.group, "simple group, e.g. A1, B2, G2")->required();
    app.add_option("--level", opt.level, "level k (k > dual Coxeter number)")->required();
    app.add_option("--cmd", opt.cmd, "command")
        ->required()
        ->check(CLI::IsMember(
            {"smatrix", "fusion", "verlinde-dim", "fiber", "torus-knot", "rosso-jones", "shadow", "check"}));
    app.add_option("--format", opt.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
    app.add_option("--link", opt.link_path, "link description file (shadow)");
    app.add_option("--p", opt.p, "torus knot winding p >= 1");
    app.add_option("--q", opt.q, "torus knot winding q");
    app.add_option("--color", opt.color, "fundamental-weight coordinates, e.g. 1,0");
    app.add_option("--colors", opt.colors,
                   "color list; repeat the flag or separate entries with ';'");
    app.add_option("--genus", opt.genus, "surface genus");
    app.add_option("--weyl-cap", opt.weyl_cap, "Weyl group enumeration cap");
    app.add_option("--term-budget", opt.term_budget, "state-sum term budget");
    app.add_option("--threads", opt.threads, "worker threads");
    app.add_option("--tol-identity", opt.tol_identity, "identity tolerance for check");
    app.add_option("--tol-integer", opt.tol_integer, "integer tolerance for check");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        auto [series, rank] = parse_group_name(opt.group);
        RootSystem rs = RootSystem::build(series, rank);
        print_header(opt, rs);
        LevelData ld = level_data(rs, opt.level, opt.weyl_cap, opt.threads);
        Report rep(opt.format == "csv");
        if (opt.cmd == "smatrix") return cmd_smatrix(opt, ld, rep);
        if (opt.cmd == "fusion") return cmd_fusion(opt, ld, rep);
        if (opt.cmd == "verlinde-dim") return cmd_verlinde_dim(opt, ld, rep);
        if (opt.cmd == "fiber") return cmd_fiber(opt, ld, rep);
        if (opt.cmd == "torus-knot") return cmd_torus_knot(opt, ld, rep);
        if (opt.cmd == "rosso-jones") return cmd_rosso_jones(opt, ld, rep);
        if (opt.cmd == "shadow") return cmd_shadow(opt, ld, rep);
        if (opt.cmd == "check") return cmd_check(opt, ld, rep);
        std::fprintf(stderr, "unknown command %s\n", opt.cmd.c_str());
        return kConfigError;
    } catch (const rejected& e) {
        std::fprintf(stderr, "rejected: %s\n", e.what());
        return kRejected;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return kConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kRejected;
    }
}
