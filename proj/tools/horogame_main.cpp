#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "horogame/horogame.hpp"

namespace hg = horogame;

namespace {

hg::HoroballFamily make_family(unsigned ford_q, const std::string& family_file, const std::string& rescale) {
    hg::HoroballFamily fam;
    if (!family_file.empty())
        fam = hg::load_family_file(family_file);
    else
        fam = hg::generate_ford(ford_q);
    if (!rescale.empty()) fam = fam.rescaled(hg::parse_rat_or_throw(rescale, "rescale factor"));
    return fam;
}

hg::Strategy<hg::LineSpace> make_bob(const std::string& spec, const hg::Ball<hg::LineSpace>& opening) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "random") return hg::random_bob(arg.empty() ? 1 : std::stoull(arg), opening);
    if (kind == "cusp") return hg::cusp_bob(hg::parse_rat_or_throw(arg, "cusp target"), opening);
    if (kind == "greedy-left") return hg::greedy_left_bob(opening);
    throw CLI::ValidationError("--bob", "unknown bob spec: " + spec);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schmidt and absolute games with horoball-avoidance strategies"};
    app.require_subcommand(1);

    // ---- play ----
    auto* play = app.add_subcommand("play", "run an absolute game against the horoball strategy");
    unsigned ford_q = 50;
    std::string family_file, rescale, bob_spec = "random:1", out_path;
    std::string beta_str = "1/10", opening_center = "1/2", opening_radius = "1/4";
    int rounds = 40;
    double delta = hg::kHalfPlaneDelta, visual_C = 2.0, visual_a = 2.718281828459045;
    play->add_option("--ford", ford_q, "Ford family with denominators up to Q");
    play->add_option("--family", family_file, "family file (one horoball record per line)");
    play->add_option("--rescale", rescale, "rescale the family by s in (0,1)");
    play->add_option("--beta", beta_str, "absolute-game beta (rational, < 1/3)");
    play->add_option("--rounds", rounds, "number of Bob balls");
    play->add_option("--bob", bob_spec, "bob strategy: random:SEED | cusp:p/q | greedy-left");
    play->add_option("--opening-center", opening_center, "Bob's opening center (rational in [0,1])");
    play->add_option("--opening-radius", opening_radius, "Bob's opening radius (rational <= 1/4)");
    play->add_option("--delta", delta, "hyperbolicity constant");
    play->add_option("--visual-C", visual_C, "visual metric constant C");
    play->add_option("--out", out_path, "write records to file instead of stdout");

    // ---- verify-ba ----
    auto* vba = app.add_subcommand("verify-ba", "check q^2 |x - p/q| > s for all q <= Q");
    std::string x_str, s_str = "1/100";
    unsigned qmax = 1000;
    vba->add_option("x", x_str, "the point: rational p/q, decimal, or 'golden'")->required();
    vba->add_option("--s", s_str, "margin s (rational)");
    vba->add_option("--qmax", qmax, "largest denominator");

    // ---- dimension ----
    auto* dim = app.add_subcommand("dimension", "box dimension of the bounded-digit set");
    int digits = 2, depth_from = 6, depth_to = 14;
    std::string csv_path;
    dim->add_option("--digits", digits, "partial quotient bound N");
    std::string depths = "6..14";
    dim->add_option("--depths", depths, "dyadic depth range a..b");
    dim->add_option("--csv", csv_path, "write scale,count CSV");

    // ---- check-diffuse ----
    auto* cdf = app.add_subcommand("check-diffuse", "uniform perfectness + diffuse witnesses on a cantor set");
    std::string nu_str = "1/3", beta_diffuse = "";
    int cantor_depth = 10;
    cdf->add_option("--contraction", nu_str, "cantor contraction ratio");
    cdf->add_option("--depth", cantor_depth, "cantor construction depth");
    cdf->add_option("--beta", beta_diffuse, "diffuseness beta to certify (default: bound/2)");
    cdf->add_option("--out", out_path, "write records to file");

    // ---- power-law ----
    auto* pl = app.add_subcommand("power-law", "power-law check of the cantor measure");
    double pl_delta = 0.6309297535714574;
    int pl_scales = 10;
    pl->add_option("--delta", pl_delta, "exponent to test");
    pl->add_option("--scales", pl_scales, "number of triadic scales");

    // ---- family ----
    auto* famcmd = app.add_subcommand("family", "generate / check / export a horoball family");
    unsigned fam_ford = 10;
    std::string fam_file, fam_rescale, fam_out;
    bool fam_shadows = false;
    famcmd->add_option("--ford", fam_ford, "Ford family up to Q");
    famcmd->add_option("--family", fam_file, "load from file instead");
    famcmd->add_option("--rescale", fam_rescale, "rescale factor in (0,1)");
    famcmd->add_flag("--shadows", fam_shadows, "compute shadow radii (slower)");
    famcmd->add_option("--out", fam_out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*play) {
            std::ofstream file;
            std::ostream& os = open_output(file, out_path);
            auto fam = make_family(ford_q, family_file, rescale);
            hg::GameParams<hg::LineSpace> P;
            P.variant = hg::Variant::absolute;
            P.beta = hg::parse_rat_or_throw(beta_str, "beta");
            P.rounds = rounds;
            P.space = hg::boundary_window_space(0, 1);
            P.space.delta = delta;
            P.space.visual_C = visual_C;
            hg::Ball<hg::LineSpace> opening{hg::parse_rat_or_throw(opening_center, "opening center"),
                                            hg::parse_rat_or_throw(opening_radius, "opening radius")};
            auto bob = make_bob(bob_spec, opening);
            hg::Record cfg("config");
            cfg.set("cmd", std::string("play"))
                .set("family", fam.origin().kind + ":" + fam.origin().detail)
                .set("beta", beta_str)
                .set("rounds", rounds)
                .set("bob", bob_spec)
                .set("delta", delta)
                .set("visual_C", visual_C)
                .set("visual_a", visual_a);
            os << cfg;
            std::optional<unsigned> qcheck;
            if (family_file.empty() && rescale.empty()) qcheck = ford_q;
            auto ex = hg::run_ba_experiment(fam, P, bob, delta, visual_C, visual_a, qcheck);
            for (const auto& rec : hg::serialize(ex.transcript)) os << rec;
            hg::Record rep("ba-report");
            rep.set("s_lower", ex.s_lower)
                .set("members_checked", static_cast<long long>(ex.report.members_checked))
                .set("ok", ex.report.ok)
                .set("min_ratio", ex.report.min_ratio);
            os << rep;
            if (ex.ford_witness.verified) os << hg::ba_witness_record(ex.ford_witness);
            if (!ex.transcript.clean() || !ex.report.ok) return 2;
            return 0;
        }
        if (*vba) {
            hg::Rat s = hg::parse_rat_or_throw(s_str, "s");
            hg::BAWitness w;
            std::optional<hg::BACounterexample> ce;
            if (x_str == "golden") {
                ce = hg::verify_ba_ford(hg::golden_fractional(), s, qmax, &w);
            } else if (x_str.find('/') != std::string::npos) {
                ce = hg::verify_ba_ford(hg::parse_rat_or_throw(x_str, "x"), s, qmax, &w);
            } else {
                ce = hg::verify_ba_ford(hg::IntervalReal::from_decimal(x_str), s, qmax, &w);
            }
            hg::Record cfg("config");
            cfg.set("cmd", std::string("verify-ba")).set("x", x_str).set("s", s_str)
                .set("qmax", static_cast<long long>(qmax));
            std::cout << cfg;
            if (ce) {
                hg::Record rec("ba-counterexample");
                rec.set("p", ce->p.str()).set("q", ce->q.str()).set("margin", ce->margin);
                std::cout << rec;
                return 3;
            }
            std::cout << hg::ba_witness_record(w);
            return 0;
        }
        if (*dim) {
            auto dots = depths.find("..");
            if (dots == std::string::npos) throw CLI::ValidationError("--depths", "expected a..b");
            depth_from = std::stoi(depths.substr(0, dots));
            depth_to = std::stoi(depths.substr(dots + 2));
            auto est = hg::dimension_of_ba_digits(digits, depth_from, depth_to);
            hg::Record cfg("config");
            cfg.set("cmd", std::string("dimension")).set("digits", digits).set("depths", depths);
            std::cout << cfg;
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                csv << "scale,count\n";
                for (std::size_t i = 0; i < est.scales.size(); ++i)
                    csv << hg::to_double(est.scales[i]) << "," << est.counts[i] << "\n";
            }
            std::cout << est.record();
            return 0;
        }
        if (*cdf) {
            std::ofstream file;
            std::ostream& os = open_output(file, out_path);
            hg::Rat nu = hg::parse_rat_or_throw(nu_str, "contraction");
            auto sp = hg::cantor_space(nu, cantor_depth);
            hg::Record cfg("config");
            cfg.set("cmd", std::string("check-diffuse")).set("contraction", nu_str).set("depth", cantor_depth);
            os << cfg;
            // measured perfectness constant over dyadic scales
            std::vector<hg::Rat> scales;
            for (int k = 2; k <= 8; ++k) scales.push_back(hg::Rat(1, 1 << k));
            hg::Rat best_nu = 0;
            for (hg::Rat cand : {hg::Rat(1, 4), hg::Rat(1, 3), hg::Rat(2, 5), hg::Rat(9, 20), hg::Rat(1, 2)}) {
                auto rep = hg::check_uniform_perfectness(sp, cand, scales);
                if (rep.passed()) best_nu = cand;
            }
            auto report = hg::check_uniform_perfectness(sp, best_nu, scales);
            for (const auto& rec : hg::serialize(report, sp)) os << rec;
            hg::Rat bound = hg::diffuse_bound_from_perfectness(best_nu);
            hg::Rat beta = beta_diffuse.empty() ? hg::Rat(bound / 2)
                                                : hg::parse_rat_or_throw(beta_diffuse, "beta");
            hg::DiffusenessCertificate<hg::LineSpace> cert;
            cert.beta0 = beta;
            for (const auto& x : sp.sample_points()) {
                hg::Rat rho(1, 27);
                for (const auto& y : {x, hg::Rat(x + beta * rho), hg::Rat(x + rho / 2)}) {
                    auto w = hg::diffuse_witness(sp, x, rho, y, beta);
                    cert.triples.push_back({x, rho, y, w ? std::optional<hg::Rat>(w->x_prime) : std::nullopt});
                    if (!w) ++cert.failures;
                }
            }
            hg::Record head("diffuse-summary");
            head.set("measured_nu", hg::rat_str(best_nu))
                .set("beta_bound", hg::rat_str(bound))
                .set("beta", hg::rat_str(beta))
                .set("failures", cert.failures);
            os << head;
            return cert.failures == 0 ? 0 : 2;
        }
        if (*pl) {
            hg::CantorMeasure mu;
            auto oracle = [&mu](const hg::Rat& x, const hg::Rat& rho) { return mu.ball(x, rho); };
            std::vector<hg::Rat> scales;
            for (int k = 1; k <= pl_scales; ++k) scales.push_back(hg::rat_pow(hg::Rat(1, 3), k));
            std::vector<hg::Rat> samples;
            auto sp = hg::cantor_space(hg::Rat(1, 3), 8);
            for (const auto& x : sp.sample_points()) samples.push_back(x);
            auto rep = hg::power_law_check(oracle, pl_delta, scales, samples);
            hg::Record cfg("config");
            cfg.set("cmd", std::string("power-law")).set("delta", pl_delta).set("scales", pl_scales);
            std::cout << cfg;
            std::cout << rep.head_record();
            for (std::size_t k = 0; k < rep.scales.size(); ++k) {
                hg::Record rec("power-law-scale");
                rec.set("rho", rep.scales[k]).set("C", rep.per_scale_C[k]);
                std::cout << rec;
            }
            return rep.pass ? 0 : 2;
        }
        if (*famcmd) {
            auto fam = make_family(fam_ford, fam_file, fam_rescale);
            auto bad = fam.check_disjoint();
            std::ofstream file;
            std::ostream& os = open_output(file, fam_out);
            hg::Record cfg("config");
            cfg.set("cmd", std::string("family"))
                .set("origin", fam.origin().kind + ":" + fam.origin().detail)
                .set("members", static_cast<long long>(fam.size()))
                .set("disjoint", bad.empty())
                .set("basepoint_excluded", fam.basepoint_excluded());
            os << cfg;
            if (fam.origin().kind == "ford")
                os << hg::group_record(hg::psl2z_descriptor(fam, std::min<unsigned>(fam_ford, 20)));
            for (const auto& H : fam.members()) {
                if (fam_shadows)
                    os << hg::horoball_record(H, hg::horoball_shadow(H));
                else
                    os << hg::horoball_record(H);
            }
            return bad.empty() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
