#include "trimdist/derivative.hpp"
#include "trimdist/envelopes.hpp"
#include "trimdist/errors.hpp"
#include "trimdist/gaussian.hpp"
#include "trimdist/io.hpp"
#include "trimdist/lipschitz_box.hpp"
#include "trimdist/trimming.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace trimdist;

std::size_t default_grid() {
    const char* env = std::getenv("TRIMDIST_GRID");
    if (env == nullptr || *env == '\0') return 100000;
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 2)
        throw InvalidInput("TRIMDIST_GRID must be an integer >= 2");
    return static_cast<std::size_t>(v);
}

// Distribution spec mini-language:
//   normal:<mu>,<sigma> | uniform:<a>,<b> | csv:<path> |
//   mixture:<spec>,<spec>,<alpha>
// A csv path inside a mixture may not contain commas; at top level the path
// runs to the end of the argument.
struct SpecParser {
    const std::string& s;
    std::size_t pos = 0;

    bool consume(const char* kw) {
        const std::size_t n = std::string::traits_type::length(kw);
        if (s.compare(pos, n, kw) == 0) {
            pos += n;
            return true;
        }
        return false;
    }

    void expect_comma() {
        if (pos >= s.size() || s[pos] != ',')
            throw InvalidInput("distribution spec: expected ',' in '" + s + "'");
        ++pos;
    }

    double number() {
        const char* begin = s.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) throw InvalidInput("distribution spec: expected a number in '" + s + "'");
        pos += static_cast<std::size_t>(end - begin);
        return v;
    }

    DistributionSpec parse(bool top) {
        if (consume("normal:")) {
            const double mu = number();
            expect_comma();
            const double sigma = number();
            return DistributionSpec::normal(mu, sigma);
        }
        if (consume("uniform:")) {
            const double a = number();
            expect_comma();
            const double b = number();
            return DistributionSpec::uniform(a, b);
        }
        if (consume("mixture:")) {
            DistributionSpec f0 = parse(false);
            expect_comma();
            DistributionSpec q = parse(false);
            expect_comma();
            const double alpha = number();
            return mixture_cdf(f0, q, alpha);
        }
        if (consume("csv:")) {
            const std::size_t stop = top ? std::string::npos : s.find(',', pos);
            const std::string path = s.substr(pos, stop == std::string::npos
                                                       ? std::string::npos
                                                       : stop - pos);
            pos = stop == std::string::npos ? s.size() : stop;
            return empirical_cdf(read_sample_csv(path));
        }
        throw InvalidInput("unknown distribution spec: '" + s + "'");
    }
};

DistributionSpec parse_distribution(const std::string& s) {
    SpecParser p{s};
    DistributionSpec d = p.parse(true);
    if (p.pos != s.size())
        throw InvalidInput("distribution spec: trailing characters in '" + s + "'");
    return d;
}

void emit_optional(JsonWriter& w, const std::string& name, const std::optional<double>& v) {
    w.key(name);
    if (v.has_value())
        w.number(*v);
    else
        w.null();
}

int run_distance(const std::string& f0s, const std::string& fs, double alpha,
                 std::size_t grid, const std::string& emit_h) {
    const DistributionSpec f0 = parse_distribution(f0s);
    const DistributionSpec f = parse_distribution(fs);
    const TrimResult r = trimmed_distance(f0, f, TrimParams(alpha), grid);
    if (!emit_h.empty()) {
        write_curve_csv(emit_h + ".htilde.csv", r.h_tilde);
        write_curve_csv(emit_h + ".hopt.csv", r.h_opt);
    }
    JsonWriter w;
    w.begin_object()
        .field("distance", r.distance)
        .field("alpha", r.params.alpha)
        .field("grid", static_cast<long long>(r.grid_size));
    w.key("n");
    if (r.sample_size > 0)
        w.integer(static_cast<long long>(r.sample_size));
    else
        w.null();
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_alpha_min(const std::string& f0s, const std::string& fs, double threshold,
                  std::size_t grid) {
    const DistributionSpec f0 = parse_distribution(f0s);
    const DistributionSpec f = parse_distribution(fs);
    const AlphaMinResult r = min_contamination_level(f0, f, threshold, grid);
    JsonWriter w;
    w.begin_object()
        .field("alpha_hat", r.alpha_hat)
        .field("iterations", static_cast<long long>(r.iterations))
        .end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_envelope(const std::string& input, double lip, const std::string& mode,
                 const std::string& interp_name) {
    const Interp interp = interp_name == "stepleft" ? Interp::StepLeft : Interp::Linear;
    const GridFunction f = read_curve_csv(input, interp);
    if (mode == "ph") {
        const LipEnvelopes env = pasch_hausdorff(f, lip);
        std::cout << "t,lower,mid,upper\n";
        const auto& t = env.mid.nodes();
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::cout << format_double(t[i]) << ',' << format_double(env.lower(t[i]))
                      << ',' << format_double(env.mid(t[i])) << ','
                      << format_double(env.upper(t[i])) << "\n";
        }
        return 0;
    }
    const MonotoneEnvelopes env = ubhaya_envelopes(f);
    std::cout << "t,lower_env,mid,upper_env\n";
    const auto& t = env.mid.nodes();
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::cout << format_double(t[i]) << ',' << format_double(env.lower_env(t[i]))
                  << ',' << format_double(env.mid(t[i])) << ','
                  << format_double(env.upper_env(t[i])) << "\n";
    }
    return 0;
}

int run_gaussian(double mu, double sigma, double alpha) {
    const GaussianResult r = gaussian_trimmed_distance(mu, sigma, alpha);
    JsonWriter w;
    w.begin_object()
        .field("distance", r.distance)
        .field("regime", std::string(to_string(r.info.regime)));
    emit_optional(w, "t_a", r.info.t_a);
    emit_optional(w, "t_b", r.info.t_b);
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_deriv(const std::string& input, const std::string& perturb, double lip,
              double tol) {
    const GridFunction f = read_curve_csv(input, Interp::Linear);
    const GridFunction j = read_curve_csv(perturb, Interp::Linear);
    const DerivativeResult r = directional_derivative_lipschitz(f, j, lip, tol);
    JsonWriter w;
    w.begin_object().field("derivative", r.value);
    w.key("t1").begin_array();
    for (double t : r.sets.t1) w.number(t);
    w.end_array();
    w.key("t2").begin_array();
    for (double t : r.sets.t2) w.number(t);
    w.end_array();
    w.key("t3").begin_array();
    for (const auto& [y, x] : r.sets.t3) {
        w.begin_array().number(y).number(x).end_array();
    }
    w.end_array();
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int run_oracle(const std::string& input, double alpha) {
    const GridFunction gamma = read_curve_csv(input, Interp::StepLeft);
    JsonWriter w;
    w.begin_object().field("distance", oracle_distance(gamma, TrimParams(alpha))).end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int report_error(const char* kind, const std::exception& e, int code) {
    JsonWriter w;
    w.begin_object().field("error", std::string(kind)).field("detail", std::string(e.what())).end_object();
    std::cerr << w.str() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trimmed Kolmogorov distances between distributions"};
    app.require_subcommand(1);

    std::string f0s, fs, input, perturb, emit_h, mode = "ph", interp = "linear";
    double alpha = 0.0, threshold = 0.0, mu = 0.0, sigma = 1.0, lip = 1.0, tol = 1e-8;
    std::size_t grid = 0;

    auto* d = app.add_subcommand("distance", "trimmed Kolmogorov distance");
    d->add_option("--f0", f0s, "reference distribution spec")->required();
    d->add_option("--f", fs, "distribution or sample spec")->required();
    d->add_option("--alpha", alpha, "contamination level in [0,1)")->required();
    d->add_option("--grid", grid, "grid size for analytic distributions");
    d->add_option("--emit-h", emit_h, "path prefix for the optimal trimming curves");

    auto* am = app.add_subcommand("alpha-min", "minimal contamination level estimate");
    am->add_option("--f0", f0s)->required();
    am->add_option("--f", fs)->required();
    am->add_option("--threshold", threshold, "distance threshold (default 0)");
    am->add_option("--grid", grid);

    auto* env = app.add_subcommand("envelope", "Lipschitz or monotone envelopes of a curve");
    env->add_option("--input", input, "curve CSV (t,value)")->required();
    env->add_option("--lip", lip, "Lipschitz constant (ph mode)");
    env->add_option("--mode", mode)->check(CLI::IsMember({"ph", "ubhaya"}));
    env->add_option("--interp", interp)->check(CLI::IsMember({"linear", "stepleft"}));

    auto* ga = app.add_subcommand("gaussian", "closed-form Gaussian distances");
    ga->add_option("--mu", mu)->required();
    ga->add_option("--sigma", sigma)->required();
    ga->add_option("--alpha", alpha)->required();

    auto* de = app.add_subcommand("deriv", "directional derivative of the distance");
    de->add_option("--input", input, "curve CSV for f")->required();
    de->add_option("--perturb", perturb, "curve CSV for the direction")->required();
    de->add_option("--lip", lip)->required();
    de->add_option("--tol", tol);

    auto* orc = app.add_subcommand("oracle", "bisection oracle on an empirical gamma curve");
    orc->add_option("--input", input, "StepLeft gamma curve CSV")->required();
    orc->add_option("--alpha", alpha)->required();

    try {
        app.parse(argc, argv);
        if (grid == 0) grid = default_grid();
        if (d->parsed()) return run_distance(f0s, fs, alpha, grid, emit_h);
        if (am->parsed()) return run_alpha_min(f0s, fs, threshold, grid);
        if (env->parsed()) return run_envelope(input, lip, mode, interp);
        if (ga->parsed()) return run_gaussian(mu, sigma, alpha);
        if (de->parsed()) return run_deriv(input, perturb, lip, tol);
        if (orc->parsed()) return run_oracle(input, alpha);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        JsonWriter w;
        w.begin_object()
            .field("error", std::string("InvalidInput"))
            .field("detail", std::string(e.what()))
            .end_object();
        std::cerr << w.str() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        return report_error("InvalidInput", e, 2);
    } catch (const UnsupportedDistribution& e) {
        return report_error("UnsupportedDistribution", e, 2);
    } catch (const UnsupportedCase& e) {
        return report_error("UnsupportedCase", e, 2);
    } catch (const BoundaryDegenerate& e) {
        return report_error("BoundaryDegenerate", e, 3);
    } catch (const DegenerateCase& e) {
        return report_error("DegenerateCase", e, 3);
    } catch (const NotAttained& e) {
        return report_error("NotAttained", e, 3);
    } catch (const std::exception& e) {
        return report_error("Internal", e, 1);
    }
}
