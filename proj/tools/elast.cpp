// elast: command-line front end for factorization invariants of numerical
// monoids. See README.md for the subcommands and exit codes.

#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elast/arithmetical.hpp"
#include "elast/factorizations.hpp"
#include "elast/io.hpp"
#include "elast/monoid.hpp"
#include "elast/profile.hpp"
#include "elast/verify.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kFailure = 1,
    kBadInput = 2,
    kIoError = 3,
    kNotArithmetical = 4,
    kInconsistent = 5,
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

elast::NumericalMonoid parse_generators(const std::string& text) {
    std::vector<elast::Element> raw;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("generator list must be comma-separated positive integers: '" + text + "'");
        try {
            raw.push_back(std::stoull(item));
        } catch (const std::out_of_range&) {
            throw InputError("generator out of range: " + item);
        }
    }
    try {
        return elast::NumericalMonoid::create(raw);
    } catch (const elast::Error& e) {
        throw InputError(e.what());
    }
}

// Output destination: a file when a path is given, standard output otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) : path_(path) {
        if (!path_.empty()) {
            file_ = std::make_unique<std::ofstream>(path_, std::ios::binary);
            if (!*file_) throw IoError("cannot open '" + path_ + "' for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish() {
        stream().flush();
        if (!stream()) throw IoError("write failed" + (path_.empty() ? std::string() : " for '" + path_ + "'"));
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
};

elast::Element default_upper(const elast::NumericalMonoid& s) {
    if (s.is_trivial()) return 10;
    const elast::Element base = s.second_largest() * s.largest();
    return base + 10 * s.smallest() * s.largest();
}

int cmd_stats(const std::string& gens, std::optional<elast::Element> from, std::optional<elast::Element> to,
              const std::string& format, const std::string& output) {
    const auto s = parse_generators(gens);
    if (format != "csv" && format != "json") throw InputError("stats supports --format csv or json");
    const elast::LengthEngine engine(s);
    const auto rows = elast::length_stats_range(engine, from.value_or(0), to.value_or(default_upper(s)));
    Sink sink(output);
    if (format == "csv")
        elast::write_stats_csv(sink.stream(), rows);
    else
        sink.stream() << elast::stats_to_json(s, rows).dump(2) << '\n';
    sink.finish();
    return kOk;
}

int cmd_plot(const std::string& gens, const std::string& kind, elast::Element to, const std::string& format,
             const std::string& output) {
    const auto s = parse_generators(gens);
    if (format != "svg") throw InputError("plot only writes svg");
    elast::PlotKind plot_kind;
    if (kind == "rho")
        plot_kind = elast::PlotKind::Rho;
    else if (kind == "maxlen")
        plot_kind = elast::PlotKind::MaxLen;
    else if (kind == "minlen")
        plot_kind = elast::PlotKind::MinLen;
    else
        throw InputError("--kind must be rho, maxlen or minlen");
    const elast::LengthEngine engine(s);
    Sink sink(output);
    elast::write_svg_plot(sink.stream(), engine, plot_kind, to);
    sink.finish();
    return kOk;
}

int cmd_profile(const std::string& gens, const std::string& output) {
    const auto s = parse_generators(gens);
    if (s.is_trivial()) throw InputError("profile needs at least two generators");
    const auto profile = elast::build_profile(s);
    Sink sink(output);
    sink.stream() << elast::profile_to_json(profile).dump() << '\n';
    sink.finish();
    return kOk;
}

int cmd_recover(const std::string& gens) {
    const auto s = parse_generators(gens);
    const auto params = elast::detect_arithmetical(s);
    if (!params) {
        std::cerr << s.to_string() << " is not arithmetical\n";
        return kNotArithmetical;
    }
    // Work from elasticity values alone: scan rho(n) for n <= 20 g_1 g_k.
    const elast::LengthEngine engine(s);
    const elast::Element bound = 20 * s.smallest() * s.largest();
    std::set<elast::Rational> values;
    for (elast::Element n = 1; n <= bound; ++n)
        if (engine.contains(n)) values.insert(engine.elasticity(n));
    auto it = values.begin();
    const elast::Rational f = *++it;
    const elast::Rational g = *++it;
    const elast::Rational sup = *values.rbegin();
    const auto d = elast::recover_d(f, g);
    const auto a_over_k = elast::recover_a_over_k(sup, d);
    std::cout << "d=" << d << " a/k=" << a_over_k << " sup=" << sup << '\n';
    if (d != params->d || a_over_k != elast::Rational(elast::BigInt(params->a), elast::BigInt(params->k))) {
        std::cerr << "mismatch with generators: d=" << params->d << " a/k=" << params->a << "/" << params->k << '\n';
        return kInconsistent;
    }
    return kOk;
}

int cmd_compare(const std::string& gens1, const std::string& gens2, std::uint64_t t_max) {
    const auto s = parse_generators(gens1);
    const auto t = parse_generators(gens2);
    if (s.is_trivial() || t.is_trivial()) throw InputError("compare needs at least two generators on each side");
    const auto verdict = elast::compare_profiles(s, t, t_max);
    switch (verdict.outcome) {
        case elast::Outcome::Equal: std::cout << "EQUAL\n"; break;
        case elast::Outcome::NotEqual: std::cout << "NOT_EQUAL witness=" << *verdict.witness << '\n'; break;
        case elast::Outcome::Unknown: std::cout << "UNKNOWN bound=" << verdict.checked_bound << '\n'; break;
    }
    const auto p = elast::detect_arithmetical(s);
    const auto q = elast::detect_arithmetical(t);
    if (p && q) {
        const bool equal = elast::elasticity_sets_equal_arithmetical(*p, *q);
        std::cout << "ARITHMETICAL " << (equal ? "EQUAL" : "NOT_EQUAL") << '\n';
        if (verdict.outcome != elast::Outcome::Unknown && equal != (verdict.outcome == elast::Outcome::Equal)) {
            std::cerr << "profile verdict contradicts the arithmetical criterion\n";
            return kInconsistent;
        }
    }
    return kOk;
}

int cmd_verify(const std::string& suite, bool inject_fault) {
    const auto results = elast::verify::run_suite(suite, {inject_fault});
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
        if (!r.passed) std::cout << " (" << r.detail << ")";
        std::cout << '\n';
        ok = ok && r.passed;
    }
    return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Factorization invariants of numerical monoids"};
    app.require_subcommand(1);

    std::string gens, gens2, format = "csv", output, kind = "rho", suite = "all";
    std::optional<elast::Element> from, to;
    elast::Element plot_to = 0;
    std::uint64_t t_max = 50;
    bool inject_fault = false;

    auto* stats = app.add_subcommand("stats", "max/min lengths and elasticity for a range of elements");
    stats->add_option("generators", gens, "comma-separated generators")->required();
    stats->add_option("--from", from, "first element (default 0)");
    stats->add_option("--to", to, "last element (default base + 10 * period)");
    stats->add_option("--format", format, "csv or json")->capture_default_str();
    stats->add_option("-o,--output", output, "output file (default stdout)");

    auto* plot = app.add_subcommand("plot", "SVG scatter of rho, M or m");
    plot->add_option("generators", gens, "comma-separated generators")->required();
    plot->add_option("--kind", kind, "rho, maxlen or minlen")->capture_default_str();
    plot->add_option("--to", plot_to, "largest element plotted")->required();
    auto* plot_format = plot->add_option("--format", format, "svg");
    plot->add_option("-o,--output", output, "output file (default stdout)");

    auto* profile = app.add_subcommand("profile", "JSON elasticity profile");
    profile->add_option("generators", gens, "comma-separated generators")->required();
    profile->add_option("-o,--output", output, "output file (default stdout)");

    auto* recover = app.add_subcommand("recover", "recover d and a/k of an arithmetical monoid from its elasticities");
    recover->add_option("generators", gens, "comma-separated generators")->required();

    auto* compare = app.add_subcommand("compare", "decide whether two monoids have the same elasticity set");
    compare->add_option("first", gens, "comma-separated generators")->required();
    compare->add_option("second", gens2, "comma-separated generators")->required();
    compare->add_option("--tmax", t_max, "sequence horizon checked explicitly")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite, "core, arith, profile or all")
        ->check(CLI::IsMember({"core", "arith", "profile", "all"}))
        ->capture_default_str();
    verify->add_flag("--inject-fault", inject_fault, "corrupt one table entry (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*stats) return cmd_stats(gens, from, to, format, output);
        if (*plot) return cmd_plot(gens, kind, plot_to, plot_format->count() ? format : "svg", output);
        if (*profile) return cmd_profile(gens, output);
        if (*recover) return cmd_recover(gens);
        if (*compare) return cmd_compare(gens, gens2, t_max);
        if (*verify) return cmd_verify(suite, inject_fault);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const elast::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
