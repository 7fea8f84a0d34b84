// galhull: construct and verify MDS GRS codes with Galois hulls of prescribed dimension.

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = galhull::cli;

int main(int argc, char** argv) {
    CLI::App app{"Construct and verify MDS (extended) GRS codes with e-Galois hulls of prescribed dimension"};
    app.require_subcommand(1);

    cli::GlobalOptions opt;
    std::string field_flag;
    bool as_json = false, as_csv = false;
    app.add_option("--field", field_flag, "Field as p,h[,modulus coefficients, leading first]");
    auto* json_flag = app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);
    app.add_option("--seed", opt.seed, "Seed for randomized inputs")->default_val(0);
    app.add_option("--threads", opt.threads, "Worker threads for MDS checks")->default_val(1)->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "Run a construction request and verify it against the oracle");
    std::string request_path;
    construct->add_option("request", request_path, "Request JSON file, or - for stdin")->required();

    auto* verify = app.add_subcommand("verify", "Hull dimension, self-orthogonality witness and MDS verdict of a GRS spec");
    std::string spec_path, random_nk;
    unsigned verify_e = 0;
    bool verify_ext = false;
    auto* spec_opt = verify->add_option("spec", spec_path, "GRS spec JSON file, or - for stdin");
    verify->add_option("--random", random_nk, "Random spec n,k over --field (uses --seed)")->excludes(spec_opt);
    verify->add_option("-e,--e", verify_e, "Galois parameter e")->default_val(0);
    verify->add_flag("--extended", verify_ext, "Extended code (with --random)");

    auto* bounds = app.add_subcommand("bounds", "Dimension bounds floor((p^e'+n-1-deg h)/(p^e'+1))");
    bounds->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    cli::BoundsQuery query;
    std::string e_primes, bounds_reproduce;
    auto* repro_opt = bounds->add_option("--reproduce", bounds_reproduce, "example1|example5|example5-extended|remark6");
    bounds->add_option("--p", query.p, "Characteristic")->excludes(repro_opt);
    bounds->add_option("--h", query.h, "Extension degree")->excludes(repro_opt);
    bounds->add_option("--n", query.n, "Number of locators")->excludes(repro_opt);
    bounds->add_option("--deg-h", query.deg_h, "Degree of the witness polynomial h(x)")->excludes(repro_opt);
    bounds->add_option("--e-prime", e_primes, "Comma-separated e' values")->excludes(repro_opt);

    auto* enumerate = app.add_subcommand("enumerate", "Admissible parameters of construction classes 1-6");
    int cls = 0;
    std::uint64_t q_max = 0;
    enumerate->add_option("--class", cls, "Class id 1..6")->required();
    enumerate->add_option("--q-max", q_max, "Largest field order")->required();

    auto* reproduce = app.add_subcommand("reproduce", "Bound tables of the worked examples");
    std::string table;
    reproduce->add_option("table", table, "example1|example5|example5-extended|remark6")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kParseError;
    }

    if (!field_flag.empty()) opt.field = field_flag;
    opt.format_given = as_json || as_csv;
    const bool tabular = bounds->parsed() || enumerate->parsed() || reproduce->parsed();
    opt.format = as_csv || (tabular && !as_json) ? cli::Format::Csv : cli::Format::Json;

    std::ostream& out = std::cout;
    std::ostream& err = std::cerr;

    if (construct->parsed()) {
        return cli::guarded(err, [&] {
            const auto req = cli::parse_json_text(cli::read_input(request_path));
            return cli::cmd_construct(req, opt, out, err);
        });
    }
    if (verify->parsed()) {
        return cli::guarded(err, [&] {
            if (!random_nk.empty()) {
                if (!opt.field) throw galhull::InvalidArgument("--random needs --field");
                const auto nk = cli::parse_int_list(random_nk);
                if (nk.size() != 2 || nk[0] < 2 || nk[1] < 1) throw galhull::InvalidArgument("--random expects n,k with n >= 2, k >= 1");
                const auto f = cli::parse_field_flag(*opt.field);
                const auto spec = cli::random_spec(f, static_cast<std::size_t>(nk[0]), static_cast<std::size_t>(nk[1]),
                                                   verify_ext, opt.seed);
                return cli::cmd_verify(spec, verify_e, opt, out, err);
            }
            if (spec_path.empty()) throw galhull::InvalidArgument("verify needs a spec file or --random n,k");
            auto j = cli::parse_json_text(cli::read_input(spec_path));
            if (j.is_object() && !j.contains("field") && opt.field) {
                j["field"] = galhull::json_io::to_json(cli::parse_field_flag(*opt.field));
            }
            return cli::cmd_verify(galhull::json_io::spec_from_json(j), verify_e, opt, out, err);
        });
    }
    if (bounds->parsed()) {
        if (!bounds_reproduce.empty()) return cli::cmd_reproduce(bounds_reproduce, opt, out, err);
        return cli::guarded(err, [&] {
            if (query.p < 2 || query.h < 1) throw galhull::InvalidArgument("bounds needs --p, --h, --n and --e-prime");
            for (auto x : cli::parse_int_list(e_primes)) {
                if (x < 0) throw galhull::InvalidArgument("e' values must be nonnegative");
                query.e_primes.push_back(static_cast<unsigned>(x));
            }
            return cli::cmd_bounds(query, true, opt, out, err);
        });
    }
    if (enumerate->parsed()) return cli::cmd_enumerate(cls, q_max, opt, out, err);
    if (reproduce->parsed()) return cli::cmd_reproduce(table, opt, out, err);
    return cli::kParseError;
}
