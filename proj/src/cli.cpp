#include "sym/cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sym/json_io.hpp"
#include "sym/petrie.hpp"
#include "sym/verify.hpp"

namespace sym::cli {
namespace {

struct Options {
    int k = 0;
    int m = 0;
    std::string lambda;
    std::string mu;
    std::string basis = "s";
    std::string method = "det";
    std::string format = "pretty";
    std::string suite;
    int n_max = -1;
    int bound = 14;
    bool extended = false;
    bool has_lambda = false;
};

void print(std::ostream& out, const SymFunc& f, const std::string& format)
{
    if (format == "json")
        out << to_json(f).dump() << '\n';
    else
        out << to_pretty(f) << '\n';
}

void require_k(int k)
{
    if (k < 1)
        throw std::invalid_argument("--k must be at least 1");
}

int cmd_gkm(const Options& o, std::ostream& out)
{
    require_k(o.k);
    if (o.m < 0)
        throw std::invalid_argument("--m must be nonnegative");
    const Basis basis = parse_basis(o.basis);
    const SymFunc g = basis == Basis::S ? pieri_expand(o.k, o.m, Partition{}) : to_basis(petrie_g(o.k, o.m), basis);
    print(out, g, o.format);
    return kOk;
}

int cmd_pet(const Options& o, std::ostream& out, std::ostream& err)
{
    require_k(o.k);
    const Partition lambda = parse_partition(o.lambda);
    const Partition mu = parse_partition(o.mu);

    std::vector<std::pair<std::string, long>> values;
    if (o.method == "det" || o.method == "all")
        values.emplace_back("det", pet_det(o.k, lambda, mu));
    if (o.method == "explicit" || (o.method == "all" && mu.empty())) {
        if (!mu.empty())
            throw std::invalid_argument("--method explicit requires an empty --mu");
        values.emplace_back("explicit", pet_explicit(o.k, lambda).value);
    }
    if (o.method == "alpha" || o.method == "all")
        values.emplace_back("alpha", pet_alpha(o.k, lambda, mu));

    for (const auto& [method, value] : values) {
        if (o.format == "json") {
            const nlohmann::json j = {{"k", o.k},
                                      {"lambda", partition_to_json(lambda)},
                                      {"mu", partition_to_json(mu)},
                                      {"pet", value},
                                      {"method", method}};
            out << j.dump() << '\n';
        } else if (values.size() == 1) {
            out << value << '\n';
        } else {
            out << method << ": " << value << '\n';
        }
    }
    for (const auto& [method, value] : values) {
        if (value != values.front().second) {
            err << "petrie number routes disagree: " << values.front().first << " gives "
                << values.front().second << ", " << method << " gives " << value << '\n';
            return kInconsistent;
        }
    }
    return kOk;
}

int cmd_pieri(const Options& o, std::ostream& out)
{
    require_k(o.k);
    if (o.m < 0)
        throw std::invalid_argument("--m must be nonnegative");
    print(out, pieri_expand(o.k, o.m, parse_partition(o.mu)), o.format);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    using namespace sym::verify;
    std::vector<VerifyReport> reports;
    bool all_passed = true;
    auto emit = [&](const VerifyReport& r) {
        all_passed = all_passed && r.passed;
        out << to_json_line(r) << '\n' << std::flush;
    };

    if (o.suite == "liu-polo") {
        const int n_max = o.n_max < 0 ? 8 : o.n_max;
        for (int n = 2; n <= n_max; ++n)
            emit(check_liu_polo(n));
    } else if (o.suite == "gessel") {
        emit(check_gessel(o.n_max < 0 ? 8 : o.n_max));
    } else if (o.suite == "genset") {
        const int k = o.k == 0 ? 2 : o.k;
        if (k < 2)
            throw std::invalid_argument("genset needs --k of at least 2");
        emit(check_genset(k, o.n_max < 0 ? 7 : o.n_max));
    } else if (o.suite == "alexandersson") {
        if (o.extended)
            emit(scan_alexandersson_fast(30));
        else
            emit(scan_alexandersson(o.bound));
    } else if (o.suite == "petriefication") {
        if (o.has_lambda) {
            require_k(o.k);
            emit(petriefication_report(o.k, parse_partition(o.lambda)));
        } else {
            emit(check_petriefication_defaults());
        }
    } else if (o.suite == "invariants-all") {
        for (const auto& r : run_invariants_all())
            emit(r);
    } else {
        err << "unknown suite: " << o.suite << '\n';
        return kUsage;
    }
    return all_passed ? kOk : kVerificationFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Petrie symmetric functions: expansions, Petrie numbers and verification suites", "petrie"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats{"json", "pretty"};
    const std::vector<std::string> bases{"m", "h", "e", "p", "s"};

    auto* gkm = app.add_subcommand("gkm", "Print G(k,m) in a chosen basis");
    gkm->add_option("--k", o.k, "Exponent bound (exponents < k)")->required();
    gkm->add_option("--m", o.m, "Degree")->required();
    gkm->add_option("--basis", o.basis, "Output basis")->check(CLI::IsMember(bases));
    gkm->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* pet = app.add_subcommand("pet", "Print the Petrie number pet_k(lambda, mu)");
    pet->add_option("--k", o.k)->required();
    pet->add_option("--lambda", o.lambda, "Comma-separated parts, empty for the empty partition")->required();
    pet->add_option("--mu", o.mu, "Comma-separated parts, empty for the empty partition");
    pet->add_option("--method", o.method)->check(CLI::IsMember({"det", "explicit", "alpha", "all"}));
    pet->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* pieri = app.add_subcommand("pieri", "Print the Schur expansion of G(k,m) s_mu");
    pieri->add_option("--k", o.k)->required();
    pieri->add_option("--m", o.m)->required();
    pieri->add_option("--mu", o.mu);
    pieri->add_option("--format", o.format)->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Run a verification suite, one JSON report per line");
    verify->add_option("suite", o.suite,
                       "liu-polo | gessel | genset | alexandersson | petriefication | invariants-all")
        ->required();
    verify->add_option("--k", o.k);
    verify->add_option("--lambda", o.lambda);
    verify->add_option("--n-max", o.n_max, "Largest n or degree to check");
    verify->add_option("--bound", o.bound, "Alexandersson scan bound on k + m");
    verify->add_flag("--extended", o.extended, "Alexandersson scan to k + m <= 30");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    o.has_lambda = verify->count("--lambda") > 0;

    try {
        if (*gkm)
            return cmd_gkm(o, out);
        if (*pet)
            return cmd_pet(o, out, err);
        if (*pieri)
            return cmd_pieri(o, out);
        return cmd_verify(o, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace sym::cli
