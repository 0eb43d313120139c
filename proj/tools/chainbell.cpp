// Command-line front end: chain scans, LHV certification, Zeno traces,
// qubit-sector scans, and finite-statistics sampling, emitting CSV/JSON.
//
// Exit codes: 0 success, 1 usage or input error, 2 enumeration budget
// exceeded.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainbell/chain.hpp"
#include "chainbell/lhv.hpp"
#include "chainbell/qubit_sector.hpp"
#include "chainbell/sampler.hpp"

namespace {

using nlohmann::json;

std::string fmtReal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

// Writes through a stream that is either stdout or a file.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// Simple key=value config: '#' comments and blank lines ignored. Values
// fill in only options that were not given on the command line.
std::map<std::string, std::string> loadConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::map<std::string, std::string> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line is not key=value: " + line);
        const std::string key = line.substr(0, line.find_last_not_of(" \t", eq - 1) + 1);
        auto valueStart = line.find_first_not_of(" \t", eq + 1);
        values[key] = valueStart == std::string::npos ? "" : line.substr(valueStart);
    }
    return values;
}

template <typename T>
std::vector<T> parseList(const std::string& text) {
    std::vector<T> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        std::istringstream field(item);
        T value;
        if (!(field >> value))
            throw std::runtime_error("config: bad list element '" + item + "'");
        out.push_back(value);
    }
    return out;
}

// Applies config values to every option of `sub` that has a matching key
// and no command-line occurrence; unknown keys are usage errors.
void applyConfig(CLI::App* sub, const std::string& path) {
    if (path.empty()) return;
    for (const auto& [key, value] : loadConfig(path)) {
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw std::runtime_error("config: unknown key '" + key + "' for " +
                                     sub->get_name());
        if (opt->count() > 0) continue;  // flag takes precedence
        for (const auto& piece : parseList<std::string>(value))
            opt->add_result(piece);
        opt->run_callback();
    }
}

chainbell::ChainVariant parseVariant(const std::string& name) {
    if (name == "standard") return chainbell::ChainVariant::standard;
    if (name == "extended") return chainbell::ChainVariant::extended;
    throw CLI::ValidationError("--variant", "must be 'standard' or 'extended'");
}

int cmdScan(std::vector<int> dims, std::vector<int> Ns,
            const std::string& variantName, const std::string& outPath) {
    if (dims.empty() || Ns.empty()) {
        std::cerr << "scan: --dims and --Ns must be nonempty\n";
        return 1;
    }
    for (int N : Ns)
        if (N < 2 || N % 2 != 0) {
            std::cerr << "scan: every N must be even and >= 2, got " << N << "\n";
            return 1;
        }
    const chainbell::ChainVariant variant = parseVariant(variantName);
    std::sort(dims.begin(), dims.end());
    std::sort(Ns.begin(), Ns.end());

    OutputTarget out(outPath);
    out.stream() << "d,N,variant,lhs,rhs,margin,violated,closed_form\n";
    for (int d : dims)
        for (int N : Ns) {
            out.stream() << d << "," << N << "," << variantName << ",";
            try {
                const chainbell::ChainReport report = chainbell::evaluateChain(
                    chainbell::ChainScenario{d, N / 2, variant});
                out.stream() << fmtReal(report.lhs) << "," << fmtReal(report.rhs)
                             << "," << fmtReal(report.margin) << ","
                             << (report.violated ? "true" : "false") << ","
                             << (report.closedForm ? fmtReal(*report.closedForm)
                                                   : std::string())
                             << "\n";
            } catch (const std::exception&) {
                out.stream() << "NA,NA,NA,NA,NA\n";
            }
        }
    return 0;
}

int cmdCheckLhv(int d, int n, const std::string& variantName,
                const std::string& outPath) {
    const chainbell::ChainScenario scenario{d, n, parseVariant(variantName)};
    chainbell::LhvCertificate cert;
    try {
        cert = chainbell::certifyClassicalBound(scenario);
    } catch (const chainbell::BudgetExceeded& e) {
        std::cerr << "check-lhv: " << e.what() << "\n";
        return 2;
    }

    std::cout << "scenario: d=" << d << " n=" << n << " variant=" << variantName
              << "\n"
              << "strategies checked: " << cert.strategiesChecked << "\n"
              << "max margin (rhs - lhs): " << cert.maxMargin << "\n"
              << "witness alice outcomes:";
    for (int a : cert.witness.aliceOutcomes) std::cout << " " << a;
    std::cout << "\nwitness bob outcomes:";
    for (int b : cert.witness.bobOutcomes) std::cout << " " << b;
    std::cout << "\nclassical bound " << (cert.maxMargin <= 0 ? "holds" : "FAILS")
              << "\n";

    if (!outPath.empty()) {
        json report = {
            {"scenario", {{"d", d}, {"n", n}, {"variant", variantName}}},
            {"strategiesChecked", cert.strategiesChecked},
            {"maxMargin", cert.maxMargin},
            {"witness",
             {{"aliceOutcomes", cert.witness.aliceOutcomes},
              {"bobOutcomes", cert.witness.bobOutcomes}}},
        };
        OutputTarget out(outPath);
        out.stream() << report.dump(2) << "\n";
    }
    return cert.maxMargin <= 0 ? 0 : 1;
}

int cmdZeno(int d, const std::vector<int>& nList, const std::string& outPath) {
    for (int n : nList)
        if (n < 1) {
            std::cerr << "zeno: every n must be >= 1\n";
            return 1;
        }
    OutputTarget out(outPath);
    out.stream() << "d,n,N,lhs,rhs,margin,violated\n";
    for (const chainbell::ChainReport& report :
         chainbell::zenoLimitTrace(d, nList)) {
        out.stream() << d << "," << report.scenario.n << ","
                     << report.scenario.settings() << "," << fmtReal(report.lhs)
                     << "," << fmtReal(report.rhs) << ","
                     << fmtReal(report.margin) << ","
                     << (report.violated ? "true" : "false") << "\n";
    }
    return 0;
}

int cmdSector(std::vector<double> gammas, int nMax, const std::string& outPath) {
    if (nMax < 2) {
        std::cerr << "sector: --n-max must be >= 2\n";
        return 1;
    }
    for (double g : gammas)
        if (g < 1.0) {
            std::cerr << "sector: every gamma must be >= 1\n";
            return 1;
        }
    std::sort(gammas.begin(), gammas.end());

    OutputTarget out(outPath);
    out.stream() << "gamma,n,margin,violated,minimal_n,asymptote\n";
    for (double gamma : gammas) {
        std::optional<long> minimalN;
        for (int n = 2; n <= nMax; ++n)
            if (chainbell::sectorChainMargin(chainbell::SectorScenario{n, gamma}) >
                1e-12) {
                minimalN = n;
                break;
            }
        for (int n = 2; n <= nMax; ++n) {
            const double margin =
                chainbell::sectorChainMargin(chainbell::SectorScenario{n, gamma});
            out.stream() << fmtReal(gamma) << "," << n << "," << fmtReal(margin)
                         << "," << (margin > 1e-12 ? "true" : "false") << ","
                         << (minimalN ? std::to_string(*minimalN) : std::string())
                         << "," << fmtReal(chainbell::sectorAsymptote(gamma))
                         << "\n";
        }
    }
    return 0;
}

int cmdSample(int d, int N, std::uint64_t shots, std::uint64_t seed,
              const std::string& variantName, const std::string& outPath) {
    if (N < 2 || N % 2 != 0) {
        std::cerr << "sample: N must be even and >= 2\n";
        return 1;
    }
    const chainbell::SampleConfig config{
        seed, shots, chainbell::ChainScenario{d, N / 2, parseVariant(variantName)}};
    const chainbell::EstimateReport report = chainbell::estimateChain(config);

    json perLink = json::array();
    for (const chainbell::LinkEstimate& link : report.perLink)
        perLink.push_back({{"estimate", link.estimate}, {"stderr", link.stderror}});
    json doc = {
        {"config",
         {{"seed", seed},
          {"shotsPerLink", shots},
          {"scenario", {{"d", d}, {"N", N}, {"variant", variantName}}}}},
        {"perLink", perLink},
        {"closing",
         {{"estimate", report.closing.estimate},
          {"stderr", report.closing.stderror}}},
        {"lhsEstimate", report.lhsEstimate},
        {"rhsEstimate", report.rhsEstimate},
        {"marginEstimate", report.marginEstimate},
        {"marginStderr", report.marginStderr},
    };
    OutputTarget out(outPath);
    out.stream() << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification engine for geometric chained Bell inequalities"};
    app.require_subcommand(1);

    std::vector<int> dims;
    std::vector<int> Ns{2, 4, 8, 16, 32};
    std::vector<int> zenoNs{2, 4, 8, 16, 32};
    std::vector<double> gammas{1.0, 2.0, 4.0, 8.0, 16.0};
    std::string variant = "standard";
    std::string outPath;
    int d = 3;
    int n = 2;
    int N = 4;
    int nMax = 16;
    std::uint64_t seed = 0;
    std::uint64_t shots = 1'000'000;

    CLI::App* scan = app.add_subcommand("scan", "chain reports over a (d, N) grid");
    scan->add_option("--dims", dims, "dimensions to scan");
    scan->add_option("--Ns", Ns, "even setting counts N = 2n");
    scan->add_option("--variant", variant, "standard|extended");
    scan->add_option("--out", outPath, "output CSV path (default stdout)");

    CLI::App* checkLhv =
        app.add_subcommand("check-lhv", "exhaustive deterministic-strategy bound");
    checkLhv->add_option("--d", d, "local dimension");
    checkLhv->add_option("--n", n, "half-chain count");
    checkLhv->add_option("--variant", variant, "standard|extended");
    checkLhv->add_option("--out", outPath, "JSON certificate path");

    CLI::App* zeno = app.add_subcommand("zeno", "extended-chain trace over n");
    zeno->add_option("--d", d, "local dimension");
    zeno->add_option("--n-list", zenoNs, "half-chain counts");
    zeno->add_option("--out", outPath, "output CSV path (default stdout)");

    CLI::App* sector =
        app.add_subcommand("sector", "qubit-sector margins over gamma and n");
    sector->add_option("--gammas", gammas, "angular-window parameters");
    sector->add_option("--n-max", nMax, "largest half-chain count");
    sector->add_option("--out", outPath, "output CSV path (default stdout)");

    CLI::App* sample =
        app.add_subcommand("sample", "seeded finite-statistics estimate");
    sample->add_option("--d", d, "local dimension");
    sample->add_option("--N", N, "even setting count");
    sample->add_option("--shots", shots, "shots per link")
        ->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "master seed");
    sample->add_option("--variant", variant, "standard|extended");
    sample->add_option("--out", outPath, "JSON report path (default stdout)");

    std::string configPath;
    for (CLI::App* sub : {scan, checkLhv, zeno, sector, sample})
        sub->add_option("--config", configPath,
                        "key=value config file; flags take precedence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (CLI::App* sub : {scan, checkLhv, zeno, sector, sample})
            if (sub->parsed()) applyConfig(sub, configPath);
        if (scan->parsed()) return cmdScan(dims, Ns, variant, outPath);
        if (checkLhv->parsed()) return cmdCheckLhv(d, n, variant, outPath);
        if (zeno->parsed()) return cmdZeno(d, zenoNs, outPath);
        if (sector->parsed()) return cmdSector(gammas, nMax, outPath);
        if (sample->parsed())
            return cmdSample(d, N, shots, seed, variant, outPath);
    } catch (const chainbell::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
