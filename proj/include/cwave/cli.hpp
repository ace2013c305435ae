#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cwave/gg_method.hpp"
#include "cwave/reduction.hpp"
#include "cwave/verify.hpp"
#include "cwave/wef_method.hpp"

namespace cwave::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kInadmissible = 2,
    kVerificationFailed = 3,
};

/// Malformed configuration or command line (exit 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { Physical, Reduced };
enum class Method { GG, WEF };

struct JobConfig {
    Mode mode = Mode::Physical;
    PhysicalSystem phys;       // physical mode
    double A = 0.0, B = 0.0, C = 0.0, gamma = 0.0;  // reduced mode
    double c = 0.0;
    std::optional<Method> method;
    GGCase gg_case = GGCase::Case1;
    int branch = 1;
    double C1 = 0.0;
    double C2 = 1.0;
    int zeta_branch = 1;
    WEFForm form = WEFForm::PForm;
    GridSpec grid{-10.0, 10.0, 2001, 0.0, 5.0, 51, kDefaultPoleExclusionRadius};
};

/// Strict parse: unknown keys, missing keys and wrong types are ConfigError.
JobConfig parse_config(const nlohmann::json& doc);
JobConfig load_config(const std::string& path);

/// Cubic ODE for the job (reduce() in physical mode, make_cubic() otherwise).
CubicODE job_cubic(const JobConfig& cfg);
double job_gamma(const JobConfig& cfg);

nlohmann::json cmd_reduce(const JobConfig& cfg);

struct SolveOutput {
    nlohmann::json report;
    std::string csv;
};
SolveOutput cmd_solve(const JobConfig& cfg);

struct VerifyOutput {
    nlohmann::json report;
    bool pass = false;
};
VerifyOutput cmd_verify(const JobConfig& cfg, double tolerance = kDefaultResidualTolerance);

/// Writes fig1.csv and fig2.csv into outdir; returns the provenance document.
nlohmann::json cmd_figures(const std::string& outdir);

/// CSV with header x,t,u,v, t-major rows, %.17g numbers, LF endings. Points
/// where u throws or lies within the exclusion radius of a pole get empty u, v.
std::string profile_csv(const GridSpec& grid, const Profile2D& u, const Profile2D& v,
                        const std::vector<double>& poles, double c);

/// Entry point: subcommands reduce, solve, verify, figures.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cwave::cli
