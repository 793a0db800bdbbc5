// Command-line driver: tabulation, single-field traces and family sweeps.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cubicmahler/families.hpp"
#include "cubicmahler/numerics/arith.hpp"
#include "cubicmahler/report_io.hpp"

namespace cm = cubicmahler;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCertification = 3;
constexpr const char* kCeilingEnv = "CUBICMAHLER_PRECISION_CEILING";

class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes to path.tmp and renames on commit; the temporary is removed if the
// run fails before that.
class OutputFile {
public:
    explicit OutputFile(std::string path) : path_(std::move(path)), tmp_(path_ + ".tmp")
    {
        out_.open(tmp_);
        if (!out_) throw std::runtime_error("cannot write " + tmp_);
    }
    ~OutputFile()
    {
        if (!committed_) {
            out_.close();
            std::remove(tmp_.c_str());
        }
    }
    std::ostream& stream() { return out_; }
    void commit()
    {
        out_.close();
        if (!out_) throw std::runtime_error("error writing " + tmp_);
        fs::rename(tmp_, path_);
        committed_ = true;
    }

private:
    std::string path_;
    std::string tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

std::string dec(const cm::numerics::Interval& x, int digits = 15)
{
    return cm::report_io::to_decimal(x.midpoint().to_rational(), digits);
}

std::string dec(const cm::numerics::CertifiedReal& x, int digits = 15)
{
    return dec(refine(x, 128).enclosure(), digits);
}

long default_ceiling()
{
    const char* env = std::getenv(kCeilingEnv);
    if (env == nullptr || *env == '\0') return cm::lattice::LllConfig{}.precision_ceiling;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 64) throw InvalidInput(std::string(kCeilingEnv) + " must be an integer >= 64");
    return v;
}

struct LllOptions {
    std::string mode = "exact";
    long scale_digits = 10;
    long ceiling = 0;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--lll", mode, "LLL arithmetic")->check(CLI::IsMember({"exact", "scaled"}));
        cmd->add_option("--scale-digits", scale_digits, "digits M of the scaled-integer mode")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--precision-ceiling", ceiling,
                        std::string("interval precision ceiling in bits (default from ") + kCeilingEnv + ")");
    }

    cm::lattice::LllConfig config() const
    {
        cm::lattice::LllConfig c;
        c.mode = mode == "scaled" ? cm::lattice::LllMode::ScaledInt : cm::lattice::LllMode::ExactRational;
        c.scale_digits = scale_digits;
        c.precision_ceiling = ceiling > 0 ? ceiling : default_ceiling();
        if (c.precision_ceiling < 64) throw InvalidInput("--precision-ceiling must be at least 64");
        return c;
    }
};

// ---- tabulate

struct TabulateArgs {
    long max_abs_disc = 0;
    std::string signature = "all";
    LllOptions lll;
    std::string format = "csv";
    unsigned jobs = 1;
    std::string output;
    bool plot_data = false;
    std::string plot_prefix;
};

int cmd_tabulate(const TabulateArgs& a)
{
    cm::search::TabulateOptions opt;
    opt.search.lll = a.lll.config();
    opt.jobs = a.jobs;
    if (a.signature == "totally_real") opt.signature = cm::search::SignatureFilter::TotallyReal;
    if (a.signature == "complex") opt.signature = cm::search::SignatureFilter::Complex;

    std::optional<OutputFile> file;
    if (!a.output.empty()) file.emplace(a.output);
    const auto reports = cm::search::tabulate(cm::BigInt(a.max_abs_disc), opt);
    const auto rows = cm::report_io::make_rows(reports);
    std::ostream& out = file ? file->stream() : std::cout;
    if (a.format == "json")
        cm::report_io::write_json(out, rows);
    else
        cm::report_io::write_csv(out, rows);

    if (a.plot_data) {
        std::string prefix = a.plot_prefix;
        if (prefix.empty()) prefix = a.output.empty() ? "cubic_mahler" : (fs::path(a.output).parent_path() / fs::path(a.output).stem()).string();
        std::vector<std::string> written;
        try {
            written = cm::report_io::write_plot_data(prefix, reports);
        } catch (...) {
            for (const char* s : {"_measure.dat", "_measure_d14.dat", "_measure_d12.dat"})
                std::remove((prefix + s).c_str());
            throw;
        }
        for (const auto& p : written) std::cerr << "wrote " << p << '\n';
    }
    if (file) file->commit();
    return 0;
}

// ---- field

std::string vec(const cm::Vector3<cm::BigInt>& v)
{
    std::ostringstream os;
    os << '(' << v(0) << ", " << v(1) << ", " << v(2) << ')';
    return os.str();
}

int cmd_field(const std::vector<long>& coeffs, const LllOptions& lll)
{
    if (coeffs.size() != 4) throw InvalidInput("field expects four coefficients c3 c2 c1 c0");
    const cm::CubicPolynomial f{cm::BigInt(coeffs[0]), cm::BigInt(coeffs[1]), cm::BigInt(coeffs[2]),
                                cm::BigInt(coeffs[3])};
    if (!f.is_monic()) throw InvalidInput(f.to_string() + " is not monic");
    if (!f.is_irreducible()) throw InvalidInput(f.to_string() + " is reducible: " + cm::describe_factorization(f));

    const cm::CubicField K = cm::fieldgen::field_discriminant(f);
    cm::search::SearchOptions opt;
    opt.lll = lll.config();
    const auto rep = cm::search::minimal_mahler(K, opt);
    const auto& L = rep.lattice;
    std::ostream& o = std::cout;

    o << "polynomial        " << f.to_string() << '\n';
    o << "poly discriminant " << f.discriminant() << '\n';
    o << "field discriminant " << K.discriminant << "  (index " << K.index << ")\n";
    o << "signature         (" << K.r1 << ", " << K.r2 << ")" << (K.is_cyclic ? "  cyclic" : "") << '\n';
    o << "canonical key     " << cm::fieldgen::canonical_key(K).polynomial().to_string() << '\n';
    o << "integral basis (power-basis coordinates)\n";
    for (int i = 0; i < 3; ++i)
        o << "  e" << i << " = (" << K.basis(i, 0).get_str() << ", " << K.basis(i, 1).get_str() << ", "
          << K.basis(i, 2).get_str() << ")\n";
    o << "LLL mode          " << (L.basis.mode == cm::lattice::LllMode::ScaledInt ? "scaled" : "exact");
    if (L.basis.mode == cm::lattice::LllMode::ScaledInt) o << " (M = " << L.basis.scale_digits << ")";
    o << ", " << L.bits << " bits, Lovasz " << (L.lovasz_certified ? "certified" : "not certified") << '\n';
    o << "reduced basis (integral coordinates; Minkowski vector)\n";
    for (int i = 0; i < 3; ++i) {
        o << "  v" << i + 1 << " = " << vec(L.basis.transform.row(i).transpose()) << "  [";
        for (int j = 0; j < 3; ++j) o << (j ? ", " : "") << dec(L.basis.vectors(i, j));
        o << "]\n";
    }
    o << "Gram-Schmidt squared lengths\n";
    for (int i = 0; i < 3; ++i) o << "  |v" << i + 1 << "*|^2 = " << dec(L.gs.norm2[i]) << '\n';
    o << "  max |mu| <= " << cm::report_io::to_decimal(L.mu_bound.to_rational(), 6) << '\n';
    o << "seed              " << rep.seed.char_poly.to_string() << "  M = " << dec(rep.seed.measure) << '\n';
    o << "box               |a| <= " << rep.box.a_max << ", |b| <= " << rep.box.b_max << ", |c| <= " << rep.box.c_max
      << "  (" << cm::lattice::box_size(rep.box) << " points)\n";
    o << "candidates        " << rep.candidates_examined << " examined, " << rep.measures_computed
      << " measures computed\n";
    o << "witness           " << vec(rep.witness.coords) << " (integral), " << vec(rep.witness_lll) << " (reduced)\n";
    o << "minimal polynomial " << rep.witness.char_poly.to_string() << '\n';
    const auto row = cm::report_io::make_row(rep);
    o << "M(O_K)            " << row.measure << "  (width " << row.measure_width << ")\n";
    o << "bound checks      lower " << (rep.bound_checks.silverman ? "ok" : "FAIL") << ", upper "
      << (rep.bound_checks.upper ? "ok" : "FAIL") << '\n';
    return 0;
}

// ---- family

std::pair<long, long> parse_range(const std::string& s)
{
    const auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        if (lo > hi) throw InvalidInput("empty range " + s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InvalidInput("range must look like a..b, got '" + s + "'");
    }
}

const char* roots_key(cm::families::Family f)
{
    using T = cm::families::Thresholds;
    switch (f) {
    case cm::families::Family::Simplest:
        return T::kSimplestRoots;
    case cm::families::Family::G:
        return T::kGRoots;
    case cm::families::Family::H:
        return T::kHRoots;
    case cm::families::Family::Kummer:
        break;
    }
    return nullptr;
}

bool kummer_parameter(long p)
{
    return p >= 2 && cm::numerics::is_prime(cm::BigInt(p)) && p % 9 != 1 && p % 9 != 8;
}

cm::families::Thresholds load_thresholds(const std::string& path, bool explicit_path)
{
    if (!explicit_path && !fs::exists(path)) {
        std::cerr << "note: no thresholds file at " << path << "; nothing is asserted\n";
        return {};
    }
    try {
        return cm::families::Thresholds::load(path);
    } catch (const std::runtime_error& e) {
        throw InvalidInput(e.what());
    }
}

int cmd_family(const std::string& tag, const std::string& range, const std::string& thresholds_path,
               bool explicit_thresholds, const LllOptions& lll)
{
    using namespace cm::families;
    const auto family = parse_family(tag);
    if (!family) throw InvalidInput("unknown family '" + tag + "' (simplest, g, h, kummer)");
    const auto [lo, hi] = parse_range(range);
    if (*family != Family::Kummer) {
        try {
            make_instance(*family, cm::BigInt(lo));
        } catch (const std::invalid_argument& e) {
            throw InvalidInput(e.what());
        }
    }
    const Thresholds thresholds = load_thresholds(thresholds_path, explicit_thresholds);
    cm::search::SearchOptions opt;
    opt.lll = lll.config();

    long asserted = 0, failed = 0;
    std::ostream& o = std::cout;
    o << "param\teligible\tprime\tcondition\tpredicted_disc\tfield_disc\tM\troots\tchecks\n";
    for (long n = lo; n <= hi; ++n) {
        if (*family == Family::Kummer && !kummer_parameter(n)) continue;
        const FamilyInstance inst = make_instance(*family, cm::BigInt(n));
        const auto rep = cm::search::minimal_mahler(inst.field, opt);
        const RootIntervalCheck rc = verify_root_intervals(inst);
        const char* rk = roots_key(*family);
        const auto rt = rk ? thresholds.get(rk) : std::optional<cm::BigInt>(cm::BigInt(0));
        const bool roots_asserted = rc.applicable && rt && n >= *rt;

        o << n << '\t' << (inst.eligible ? "yes" : "no") << '\t' << (inst.parameter_prime ? "yes" : "no") << '\t';
        switch (*family) {
        case Family::Simplest:
            o << (inst.field.discriminant == inst.predicted_poly_disc ? "disc=pred" : "disc!=pred");
            break;
        case Family::G:
        case Family::H:
            o << (inst.squarefree_condition ? "squarefree" : "not_squarefree");
            break;
        case Family::Kummer:
            o << "k=" << inst.k;
            break;
        }
        o << '\t' << inst.predicted_poly_disc << '\t' << inst.field.discriminant << '\t'
          << dec(rep.minimal_measure(), 12) << '\t';
        if (!rc.applicable)
            o << "n/a";
        else
            o << (rc.holds ? "pass" : "FAIL") << (roots_asserted ? "" : "(info)");
        if (roots_asserted) {
            ++asserted;
            if (!rc.holds) ++failed;
        }
        o << '\t';
        bool first = true;
        for (const auto& v : verify_theorem_bounds(inst, rep, thresholds)) {
            o << (first ? "" : "; ") << v.name << ": " << (v.holds ? "pass" : "FAIL") << (v.asserted ? "" : "(info)");
            first = false;
            if (v.asserted) {
                ++asserted;
                if (!v.holds) ++failed;
            }
        }
        o << '\n';
        for (const auto& f : rc.failures) o << "#   " << n << ": " << f << '\n';
    }
    o << "# asserted checks: " << asserted - failed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : kExitFailure;
}

// ---- thresholds

int cmd_thresholds(long max_param, const std::string& output, const LllOptions& lll)
{
    using namespace cm::families;
    cm::search::SearchOptions opt;
    opt.lll = lll.config();
    Thresholds t;
    std::ostringstream notes;
    const auto record = [&](const char* key, std::optional<cm::BigInt> v, long lo) {
        if (v)
            t.set(key, *v);
        else
            notes << "# " << key << ": no stable passing parameter in [" << lo << ", " << max_param << "]\n";
    };
    for (Family f : {Family::Simplest, Family::G, Family::H, Family::Kummer}) {
        const long lo = f == Family::Simplest ? 0 : (f == Family::G ? 3 : (f == Family::H ? 1 : 2));
        std::map<long, FamilyInstance> inst;
        std::map<long, std::vector<BoundVerdict>> verdicts;
        const auto valid = [&](long n) { return f != Family::Kummer || kummer_parameter(n); };
        for (long n = lo; n <= max_param; ++n) {
            if (!valid(n)) continue;
            inst[n] = make_instance(f, cm::BigInt(n));
            Thresholds all;
            for (const char* k : {Thresholds::kSimplestBound, Thresholds::kGBound, Thresholds::kHBound,
                                  Thresholds::kKummerUpper})
                all.set(k, 0);
            verdicts[n] = verify_theorem_bounds(inst[n], cm::search::minimal_mahler(inst[n].field, opt), all);
        }
        const auto eligible = [&](long n) { return valid(n) && inst.at(n).eligible; };
        const auto verdict = [&](long n, const std::string& prefix) {
            for (const auto& v : verdicts.at(n))
                if (v.name.rfind(prefix, 0) == 0) return v.holds;
            return false;
        };
        if (const char* rk = roots_key(f)) {
            record(rk,
                   first_stable_parameter(
                       lo, max_param, [&](long n) { return valid(n) && verify_root_intervals(inst.at(n)).applicable; },
                       [&](long n) { return verify_root_intervals(inst.at(n)).holds; }),
                   lo);
        }
        switch (f) {
        case Family::Simplest:
            record(Thresholds::kSimplestBound,
                   first_stable_parameter(lo, max_param, eligible, [&](long n) { return verdict(n, "M < 2^(1/2)"); }),
                   lo);
            break;
        case Family::G:
            record(Thresholds::kGBound,
                   first_stable_parameter(lo, max_param, eligible, [&](long n) { return verdict(n, "M < |D|"); }), lo);
            break;
        case Family::H:
            record(Thresholds::kHBound,
                   first_stable_parameter(lo, max_param, eligible, [&](long n) { return verdict(n, "M < 2^(-1/2)"); }),
                   lo);
            break;
        case Family::Kummer:
            record(Thresholds::kKummerUpper,
                   first_stable_parameter(lo, max_param, eligible, [&](long n) { return verdict(n, "M(theta - k)"); }),
                   lo);
            break;
        }
    }
    std::optional<OutputFile> file;
    if (!output.empty()) file.emplace(output);
    std::ostream& o = file ? file->stream() : std::cout;
    o << "# First parameter from which each claim held for every tested parameter\n"
      << "# up to " << max_param << ". Regenerate with: cubicmahler thresholds --max " << max_param << "\n";
    o << notes.str();
    t.write(o);
    if (file) file->commit();
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal Mahler measures of cubic number fields"};
    app.require_subcommand(1);

    TabulateArgs tab;
    auto* tcmd = app.add_subcommand("tabulate", "M(O_K) for every cubic field with |D_K| <= N");
    tcmd->add_option("--max-abs-disc", tab.max_abs_disc, "bound N on |D_K|")->required()->check(CLI::PositiveNumber);
    tcmd->add_option("--signature", tab.signature, "field signature filter")
        ->check(CLI::IsMember({"all", "totally_real", "complex"}));
    tab.lll.add_to(tcmd);
    tcmd->add_option("--format", tab.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    tcmd->add_option("--jobs", tab.jobs, "worker threads")->check(CLI::PositiveNumber);
    tcmd->add_option("--output", tab.output, "output file (default stdout)");
    tcmd->add_flag("--plot-data", tab.plot_data, "also write the three plot series");
    tcmd->add_option("--plot-prefix", tab.plot_prefix, "path prefix of the plot series files");

    std::vector<long> coeffs;
    LllOptions field_lll;
    auto* fcmd = app.add_subcommand("field", "full search trace for one monic cubic");
    fcmd->add_option("coefficients", coeffs, "c3 c2 c1 c0")->required()->expected(4);
    field_lll.add_to(fcmd);

    std::string tag, range;
    std::string thresholds_path = CUBICMAHLER_DEFAULT_THRESHOLDS;
    LllOptions fam_lll;
    auto* mcmd = app.add_subcommand("family", "verify a parametric family over a..b");
    mcmd->add_option("family", tag, "simplest, g, h or kummer")->required();
    mcmd->add_option("range", range, "parameter range a..b")->required();
    auto* thr_opt = mcmd->add_option("--thresholds", thresholds_path, "recorded thresholds file");
    fam_lll.add_to(mcmd);

    long max_param = 200;
    std::string thr_output;
    LllOptions thr_lll;
    auto* ccmd = app.add_subcommand("thresholds", "measure the family thresholds and print them");
    ccmd->add_option("--max", max_param, "largest parameter swept")->check(CLI::Range(3L, 100000L));
    ccmd->add_option("--output", thr_output, "output file (default stdout)");
    thr_lll.add_to(ccmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (*tcmd) return cmd_tabulate(tab);
        if (*fcmd) return cmd_field(coeffs, field_lll);
        if (*mcmd) return cmd_family(tag, range, thresholds_path, thr_opt->count() > 0, fam_lll);
        if (*ccmd) return cmd_thresholds(max_param, thr_output, thr_lll);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const cm::search::CertificationError& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return kExitCertification;
    } catch (const cm::lattice::UndecidedError& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return kExitCertification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
