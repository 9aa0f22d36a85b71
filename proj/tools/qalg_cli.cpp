// qalg command-line front end. Everything goes through the C API in qalg.h.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qalg/qalg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaim = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::string input;
    std::string family;
    int m = 5;
    std::string field;
    std::string format;
    std::string out;
    std::string order = "deglex";
    std::string complex;
    int maxdeg = -1;
    int imax = -1;
    int jmax = -1;
    unsigned seed = 1;
    bool interior = false;
    std::vector<int> ms;
};

class Failure : public std::runtime_error {
public:
    Failure(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

int exit_code(qalg_status s)
{
    switch (s) {
    case QALG_OK:
        return kExitOk;
    case QALG_CLAIM_FAILED:
    case QALG_INTERNAL:
        return kExitClaim;
    default:
        return kExitUsage;
    }
}

void check(qalg_status s)
{
    if (s != QALG_OK && s != QALG_CLAIM_FAILED)
        throw Failure(exit_code(s), qalg_last_error());
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Failure(kExitUsage, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Failure(kExitUsage, "cannot write " + path);
    out << text;
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    qalg_string_free(s);
    return out;
}

const char* field_of(const Config& c) { return c.field.empty() ? nullptr : c.field.c_str(); }

qalg_format format_of(const Config& c, const char* fallback = "text")
{
    std::string f = c.format;
    if (f.empty())
        f = c.out.size() > 5 && c.out.substr(c.out.size() - 5) == ".json" ? "json" : fallback;
    if (f == "json")
        return QALG_JSON;
    if (f == "text")
        return QALG_TEXT;
    if (f == "csv")
        return QALG_CSV;
    throw Failure(kExitUsage, "unknown format " + f);
}

// The algebra named by --input or --family/--m.
struct Handle {
    qalg_algebra* a = nullptr;
    ~Handle() { qalg_algebra_destroy(a); }
};

void load(const Config& c, Handle& h)
{
    if (!c.input.empty() && !c.family.empty())
        throw Failure(kExitUsage, "give either --input or --family, not both");
    if (!c.input.empty())
        check(qalg_algebra_parse(read_file(c.input).c_str(), field_of(c), &h.a));
    else if (!c.family.empty())
        check(qalg_algebra_family(c.family.c_str(), c.m, field_of(c), &h.a));
    else
        throw Failure(kExitUsage, "an algebra is required: --input FILE or --family {C,B,B11}");
}

bool is_c(const Config& c) { return c.family == "C" || c.family == "c"; }

int default_jmax(const Config& c, int imax)
{
    if (is_c(c))
        return c.m + 3;
    if (!c.family.empty())
        return 8;
    return imax + 2;
}

int default_imax(const Config& c)
{
    if (is_c(c))
        return c.m + 1;
    if (!c.family.empty())
        return 5;
    return 4;
}

int finish(qalg_status s, const std::string& text, const Config& c)
{
    write_output(c.out, text);
    return exit_code(s);
}

int run_make_algebra(const Config& c)
{
    Handle h;
    load(c, h);
    char* s = nullptr;
    check(qalg_presentation_text(h.a, &s));
    return finish(QALG_OK, take(s), c);
}

int run_make_complex(const Config& c)
{
    if (c.family.empty())
        throw Failure(kExitUsage, "make-complex needs --family");
    char* s = nullptr;
    check(qalg_make_complex(c.family.c_str(), c.m, &s));
    return finish(QALG_OK, take(s), c);
}

int run_gb(const Config& c)
{
    if (c.order != "deglex")
        throw Failure(kExitUsage, "only --order deglex is supported");
    Handle h;
    load(c, h);
    int D = c.maxdeg >= 0 ? c.maxdeg : 6;
    qalg_format f = format_of(c);
    char* s = nullptr;
    check(qalg_gb(h.a, D, f, &s));
    std::string text = take(s);
    if (!c.out.empty() && c.out != "-" && f == QALG_TEXT) {
        char* side = nullptr;
        check(qalg_gb(h.a, D, QALG_JSON, &side));
        write_output(c.out + ".json", take(side));
    }
    return finish(QALG_OK, text, c);
}

int run_hilbert(const Config& c)
{
    Handle h;
    load(c, h);
    char* s = nullptr;
    qalg_status st = qalg_hilbert(h.a, c.maxdeg >= 0 ? c.maxdeg : 8, format_of(c), &s);
    check(st);
    return finish(st, take(s), c);
}

int run_resolve(const Config& c)
{
    Handle h;
    load(c, h);
    int I = c.imax >= 0 ? c.imax : default_imax(c);
    int J = c.jmax >= 0 ? c.jmax : (c.imax >= 0 && c.family.empty() ? I + 2 : std::max(default_jmax(c, I), I));
    char* s = nullptr;
    qalg_status st = qalg_resolve(h.a, I, J, format_of(c), &s);
    check(st);
    return finish(st, take(s), c);
}

int run_verify(const Config& c)
{
    Handle h;
    load(c, h);
    std::string maps;
    if (!c.complex.empty()) {
        maps = read_file(c.complex);
    } else if (!c.family.empty()) {
        char* s = nullptr;
        check(qalg_make_complex(c.family.c_str(), c.m, &s));
        maps = take(s);
    } else {
        throw Failure(kExitUsage, "verify needs --complex FILE (or a --family with a built-in complex)");
    }
    int J = c.jmax >= 0 ? c.jmax : default_jmax(c, default_imax(c));
    char* s = nullptr;
    qalg_status st = qalg_verify_complex(h.a, maps.c_str(), J, c.interior ? 0 : 1, format_of(c), &s);
    check(st);
    return finish(st, take(s), c);
}

int run_ext_gens(const Config& c)
{
    Handle h;
    load(c, h);
    int I = c.imax >= 0 ? c.imax : default_imax(c);
    int J = c.jmax >= 0 ? c.jmax : (c.imax >= 0 && c.family.empty() ? I + 2 : std::max(default_jmax(c, I), I));
    char* s = nullptr;
    qalg_status st = qalg_ext_gens(h.a, I, J, format_of(c), &s);
    check(st);
    return finish(st, take(s), c);
}

int run_paper_check(const Config& c)
{
    std::vector<int> ms = c.ms.empty() ? std::vector<int>{5, 6, 7} : c.ms;
    int variant = 0;
    if (c.family == "B11" || c.family == "b11")
        variant = 1;
    else if (!c.family.empty() && c.family != "B" && c.family != "b")
        throw Failure(kExitUsage, "paper-check --family selects the B variant: B or B11");
    char* s = nullptr;
    qalg_status st = qalg_paper_check(ms.data(), ms.size(), variant, field_of(c), format_of(c), &s);
    check(st);
    return finish(st, take(s), c);
}

}  // namespace

int main(int argc, char** argv)
{
    Config c;
    if (const char* f = std::getenv("QALG_FIELD"))
        c.field = f;

    CLI::App app{"graded noncommutative algebras, Groebner bases, resolutions and Ext", "qalg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("qalg ") + qalg_version());

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", c.input, "presentation file");
        sub->add_option("--family", c.family, "built-in family: C, B or B11");
        sub->add_option("--m", c.m, "parameter m of C(m), m >= 5");
        sub->add_option("--field", c.field, "p:<prime> or q (default from QALG_FIELD, else p:32003)");
        sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", c.out, "output file (default stdout)");
        sub->add_option("--seed", c.seed, "seed for randomized steps");
    };
    auto bounds = [&](CLI::App* sub) {
        sub->add_option("--imax", c.imax, "cohomological bound")->check(CLI::NonNegativeNumber);
        sub->add_option("--jmax", c.jmax, "internal-degree bound")->check(CLI::NonNegativeNumber);
    };

    auto* make_algebra = app.add_subcommand("make-algebra", "write a presentation");
    common(make_algebra);
    auto* make_complex = app.add_subcommand("make-complex", "write the built-in complex of a family");
    common(make_complex);
    auto* gb = app.add_subcommand("gb", "truncated Groebner basis");
    common(gb);
    gb->add_option("--maxdeg", c.maxdeg, "truncation degree")->check(CLI::NonNegativeNumber);
    gb->add_option("--order", c.order, "monomial order (deglex)");
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series");
    common(hilbert);
    hilbert->add_option("--maxdeg", c.maxdeg, "last degree")->check(CLI::NonNegativeNumber);
    auto* resolve = app.add_subcommand("resolve", "minimal resolution of k and its Betti table");
    common(resolve);
    bounds(resolve);
    auto* betti = app.add_subcommand("betti", "same as resolve");
    common(betti);
    bounds(betti);
    auto* verify = app.add_subcommand("verify", "check a complex: composites, exactness, minimality");
    common(verify);
    verify->add_option("--complex", c.complex, ".maps file");
    verify->add_option("--jmax", c.jmax, "internal-degree bound")->check(CLI::NonNegativeNumber);
    verify->add_flag("--interior", c.interior, "not a resolution of k: check interior positions only");
    auto* ext = app.add_subcommand("ext-gens", "degrees of algebra generators of Ext");
    common(ext);
    bounds(ext);
    auto* paper = app.add_subcommand("paper-check", "all checks for C(m) and B");
    common(paper);
    paper->add_option("--ms", c.ms, "values of m, comma separated (default 5,6,7)")->delimiter(',');

    try {
        // paper-check reads --m as a list; rewrite "--m x,y" for it
        std::vector<std::string> args(argv + 1, argv + argc);
        if (!args.empty() && args[0] == "paper-check") {
            for (auto& a : args) {
                if (a == "--m")
                    a = "--ms";
                else if (a.rfind("--m=", 0) == 0)
                    a = "--ms=" + a.substr(4);
            }
        }
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*make_algebra)
            return run_make_algebra(c);
        if (*make_complex)
            return run_make_complex(c);
        if (*gb)
            return run_gb(c);
        if (*hilbert)
            return run_hilbert(c);
        if (*resolve || *betti)
            return run_resolve(c);
        if (*verify)
            return run_verify(c);
        if (*ext)
            return run_ext_gens(c);
        if (*paper)
            return run_paper_check(c);
    } catch (const Failure& e) {
        std::cerr << "qalg: " << e.what() << "\n";
        return e.code();
    }
    return kExitUsage;
}
