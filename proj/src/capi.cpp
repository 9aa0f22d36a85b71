#include "qalg/qalg.h"

#include <cstring>
#include <string>

#include "qalg/constructions.hpp"
#include "qalg/gbasis.hpp"
#include "qalg/report.hpp"

struct qalg_algebra {
    qalg::Presentation p;
};

namespace {

thread_local std::string last_error;

qalg_status fail(qalg_status s, const std::string& msg)
{
    last_error = msg;
    return s;
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qalg::Format to_format(qalg_format f)
{
    switch (f) {
    case QALG_JSON:
        return qalg::Format::Json;
    case QALG_TEXT:
        return qalg::Format::Text;
    case QALG_CSV:
        return qalg::Format::Csv;
    }
    throw std::invalid_argument("unknown format");
}

void apply_field(qalg::Presentation& p, const char* field)
{
    if (field && *field)
        p.field = qalg::FieldSpec::parse(field);
}

// Runs fn, mapping exceptions to status codes.
template <class Fn>
qalg_status guard(Fn&& fn)
{
    last_error.clear();
    try {
        return fn();
    } catch (const qalg::ParseError& e) {
        return fail(QALG_PARSE, e.what());
    } catch (const qalg::IncompleteBasis& e) {
        return fail(QALG_INCOMPLETE, e.what());
    } catch (const qalg::FieldError& e) {
        return fail(QALG_USAGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QALG_USAGE, e.what());
    } catch (const std::out_of_range& e) {
        return fail(QALG_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(QALG_INTERNAL, e.what());
    }
}

qalg_status emit(const nlohmann::json& report, qalg_format fmt, char** out)
{
    if (!out)
        return fail(QALG_USAGE, "null output pointer");
    *out = dup(qalg::render(report, to_format(fmt)));
    if (!*out)
        return fail(QALG_INTERNAL, "out of memory");
    if (!qalg::report_passes(report))
        return fail(QALG_CLAIM_FAILED, "some claim failed");
    return QALG_OK;
}

qalg::Presentation family(const std::string& f, int m)
{
    if (f == "C" || f == "c")
        return qalg::build_C(m);
    if (f == "B" || f == "b")
        return qalg::build_B(qalg::BVariant::Full);
    if (f == "B11" || f == "b11")
        return qalg::build_B(qalg::BVariant::Prose);
    throw std::invalid_argument("unknown family '" + f + "' (C, B, B11)");
}

}  // namespace

extern "C" {

const char* qalg_version(void) { return qalg::kVersion; }

const char* qalg_last_error(void) { return last_error.c_str(); }

void qalg_string_free(char* s) { std::free(s); }

qalg_status qalg_algebra_parse(const char* text, const char* field, qalg_algebra** out)
{
    return guard([&] {
        if (!text || !out)
            return fail(QALG_USAGE, "null argument");
        auto a = std::make_unique<qalg_algebra>();
        a->p = qalg::parse_presentation(text);
        apply_field(a->p, field);
        *out = a.release();
        return QALG_OK;
    });
}

qalg_status qalg_algebra_family(const char* fam, int m, const char* field, qalg_algebra** out)
{
    return guard([&] {
        if (!fam || !out)
            return fail(QALG_USAGE, "null argument");
        auto a = std::make_unique<qalg_algebra>();
        a->p = family(fam, m);
        apply_field(a->p, field);
        *out = a.release();
        return QALG_OK;
    });
}

qalg_status qalg_algebra_free(int n, const char* field, qalg_algebra** out)
{
    return guard([&] {
        if (!out || n < 1 || n > 255)
            return fail(QALG_USAGE, "need 1 <= n <= 255 generators");
        auto a = std::make_unique<qalg_algebra>();
        for (int i = 1; i <= n; ++i)
            a->p.add_generator("x" + std::to_string(i));
        apply_field(a->p, field);
        *out = a.release();
        return QALG_OK;
    });
}

void qalg_algebra_destroy(qalg_algebra* a) { delete a; }

size_t qalg_num_generators(const qalg_algebra* a) { return a ? a->p.num_generators() : 0; }

size_t qalg_num_relations(const qalg_algebra* a) { return a ? a->p.relations.size() : 0; }

qalg_status qalg_presentation_text(const qalg_algebra* a, char** out)
{
    return guard([&] {
        if (!a || !out)
            return fail(QALG_USAGE, "null argument");
        *out = dup(qalg::to_text(a->p));
        return QALG_OK;
    });
}

qalg_status qalg_gb(const qalg_algebra* a, int maxdeg, qalg_format fmt, char** out)
{
    return guard([&] {
        if (!a || !out)
            return fail(QALG_USAGE, "null argument");
        if (fmt == QALG_TEXT) {
            *out = dup(qalg::gb_basis_text(a->p, maxdeg));
            return QALG_OK;
        }
        return emit(qalg::gb_report(a->p, maxdeg), fmt, out);
    });
}

qalg_status qalg_hilbert(const qalg_algebra* a, int maxdeg, qalg_format fmt, char** out)
{
    return guard([&] {
        if (!a)
            return fail(QALG_USAGE, "null argument");
        return emit(qalg::hilbert_report(a->p, maxdeg), fmt, out);
    });
}

qalg_status qalg_hilbert_dims(const qalg_algebra* a, int maxdeg, long long* dims)
{
    return guard([&] {
        if (!a || !dims)
            return fail(QALG_USAGE, "null argument");
        auto r = qalg::hilbert_report(a->p, maxdeg);
        int d = 0;
        for (const auto& x : r["dims"])
            dims[d++] = x.get<long long>();
        return QALG_OK;
    });
}

qalg_status qalg_resolve(const qalg_algebra* a, int imax, int jmax, qalg_format fmt, char** out)
{
    return guard([&] {
        if (!a)
            return fail(QALG_USAGE, "null argument");
        return emit(qalg::resolve_report(a->p, imax, jmax), fmt, out);
    });
}

qalg_status qalg_betti(const qalg_algebra* a, int imax, int jmax, long long* table)
{
    return guard([&] {
        if (!a || !table)
            return fail(QALG_USAGE, "null argument");
        auto b = qalg::betti_from_json(qalg::resolve_report(a->p, imax, jmax)["betti"]);
        for (int i = 0; i <= imax; ++i)
            for (int j = 0; j <= jmax; ++j)
                table[i * (jmax + 1) + j] = b.at(i, j);
        return QALG_OK;
    });
}

qalg_status qalg_verify_complex(const qalg_algebra* a, const char* maps_text, int jmax, int augmented,
                                qalg_format fmt, char** out)
{
    return guard([&] {
        if (!a || !maps_text)
            return fail(QALG_USAGE, "null argument");
        auto c = qalg::parse_complex(a->p, maps_text);
        return emit(qalg::verify_report(a->p, c, jmax, augmented != 0), fmt, out);
    });
}

qalg_status qalg_ext_gens(const qalg_algebra* a, int imax, int jmax, qalg_format fmt, char** out)
{
    return guard([&] {
        if (!a)
            return fail(QALG_USAGE, "null argument");
        return emit(qalg::ext_gens_report(a->p, imax, jmax), fmt, out);
    });
}

qalg_status qalg_make_complex(const char* fam, int m, char** out)
{
    return guard([&] {
        if (!fam || !out)
            return fail(QALG_USAGE, "null argument");
        std::string f = fam;
        qalg::Presentation p = family(f, m);
        qalg::ComplexSpec c = (f == "C" || f == "c") ? qalg::build_C_complex(p, m) : qalg::build_B_complex(p);
        *out = dup(qalg::complex_to_text(p, c));
        return QALG_OK;
    });
}

qalg_status qalg_paper_check(const int* ms, size_t n, int b_variant, const char* field, qalg_format fmt, char** out)
{
    return guard([&] {
        if (n && !ms)
            return fail(QALG_USAGE, "null argument");
        qalg::PaperCheckOptions o;
        o.ms.assign(ms, ms + n);
        o.b_variant = b_variant ? qalg::BVariant::Prose : qalg::BVariant::Full;
        if (field && *field)
            o.field = qalg::FieldSpec::parse(field);
        return emit(qalg::paper_check_report(o), fmt, out);
    });
}

}  // extern "C"
