#include "slicess/chart.hpp"
#include "slicess/engine.hpp"
#include "slicess/ops.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace slicess;

namespace {

constexpr int exit_input = 1, exit_verify = 2;

struct VerifyFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// preset names get enough weights for the request; files keep their own truncation
FieldPresentation resolve_field(const std::string& arg, int qmax)
{
    if (std::filesystem::is_regular_file(arg))
        return load_field_file(arg);
    return preset_by_name(arg, std::max(12, qmax + 1));
}

void write_out(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

int run_field(const std::string& action, const std::string& target)
{
    if (action == "list") {
        for (const auto& n : preset_names())
            std::cout << n << "\n";
        return 0;
    }
    if (target.empty())
        throw InputError("field " + action + " needs a preset name or file");
    const FieldPresentation f = resolve_field(target, 0);
    if (action == "show") {
        std::cout << emit_field(f).dump(2) << "\n";
        return 0;
    }
    validate_field(f);
    std::cout << f.name << ": valid (truncation " << f.truncation << ")\n";
    return 0;
}

int run_verify(const std::string& what, const std::string& spectrum)
{
    if (what == "adem") {
        bool ok = true;
        for (const auto& c : verify_adem()) {
            std::cout << (c.ok ? "ok   " : "FAIL ") << c.relation << "\n";
            std::cout << "     " << c.lhs << " => " << c.normal << "   (expected " << c.expected << ")\n";
            for (const auto& t : c.trace)
                std::cout << "       " << t << "\n";
            ok = ok && c.ok;
        }
        if (!ok)
            throw VerifyFailed("Adem verification failed");
        return 0;
    }
    if (spectrum.empty())
        throw InputError("verify d1sq needs --spectrum");
    const Spectrum e = parse_spectrum(spectrum);
    const D1SquareReport rep = verify_d1_squared(e);
    std::size_t nonzero = 0;
    for (const auto& en : rep.entries) {
        const bool zero = en.normal == "0";
        nonzero += zero ? 0 : 1;
        std::cout << (zero ? "ok   " : "FAIL ") << "q=" << en.q << " " << en.src_offset << "->" << en.tgt_offset << ": "
                  << en.composite << " => " << en.normal << "\n";
        for (const auto& t : en.trace)
            std::cout << "       " << t << "\n";
    }
    for (const auto& s : rep.span_failures)
        std::cout << "span FAIL " << s << "\n";
    std::cout << spectrum_name(e) << ": " << rep.entries.size() << " composites, " << nonzero << " nonzero, "
              << rep.span_failures.size() << " outside tabulated span\n";
    if (!rep.ok())
        throw VerifyFailed("d1∘d1 does not vanish for " + spectrum_name(e));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"slice spectral sequence calculator"};
    app.require_subcommand(1);

    auto* field_cmd = app.add_subcommand("field", "list, show or validate field presentations");
    std::string field_action, field_target;
    field_cmd->add_option("action", field_action)->required()->check(CLI::IsMember({"list", "show", "validate"}));
    field_cmd->add_option("target", field_target, "preset name or JSON file");

    auto* page_cmd = app.add_subcommand("page", "E1/E2/E-infinity page of a spectrum");
    std::string spectrum = "KT", field_arg, page = "1", format = "ascii", out_path;
    int pmin = 0, pmax = 8, qmin = 0, qmax = 4;
    page_cmd->add_option("--spectrum", spectrum)->check(CLI::IsMember({"KT", "KQ", "KGL", "KGL2", "KGL/2", "KGLhC2"}));
    page_cmd->add_option("--field", field_arg)->required();
    page_cmd->add_option("--r", page)->check(CLI::IsMember({"1", "2", "inf"}));
    page_cmd->add_option("--pmin", pmin);
    page_cmd->add_option("--pmax", pmax);
    page_cmd->add_option("--qmin", qmin);
    page_cmd->add_option("--qmax", qmax);
    page_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "ascii", "svg"}));
    page_cmd->add_option("-o,--out", out_path);

    auto* witt_cmd = app.add_subcommand("grwitt", "graded Witt ring I^q/I^{q+1}");
    witt_cmd->add_option("--field", field_arg)->required();
    int witt_qmax = 4;
    witt_cmd->add_option("--qmax", witt_qmax);

    auto* ko_cmd = app.add_subcommand("ko", "KO_0 .. KO_3 from the KQ columns");
    ko_cmd->add_option("--field", field_arg)->required();
    int ko_qmax = -1;
    ko_cmd->add_option("--qmax", ko_qmax);

    auto* kt_cmd = app.add_subcommand("ktfilt", "slice filtration groups of KT");
    kt_cmd->add_option("--field", field_arg)->required();
    int kt_p = 0, kt_q = 0;
    kt_cmd->add_option("--p", kt_p)->required();
    kt_cmd->add_option("--q", kt_q)->required();

    auto* verify_cmd = app.add_subcommand("verify", "symbolic checks");
    std::string verify_what, verify_spectrum;
    verify_cmd->add_option("what", verify_what)->required()->check(CLI::IsMember({"adem", "d1sq"}));
    verify_cmd->add_option("--spectrum", verify_spectrum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input;
    }

    try {
        if (*field_cmd)
            return run_field(field_action, field_target);
        if (*verify_cmd)
            return run_verify(verify_what, verify_spectrum);
        if (*page_cmd) {
            const Spectrum e = parse_spectrum(spectrum);
            const FieldPresentation f = resolve_field(field_arg, qmax + 1);
            const Window w{pmin, pmax, qmin, qmax};
            const PageRegion reg = page == "1" ? d1_region(e, f, w) : e2_region(e, f, w, page);
            std::string text;
            if (format == "json")
                text = region_json(reg).dump(2) + "\n";
            else if (format == "svg")
                text = render_svg(reg);
            else
                text = render_ascii(reg);
            write_out(text, out_path);
            return 0;
        }
        if (*witt_cmd) {
            const FieldPresentation f = resolve_field(field_arg, witt_qmax);
            const WittReport rep = graded_witt(f, witt_qmax);
            std::cout << "graded Witt ring of " << rep.field << "\n";
            for (std::size_t q = 0; q < rep.dims.size(); ++q) {
                std::cout << "  I^" << q << "/I^" << q + 1 << " = F2^" << rep.dims[q];
                if (!rep.labels[q].empty()) {
                    std::cout << "  {";
                    for (std::size_t i = 0; i < rep.labels[q].size(); ++i)
                        std::cout << (i ? ", " : "") << rep.labels[q][i];
                    std::cout << "}";
                }
                std::cout << "\n";
            }
            if (!rep.note.empty())
                std::cout << rep.note << "\n";
            return 0;
        }
        if (*ko_cmd) {
            const FieldPresentation f = resolve_field(field_arg, std::max(ko_qmax, 5) + 1);
            for (const auto& line : ko_low_degree(f, ko_qmax).lines())
                std::cout << line << "\n";
            return 0;
        }
        if (*kt_cmd) {
            const FieldPresentation f = resolve_field(field_arg, kt_q);
            const KTFiltrationReport rep = kt_filtration_groups(f, kt_p, kt_q);
            std::cout << "p=" << rep.p << " q=" << rep.q << ": " << rep.str() << "  (dim " << rep.dim << ")\n";
            return 0;
        }
    } catch (const VerifyFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return exit_verify;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return exit_verify;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const OpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return 0;
}
