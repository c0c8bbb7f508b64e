#include "cpdirac/cli.hpp"

#include "cpdirac/bounds.hpp"
#include "cpdirac/line_bundle.hpp"
#include "cpdirac/normal_bundle.hpp"
#include "cpdirac/render.hpp"
#include "cpdirac/verify.hpp"

#include <map>
#include <optional>

namespace cpdirac {

namespace {

struct Flags {
    std::map<std::string, std::string> values;

    Int required_int(const std::string& name) const {
        auto it = values.find(name);
        if (it == values.end())
            throw ValidationError("missing required flag --" + name);
        return parse(name, it->second);
    }

    std::optional<Int> optional_int(const std::string& name) const {
        auto it = values.find(name);
        if (it == values.end())
            return std::nullopt;
        return parse(name, it->second);
    }

    OutputFormat format() const {
        auto it = values.find("format");
        return it == values.end() ? OutputFormat::table : parse_format(it->second);
    }

private:
    static Int parse(const std::string& name, const std::string& text) {
        try {
            size_t pos = 0;
            const Int value = std::stoll(text, &pos);
            if (pos != text.size())
                throw ValidationError("--" + name + " expects an integer: got " + text);
            return value;
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception&) {
            throw ValidationError("--" + name + " expects an integer: got " + text);
        }
    }
};

const char* const known_flags[] = {"d", "n", "m", "max-eig", "max-l", "format"};

Flags parse_flags(const std::vector<std::string>& args, size_t start) {
    Flags flags;
    for (size_t i = start; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("--", 0) != 0)
            throw ValidationError("unexpected argument: " + arg);
        const std::string name = arg.substr(2);
        bool known = false;
        for (const char* f : known_flags)
            known = known || name == f;
        if (!known)
            throw ValidationError("unknown flag --" + name);
        if (i + 1 >= args.size())
            throw ValidationError("flag --" + name + " expects a value");
        flags.values[name] = args[++i];
    }
    return flags;
}

} // namespace

std::string usage() {
    return "usage: cpdirac <subcommand> [flags]\n"
           "\n"
           "subcommands:\n"
           "  spectrum line-bundle --d D --m M --max-eig E   squared Dirac spectrum of CP^d\n"
           "                                                 twisted by gamma_d^m, up to E\n"
           "  spectrum normal      --d D --n N --max-eig E   squared Dirac spectrum of CP^d in\n"
           "                                                 CP^n twisted by the normal spinor\n"
           "                                                 bundle, up to E\n"
           "  lowest               --d D --n N               lowest eigenvalue and per-family\n"
           "                                                 minima of the normal twist\n"
           "  decompose            --d D --n N               normal spinor bundle as a sum of\n"
           "                                                 tautological-bundle powers\n"
           "  bounds               --d D --n N               upper bound, Killing spinor count\n"
           "                                                 and Kirchberg-type lower bound\n"
           "  sharpness            --d D --n N               is the upper bound attained?\n"
           "  verify               --d D --n N --max-l L     cross-check closed-form\n"
           "                                                 multiplicities against the Weyl\n"
           "                                                 dimension formula\n"
           "\n"
           "common flags:\n"
           "  --format table|csv|json   output format (default table)\n";
}

RunResult run(const std::vector<std::string>& args) {
    try {
        if (args.empty())
            return {2, "", usage()};
        const std::string& command = args[0];

        if (command == "spectrum") {
            if (args.size() < 2)
                throw ValidationError("spectrum expects a mode: line-bundle or normal");
            const std::string& mode = args[1];
            const Flags flags = parse_flags(args, 2);
            if (mode == "line-bundle") {
                const Int d = flags.required_int("d");
                const Int m = flags.required_int("m");
                const Int cutoff = flags.required_int("max-eig");
                if (cutoff < 0)
                    throw ValidationError("max-eig must be >= 0");
                return {0, render_spectrum(enumerate_line_bundle(d, m, cutoff), flags.format()),
                        ""};
            }
            if (mode == "normal") {
                const EmbeddingParams params(flags.required_int("d"), flags.required_int("n"));
                const Int cutoff = flags.required_int("max-eig");
                if (cutoff < 0)
                    throw ValidationError("max-eig must be >= 0");
                return {0, render_spectrum(enumerate_normal(params, cutoff), flags.format()), ""};
            }
            throw ValidationError("unknown spectrum mode: " + mode);
        }

        const Flags flags = parse_flags(args, 1);
        if (command == "lowest") {
            const EmbeddingParams params(flags.required_int("d"), flags.required_int("n"));
            return {0,
                    render_lowest(params, lowest_eigenvalue(params), per_family_minima(params),
                                  flags.format()),
                    ""};
        }
        if (command == "decompose") {
            const EmbeddingParams params(flags.required_int("d"), flags.required_int("n"));
            return {0, render_decomposition(params, decompose_normal_spinor(params), flags.format()),
                    ""};
        }
        if (command == "bounds") {
            const EmbeddingParams params(flags.required_int("d"), flags.required_int("n"));
            return {0, render_bounds(make_bounds_report(params), flags.format()), ""};
        }
        if (command == "sharpness") {
            const EmbeddingParams params(flags.required_int("d"), flags.required_int("n"));
            return {0, render_sharpness(sharpness_report(params), flags.format()), ""};
        }
        if (command == "verify") {
            const EmbeddingParams params(flags.required_int("d"), flags.required_int("n"));
            const Int extra_l = flags.required_int("max-l");
            const VerifyReport report = verify_grid(params, extra_l);
            const std::string rendered = render_verify(params, extra_l, report, flags.format());
            if (report.mismatches != 0)
                return {1, rendered, "verify: mismatch at " + report.first_mismatch + "\n"};
            return {0, rendered, ""};
        }
        throw ValidationError("unknown subcommand: " + command);
    } catch (const ValidationError& e) {
        return {2, "", std::string(e.what()) + "\n\n" + usage()};
    } catch (const ConsistencyError& e) {
        return {1, "", std::string("internal consistency failure: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace cpdirac
