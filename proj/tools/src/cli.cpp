#include <powerstruct/cli.hpp>
#include <powerstruct/json_io.hpp>

#include "random_cases.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace powerstruct::cli {

namespace {

using nlohmann::json;
namespace io = powerstruct::json;

/// Bad command-line input discovered after option parsing (exit 2).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Verification ran to completion and found a mismatch (exit 1, output still printed).
struct VerificationFailed {};

struct Table {
    std::vector<std::string> preamble;
    std::vector<std::vector<std::string>> rows; // first row is the header

    void print(std::ostream &out) const
    {
        for (const auto &line : preamble) out << line << '\n';
        if (rows.empty()) return;
        std::vector<std::size_t> width;
        for (const auto &row : rows) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        for (const auto &row : rows) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                line += row[c];
                if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }
};

struct Result {
    json data;
    Table table;
};

struct Common {
    std::string spec = "none";
    std::string format = "json";
};

void add_common(CLI::App *cmd, Common &c)
{
    cmd->add_option("--spec", c.spec, "Specialization of motivic results")->check(CLI::IsMember({"none", "euler", "hodge"}));
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

std::string read_text(const std::string &path, std::istream &in)
{
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw ArgumentError("cannot open '" + path + "'");
    buffer << file.rdbuf();
    return buffer.str();
}

json read_json(const std::string &path, std::istream &in) { return io::parse_document(read_text(path, in)); }

template <PreLambdaRing R>
Table series_table(const TruncatedSeries<R> &s)
{
    Table t;
    t.rows.push_back({s.var_count() == 1 ? "n" : "exponent", "coefficient"});
    const BoxShape &box = s.shape();
    for (std::size_t idx : box.graded_lex_indices()) {
        if (idx != 0 && ring_traits<R>::is_zero(s.at_index(idx))) continue;
        const ExponentVector n = box.exponent_at(idx);
        t.rows.push_back({s.var_count() == 1 ? std::to_string(n[0]) : n.to_string(), ring_traits<R>::to_string(s.at_index(idx))});
    }
    return t;
}

template <PreLambdaRing R>
Result series_result(const TruncatedSeries<R> &s)
{
    return {io::to_json(s), series_table(s)};
}

Result motivic_result(const MotivicSeries &s, const std::string &spec)
{
    if (spec == "euler") return series_result(specialize_euler(s));
    if (spec == "hodge") return series_result(specialize_hodge(s));
    return series_result(s);
}

std::uint32_t require_order(std::int64_t order)
{
    if (order < 0 || order > 10'000) throw ArgumentError("--order must lie in [0, 10000]");
    return static_cast<std::uint32_t>(order);
}

MotivicClass parse_class_arg(const std::string &text, const char *option)
{
    try {
        return parse_class(text);
    } catch (const ParseError &e) {
        throw ArgumentError(std::string(option) + ": " + e.what());
    }
}

// Integer exponent for an integer series: the class must be a constant.
Integer integer_exponent(const MotivicClass &m)
{
    if (m.is_zero()) return 0;
    if (m.size() != 1 || !(m.terms().front().first == Rational(0))) {
        throw ContractError("power: an integer series needs an integer exponent, got " + to_string(m));
    }
    return m.terms().front().second;
}

struct GroupSource {
    std::string action_file;
    std::string group;

    void add_to(CLI::App *cmd)
    {
        auto *file = cmd->add_option("--action", action_file, "FiniteGroupAction JSON file ('-' for stdin)");
        auto *named = cmd->add_option("--group", group, "Built-in action: trivial:K, cyclic:N or symmetric:N");
        file->excludes(named);
    }

    FiniteGroupAction load(std::istream &in) const
    {
        if (!action_file.empty()) return io::group_action_from_json(read_json(action_file, in));
        if (group.empty()) throw ArgumentError("one of --action or --group is required");
        const auto colon = group.find(':');
        if (colon == std::string::npos) throw ArgumentError("--group expects name:size, e.g. cyclic:2");
        const std::string name = group.substr(0, colon);
        std::uint32_t size = 0;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(group.substr(colon + 1), &used);
            if (used != group.size() - colon - 1 || v == 0 || v > 64) throw std::invalid_argument("size");
            size = static_cast<std::uint32_t>(v);
        } catch (const std::logic_error &) {
            throw ArgumentError("--group size must be an integer in [1, 64]");
        }
        if (name == "trivial") return FiniteGroupAction::trivial(size);
        if (name == "cyclic") return FiniteGroupAction::cyclic(size);
        if (name == "symmetric") return FiniteGroupAction::symmetric(size);
        throw ArgumentError("--group name must be trivial, cyclic or symmetric");
    }
};

std::string pass_text(bool passed) { return passed ? "pass" : "FAIL"; }

class Runner {
public:
    Runner(std::ostream &out, std::istream &in) : out_(out), in_(in) {}

    int run(const std::vector<std::string> &args, std::ostream &err)
    {
        CLI::App app{"Power structures over motivic, Hodge-Deligne and integer coefficient rings"};
        app.require_subcommand(1);
        setup(app);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError &e) {
            return app.exit(e, out_, err) == 0 ? 0 : 2;
        }

        try {
            const Result r = action_();
            emit(r);
            return 0;
        } catch (const VerificationFailed &) {
            return 1;
        } catch (const ArgumentError &e) {
            err << "error: " << e.what() << '\n';
            return 2;
        } catch (const ParseError &e) {
            err << "error: " << e.what() << '\n';
            return 2;
        } catch (const nlohmann::json::exception &e) {
            err << "error: malformed input document: " << e.what() << '\n';
            return 2;
        } catch (const GuardExceeded &e) {
            err << "error: " << e.what() << '\n';
            return 1;
        } catch (const ContractError &e) {
            err << "error: " << e.what() << '\n';
            return 1;
        } catch (const std::overflow_error &e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
    }

private:
    void emit(const Result &r) const
    {
        if (common_.format == "table") {
            r.table.print(out_);
        } else {
            out_ << r.data.dump(2) << '\n';
        }
    }

    // Prints a completed verification report, then signals exit 1 if it failed.
    Result finish_verification(Result r, bool passed) const
    {
        if (!passed) {
            emit(r);
            throw VerificationFailed{};
        }
        return r;
    }

    CLI::App *command(CLI::App &parent, const std::string &name, const std::string &help, std::function<Result()> body)
    {
        CLI::App *cmd = parent.add_subcommand(name, help);
        add_common(cmd, common_);
        cmd->callback([this, body = std::move(body)] { action_ = body; });
        return cmd;
    }

    void setup(CLI::App &app)
    {
        setup_series(app);
        setup_motivic(app);
        setup_orbifold(app);
        setup_verify(app);
    }

    void setup_series(CLI::App &app)
    {
        auto *zeta = command(app, "zeta", "Kapranov zeta function of a class", [this] {
            return motivic_result(kapranov_zeta(parse_class_arg(class_text_, "zeta"), require_order(order_)), common_.spec);
        });
        zeta->add_option("class", class_text_, "Class literal, e.g. \"1+L\"")->required();
        zeta->add_option("--order", order_, "Truncation order")->required();

        auto *pw = command(app, "power", "Raise a series file to a class exponent", [this] { return power_command(); });
        pw->add_option("series", file_, "Series JSON file ('-' for stdin)")->required();
        pw->add_option("--exp", exp_text_, "Exponent class literal")->required();
    }

    Result power_command()
    {
        const json doc = read_json(file_, in_);
        const MotivicClass m = parse_class_arg(exp_text_, "--exp");
        switch (io::detect_ring(doc)) {
        case io::RingKind::integer:
            if (common_.spec == "hodge") throw ContractError("power: an integer series has no Hodge-Deligne specialization");
            return series_result(power(io::series_from_json<Integer>(doc), integer_exponent(m)));
        case io::RingKind::epoly:
            if (common_.spec == "euler") throw ContractError("power: an E-polynomial series has no Euler specialization here");
            return series_result(power(io::series_from_json<EPolynomial>(doc), hodge_spec(m)));
        case io::RingKind::motivic:
            break;
        }
        return motivic_result(power(io::series_from_json<MotivicClass>(doc), m), common_.spec);
    }

    void setup_motivic(CLI::App &app)
    {
        auto *hilb = command(app, "hilb", "Hilbert scheme series of a smooth variety of dimension 1 or 2", [this] {
            const auto order = require_order(order_);
            return motivic_result(hilb_global(parse_class_arg(class_text_, "--class"), hilb_local(dim_, order)), common_.spec);
        });
        hilb->add_option("--dim", dim_, "Dimension")->required()->check(CLI::IsMember({1, 2}));
        hilb->add_option("--class", class_text_, "Class of the variety")->required();
        hilb->add_option("--order", order_, "Truncation order")->required();

        auto *nested = command(app, "nested", "Nested Hilbert scheme series of depth r", [this] { return nested_command(); });
        nested->add_option("--depth", depth_, "Depth r")->required()->check(CLI::Range(1, 8));
        nested->add_option("--dim", dim_, "Dimension (1, or any with --local)")->required();
        nested->add_option("--class", class_text_, "Class of the variety")->required();
        nested->add_option("--bounds", bounds_, "Per-variable bounds, comma separated")->required()->delimiter(',');
        nested->add_option("--local", local_file_, "LocalSeriesData JSON with nestedLocal");

        auto *cheah = command(app, "cheah", "Eight-series package of nested pairs", [this] {
            const LocalSeriesData local = io::local_data_from_json(read_json(local_file_, in_));
            const NestedPackage pkg = cheah_main(local, parse_class_arg(class_text_, "--class"), require_order(order_));
            Result r;
            r.data = {{"slots", json::object()}};
            r.table.rows.push_back({"slot", "n", "coefficient"});
            for (std::size_t i = 0; i < pkg.slots.size(); ++i) {
                const std::string name(NestedPackage::slot_names[i]);
                const Result slot = motivic_result(pkg.slots[i], common_.spec);
                r.data["slots"][name] = slot.data;
                for (std::size_t row = 1; row < slot.table.rows.size(); ++row) {
                    r.table.rows.push_back({name, slot.table.rows[row][0], slot.table.rows[row][1]});
                }
            }
            return r;
        });
        cheah->add_option("--local", local_file_, "LocalSeriesData JSON with hilbLocal and pairLocal")->required();
        cheah->add_option("--class", class_text_, "Class of the variety")->required();
        cheah->add_option("--order", order_, "Truncation order")->required();

        auto *incidence = command(app, "incidence", "Incidence series of a smooth surface", [this] {
            return motivic_result(incidence_series(parse_class_arg(class_text_, "--class"), require_order(order_)), common_.spec);
        });
        incidence->add_option("--class", class_text_, "Class of the surface")->required();
        incidence->add_option("--order", order_, "Truncation order")->required();

        auto *liqin = command(app, "liqin", "Series for a surface S with a curve C in a threefold X", [this] {
            const LocalSeriesData local = io::local_data_from_json(read_json(local_file_, in_));
            const MotivicSeries m_local = io::series_from_json<MotivicClass>(read_json(mlocal_file_, in_));
            const MotivicSeries s = li_qin_series(parse_class_arg(s_text_, "--s"), parse_class_arg(x_text_, "--x"), parse_class_arg(c_text_, "--c"),
                                                  local, m_local, require_order(order_));
            return motivic_result(s, common_.spec);
        });
        liqin->add_option("--s", s_text_, "Class [S]")->required();
        liqin->add_option("--x", x_text_, "Class [X]")->required();
        liqin->add_option("--c", c_text_, "Class [C]")->required();
        liqin->add_option("--local", local_file_, "LocalSeriesData JSON")->required();
        liqin->add_option("--mlocal", mlocal_file_, "Local series at points of C (series JSON)")->required();
        liqin->add_option("--order", order_, "Truncation order")->required();
    }

    Result nested_command()
    {
        if (bounds_.size() != depth_) throw ArgumentError("--bounds needs exactly --depth values");
        const MotivicClass x = parse_class_arg(class_text_, "--class");
        MotivicSeries local = nested_d1_local(bounds_);
        if (!local_file_.empty()) {
            const LocalSeriesData data = io::local_data_from_json(read_json(local_file_, in_));
            if (data.dimension != dim_) throw ContractError("nested: --dim differs from the local data dimension");
            if (!data.nested_local) throw ContractError("nested: local data lacks nestedLocal");
            local = truncate_to(*data.nested_local, BoxShape(bounds_));
        } else if (dim_ != 1) {
            throw ContractError("nested: dimension " + std::to_string(dim_) + " needs --local with nestedLocal");
        }
        return motivic_result(nested_global(x, local), common_.spec);
    }

    void setup_orbifold(CLI::App &app)
    {
        CLI::App *orb = app.add_subcommand("orbifold", "Orbifold Euler characteristics of symmetric products");
        orb->require_subcommand(1);

        auto *series = command(*orb, "series", "Generating series of [X^n, G_n] from an orbifold datum", [this] {
            const OrbifoldDatum d = io::orbifold_datum_from_json(read_json(datum_file_, in_));
            const MotivicClass cls = orbifold_class(d);
            const EPolynomial e = orbifold_e_function(d);
            Result r = motivic_result(wreath_series(d, require_order(order_)), common_.spec);
            r.data = {{"orbifoldClass", io::to_json(cls)}, {"eOrb", io::to_json(e)}, {"series", r.data}};
            r.table.preamble = {"[X,G] = " + to_string(cls), "E_orb = " + to_string(e)};
            return r;
        });
        series->add_option("--datum", datum_file_, "OrbifoldDatum JSON ('-' for stdin)")->required();
        series->add_option("--order", order_, "Truncation order")->required();

        auto *oracle = command(*orb, "oracle", "Brute-force chi(X^n, G_n) and orbit counts of a finite action", [this] {
            const FiniteGroupAction action = group_.load(in_);
            Result r;
            r.data = {{"chi", io::to_json(action.orbifold_euler())}, {"rows", json::array()}};
            r.table.preamble = {"chi(X,G) = " + action.orbifold_euler().get_str()};
            r.table.rows.push_back({"n", "chi(X^n,G_n)", "orbits"});
            for (std::uint32_t n = 1; n <= n_; ++n) {
                const Integer chi = wreath_oracle_euler(action, n);
                const std::uint64_t orbits = wreath_orbit_count(action, n);
                r.data["rows"].push_back({{"n", std::to_string(n)}, {"chi", io::to_json(chi)}, {"orbits", std::to_string(orbits)}});
                r.table.rows.push_back({std::to_string(n), chi.get_str(), std::to_string(orbits)});
            }
            return r;
        });
        group_.add_to(oracle);
        oracle->add_option("--n", n_, "Largest n")->required()->check(CLI::Range(1, 12));

        auto *types = command(*orb, "types", "Conjugacy classes of G wr S_n with their types", [this] {
            const FiniteGroupAction action = group_.load(in_);
            const auto classes = wreath_conjugacy_classes(n_, action);
            Result r;
            r.data = {{"classCount", std::to_string(classes.size())},
                      {"typeCount", std::to_string(count_wreath_types(action.class_count(), n_))},
                      {"classes", json::array()}};
            r.table.preamble = {"classes = " + std::to_string(classes.size()) + ", types = " + r.data["typeCount"].get<std::string>()};
            r.table.rows.push_back({"size", "type"});
            for (const WreathClass &c : classes) {
                r.data["classes"].push_back({{"size", std::to_string(c.size)}, {"type", io::to_json(c.type)}});
                std::string text;
                for (const auto &[cls, parts] : c.type) {
                    text += (text.empty() ? "" : " ") + std::to_string(cls) + ":(";
                    for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? "," : "") + std::to_string(parts[i]);
                    text += ")";
                }
                r.table.rows.push_back({std::to_string(c.size), text});
            }
            return r;
        });
        group_.add_to(types);
        types->add_option("--n", n_, "n")->required()->check(CLI::Range(0, 12));
    }

    void setup_verify(CLI::App &app)
    {
        CLI::App *verify = app.add_subcommand("verify", "Self-checks against independent oracles");
        verify->require_subcommand(1);

        auto *axioms = command(*verify, "axioms", "Power-structure axioms on random cases", [this] { return axioms_command(); });
        axioms->add_option("--seed", seed_, "Random seed");
        axioms->add_option("--order", order_, "Largest truncation order")->required();
        axioms->add_option("--cases", cases_, "Cases per ring")->check(CLI::Range(1, 100000));
        axioms->add_option("--ring", ring_, "Coefficient ring")->check(CLI::IsMember({"integer", "motivic", "epoly", "all"}));
        axioms->add_option("--vars", vars_, "Largest variable count")->check(CLI::Range(1, 3));

        auto *configs = command(*verify, "configs", "Configuration counts vs closed formula vs power", [this] {
            const FiniteCoefficientData data = io::coefficient_data_from_json(read_json(data_file_, in_));
            if (bounds_.size() != data.var_count) throw ArgumentError("--bounds needs one value per variable");
            const ConfigCheckReport report = cross_check(data, BoxShape(bounds_), naive_);
            Result r{io::to_json(report), {}};
            r.table.preamble = {"configs: " + pass_text(report.passed) + (report.passed ? "" : " (" + report.first_mismatch + ")")};
            r.table.rows.push_back({"n", "configurations", "closed form", "engine", "naive"});
            for (const auto &row : report.rows) {
                r.table.rows.push_back({row.n.to_string(), row.configurations.get_str(), row.closed_form.get_str(), row.engine.get_str(),
                                        row.naive ? row.naive->get_str() : "-"});
            }
            return finish_verification(std::move(r), report.passed);
        });
        configs->add_option("--data", data_file_, "FiniteCoefficientData JSON ('-' for stdin)")->required();
        configs->add_option("--bounds", bounds_, "Per-variable bounds, comma separated")->required()->delimiter(',');
        configs->add_flag("--naive", naive_, "Also run the pair-by-pair enumeration where it fits the guard");

        auto *wreath = command(*verify, "wreath", "Brute-force chi(X^n, G_n) and conjugacy types vs the product formula", [this] {
            const WreathCheckReport report = wreath_check(group_.load(in_), n_);
            Result r{io::to_json(report), {}};
            r.table.preamble = {"wreath: " + pass_text(report.passed) + (report.passed ? "" : " (" + report.first_mismatch + ")")};
            if (report.refused_from != 0) r.table.preamble.push_back("guard refused n >= " + std::to_string(report.refused_from));
            r.table.rows.push_back({"n", "oracle", "series", "classes", "types", "consistent"});
            for (const auto &row : report.rows) {
                r.table.rows.push_back({std::to_string(row.n), row.oracle.get_str(), row.series.get_str(), std::to_string(row.conjugacy_classes),
                                        std::to_string(row.types), row.types_consistent ? "yes" : "no"});
            }
            return finish_verification(std::move(r), report.passed);
        });
        group_.add_to(wreath);
        wreath->add_option("--n", n_, "Largest n")->required()->check(CLI::Range(1, 12));
    }

    Result axioms_command()
    {
        const std::uint32_t order = require_order(order_);
        if (order > 12) throw ArgumentError("verify axioms: --order must be at most 12");
        CaseGenerator gen(seed_, order, vars_);
        Result r;
        r.data = {{"seed", std::to_string(seed_)}, {"rings", json::object()}};
        r.table.rows.push_back({"ring", "property", "checks", "result", "statement"});
        bool passed = true;
        auto add = [&](const std::string &name, const AxiomReport &report) {
            passed = passed && report.all_passed();
            r.data["rings"][name] = io::to_json(report);
            for (const auto &p : report.properties) {
                r.table.rows.push_back({name, std::to_string(p.property), std::to_string(p.checks), pass_text(p.passed),
                                        p.passed ? p.statement : p.statement + "  [" + p.counterexample + "]"});
            }
        };
        if (ring_ == "integer" || ring_ == "all") add("integer", verify_axioms(gen.cases<Integer>(cases_)));
        if (ring_ == "motivic" || ring_ == "all") add("motivic", verify_axioms(gen.cases<MotivicClass>(cases_)));
        if (ring_ == "epoly" || ring_ == "all") add("epoly", verify_axioms(gen.cases<EPolynomial>(cases_)));
        r.data["passed"] = passed;
        return finish_verification(std::move(r), passed);
    }

    std::ostream &out_;
    std::istream &in_;
    Common common_;
    std::function<Result()> action_;

    std::string class_text_;
    std::string exp_text_;
    std::string file_;
    std::string local_file_;
    std::string mlocal_file_;
    std::string datum_file_;
    std::string data_file_;
    std::string s_text_;
    std::string x_text_;
    std::string c_text_;
    std::string ring_ = "all";
    std::int64_t order_ = 0;
    unsigned dim_ = 1;
    std::uint32_t depth_ = 1;
    std::uint32_t n_ = 1;
    std::uint32_t vars_ = 2;
    std::size_t cases_ = 10;
    std::uint64_t seed_ = 1;
    bool naive_ = false;
    std::vector<std::uint32_t> bounds_;
    GroupSource group_;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in)
{
    return Runner(out, in).run(args, err);
}

} // namespace powerstruct::cli
