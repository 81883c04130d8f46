// useq - exact terms, tables and identity checks for the generalized
// Fibonacci/Pell family U_{n+2} = r*U_{n+1} + U_n over exact rationals.
//
// Exit codes: 0 success / identity holds, 1 an identity check failed,
// 2 usage or configuration error, 3 expression parse/evaluation error.

#include <useq/useq.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using useq::rational;

enum class output_format { plain, csv, jsonl };

output_format format_from_name(const std::string& name) {
    if (name == "csv") return output_format::csv;
    if (name == "jsonl") return output_format::jsonl;
    return output_format::plain;
}

struct field {
    enum class kind { text, integer, boolean };
    std::string key;
    std::string value;
    kind type = kind::text;
};
using record = std::vector<field>;

field ftext(std::string key, std::string value) {
    return {std::move(key), std::move(value), field::kind::text};
}
field fint(std::string key, long long value) {
    return {std::move(key), std::to_string(value), field::kind::integer};
}
field fbool(std::string key, bool value) {
    return {std::move(key), value ? "true" : "false", field::kind::boolean};
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// Streams records as csv (header once) or jsonl (one object per line).
/// Plain output stays with the individual commands.
class emitter {
  public:
    emitter(output_format fmt, std::ostream& os) : fmt_(fmt), os_(os) {}

    void row(const record& rec) {
        if (fmt_ == output_format::csv) {
            if (!header_done_) {
                for (std::size_t i = 0; i < rec.size(); ++i)
                    os_ << (i ? "," : "") << csv_quote(rec[i].key);
                os_ << "\n";
                header_done_ = true;
            }
            for (std::size_t i = 0; i < rec.size(); ++i)
                os_ << (i ? "," : "") << csv_quote(rec[i].value);
            os_ << "\n";
            return;
        }
        nlohmann::ordered_json j;
        for (const auto& f : rec) {
            switch (f.type) {
                case field::kind::text: j[f.key] = f.value; break;
                case field::kind::integer: j[f.key] = std::stoll(f.value); break;
                case field::kind::boolean: j[f.key] = (f.value == "true"); break;
            }
        }
        os_ << j.dump() << "\n";
    }

    /// Summaries keep csv tables rectangular by going out as a comment.
    void summary(const record& rec) {
        if (fmt_ == output_format::csv) {
            os_ << "#";
            for (const auto& f : rec) os_ << " " << f.key << "=" << f.value;
            os_ << "\n";
            return;
        }
        row(rec);
    }

  private:
    output_format fmt_;
    std::ostream& os_;
    bool header_done_ = false;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::int64_t parse_int(const std::string& text, const char* what) {
    const auto v = useq::to_int64(rational::parse(text));
    if (!v) throw std::invalid_argument(std::string(what) + " must be an integer, got '" + text + "'");
    return *v;
}

/// "lo..hi" (integer endpoints, inclusive) or a comma-separated value list.
std::vector<rational> parse_axis(const std::string& spec, const char* name) {
    std::vector<rational> out;
    const auto range = spec.find("..");
    if (range != std::string::npos) {
        const std::int64_t lo = parse_int(trim(spec.substr(0, range)), name);
        const std::int64_t hi = parse_int(trim(spec.substr(range + 2)), name);
        if (lo > hi)
            throw std::invalid_argument(std::string(name) + ": empty range " + spec);
        for (std::int64_t v = lo; v <= hi; ++v) out.emplace_back(v);
        return out;
    }
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto comma = spec.find(',', start);
        const std::string part =
            trim(spec.substr(start, comma == std::string::npos ? comma : comma - start));
        if (part.empty())
            throw std::invalid_argument(std::string(name) + ": empty value in list '" + spec + "'");
        out.push_back(rational::parse(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::int64_t> parse_int_axis(const std::string& spec, const char* name) {
    std::vector<std::int64_t> out;
    for (const auto& v : parse_axis(spec, name)) {
        const auto n = useq::to_int64(v);
        if (!n)
            throw std::invalid_argument(std::string(name) + " must be an integer, got '" +
                                        v.str() + "'");
        out.push_back(*n);
    }
    return out;
}

std::optional<rational> parse_opt(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return rational::parse(*s);
}

useq::sequence_params params_from(const std::string& family, const std::optional<std::string>& a,
                                  const std::optional<std::string>& b,
                                  const std::optional<std::string>& r) {
    if (!family.empty()) {
        if (a || b || r)
            throw std::invalid_argument("give either a family name or --a/--b/--r, not both");
        const auto f = useq::family_from_name(family);
        if (!f)
            throw std::invalid_argument("unknown family '" + family +
                                        "' (expected fibonacci|lucas|pell|pell-lucas)");
        return useq::resolve(*f);
    }
    if (!a || !b || !r)
        throw std::invalid_argument("need a family name or all of --a, --b and --r");
    return {rational::parse(*a), rational::parse(*b), rational::parse(*r)};
}

record report_record(const useq::identity_report& rep) {
    const auto& inst = *rep.instance;
    return {ftext("identity", std::string(useq::info(inst.id).name)),
            ftext("a", inst.params.a.str()),
            ftext("b", inst.params.b.str()),
            ftext("r", inst.params.r.str()),
            ftext("c", inst.c.str()),
            fint("m", inst.m),
            ftext("lhs", rep.lhs.str()),
            ftext("rhs", rep.rhs.str()),
            ftext("residual", rep.residual.str()),
            fbool("pass", rep.pass)};
}

void print_plain_report(const useq::identity_report& rep, std::ostream& os) {
    const auto& inst = *rep.instance;
    os << (rep.pass ? "PASS" : "FAIL") << " " << useq::info(inst.id).name << " a="
       << inst.params.a << " b=" << inst.params.b << " r=" << inst.params.r << " c=" << inst.c
       << " m=" << inst.m << " lhs=" << rep.lhs << " rhs=" << rep.rhs << " residual="
       << rep.residual << "\n";
}

std::string identity_names() {
    std::string out;
    for (const auto& e : useq::identity_registry()) {
        if (!out.empty()) out += "|";
        out += std::string(e.name);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact terms and weighted-sum identity checks for the generalized "
                 "Fibonacci/Pell family U(a,b,r)"};
    app.require_subcommand(1);
    std::string format_name = "plain";
    bool quiet = false;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"plain", "csv", "jsonl"}));
    app.add_flag("--quiet", quiet, "suppress per-record output (exit codes and summaries stay)");
    app.set_version_flag("--version", "useq 0.1.0");

    int exit_code = 0;
    auto fmt = [&] { return format_from_name(format_name); };

    // term ------------------------------------------------------------
    auto* term_cmd = app.add_subcommand("term", "compute one term U_n");
    term_cmd->fallthrough();
    std::string term_family;
    std::optional<std::string> term_a, term_b, term_r;
    std::int64_t term_n = 0;
    term_cmd->add_option("family", term_family, "fibonacci|lucas|pell|pell-lucas");
    term_cmd->add_option("--a", term_a, "U_1 (rational p/q)");
    term_cmd->add_option("--b", term_b, "defines U_0 = b - r*a");
    term_cmd->add_option("--r", term_r, "recurrence coefficient");
    term_cmd->add_option("-n,--index", term_n, "term index (any integer)")->required();
    term_cmd->callback([&] {
        const auto p = params_from(term_family, term_a, term_b, term_r);
        const rational value = useq::term_fast(p, term_n);
        if (fmt() == output_format::plain) {
            if (!quiet) std::cout << value << "\n";
            return;
        }
        if (!quiet) emitter(fmt(), std::cout).row({fint("n", term_n), ftext("value", value.str())});
    });

    // table -----------------------------------------------------------
    auto* table_cmd =
        app.add_subcommand("table", "list U_lo..U_hi (usage: table [family] lo hi)");
    table_cmd->fallthrough();
    std::vector<std::string> table_args;
    std::optional<std::string> table_a, table_b, table_r;
    table_cmd->add_option("args", table_args, "[family] lo hi");
    table_cmd->add_option("--a", table_a, "U_1 (rational p/q)");
    table_cmd->add_option("--b", table_b, "defines U_0 = b - r*a");
    table_cmd->add_option("--r", table_r, "recurrence coefficient");
    table_cmd->callback([&] {
        std::string family;
        std::vector<std::string> bounds = table_args;
        if (bounds.size() == 3) {
            family = bounds.front();
            bounds.erase(bounds.begin());
        }
        if (bounds.size() != 2)
            throw std::invalid_argument("table expects [family] lo hi");
        const auto p = params_from(family, table_a, table_b, table_r);
        const std::int64_t lo = parse_int(bounds[0], "lo");
        const std::int64_t hi = parse_int(bounds[1], "hi");
        const auto values = useq::term_range(p, lo, hi);
        if (quiet) return;
        emitter out(fmt(), std::cout);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::int64_t n = lo + static_cast<std::int64_t>(i);
            if (fmt() == output_format::plain)
                std::cout << n << "\t" << values[i] << "\n";
            else
                out.row({fint("n", n), ftext("value", values[i].str())});
        }
    });

    // verify ----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "check one identity instance exactly");
    verify_cmd->fallthrough();
    std::string verify_name;
    std::optional<std::string> verify_a, verify_b, verify_r, verify_c;
    std::int64_t verify_m = 0;
    verify_cmd->add_option("identity", verify_name, identity_names())->required();
    verify_cmd->add_option("--a", verify_a, "free parameter a");
    verify_cmd->add_option("--b", verify_b, "free parameter b");
    verify_cmd->add_option("--r", verify_r, "free parameter r (master only)");
    verify_cmd->add_option("--c", verify_c, "weight c (nonzero rational)");
    verify_cmd->add_option("-m,--m", verify_m, "upper summation index (m >= 0)")->required();
    verify_cmd->callback([&] {
        const auto id = useq::identity_from_name(verify_name);
        if (!id)
            throw std::invalid_argument("unknown identity '" + verify_name + "' (expected " +
                                        identity_names() + ")");
        const auto inst = useq::make_instance(*id, parse_opt(verify_a), parse_opt(verify_b),
                                              parse_opt(verify_r), parse_opt(verify_c), verify_m);
        const auto rep = useq::evaluate(inst);
        if (!quiet) {
            if (fmt() == output_format::plain)
                print_plain_report(rep, std::cout);
            else
                emitter(fmt(), std::cout).row(report_record(rep));
        }
        exit_code = rep.pass ? 0 : 1;
    });

    // sweep -----------------------------------------------------------
    auto* sweep_cmd =
        app.add_subcommand("sweep", "verify an identity over a parameter grid");
    sweep_cmd->fallthrough();
    std::string sweep_file;
    std::optional<std::string> sweep_id, sweep_a, sweep_b, sweep_r, sweep_c, sweep_m;
    unsigned sweep_threads = 1;
    sweep_cmd->add_option("--config", sweep_file, "key = value file with identity/a/b/r/c/m");
    sweep_cmd->add_option("--identity", sweep_id, identity_names());
    sweep_cmd->add_option("--a", sweep_a, "values: lo..hi or v1,v2,...");
    sweep_cmd->add_option("--b", sweep_b, "values: lo..hi or v1,v2,...");
    sweep_cmd->add_option("--r", sweep_r, "values: lo..hi or v1,v2,...");
    sweep_cmd->add_option("--c", sweep_c, "values: lo..hi or v1,v2,... (no zero)");
    sweep_cmd->add_option("--m", sweep_m, "values: lo..hi or v1,v2,... (m >= 0)");
    sweep_cmd->add_option("-j,--threads", sweep_threads, "worker threads (output order is fixed)")
        ->check(CLI::PositiveNumber);
    sweep_cmd->callback([&] {
        std::map<std::string, std::string> kv;
        if (!sweep_file.empty()) {
            std::ifstream in(sweep_file);
            if (!in) throw std::invalid_argument("cannot open config file '" + sweep_file + "'");
            std::string line;
            int lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                const auto hash = line.find('#');
                if (hash != std::string::npos) line.erase(hash);
                line = trim(line);
                if (line.empty()) continue;
                const auto eq = line.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("config line " + std::to_string(lineno) +
                                                ": expected key = value");
                const std::string key = trim(line.substr(0, eq));
                const std::string value = trim(line.substr(eq + 1));
                if (key != "identity" && key != "a" && key != "b" && key != "r" && key != "c" &&
                    key != "m")
                    throw std::invalid_argument("config line " + std::to_string(lineno) +
                                                ": unknown key '" + key + "'");
                kv[key] = value;
            }
        }
        auto merged = [&](const char* key,
                          const std::optional<std::string>& flag) -> std::optional<std::string> {
            if (flag) return flag;  // flags override the file
            const auto it = kv.find(key);
            if (it != kv.end()) return it->second;
            return std::nullopt;
        };
        const auto id_name = merged("identity", sweep_id);
        if (!id_name) throw std::invalid_argument("sweep needs an identity (flag or config file)");
        const auto id = useq::identity_from_name(*id_name);
        if (!id)
            throw std::invalid_argument("unknown identity '" + *id_name + "' (expected " +
                                        identity_names() + ")");
        useq::sweep_config cfg;
        cfg.id = *id;
        if (const auto v = merged("a", sweep_a)) cfg.a = parse_axis(*v, "a");
        if (const auto v = merged("b", sweep_b)) cfg.b = parse_axis(*v, "b");
        if (const auto v = merged("r", sweep_r)) cfg.r = parse_axis(*v, "r");
        if (const auto v = merged("c", sweep_c)) cfg.c = parse_axis(*v, "c");
        if (const auto v = merged("m", sweep_m)) cfg.m = parse_int_axis(*v, "m");

        emitter out(fmt(), std::cout);
        const auto summary = useq::sweep(
            cfg,
            [&](const useq::identity_report& rep) {
                if (quiet) return;
                if (fmt() == output_format::plain)
                    print_plain_report(rep, std::cout);
                else
                    out.row(report_record(rep));
            },
            sweep_threads);
        const record sum_rec = {fint("total", static_cast<long long>(summary.total)),
                                fint("passed", static_cast<long long>(summary.passed)),
                                fint("failed", static_cast<long long>(summary.failed))};
        if (fmt() == output_format::plain)
            std::cout << "total=" << summary.total << " passed=" << summary.passed
                      << " failed=" << summary.failed << "\n";
        else
            out.summary(sum_rec);
        exit_code = summary.failed == 0 ? 0 : 1;
    });

    // eval ------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression exactly");
    eval_cmd->fallthrough();
    std::string eval_src;
    std::vector<std::string> eval_binds;
    std::vector<std::string> eval_equal;
    eval_cmd->add_option("expression", eval_src, "e.g. \"sum(i=0..3, 2^i * L(i))\"");
    eval_cmd->add_option("--bind", eval_binds, "name=value, repeatable")
        ->allow_extra_args(false);
    eval_cmd->add_option("--equal", eval_equal, "LHS RHS: compare two expressions")->expected(2);
    eval_cmd->callback([&] {
        useq::expr::environment env;
        for (const auto& bind : eval_binds) {
            const auto eq = bind.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--bind expects name=value, got '" + bind + "'");
            const std::string name = trim(bind.substr(0, eq));
            if (!valid_identifier(name))
                throw std::invalid_argument("--bind: '" + name + "' is not a valid identifier");
            if (env.count(name))
                throw std::invalid_argument("--bind: duplicate binding for '" + name + "'");
            env[name] = rational::parse(trim(bind.substr(eq + 1)));
        }
        if (!eval_equal.empty()) {
            if (!eval_src.empty())
                throw std::invalid_argument("give either an expression or --equal, not both");
            const auto rep = useq::expr::check_equal(eval_equal[0], eval_equal[1], env);
            if (!quiet) {
                if (fmt() == output_format::plain)
                    std::cout << (rep.pass ? "PASS" : "FAIL") << " lhs=" << rep.lhs
                              << " rhs=" << rep.rhs << " residual=" << rep.residual << "\n";
                else
                    emitter(fmt(), std::cout)
                        .row({ftext("lhs", rep.lhs.str()), ftext("rhs", rep.rhs.str()),
                              ftext("residual", rep.residual.str()), fbool("pass", rep.pass)});
            }
            exit_code = rep.pass ? 0 : 1;
            return;
        }
        if (eval_src.empty()) throw std::invalid_argument("eval needs an expression or --equal");
        const rational value = useq::expr::evaluate(eval_src, env);
        if (!quiet) {
            if (fmt() == output_format::plain)
                std::cout << value << "\n";
            else
                emitter(fmt(), std::cout).row({ftext("value", value.str())});
        }
    });

    // bench -----------------------------------------------------------
    auto* bench_cmd = app.add_subcommand(
        "bench", "time iterative vs doubling Fibonacci computation at the given indices");
    bench_cmd->fallthrough();
    std::vector<std::string> bench_ns;
    std::int64_t bench_reps = 1;
    bench_cmd->add_option("--n", bench_ns, "indices, comma lists allowed")->required();
    bench_cmd->add_option("--reps", bench_reps, "repetitions per timing, best is reported");
    bench_cmd->callback([&] {
        if (bench_reps < 1) throw std::invalid_argument("--reps must be at least 1");
        std::vector<std::int64_t> indices;
        for (const auto& chunk : bench_ns)
            for (const auto n : parse_int_axis(chunk, "n")) indices.push_back(n);
        for (const auto n : indices)
            if (n < 1) throw std::invalid_argument("bench indices must be positive");
        const useq::sequence_params fib{1, 1, 1};
        emitter out(fmt(), std::cout);
        for (const auto n : indices) {
            rational iter_value, fast_value;
            long long iter_ns = -1, fast_ns = -1;
            for (std::int64_t rep = 0; rep < bench_reps; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                rational v = useq::term(fib, n);
                const auto t1 = std::chrono::steady_clock::now();
                rational w = useq::term_fast(fib, n);
                const auto t2 = std::chrono::steady_clock::now();
                const auto d_iter =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
                const auto d_fast =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
                if (iter_ns < 0 || d_iter < iter_ns) iter_ns = d_iter;
                if (fast_ns < 0 || d_fast < fast_ns) fast_ns = d_fast;
                iter_value = std::move(v);
                fast_value = std::move(w);
            }
            // both paths must agree before any timing is reported
            const bool agree = iter_value == fast_value;
            if (!agree) {
                std::cerr << "useq: bench: iterative and doubling paths disagree at n=" << n
                          << "\n";
                exit_code = 1;
                return;
            }
            std::string digits_str = fast_value.numerator().get_str();
            const long long digits =
                static_cast<long long>(digits_str.size() - (digits_str[0] == '-' ? 1 : 0));
            if (!quiet) {
                if (fmt() == output_format::plain)
                    std::cout << "n=" << n << " digits=" << digits << " iter_ns=" << iter_ns
                              << " fast_ns=" << fast_ns << " agree=yes\n";
                else
                    out.row({fint("n", n), fint("digits", digits), fint("iter_ns", iter_ns),
                             fint("fast_ns", fast_ns), fbool("agree", agree)});
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const useq::expr::parse_error& e) {
        std::cerr << "useq: " << e.what() << "\n";
        return 3;
    } catch (const useq::expr::eval_error& e) {
        std::cerr << "useq: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "useq: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "useq: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
