#ifndef GALHULL_TOOLS_COMMANDS_HPP
#define GALHULL_TOOLS_COMMANDS_HPP

// Subcommand bodies of the galhull CLI. Each returns a process exit code and writes only to the
// streams it is given, so tests can drive them without spawning processes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galhull/galhull.hpp"
#include "galhull/json_io.hpp"

namespace galhull::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kParseError = 2, kHypothesis = 3, kOracleDisagreement = 4 };

enum class Format { Json, Csv };

struct GlobalOptions {
    std::optional<std::string> field;  // "p,h[,c_h,...,c_0]"
    Format format = Format::Json;
    bool format_given = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw InvalidArgument("");
        } catch (const std::exception&) {
            throw InvalidArgument("'" + text + "' is not a comma-separated integer list");
        }
    }
    return out;
}

/// "p,h" or "p,h,c_h,...,c_0".
inline Field parse_field_flag(const std::string& text) {
    const auto xs = parse_int_list(text);
    if (xs.size() < 2) throw InvalidArgument("--field expects p,h[,modulus coefficients]");
    for (auto x : xs)
        if (x < 0) throw InvalidArgument("--field values must be nonnegative");
    std::optional<std::vector<std::uint64_t>> modulus;
    if (xs.size() > 2) modulus = std::vector<std::uint64_t>(xs.begin() + 2, xs.end());
    return Field::create(static_cast<std::uint64_t>(xs[0]), static_cast<unsigned>(xs[1]), modulus);
}

inline std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw InvalidArgument(std::string("malformed JSON: ") + ex.what());
    }
}

/// Runs fn, mapping library exceptions to exit codes with a one-line message on err.
template <class F>
int guarded(std::ostream& err, F&& fn) {
    try {
        return fn();
    } catch (const HypothesisError& ex) {
        err << "hypothesis violated: " << ex.what() << '\n';
        return kHypothesis;
    } catch (const NoRootError& ex) {
        err << "hypothesis violated: " << ex.what() << '\n';
        return kHypothesis;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kParseError;
    } catch (const json::exception& ex) {
        err << "error: malformed input: " << ex.what() << '\n';
        return kParseError;
    } catch (const InternalError& ex) {
        err << "internal inconsistency: " << ex.what() << '\n';
        return kOracleDisagreement;
    }
}

// ---------------------------------------------------------------------------------------------
// construct

namespace detail {

struct Built {
    Construction result;
    json provenance;
};

inline Field request_field(const json& req, const GlobalOptions& opt) {
    if (req.contains("field")) return json_io::field_from_json(req.at("field"));
    if (opt.field) return parse_field_flag(*opt.field);
    throw InvalidArgument("request has no \"field\" and no --field was given");
}

inline Built build_theorem_c(const Field& f, const json& params, unsigned e, std::size_t k, std::size_t l, bool ext) {
    const auto ps = theorem_c_points(f, params.at("m").get<unsigned>(), params.at("z").get<unsigned>(),
                                     params.at("w").get<unsigned>(), params.at("t").get<unsigned>());
    auto result = theorem_c_code(ps, e, k, l, ext);
    json prov{{"pointset", json_io::to_json(ps)}, {"plan", json_io::to_json(result.plan)}};
    return {std::move(result), std::move(prov)};
}

/// Seed from an explicit spec, a coset family (self-orthogonal coset code) or exhaustive search.
inline GrsSpec request_seed(const Field& f, const json& params, unsigned e, bool extended) {
    if (params.contains("seed")) {
        const json& seed = params.at("seed");
        if (seed.contains("field")) {
            const Field g = json_io::field_from_json(seed.at("field"));
            if (g.p() != f.p() || g.h() != f.h() || g.modulus() != f.modulus()) {
                throw InvalidArgument("seed field differs from the request field");
            }
        }
        GrsSpec s{f, json_io::elements_from_json(f, seed.at("a")), json_io::elements_from_json(f, seed.at("v")),
                  seed.at("k").get<std::size_t>(), seed.value("extended", false)};
        s.validate();
        return s;
    }
    if (params.contains("seed_coset")) {
        const auto& c = params.at("seed_coset");
        const auto ps = theorem_c_points(f, c.at("m").get<unsigned>(), c.at("z").get<unsigned>(),
                                         c.at("w").get<unsigned>(), c.at("t").get<unsigned>());
        const auto k = c.value("k", std::size_t{1});
        if (extended) throw HypothesisError("coset seeds are not extended self-orthogonal; give an explicit seed");
        return theorem_c_code(ps, e, k, k, false).spec;
    }
    if (params.contains("seed_search")) {
        const auto& c = params.at("seed_search");
        const auto n = c.at("n").get<std::size_t>();
        const auto k = c.value("k", std::size_t{1});
        auto found = find_self_orthogonal_seed(f, first_locators(f, n), k, e, extended,
                                               c.value("limit", std::uint64_t{10'000'000}));
        if (!found) throw HypothesisError("no self-orthogonal seed exists on the first " + std::to_string(n) + " locators");
        return *found;
    }
    throw InvalidArgument("params need one of \"seed\", \"seed_coset\" or \"seed_search\"");
}

inline Built build_from_seed(const std::string& method, const Field& f, const json& params, unsigned e_prime,
                             std::size_t k, std::size_t l, bool ext) {
    unsigned e = 0;
    if (method == "theorem_a") {
        if (!params.contains("e")) throw InvalidArgument("theorem_a params need the seed parameter \"e\"");
        e = params.at("e").get<unsigned>();
        check_theorem_a_hypotheses(f, e, e_prime);
    } else {
        check_theorem_b_hypotheses(f, e_prime);
        e = f.h() / 2;
    }
    const GrsSpec seed = request_seed(f, params, e, ext);
    if (seed.extended != ext) throw InvalidArgument("seed extended flag differs from the request");
    if (!check_self_orthogonal(seed, e)) {
        throw HypothesisError("seed is not " + std::to_string(e) + "-Galois self-orthogonal");
    }
    const auto wit = recover_h(seed, e);
    auto result = method == "theorem_a" ? theorem_a_construct(seed, wit, e_prime, k, l)
                                        : theorem_b_construct(seed, wit, e_prime, k, l);
    json prov{{"seed", json_io::to_json(seed)}, {"witness", json_io::to_json(wit)}, {"plan", json_io::to_json(result.plan)}};
    return {std::move(result), std::move(prov)};
}

}  // namespace detail

inline int cmd_construct(const json& req, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto start = std::chrono::steady_clock::now();
        if (!req.is_object()) throw InvalidArgument("request must be a JSON object");
        const auto method = req.at("method").get<std::string>();
        const Field f = detail::request_field(req, opt);
        const json params = req.value("params", json::object());
        const auto k = req.at("k").get<std::size_t>();
        const auto l = req.at("l").get<std::size_t>();
        const auto e_prime = req.at("e_prime").get<unsigned>();
        const bool ext = req.value("extended", false);

        detail::Built built = [&] {
            if (method == "theorem_c") return detail::build_theorem_c(f, params, e_prime, k, l, ext);
            if (method == "theorem_a" || method == "theorem_b") {
                return detail::build_from_seed(method, f, params, e_prime, k, l, ext);
            }
            throw InvalidArgument("unknown method '" + method + "' (expected theorem_a, theorem_b or theorem_c)");
        }();

        const GrsSpec& spec = built.result.spec;
        const LinearCode code = generator_matrix(spec);
        const HullReport hr = hull(code, e_prime);
        const MdsResult mds = is_mds(code, MdsStrategy::Auto, opt.threads);
        const bool agreement = hr.dim == l;
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        built.provenance["method"] = method;
        if (opt.format == Format::Csv) {
            out << "method,n,k,l,e_prime,hull_dim,mds,oracle_agreement\n"
                << method << ',' << code.n() << ',' << k << ',' << l << ',' << e_prime << ',' << hr.dim << ','
                << to_string(mds.verdict) << ',' << (agreement ? "true" : "false") << '\n';
        } else {
            json report{{"request", req},
                        {"spec", json_io::to_json(spec)},
                        {"hull", json_io::to_json(hr, code, mds)},
                        {"mds", json_io::to_json(mds)},
                        {"oracle_agreement", agreement},
                        {"wall_time_ms", ms},
                        {"provenance", built.provenance}};
            out << report.dump(2) << '\n';
        }
        if (!agreement || mds.verdict == MdsVerdict::ProvedNotMds) {
            err << "oracle disagreement: requested l = " << l << ", hull dimension = " << hr.dim
                << ", mds = " << to_string(mds.verdict) << '\n';
            return static_cast<int>(kOracleDisagreement);
        }
        return static_cast<int>(kOk);
    });
}

// ---------------------------------------------------------------------------------------------
// verify

/// GRS spec with random distinct locators and random nonzero multipliers.
inline GrsSpec random_spec(const Field& f, std::size_t n, std::size_t k, bool extended, std::uint64_t seed) {
    if (n > f.q()) throw InvalidArgument("n exceeds the field size");
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> values(f.q());
    for (std::uint64_t i = 0; i < f.q(); ++i) values[i] = i;
    std::shuffle(values.begin(), values.end(), rng);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, f.q() - 1);
    GrsSpec s{f, {}, {}, k, extended};
    for (std::size_t i = 0; i < n; ++i) {
        s.a.push_back(f.element(values[i]));
        s.v.push_back(f.element(nonzero(rng)));
    }
    s.validate();
    return s;
}

inline int cmd_verify(const GrsSpec& spec, unsigned e, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto start = std::chrono::steady_clock::now();
        if (e >= spec.field.h()) throw InvalidArgument("e must satisfy 0 <= e <= h-1");
        const LinearCode code = generator_matrix(spec);
        const HullReport hr = hull(code, e);
        const bool so = check_self_orthogonal(spec, e);
        if (so != (hr.dim == spec.k)) throw InternalError("Gram test and hull dimension disagree on self-orthogonality");
        const MdsResult mds = is_mds(code, MdsStrategy::Auto, opt.threads);
        std::optional<SelfOrthogonalWitness> wit;
        if (so && !(spec.extended && spec.k < 2)) {
            wit = recover_h(spec, e);
            if (!verify_witness(spec, *wit)) throw InternalError("recovered witness fails pointwise check");
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (opt.format == Format::Csv) {
            out << "n,k,e,hull_dim,self_orthogonal,deg_h,mds\n"
                << code.n() << ',' << spec.k << ',' << e << ',' << hr.dim << ',' << (so ? "true" : "false") << ','
                << (wit ? std::to_string(wit->deg_h()) : "") << ',' << to_string(mds.verdict) << '\n';
        } else {
            json report{{"spec", json_io::to_json(spec)},
                        {"e", e},
                        {"hull", json_io::to_json(hr, code, mds)},
                        {"self_orthogonal", so},
                        {"witness", wit ? json_io::to_json(*wit) : json(nullptr)},
                        {"mds", json_io::to_json(mds)},
                        {"wall_time_ms", ms}};
            out << report.dump(2) << '\n';
        }
        return mds.verdict == MdsVerdict::ProvedNotMds ? static_cast<int>(kOracleDisagreement) : static_cast<int>(kOk);
    });
}

// ---------------------------------------------------------------------------------------------
// bounds / reproduce

struct BoundsQuery {
    std::uint64_t p = 0;
    unsigned h = 0;
    std::uint64_t n = 0;
    std::int64_t deg_h = 0;
    std::vector<unsigned> e_primes;
};

/// Parameter sets of the worked examples; CSV output is "e_prime,k_max".
inline std::optional<BoundsQuery> reproduction_query(const std::string& name) {
    if (name == "example1") return BoundsQuery{3, 8, 6561, 0, {1, 3, 5, 7}};
    if (name == "example5") return BoundsQuery{3, 6, 520, 7, {0, 2, 4}};
    if (name == "example5-extended") return BoundsQuery{3, 10, 48801, 24644, {0, 2, 4, 6, 8}};
    return std::nullopt;
}

inline std::string comparison_label(const BoundsQuery& q, unsigned e_prime) {
    if (q.h % 2 != 0 || e_prime >= q.h / 2 || q.n < 2) return "n/a";
    const auto c = bound_comparison(q.p, q.h, e_prime, q.deg_h, q.n);
    if (c.condition1) return "condition1";
    if (c.condition2) return "condition2";
    return "none";
}

inline int cmd_bounds(const BoundsQuery& q, bool with_comparison, const GlobalOptions& opt, std::ostream& out,
                      std::ostream& err) {
    return guarded(err, [&] {
        if (q.e_primes.empty()) throw InvalidArgument("no e' values given");
        if (opt.format == Format::Json) {
            json rows = json::array();
            for (auto ep : q.e_primes) {
                json row{{"e_prime", ep}, {"k_max", dimension_bound(q.p, ep, q.n, q.deg_h)}};
                if (with_comparison) row["comparison"] = comparison_label(q, ep);
                rows.push_back(row);
            }
            out << json{{"p", q.p}, {"h", q.h}, {"n", q.n}, {"deg_h", q.deg_h}, {"rows", rows}}.dump(2) << '\n';
        } else {
            out << (with_comparison ? "e_prime,k_max,comparison\n" : "e_prime,k_max\n");
            for (auto ep : q.e_primes) {
                out << ep << ',' << dimension_bound(q.p, ep, q.n, q.deg_h);
                if (with_comparison) out << ',' << comparison_label(q, ep);
                out << '\n';
            }
        }
        return static_cast<int>(kOk);
    });
}

inline int cmd_reproduce(const std::string& name, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    if (name == "remark6") {
        return guarded(err, [&] {
            struct Row {
                const char* label;
                std::uint64_t p;
                unsigned h;
                std::uint64_t n;
                std::int64_t deg_h;
            };
            const Row rows[] = {{"example5", 3, 6, 520, 7}, {"example5-extended", 3, 10, 48802, 24644}};
            if (opt.format == Format::Json) {
                json arr = json::array();
                for (const auto& r : rows) {
                    const auto t = comparison_threshold(r.p, r.h, r.n, r.deg_h);
                    arr.push_back({{"case", r.label}, {"n", r.n}, {"deg_h", r.deg_h}, {"threshold", t ? json(*t) : json(nullptr)}});
                }
                out << arr.dump(2) << '\n';
            } else {
                out << "case,n,deg_h,threshold\n";
                for (const auto& r : rows) {
                    const auto t = comparison_threshold(r.p, r.h, r.n, r.deg_h);
                    out << r.label << ',' << r.n << ',' << r.deg_h << ',' << (t ? std::to_string(*t) : "") << '\n';
                }
            }
            return static_cast<int>(kOk);
        });
    }
    const auto q = reproduction_query(name);
    if (!q) {
        err << "error: unknown table '" << name << "' (expected example1, example5, example5-extended or remark6)\n";
        return kParseError;
    }
    return cmd_bounds(*q, false, opt, out, err);
}

// ---------------------------------------------------------------------------------------------
// enumerate

struct EnumRow {
    int cls = 0;
    std::uint64_t p = 0;
    unsigned h = 0;
    std::uint64_t q = 0;
    std::string e, e_prime, m, t, z, w, n, k_range, l_range;
};

inline void write_row(std::ostream& out, const EnumRow& r) {
    out << r.cls << ',' << r.p << ',' << r.h << ',' << r.q << ',' << r.e << ',' << r.e_prime << ',' << r.m << ',' << r.t
        << ',' << r.z << ',' << r.w << ',' << r.n << ',' << r.k_range << ',' << r.l_range << '\n';
}

/**
 * Admissible parameters of the six construction classes up to q <= q_max, in increasing (p, h) order.
 * Classes 1-4 take the seed length n and deg h as free symbols; classes 5-6 are fully concrete.
 */
inline std::vector<EnumRow> enumerate_class(int cls, std::uint64_t q_max) {
    if (cls < 1 || cls > 6) throw InvalidArgument("class id must be in 1..6");
    std::vector<EnumRow> rows;
    const bool ext = cls % 2 == 0;
    for (std::uint64_t p = 2; p <= q_max; ++p) {
        if (!arith::is_prime(p)) continue;
        for (unsigned h = 1;; ++h) {
            const auto q = arith::checked_pow(p, h);
            if (!q || *q > q_max) break;
            auto symbolic = [&](unsigned e, unsigned ep) {
                const std::uint64_t pe = arith::ipow(p, ep);
                EnumRow r{cls, p, h, *q, std::to_string(e), std::to_string(ep), "", "", "", "", ext ? "n+1" : "n", "", ""};
                r.k_range = "1..floor((" + std::to_string(pe) + "+n-1-deg_h)/" + std::to_string(pe + 1) + ")";
                r.l_range = ext ? "0..k-1" : "0..k";
                rows.push_back(r);
            };
            if (cls <= 2) {
                if (*q < 5) continue;
                for (unsigned ep = 1; ep < h; ++ep) {
                    const unsigned e = std::gcd(ep, h);
                    if ((h / e) % 2 == 0) symbolic(e, ep);
                }
            } else if (cls <= 4) {
                if (p == 2 || h % 2 != 0) continue;
                for (unsigned ep = 0; ep < h; ++ep)
                    if ((h / std::gcd(ep, h)) % 2 == 1) symbolic(h / 2, ep);
            } else {
                if (p == 2) continue;
                for (unsigned m = 1; m <= h; ++m) {
                    if (h % m != 0 || h / m < 2) continue;
                    const std::uint64_t pm = arith::ipow(p, m);
                    for (unsigned e = 0; e < h; ++e) {
                        const auto t = mersenne_feasible(p, e);
                        if (!t || (h / m) % (std::uint64_t{1} << *t) != 0) continue;
                        for (unsigned z = 1; z + 1 <= h / m; ++z)
                            for (std::uint64_t w = 1; w <= pm; ++w) {
                                const std::uint64_t n = w * arith::ipow(pm, z);
                                const auto kmax = dimension_bound(p, e, n, 0);
                                if (kmax < 1) continue;
                                rows.push_back({cls, p, h, *q, std::to_string(e), std::to_string(e), std::to_string(m),
                                                std::to_string(*t), std::to_string(z), std::to_string(w),
                                                std::to_string(ext ? n + 1 : n), "1.." + std::to_string(kmax),
                                                ext ? "0..k-1" : "0..k"});
                            }
                    }
                }
            }
        }
    }
    return rows;
}

inline int cmd_enumerate(int cls, std::uint64_t q_max, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto rows = enumerate_class(cls, q_max);
        if (opt.format == Format::Json) {
            json arr = json::array();
            for (const auto& r : rows) {
                arr.push_back({{"class", r.cls}, {"p", r.p}, {"h", r.h}, {"q", r.q}, {"e", r.e}, {"e_prime", r.e_prime},
                               {"m", r.m}, {"t", r.t}, {"z", r.z}, {"w", r.w}, {"n", r.n}, {"k_range", r.k_range},
                               {"l_range", r.l_range}});
            }
            out << arr.dump(2) << '\n';
        } else {
            out << "class,p,h,q,e,e_prime,m,t,z,w,n,k_range,l_range\n";
            for (const auto& r : rows) write_row(out, r);
        }
        return static_cast<int>(kOk);
    });
}

}  // namespace galhull::cli

#endif  // GALHULL_TOOLS_COMMANDS_HPP
