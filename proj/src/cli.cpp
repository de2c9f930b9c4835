#include "lcdkit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lcdkit/oracle.hpp"

namespace lcdkit::cli {

namespace {

using nlohmann::ordered_json;

std::uint64_t enum_budget() {
    if (const char* env = std::getenv("LCDKIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("LCDKIT_BUDGET: not a positive integer");
    }
    return oracle::kDefaultEnumBudget;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::optional<LcdType> parse_type_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return lcd_type_from_string(s);
}

int cmd_check(std::ostream& out, std::uint32_t p, const std::string& gen_text, bool json) {
    Field f(p);
    LinearCode c = LinearCode::from_text(f, gen_text);
    bool lcd = is_lcd(c);
    bool degenerate = (c.dimension() == 0 || c.dimension() == c.length());
    std::optional<LcdType> type;
    if (lcd && !degenerate) type = classify(c);
    if (json) {
        ordered_json j;
        j["version"] = 1;
        j["command"] = "check";
        j["p"] = p;
        j["n"] = c.length();
        j["k"] = c.dimension();
        j["lcd"] = lcd;
        j["type"] = type ? ordered_json(to_string(*type)) : ordered_json(nullptr);
        emit_json(out, j);
    } else if (!lcd) {
        out << "LCD: no\n";
    } else if (degenerate) {
        out << "LCD: yes, type n/a (k = 0 or k = n)\n";
    } else {
        out << "LCD: yes, type " << to_string(*type) << '\n';
    }
    return 0;
}

const char* to_string(BasisKind k) {
    switch (k) {
        case BasisKind::Orthonormal: return "Orthonormal";
        case BasisKind::Symplectic: return "Symplectic";
        default: return "DiagOneDelta";
    }
}

const char* to_string(CongruenceShape s) {
    switch (s) {
        case CongruenceShape::AlternatingJBlocks: return "AlternatingJBlocks";
        case CongruenceShape::IdentityBlock: return "IdentityBlock";
        default: return "DiagOneDelta";
    }
}

int cmd_basis(std::ostream& out, std::uint32_t p, const std::string& gen_text, bool json) {
    Field f(p);
    LinearCode c = LinearCode::from_text(f, gen_text);
    LcdBasis b = lcd_basis(c);
    if (json) {
        ordered_json j;
        j["version"] = 1;
        j["command"] = "basis";
        j["p"] = p;
        j["kind"] = to_string(b.kind);
        if (b.kind == BasisKind::DiagOneDelta) j["delta"] = b.delta;
        j["rows"] = b.rows.to_text();
        emit_json(out, j);
    } else {
        out << "kind: " << to_string(b.kind) << '\n';
        if (b.kind == BasisKind::DiagOneDelta) out << "delta: " << b.delta << '\n';
        out << "rows: " << b.rows.to_text() << '\n';
    }
    return 0;
}

int cmd_normalize(std::ostream& out, std::uint32_t p, const std::string& sym_text, bool json) {
    Field f(p);
    Matrix m = Matrix::from_text(f, sym_text);
    CongruenceResult r = congruence_normalize(m);
    if (json) {
        ordered_json j;
        j["version"] = 1;
        j["command"] = "normalize";
        j["p"] = p;
        j["shape"] = to_string(r.shape);
        j["rank"] = r.rank;
        if (r.shape == CongruenceShape::DiagOneDelta) j["delta"] = r.delta;
        j["normal"] = r.normal.to_text();
        j["transform"] = r.q_transform.to_text();
        emit_json(out, j);
    } else {
        out << "shape: " << to_string(r.shape) << '\n';
        out << "rank: " << r.rank << '\n';
        if (r.shape == CongruenceShape::DiagOneDelta) out << "delta: " << r.delta << '\n';
        out << "normal: " << r.normal.to_text() << '\n';
        out << "transform: " << r.q_transform.to_text() << '\n';
    }
    return 0;
}

int cmd_shorten(std::ostream& out, std::uint32_t p, const std::string& gen_text,
                std::size_t coord, bool json) {
    Field f(p);
    LinearCode c = LinearCode::from_text(f, gen_text);
    LinearCode shortened = shorten_lcd(c, coord);
    if (json) {
        ordered_json j;
        j["version"] = 1;
        j["command"] = "shorten";
        j["p"] = p;
        j["coord"] = coord;
        j["n"] = shortened.length();
        j["k"] = shortened.dimension();
        j["gen"] = shortened.generator().to_text();
        emit_json(out, j);
    } else {
        out << "gen: " << shortened.generator().to_text() << '\n';
    }
    return 0;
}

int cmd_count(std::ostream& out, std::uint32_t p, unsigned n, unsigned k,
              const std::string& type_flag, bool json) {
    std::optional<LcdType> type = parse_type_flag(type_flag);
    counting::BigInt v = (p == 2) ? counting::count_lcd_binary(n, k, type)
                                  : counting::count_lcd_q(n, k, p, type);
    if (json) {
        ordered_json j;
        j["version"] = 1;
        j["command"] = "count";
        j["p"] = p;
        j["n"] = n;
        j["k"] = k;
        j["type"] = type ? ordered_json(lcdkit::to_string(*type)) : ordered_json(nullptr);
        j["count"] = v.str();
        emit_json(out, j);
    } else {
        out << v.str() << '\n';
    }
    return 0;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << contents;
}

int cmd_enumerate(std::ostream& out, std::uint32_t p, unsigned n, const std::string& out_file,
                  const std::string& csv_file, const std::string& cache_dir, bool json) {
    Field f(p);
    std::optional<oracle::CensusReport> rep;
    std::string cache_path;
    if (!cache_dir.empty()) {
        std::string key = "lcdkit-census;v" + std::to_string(oracle::kCensusFormatVersion) +
                          ";p=" + std::to_string(p) + ";n=" + std::to_string(n);
        cache_path = cache_dir + "/census-" + hex64(fnv1a(key)) + ".json";
        std::ifstream in(cache_path, std::ios::binary);
        if (in) {
            try {
                ordered_json j = ordered_json::parse(in);
                oracle::CensusReport cached = oracle::CensusReport::from_json(j);
                if (cached.p == p && cached.n == n) rep = std::move(cached);
            } catch (const std::exception&) {
                rep.reset();  // unreadable cache entry: recompute
            }
        }
    }
    if (!rep) {
        rep = oracle::census(n, f, enum_budget());
        if (!cache_path.empty()) {
            std::filesystem::create_directories(cache_dir);
            write_file(cache_path, rep->to_json().dump(2) + "\n");
        }
    }
    if (!out_file.empty()) write_file(out_file, rep->to_json().dump(2) + "\n");
    if (!csv_file.empty()) write_file(csv_file, rep->to_csv());
    if (json) {
        emit_json(out, rep->to_json());
    } else {
        for (const auto& row : rep->rows) {
            out << "k=" << row.k << " total=" << row.total.str() << " lcd=" << row.lcd.str();
            if (p == 2) {
                out << " oo=" << row.oo.str() << " oe=" << row.oe.str()
                    << " eo=" << row.eo.str();
            } else {
                out << " plus=" << row.plus.str() << " minus=" << row.minus.str();
            }
            out << " d_lcd=";
            if (row.d_lcd) {
                out << *row.d_lcd;
            } else {
                out << '-';
            }
            out << " formula=" << (row.formula_match() ? "ok" : "MISMATCH") << '\n';
        }
    }
    return 0;
}

int cmd_dmax(std::ostream& out, std::uint32_t p, unsigned nmax, const std::string& out_file,
             const std::string& csv_file, bool json) {
    Field f(p);
    auto table = oracle::dlcd_table(nmax, f, enum_budget());
    auto to_json = [&]() {
        ordered_json j;
        j["version"] = 1;
        j["kind"] = "dlcd";
        j["p"] = p;
        j["nmax"] = nmax;
        ordered_json rows = ordered_json::array();
        for (const auto& e : table) {
            rows.push_back({{"n", e.n},
                            {"k", e.k},
                            {"d_lcd", e.d},
                            {"monotone", e.monotone_ok},
                            {"witness", e.witness}});
        }
        j["rows"] = std::move(rows);
        return j;
    };
    if (!out_file.empty()) write_file(out_file, to_json().dump(2) + "\n");
    if (!csv_file.empty()) {
        std::ostringstream csv;
        csv << "p,n,k,d_lcd,monotone,witness\n";
        for (const auto& e : table) {
            csv << p << ',' << e.n << ',' << e.k << ',' << e.d << ','
                << (e.monotone_ok ? "true" : "false") << ',' << e.witness << '\n';
        }
        write_file(csv_file, csv.str());
    }
    if (json) {
        emit_json(out, to_json());
    } else {
        for (const auto& e : table) {
            out << "n=" << e.n << " k=" << e.k << " d_lcd=" << e.d
                << " monotone=" << (e.monotone_ok ? "yes" : "NO") << " witness=" << e.witness
                << '\n';
        }
    }
    return 0;
}

int cmd_transporter(std::ostream& out, std::uint32_t p, const std::string& gen1,
                    const std::string& gen2, bool json) {
    Field f(p);
    LinearCode c1 = LinearCode::from_text(f, gen1);
    LinearCode c2 = LinearCode::from_text(f, gen2);
    Matrix q = transporter(c1, c2);
    if (json) {
        ordered_json j;
        j["version"] = 1;
        j["command"] = "transporter";
        j["p"] = p;
        j["q"] = q.to_text();
        emit_json(out, j);
    } else {
        out << "Q: " << q.to_text() << '\n';
    }
    return 0;
}

int cmd_canonical(std::ostream& out, std::uint32_t p, const std::string& type_flag, unsigned n,
                  unsigned k, bool json) {
    Field f(p);
    LcdType t = lcd_type_from_string(type_flag);
    CanonicalPair pair = canonical_code(t, n, k, f);
    if (json) {
        ordered_json j;
        j["version"] = 1;
        j["command"] = "canonical";
        j["p"] = p;
        j["type"] = lcdkit::to_string(t);
        j["n"] = n;
        j["k"] = k;
        j["gen"] = pair.gen.to_text();
        j["parity"] = pair.parity.to_text();
        emit_json(out, j);
    } else {
        out << "G: " << pair.gen.to_text() << '\n';
        out << "H: " << pair.parity.to_text() << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"lcdkit: exact tools for linear complementary dual codes over prime fields"};
    app.require_subcommand(1);

    struct {
        std::uint32_t field = 2;
        std::string gen, gen2, sym, type, out_file, csv_file, cache_dir;
        unsigned n = 0, k = 0, nmax = 0;
        std::size_t coord = 0;
        bool json = false;
    } opt;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "machine-readable output"); };

    CLI::App* check = app.add_subcommand("check", "LCD verdict and type of a code");
    check->add_option("--field", opt.field, "field modulus p (default 2)");
    check->add_option("--gen", opt.gen, "generator matrix text")->required();
    add_json(check);

    CLI::App* basis = app.add_subcommand("basis", "normal-form basis of an LCD code");
    basis->add_option("--field", opt.field);
    basis->add_option("--gen", opt.gen)->required();
    add_json(basis);

    CLI::App* normalize = app.add_subcommand("normalize", "congruence normal form of a symmetric matrix");
    normalize->add_option("--field", opt.field);
    normalize->add_option("--sym", opt.sym, "symmetric matrix text")->required();
    add_json(normalize);

    CLI::App* shorten = app.add_subcommand("shorten", "distance-preserving dimension reduction");
    shorten->add_option("--field", opt.field);
    shorten->add_option("--gen", opt.gen)->required();
    shorten->add_option("--coord", opt.coord, "coordinate (default 0)");
    add_json(shorten);

    CLI::App* count = app.add_subcommand("count", "exact LCD code count from the closed formulas");
    count->add_option("--field", opt.field);
    count->add_option("--n", opt.n)->required();
    count->add_option("--k", opt.k)->required();
    count->add_option("--type", opt.type, "OO|OE|EO (binary) or Plus|Minus (odd p)");
    add_json(count);

    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive census with formula checks");
    enumerate->add_option("--field", opt.field);
    enumerate->add_option("--n", opt.n)->required();
    enumerate->add_option("--out", opt.out_file, "write census JSON to file");
    enumerate->add_option("--csv", opt.csv_file, "write census CSV to file");
    enumerate->add_option("--cache", opt.cache_dir, "reuse/populate a census cache directory");
    add_json(enumerate);

    CLI::App* dmax = app.add_subcommand("dmax", "maximum minimum-distance table");
    dmax->add_option("--field", opt.field);
    dmax->add_option("--nmax", opt.nmax)->required();
    dmax->add_option("--out", opt.out_file, "write the table JSON to file");
    dmax->add_option("--csv", opt.csv_file, "write the table CSV to file");
    add_json(dmax);

    CLI::App* transp = app.add_subcommand("transporter", "orthogonal map between same-type codes");
    transp->add_option("--field", opt.field);
    transp->add_option("--gen1", opt.gen)->required();
    transp->add_option("--gen2", opt.gen2)->required();
    add_json(transp);

    CLI::App* canonical = app.add_subcommand("canonical", "reference generator/parity pair per type");
    canonical->add_option("--field", opt.field);
    canonical->add_option("--type", opt.type)->required();
    canonical->add_option("--n", opt.n)->required();
    canonical->add_option("--k", opt.k)->required();
    add_json(canonical);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(out, opt.field, opt.gen, opt.json);
        if (basis->parsed()) return cmd_basis(out, opt.field, opt.gen, opt.json);
        if (normalize->parsed()) return cmd_normalize(out, opt.field, opt.sym, opt.json);
        if (shorten->parsed()) return cmd_shorten(out, opt.field, opt.gen, opt.coord, opt.json);
        if (count->parsed()) return cmd_count(out, opt.field, opt.n, opt.k, opt.type, opt.json);
        if (enumerate->parsed()) {
            return cmd_enumerate(out, opt.field, opt.n, opt.out_file, opt.csv_file,
                                 opt.cache_dir, opt.json);
        }
        if (dmax->parsed()) {
            return cmd_dmax(out, opt.field, opt.nmax, opt.out_file, opt.csv_file, opt.json);
        }
        if (transp->parsed()) return cmd_transporter(out, opt.field, opt.gen, opt.gen2, opt.json);
        if (canonical->parsed()) {
            return cmd_canonical(out, opt.field, opt.type, opt.n, opt.k, opt.json);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace lcdkit::cli
