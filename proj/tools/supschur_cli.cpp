// Command-line front end: Thom-polynomial expansions, restriction-equation
// verification, coefficient tables, staircase matrices, and ad-hoc Schur
// evaluation, with an on-disk JSON cache for computed expansions.

#include <CLI11.hpp>
#include <json.hpp>

#include <supschur/alphabet.hpp>
#include <supschur/expansion.hpp>
#include <supschur/schur.hpp>
#include <supschur/staircase.hpp>
#include <supschur/thom_a3.hpp>
#include <supschur/verification.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#ifndef SUPSCHUR_VERSION
#define SUPSCHUR_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace supschur;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

unsigned effective_jobs(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::optional<std::string> resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SUPSCHUR_CACHE_DIR"); env && *env) return std::string(env);
    return std::nullopt;
}

// Returns the canonical JSON document for T^{A3}_r, reading it from the cache
// when present and writing it (atomically: temp file then rename) otherwise.
std::string thom_json_document(unsigned r, const std::optional<std::string>& cache_dir) {
    fs::path file;
    if (cache_dir) {
        file = fs::path(*cache_dir) /
               ("thom_a3_r" + std::to_string(r) + "_v" + SUPSCHUR_VERSION + ".json");
        if (fs::exists(file)) {
            std::ifstream in(file, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            if (in.good() || in.eof()) return buf.str();
        }
    }
    std::string doc = thom_a3(r).to_json_string();
    if (cache_dir) {
        fs::create_directories(file.parent_path());
        fs::path tmp = file;
        tmp += ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << doc;
            if (!out.good()) {
                std::error_code ignore;
                fs::remove(tmp, ignore);
                throw std::runtime_error("cannot write cache file " + tmp.string());
            }
        }
        fs::rename(tmp, file);
    }
    return doc;
}

int run_thom(unsigned r, const std::string& format, const std::string& cache_flag) {
    auto cache_dir = resolve_cache_dir(cache_flag);
    std::string doc = thom_json_document(r, cache_dir);
    if (format == "json") {
        std::cout << doc << "\n";
        return kExitOk;
    }
    SchurExpansion t = SchurExpansion::from_json_string(doc);
    if (format == "text") {
        std::cout << t.to_text() << "\n";
    } else if (format == "latex") {
        std::cout << t.to_latex() << "\n";
    } else {
        std::cout << to_chern_monomials(t).to_string() << "\n";
    }
    return kExitOk;
}

int run_verify(unsigned r, const std::string& candidate, unsigned jobs, bool appendix,
               const std::string& format) {
    SchurExpansion t = candidate == "f-part-only" ? f_part(r) : thom_a3(r);
    VerificationReport report = verify_restriction(t, r, effective_jobs(jobs));
    if (appendix && r >= 2) {
        VerificationReport extra = verify_appendix_application(r);
        for (auto& check : extra.checks) report.checks.push_back(std::move(check));
        report.ms += extra.ms;
    }
    if (format == "json") {
        std::cout << report.to_json_string() << "\n";
    } else {
        std::cout << report.to_text() << "\n";
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

nlohmann::json int_or_string(const Int& value) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi) return nlohmann::json(value.convert_to<std::int64_t>());
    return nlohmann::json(value.str());
}

int run_etable(unsigned rows, const std::string& format) {
    // Display convention: row k of the output is table row i = k + 1, so
    // `--rows 7` prints the seven rows i = 2..8.
    unsigned max_i = rows + 1;
    ETable table(max_i);
    std::vector<std::vector<Int>> cells;
    for (unsigned i = 2; i <= max_i; ++i) {
        std::vector<Int> row;
        for (unsigned j = 0; j <= ETable::support_width(i); ++j) row.push_back(table.at(i, j));
        cells.push_back(std::move(row));
    }
    if (format == "json") {
        nlohmann::json doc;
        doc["rows"] = nlohmann::json::array();
        for (const auto& row : cells) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const Int& v : row) jrow.push_back(int_or_string(v));
            doc["rows"].push_back(std::move(jrow));
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::size_t> widths;
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (widths.size() <= c) widths.push_back(0);
            widths[c] = std::max(widths[c], row[c].str().size());
        }
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c].str();
            if (c > 0) line += "  ";
            line += std::string(widths[c] - cell.size(), ' ') + cell;
        }
        std::cout << line << "\n";
    }
    return kExitOk;
}

// A seed entry is an integer or an integer-coefficient power of one variable:
// "5", "-6", "y", "2y", "3*y^2", "y^4".
Polynomial parse_seed_entry(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty seed entry");
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    if (negative) coeff = -coeff;
    if (pos < s.size() && s[pos] == '*') {
        if (digits.empty()) throw std::invalid_argument("misplaced '*' in seed entry: " + raw);
        ++pos;
    }
    if (pos == s.size()) {
        if (digits.empty()) throw std::invalid_argument("malformed seed entry: " + raw);
        return Polynomial::constant(coeff);
    }
    if (!std::isalpha(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("malformed seed entry: " + raw);
    std::string name;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) name += s[pos++];
    unsigned exponent = 1;
    if (pos < s.size()) {
        if (s[pos] != '^') throw std::invalid_argument("malformed seed entry: " + raw);
        std::string e = s.substr(pos + 1);
        if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed exponent in seed entry: " + raw);
        exponent = static_cast<unsigned>(std::stoul(e));
        pos = s.size();
    }
    Polynomial var = Polynomial::variable(Variable::named(name));
    return Polynomial::constant(coeff) * var.pow(exponent);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    for (const std::string& piece : split(s, ',')) {
        std::string trimmed;
        for (char ch : piece)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty() || trimmed.find_first_not_of("+-0123456789") != std::string::npos)
            throw std::invalid_argument("malformed integer list entry: " + piece);
        out.emplace_back(trimmed);
    }
    return out;
}

int run_staircase(const std::string& seed_entries, const std::string& seed_rational,
                  unsigned rows, const std::string& format) {
    Seed seed = [&] {
        if (!seed_rational.empty()) {
            auto halves = split(seed_rational, '/');
            if (halves.size() != 2)
                throw std::invalid_argument("--seed-rational expects NUM/DEN integer lists");
            return Seed::rational_integers(parse_int_list(halves[0]), parse_int_list(halves[1]));
        }
        std::vector<Polynomial> entries;
        for (const std::string& piece : split(seed_entries, ','))
            entries.push_back(parse_seed_entry(piece));
        return Seed::explicit_entries(std::move(entries));
    }();
    StaircaseMatrix matrix(seed, rows);
    std::vector<std::vector<Polynomial>> cells;
    for (unsigned s = 1; s <= rows; ++s) {
        std::vector<Polynomial> row;
        for (unsigned t = 1; t <= StaircaseMatrix::support_width(s); ++t)
            row.push_back(matrix.at(s, t));
        cells.push_back(std::move(row));
    }
    if (format == "json") {
        nlohmann::json doc;
        doc["rows"] = nlohmann::json::array();
        for (const auto& row : cells) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const Polynomial& p : row) {
                if (p.is_constant()) {
                    jrow.push_back(int_or_string(p.constant_value()));
                } else {
                    jrow.push_back(p.to_string());
                }
            }
            doc["rows"].push_back(std::move(jrow));
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::size_t> widths;
    std::vector<std::vector<std::string>> rendered;
    for (const auto& row : cells) {
        std::vector<std::string> r;
        for (std::size_t c = 0; c < row.size(); ++c) {
            r.push_back(row[c].to_string());
            if (widths.size() <= c) widths.push_back(0);
            widths[c] = std::max(widths[c], r.back().size());
        }
        rendered.push_back(std::move(r));
    }
    for (const auto& row : rendered) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            line += row[c] + std::string(widths[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        std::cout << line << "\n";
    }
    return kExitOk;
}

int run_schur_eval(const std::string& index, const std::string& plus, const std::string& minus) {
    std::vector<long long> parts;
    for (const std::string& piece : split(index, ',')) {
        std::string trimmed;
        for (char ch : piece)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty() || trimmed.find_first_not_of("+-0123456789") != std::string::npos)
            throw std::invalid_argument("malformed index entry: " + piece);
        parts.push_back(std::stoll(trimmed));
    }
    Alphabet a = plus.empty() ? Alphabet(std::vector<LinearForm>{}) : Alphabet::parse(plus);
    Alphabet b = minus.empty() ? Alphabet(std::vector<LinearForm>{}) : Alphabet::parse(minus);
    Evaluator ev(a - b);
    std::cout << ev.schur_indexed(parts).to_string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact supersymmetric-Schur computations for second-order Thom polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SUPSCHUR_VERSION);

    unsigned r = 1;
    unsigned rows = 7;
    unsigned jobs = 0;
    bool appendix = false;
    std::string format_thom = "text";
    std::string format_verify = "text";
    std::string format_table = "text";
    std::string cache_flag;
    std::string candidate = "full";
    std::string seed_entries;
    std::string seed_rational;
    std::string index;
    std::string plus_letters;
    std::string minus_letters;

    CLI::App* thom = app.add_subcommand("thom", "Print the degree-r Thom polynomial expansion");
    thom->add_option("--r", r, "Codimension parameter r (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    thom->add_option("--format", format_thom, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex", "chern"}));
    thom->add_option("--cache-dir", cache_flag,
                     "Cache directory (default: $SUPSCHUR_CACHE_DIR if set)");

    CLI::App* verify = app.add_subcommand("verify", "Check the restriction equations for degree r");
    verify->add_option("--r", r, "Codimension parameter r (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--candidate", candidate, "Candidate expansion to test")
        ->check(CLI::IsMember({"full", "f-part-only"}));
    verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
    verify->add_flag("--appendix", appendix, "Also check the staircase evaluation identities");
    verify->add_option("--format", format_verify, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* etable = app.add_subcommand("etable", "Print the coefficient table e_{i,j}");
    etable->add_option("--rows", rows, "Number of rows to print")
        ->required()
        ->check(CLI::PositiveNumber);
    etable->add_option("--format", format_table, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* staircase = app.add_subcommand("staircase", "Print a Pascal-staircase matrix");
    auto* seed_opt = staircase->add_option("--seed", seed_entries,
                                           "Explicit first-column entries, e.g. 1,y,y^2,y^3");
    auto* rational_opt = staircase->add_option(
        "--seed-rational", seed_rational,
        "First column as Taylor coefficients of NUM/DEN, e.g. 5,-6/1,-6,11,-6");
    seed_opt->excludes(rational_opt);
    staircase->add_option("--rows", rows, "Number of rows to print")
        ->required()
        ->check(CLI::PositiveNumber);
    staircase->add_option("--format", format_table, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* schur_eval =
        app.add_subcommand("schur-eval", "Evaluate one Schur function of an alphabet difference");
    schur_eval->add_option("--index", index, "Comma-separated integer index, e.g. 1,2")->required();
    schur_eval->add_option("--plus", plus_letters, "Plus alphabet, e.g. x1,x2");
    schur_eval->add_option("--minus", minus_letters, "Minus alphabet, e.g. b1,2x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (thom->parsed()) return run_thom(r, format_thom, cache_flag);
        if (verify->parsed()) return run_verify(r, candidate, jobs, appendix, format_verify);
        if (etable->parsed()) return run_etable(rows, format_table);
        if (staircase->parsed()) {
            if (seed_entries.empty() && seed_rational.empty())
                throw std::invalid_argument("staircase requires --seed or --seed-rational");
            return run_staircase(seed_entries, seed_rational, rows, format_table);
        }
        if (schur_eval->parsed()) return run_schur_eval(index, plus_letters, minus_letters);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
