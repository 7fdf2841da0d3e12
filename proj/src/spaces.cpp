#include "boundaryk/spaces.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace boundaryk {

const FgAbGroup& GradedGroup::at(long degree) const {
    static const FgAbGroup trivial;
    if (degree < 0 || static_cast<std::size_t>(degree) >= groups_.size()) return trivial;
    return groups_[static_cast<std::size_t>(degree)];
}

void GradedGroup::set(std::size_t degree, FgAbGroup g) {
    if (degree >= groups_.size()) groups_.resize(degree + 1);
    groups_[degree] = std::move(g);
}

std::size_t GradedGroup::total_rank() const {
    std::size_t r = 0;
    for (const auto& g : groups_) r += g.rank();
    return r;
}

bool GradedGroup::torsion_free() const {
    return std::all_of(groups_.begin(), groups_.end(), [](const FgAbGroup& g) { return g.is_free(); });
}

Integer alternating_rank_sum(const GradedGroup& g) {
    Integer sum = 0;
    for (std::size_t i = 0; i < g.length(); ++i) {
        if (i % 2 == 0)
            sum += g.at(static_cast<long>(i)).rank();
        else
            sum -= g.at(static_cast<long>(i)).rank();
    }
    return sum;
}

Integer euler_characteristic(const SpaceInput& s) {
    if (s.compact && s.euler) return *s.euler;
    return alternating_rank_sum(s.cohomology);
}

ValidationReport validate(const SpaceInput& s) {
    ValidationReport report;
    auto violate = [&](std::string rule, std::string detail) {
        report.violations.push_back({std::move(rule), std::move(detail)});
    };
    const auto& h = s.cohomology;

    if (s.dim < 2) violate("dimension", "dim = " + std::to_string(s.dim) + ", need dim >= 2");
    if (s.rank < 1) violate("rank", "rank = " + std::to_string(s.rank) + ", need rank >= 1");
    if (s.dim >= 0 && h.length() != static_cast<std::size_t>(s.dim) + 1)
        violate("cohomology-length", "expected degrees 0.." + std::to_string(s.dim) + ", got " +
                                         std::to_string(h.length()) + " groups");
    if (!s.orientable) violate("orientable", "Gamma\\X must be orientable");
    if (h.at(0) != FgAbGroup::free(1)) violate("connected", "H0 = " + h.at(0).to_string() + ", need Z");
    if (!h.at(1).is_free()) violate("h1-torsion-free", "H1 = " + h.at(1).to_string() + " has torsion");

    const long n = s.dim;
    if (!s.compact) {
        if (!h.at(n).is_trivial())
            violate("noncompact-top-degree", "H" + std::to_string(n) + " = " + h.at(n).to_string() + ", need 0");
        if (s.euler) violate("euler-declared", "euler must be absent for a noncompact space");
    } else {
        if (h.at(n) != FgAbGroup::free(1))
            violate("compact-top-degree", "H" + std::to_string(n) + " = " + h.at(n).to_string() + ", need Z");
        if (!s.euler) {
            violate("euler-declared", "euler is required for a compact space");
        } else {
            const Integer alt = alternating_rank_sum(h);
            if (*s.euler != alt)
                violate("euler-mismatch", "declared euler = " + s.euler->str() +
                                              ", alternating rank sum = " + alt.str());
            if (n % 2 == 1 && *s.euler != 0)
                violate("odd-dimension-euler", "dim " + std::to_string(n) + " is odd, declared euler = " +
                                                   s.euler->str() + ", need 0");
        }
        if (h.torsion_free()) {
            for (long i = 0; i <= n / 2; ++i) {
                if (h.at(i).rank() != h.at(n - i).rank())
                    violate("poincare-duality", "rank H" + std::to_string(i) + " = " +
                                                    std::to_string(h.at(i).rank()) + " but rank H" +
                                                    std::to_string(n - i) + " = " +
                                                    std::to_string(h.at(n - i).rank()));
            }
        }
    }

    for (std::size_t i = 0; i < h.length(); ++i) {
        if (!h.at(static_cast<long>(i)).is_free())
            report.warnings.push_back("H" + std::to_string(i) + " = " + h.at(static_cast<long>(i)).to_string() +
                                      " has torsion; K-theory formulas need torsion-free cohomology");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Space file format

SpaceParseError::SpaceParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

bool parse_bool(const std::string& v, std::size_t line, const std::string& key) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw SpaceParseError(line, "key '" + key + "' expects true or false, got '" + v + "'");
}

long parse_int(const std::string& v, std::size_t line, const std::string& key) {
    std::size_t used = 0;
    long out = 0;
    try {
        out = std::stol(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw SpaceParseError(line, "key '" + key + "' expects an integer, got '" + v + "'");
    return out;
}

Integer parse_integer(const std::string& v, std::size_t line, const std::string& key) {
    std::string_view digits = v;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw SpaceParseError(line, "key '" + key + "' expects an integer, got '" + v + "'");
    return Integer(v);
}

std::optional<std::size_t> cohomology_degree(const std::string& key) {
    if (key.size() < 2 || key[0] != 'H') return std::nullopt;
    if (!std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return std::nullopt;
    return std::stoul(key.substr(1));
}

}  // namespace

SpaceInput parse_space_file(std::string_view text) {
    SpaceInput s;
    std::map<std::string, std::size_t> seen;  // key -> line
    std::map<std::size_t, std::pair<FgAbGroup, std::size_t>> degrees;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw SpaceParseError(line_no, "expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw SpaceParseError(line_no, "missing key before '='");
        if (value.empty()) throw SpaceParseError(line_no, "missing value for key '" + key + "'");
        if (!seen.emplace(key, line_no).second) throw SpaceParseError(line_no, "duplicate key '" + key + "'");

        if (key == "name") {
            s.name = value;
        } else if (key == "dim") {
            s.dim = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "rank") {
            s.rank = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "compact") {
            s.compact = parse_bool(value, line_no, key);
        } else if (key == "orientable") {
            s.orientable = parse_bool(value, line_no, key);
        } else if (key == "euler") {
            s.euler = parse_integer(value, line_no, key);
        } else if (key == "assume_baum_connes") {
            s.assume_baum_connes = parse_bool(value, line_no, key);
        } else if (auto degree = cohomology_degree(key)) {
            FgAbGroup g;
            try {
                g = FgAbGroup::parse(value);
            } catch (const GroupParseError& e) {
                throw SpaceParseError(line_no, e.what());
            }
            if (*degree == 1 && !g.is_free())
                throw SpaceParseError(line_no, "H1 = " + g.to_string() + " has torsion; H1 is always torsion-free");
            degrees.emplace(*degree, std::make_pair(std::move(g), line_no));
        } else {
            throw SpaceParseError(line_no, "unknown key '" + key + "'");
        }
    }

    for (const char* key : {"name", "dim", "rank", "compact", "orientable"})
        if (!seen.count(key)) throw SpaceParseError(0, std::string("missing mandatory key '") + key + "'");
    if (s.dim < 1) throw SpaceParseError(seen["dim"], "dim must be positive");

    std::vector<FgAbGroup> groups(static_cast<std::size_t>(s.dim) + 1);
    for (auto& [degree, entry] : degrees) {
        if (degree > static_cast<std::size_t>(s.dim))
            throw SpaceParseError(entry.second, "degree " + std::to_string(degree) + " exceeds dim " + std::to_string(s.dim));
        groups[degree] = std::move(entry.first);
    }
    for (std::size_t d = 0; d <= static_cast<std::size_t>(s.dim); ++d)
        if (!degrees.count(d)) throw SpaceParseError(0, "missing mandatory key 'H" + std::to_string(d) + "'");
    s.cohomology = GradedGroup(std::move(groups));
    return s;
}

SpaceInput load_space_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_space_file(buffer.str());
}

std::string serialize_space(const SpaceInput& s) {
    std::ostringstream os;
    os << "name = " << s.name << '\n'
       << "dim = " << s.dim << '\n'
       << "rank = " << s.rank << '\n'
       << "compact = " << (s.compact ? "true" : "false") << '\n'
       << "orientable = " << (s.orientable ? "true" : "false") << '\n';
    if (s.euler) os << "euler = " << *s.euler << '\n';
    if (s.assume_baum_connes) os << "assume_baum_connes = true\n";
    for (std::size_t i = 0; i < s.cohomology.length(); ++i)
        os << 'H' << i << " = " << s.cohomology.at(static_cast<long>(i)).to_string() << '\n';
    return os.str();
}

}  // namespace boundaryk
