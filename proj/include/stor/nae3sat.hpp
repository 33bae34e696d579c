#ifndef STOR_NAE3SAT_HPP
#define STOR_NAE3SAT_HPP

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stor {

/// Not-all-equal 3-SAT formula. Literals are signed 1-based variable
/// indices; every clause has exactly three of them. A clause may repeat a
/// variable or contain a variable together with its negation.
struct Nae3SatFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    bool clause_mixed(int c, const std::vector<bool>& assignment) const {
        bool any_true = false, any_false = false;
        for (int lit : clauses[c]) {
            bool val = assignment[std::abs(lit) - 1] == (lit > 0);
            (val ? any_true : any_false) = true;
        }
        return any_true && any_false;
    }

    bool satisfied_by(const std::vector<bool>& assignment) const {
        for (size_t c = 0; c < clauses.size(); c++)
            if (!clause_mixed(static_cast<int>(c), assignment)) return false;
        return true;
    }
};

struct FormulaCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute force over all 2^n assignments; returns a witness or nothing.
inline std::optional<std::vector<bool>> nae_satisfiable(const Nae3SatFormula& f, int cap = 24) {
    if (f.num_vars > cap)
        throw FormulaCapExceeded("formula has " + std::to_string(f.num_vars) + " variables, cap is " +
                                 std::to_string(cap));
    const unsigned long long total = 1ULL << f.num_vars;
    std::vector<bool> a(f.num_vars);
    for (unsigned long long mask = 0; mask < total; mask++) {
        for (int i = 0; i < f.num_vars; i++) a[i] = mask >> i & 1;
        if (f.satisfied_by(a)) return a;
    }
    return std::nullopt;
}

/// DIMACS-style input: `p cnf <vars> <clauses>`, then three nonzero literals
/// and a terminating 0 per clause. `c` comment lines are skipped.
inline Nae3SatFormula parse_cnf(std::istream& is) {
    Nae3SatFormula f;
    std::string line;
    bool have_header = false;
    long nc = 0;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (have_header || !(ls >> kind >> f.num_vars >> nc) || kind != "cnf" || f.num_vars < 0 || nc < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed 'p cnf' header");
            have_header = true;
            continue;
        }
        if (!have_header) throw std::runtime_error("line " + std::to_string(lineno) + ": clause before header");
        std::istringstream cs(line);
        std::array<int, 3> cl{};
        int z = 1;
        if (!(cs >> cl[0] >> cl[1] >> cl[2] >> z) || z != 0)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected exactly three literals terminated by 0");
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw std::runtime_error("line " + std::to_string(lineno) + ": literal out of range");
        f.clauses.push_back(cl);
    }
    if (!have_header) throw std::runtime_error("missing 'p cnf' header");
    if (static_cast<long>(f.clauses.size()) != nc)
        throw std::runtime_error("clause count mismatch: header says " + std::to_string(nc) + ", found " +
                                 std::to_string(f.clauses.size()));
    return f;
}

inline Nae3SatFormula parse_cnf(const std::string& text) {
    std::istringstream is(text);
    return parse_cnf(is);
}

inline std::string serialize_cnf(const Nae3SatFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& cl : f.clauses) os << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
    return os.str();
}

} // namespace stor

#endif
