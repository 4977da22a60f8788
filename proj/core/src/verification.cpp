#include "supschur/verification.hpp"

#include <json.hpp>

#include <sstream>

namespace supschur {

bool VerificationReport::all_pass() const {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

std::string VerificationReport::to_json_string(int indent) const {
    nlohmann::json doc;
    doc["r"] = r;
    doc["checks"] = nlohmann::json::array();
    for (const auto& check : checks) {
        nlohmann::json entry;
        entry["name"] = check.name;
        entry["pass"] = check.pass;
        entry["residual_terms"] = check.residual_terms;
        doc["checks"].push_back(std::move(entry));
    }
    doc["ms"] = ms;
    return doc.dump(indent);
}

std::string VerificationReport::to_text() const {
    std::size_t width = 0;
    for (const auto& check : checks) width = std::max(width, check.name.size());
    std::ostringstream out;
    for (const auto& check : checks) {
        out << check.name << std::string(width - check.name.size() + 1, ' ');
        if (check.pass)
            out << "pass\n";
        else
            out << "FAIL (" << check.residual_terms << " residual terms)\n";
    }
    out << "r=" << r << " " << (all_pass() ? "all checks pass" : "CHECKS FAILED") << " ["
        << ms << " ms]\n";
    return out.str();
}

}  // namespace supschur
