#include "supschur/expansion.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace supschur {

SchurExpansion SchurExpansion::single(Partition p, Int coeff) {
    SchurExpansion e;
    e.add(std::move(p), std::move(coeff));
    return e;
}

void SchurExpansion::add(Partition p, Int coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(p), std::move(coeff));
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int SchurExpansion::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int{0} : it->second;
}

unsigned SchurExpansion::weight() const {
    if (terms_.empty()) return 0;
    const unsigned w = terms_.begin()->first.weight();
    for (const auto& [p, c] : terms_)
        if (p.weight() != w) throw std::domain_error("SchurExpansion::weight: inhomogeneous");
    return w;
}

SchurExpansion SchurExpansion::operator+(const SchurExpansion& other) const {
    SchurExpansion out = *this;
    for (const auto& [p, c] : other.terms_) out.add(p, c);
    return out;
}

SchurExpansion SchurExpansion::operator-(const SchurExpansion& other) const {
    SchurExpansion out = *this;
    for (const auto& [p, c] : other.terms_) out.add(p, -c);
    return out;
}

SchurExpansion SchurExpansion::operator*(const Int& scalar) const {
    SchurExpansion out;
    if (scalar == 0) return out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * scalar);
    return out;
}

SchurExpansion SchurExpansion::phi_shifted() const {
    SchurExpansion out;
    for (const auto& [p, c] : terms_) out.add(p.phi_shift(), c);
    return out;
}

namespace {

std::string subscript(const Partition& p) {
    bool wide = false;
    for (unsigned part : p.parts()) wide = wide || part >= 10;
    std::ostringstream out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (wide && i) out << ",";
        out << p.parts()[i];
    }
    return out.str();
}

}  // namespace

std::string SchurExpansion::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, coeff] = *it;
        const bool negative = coeff < 0;
        const Int magnitude = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (p.empty()) {
            out << magnitude.str();
            continue;
        }
        if (magnitude != 1) out << magnitude.str() << " ";
        out << "S_{" << subscript(p) << "}";
    }
    return out.str();
}

std::string SchurExpansion::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, coeff] = *it;
        const bool negative = coeff < 0;
        const Int magnitude = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? "-" : "+");
        }
        if (p.empty()) {
            out << magnitude.str();
            continue;
        }
        if (magnitude != 1) out << magnitude.str();
        const std::string sub = subscript(p);
        if (sub.size() == 1)
            out << "S_" << sub;
        else
            out << "S_{" << sub << "}";
    }
    return out.str();
}

namespace {

nlohmann::json coeff_to_json(const Int& c) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (c >= lo && c <= hi) return nlohmann::json(static_cast<std::int64_t>(c));
    return nlohmann::json(c.str());
}

Int coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("SchurExpansion: coefficient must be integer or string");
}

}  // namespace

std::string SchurExpansion::to_json_string(int indent) const {
    nlohmann::json doc;
    doc["weight"] = weight();
    doc["terms"] = nlohmann::json::array();
    for (const auto& [p, c] : terms_) {
        nlohmann::json term;
        term["partition"] = p.parts();
        term["coeff"] = coeff_to_json(c);
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump(indent);
}

SchurExpansion SchurExpansion::from_json_string(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw std::invalid_argument("SchurExpansion: missing terms array");
    SchurExpansion e;
    for (const auto& term : doc["terms"]) {
        Partition p(term.at("partition").get<std::vector<unsigned>>());
        e.add(std::move(p), coeff_from_json(term.at("coeff")));
    }
    if (doc.contains("weight") && !e.empty() &&
        e.weight() != doc["weight"].get<unsigned>())
        throw std::invalid_argument("SchurExpansion: declared weight mismatch");
    return e;
}

}  // namespace supschur
