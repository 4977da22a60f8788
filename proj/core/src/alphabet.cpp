#include "supschur/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace supschur {

void LinearForm::normalize() {
    std::sort(coeffs_.begin(), coeffs_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint32_t, Int>> merged;
    for (auto& [var, c] : coeffs_) {
        if (!merged.empty() && merged.back().first == var)
            merged.back().second += c;
        else
            merged.emplace_back(var, std::move(c));
        if (!merged.empty() && merged.back().second == 0) merged.pop_back();
    }
    coeffs_ = std::move(merged);
}

LinearForm LinearForm::constant(Int c) {
    LinearForm f;
    f.constant_ = std::move(c);
    return f;
}

LinearForm LinearForm::variable(Variable v) {
    LinearForm f;
    f.coeffs_.emplace_back(v.id(), Int{1});
    return f;
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
    LinearForm f;
    f.constant_ = constant_ + other.constant_;
    f.coeffs_ = coeffs_;
    for (const auto& [var, c] : other.coeffs_) f.coeffs_.emplace_back(var, c);
    f.normalize();
    return f;
}

LinearForm LinearForm::operator-() const {
    LinearForm f = *this;
    f.constant_ = -f.constant_;
    for (auto& [var, c] : f.coeffs_) c = -c;
    return f;
}

LinearForm LinearForm::operator-(const LinearForm& other) const {
    return *this + (-other);
}

LinearForm LinearForm::operator*(const Int& scalar) const {
    LinearForm f = *this;
    f.constant_ *= scalar;
    for (auto& [var, c] : f.coeffs_) c *= scalar;
    f.normalize();
    return f;
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p = Polynomial::constant(constant_);
    for (const auto& [var, c] : coeffs_)
        p += Polynomial::term(Monomial::of(Variable::named(Variable::name_of_id(var))), c);
    return p;
}

namespace {

/* One additive term of a linear form: [sign] [integer] ['*'] [identifier]. */
LinearForm parse_term(std::string_view text, bool negative) {
    std::size_t pos = 0;
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        digits += text[pos++];
    if (pos < text.size() && text[pos] == '*') {
        if (digits.empty()) throw std::invalid_argument("linear form: dangling '*'");
        ++pos;
    }
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        name += text[pos++];
    if (pos != text.size() || (digits.empty() && name.empty()))
        throw std::invalid_argument("linear form: cannot parse term '" + std::string(text) + "'");
    if (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0])))
        throw std::invalid_argument("linear form: identifier starts with a digit in '" +
                                    std::string(text) + "'");
    Int coeff = digits.empty() ? Int{1} : Int(digits);
    if (negative) coeff = -coeff;
    if (name.empty()) return LinearForm::constant(coeff);
    return LinearForm::variable(Variable::named(name)) * coeff;
}

}  // namespace

LinearForm LinearForm::parse(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    if (compact.empty()) throw std::invalid_argument("linear form: empty");

    LinearForm result;
    std::size_t start = 0;
    bool negative = false;
    if (compact[0] == '+' || compact[0] == '-') {
        negative = compact[0] == '-';
        start = 1;
    }
    std::size_t pos = start;
    while (pos <= compact.size()) {
        if (pos == compact.size() || compact[pos] == '+' || compact[pos] == '-') {
            result = result + parse_term(std::string_view(compact).substr(start, pos - start),
                                         negative);
            if (pos == compact.size()) break;
            negative = compact[pos] == '-';
            start = pos + 1;
        }
        ++pos;
    }
    return result;
}

Alphabet Alphabet::of_variables(std::string_view stem, unsigned count) {
    std::vector<LinearForm> letters;
    letters.reserve(count);
    for (Variable v : Variable::sequence(stem, count))
        letters.push_back(LinearForm::variable(v));
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::parse(std::string_view text) {
    std::vector<LinearForm> letters;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view piece = text.substr(start, comma - start);
        /* Allow an entirely empty list, but not empty letters in a list. */
        if (!piece.empty() || text.find_first_not_of(" \t") != std::string_view::npos)
            letters.push_back(LinearForm::parse(piece));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::operator+(const Alphabet& other) const {
    std::vector<LinearForm> letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::negated() const {
    std::vector<LinearForm> letters;
    letters.reserve(letters_.size());
    for (const LinearForm& f : letters_) letters.push_back(-f);
    return Alphabet(std::move(letters));
}

}  // namespace supschur
