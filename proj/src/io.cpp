#include "phl/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace phl {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
    throw std::invalid_argument(what + " at position " + std::to_string(pos));
}

// Word body shared by poset and permutation forms: digit string, or
// comma-separated integers when any comma is present. offset is the position
// of the first body character in the original input, for error messages.
std::vector<int> parse_word(const std::string& body, std::size_t offset) {
    std::vector<int> word;
    if (body.empty()) return word;
    if (body.find(',') == std::string::npos) {
        for (std::size_t i = 0; i < body.size(); ++i) {
            char c = body[i];
            if (c < '1' || c > '9') fail("expected digit 1-9", offset + i);
            word.push_back(c - '0');
        }
        return word;
    }
    std::size_t i = 0;
    while (true) {
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (i == start) fail("expected integer", offset + start);
        word.push_back(std::stoi(body.substr(start, i - start)));
        if (i == body.size()) break;
        if (body[i] != ',') fail("expected ','", offset + i);
        ++i;
    }
    return word;
}

Permutation checked_perm(std::vector<int> word, std::size_t offset) {
    try {
        return Permutation(std::move(word));
    } catch (const std::invalid_argument& e) {
        fail(std::string(e.what()) + ", in word starting", offset);
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string basis_word(const PlanePoset& p) { return p.code().to_string(); }
std::string basis_word(const Permutation& s) { return s.to_string(); }
std::string basis_text(const PlanePoset& p) { return p.to_string(); }
std::string basis_text(const Permutation& s) { return "s:" + s.to_string(); }

template <class B, class L>
std::string terms_to_text(const LinearCombo<B, L>& x) {
    if (x.is_zero()) return "0\n";
    std::ostringstream out;
    for (const auto& [b, c] : x.terms())
        out << "(" << c.to_string() << ") " << basis_text(b) << "\n";
    return out.str();
}

template <class B, class L>
std::string pair_terms_to_text(const LinearCombo<std::pair<B, B>, L>& x) {
    if (x.is_zero()) return "0\n";
    std::ostringstream out;
    for (const auto& [b, c] : x.terms())
        out << "(" << c.to_string() << ") " << basis_text(b.first) << " (x) "
            << basis_text(b.second) << "\n";
    return out.str();
}

template <class B, class L>
std::string terms_to_csv(const LinearCombo<B, L>& x) {
    std::ostringstream out;
    out << "basis,coeff\n";
    for (const auto& [b, c] : x.terms())
        out << csv_cell(basis_word(b)) << "," << csv_cell(c.to_string()) << "\n";
    return out.str();
}

template <class B, class L>
std::string pair_terms_to_csv(const LinearCombo<std::pair<B, B>, L>& x) {
    std::ostringstream out;
    out << "left,right,coeff\n";
    for (const auto& [b, c] : x.terms())
        out << csv_cell(basis_word(b.first)) << "," << csv_cell(basis_word(b.second)) << ","
            << csv_cell(c.to_string()) << "\n";
    return out.str();
}

template <class B, class L>
std::string terms_to_json(const LinearCombo<B, L>& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [b, c] : x.terms())
        terms.push_back({{"basis", basis_word(b)}, {"coeff", c.to_string()}});
    return nlohmann::json{{"terms", terms}}.dump(2);
}

template <class B, class L>
std::string pair_terms_to_json(const LinearCombo<std::pair<B, B>, L>& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [b, c] : x.terms())
        terms.push_back({{"basis", {basis_word(b.first), basis_word(b.second)}},
                         {"coeff", c.to_string()}});
    return nlohmann::json{{"terms", terms}}.dump(2);
}

nlohmann::json parse_terms(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("expected an object with a \"terms\" array");
    return j["terms"];
}

PlanePoset basis_from_word(const std::string& word, const PlanePoset*) {
    return PlanePoset(checked_perm(parse_word(word, 0), 0));
}

Permutation basis_from_word(const std::string& word, const Permutation*) {
    return checked_perm(parse_word(word, 0), 0);
}

template <class Combo, class B>
Combo combo_from_json_impl(const std::string& text, const B* tag) {
    Combo result;
    for (const auto& term : parse_terms(text)) {
        if (!term.contains("basis") || !term.contains("coeff"))
            throw std::invalid_argument("term must have \"basis\" and \"coeff\"");
        result.add(basis_from_word(term["basis"].get<std::string>(), tag),
                   parse_poly(term["coeff"].get<std::string>()));
    }
    return result;
}

template <class Combo, class B>
Combo pair_combo_from_json_impl(const std::string& text, const B* tag) {
    Combo result;
    for (const auto& term : parse_terms(text)) {
        if (!term.contains("basis") || !term.contains("coeff"))
            throw std::invalid_argument("term must have \"basis\" and \"coeff\"");
        const auto& b = term["basis"];
        if (!b.is_array() || b.size() != 2)
            throw std::invalid_argument("tensor basis must be a two-element array");
        result.add({basis_from_word(b[0].get<std::string>(), tag),
                    basis_from_word(b[1].get<std::string>(), tag)},
                   parse_poly(term["coeff"].get<std::string>()));
    }
    return result;
}

// Recursive-descent polynomial scanner over the fixed grammar
//   poly   := ['-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := integer | variable ['^' integer]
class PolyScanner {
public:
    explicit PolyScanner(const std::string& text) : text_(text) {}

    QPoly run() {
        QPoly result;
        skip_space();
        bool negate = consume('-');
        result += signed_term(negate);
        skip_space();
        while (pos_ < text_.size()) {
            if (consume('+')) {
                result += signed_term(false);
            } else if (consume('-')) {
                result += signed_term(true);
            } else {
                fail("expected '+' or '-'", pos_);
            }
            skip_space();
        }
        return result;
    }

private:
    QPoly signed_term(bool negate) {
        QPoly t = QPoly::one();
        t *= factor();
        skip_space();
        while (consume('*')) t *= factor();
        return negate ? -t : t;
    }

    QPoly factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected a factor", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return QPoly(integer());
        Var v;
        if (c == 't') {
            v = Var::T;
            ++pos_;
        } else if (c == 'q') {
            if (pos_ + 1 >= text_.size() || text_[pos_ + 1] < '1' || text_[pos_ + 1] > '4')
                fail("expected q1..q4", pos_);
            v = static_cast<Var>(text_[pos_ + 1] - '1');
            pos_ += 2;
        } else {
            fail("expected integer, q1..q4 or t", pos_);
        }
        skip_space();
        if (consume('^')) {
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected exponent", pos_);
            Int e = integer();
            if (e > 100000) fail("exponent too large", pos_);
            return QPoly::variable(v, static_cast<std::uint32_t>(e));
        }
        return QPoly::variable(v);
    }

    Int integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

PlanePoset parse_poset(const std::string& text) {
    if (text.rfind("p:", 0) != 0) fail("expected \"p:\" prefix", 0);
    return PlanePoset(checked_perm(parse_word(text.substr(2), 2), 2));
}

Permutation parse_perm(const std::string& text) {
    if (text.rfind("s:", 0) != 0) fail("expected \"s:\" prefix", 0);
    return checked_perm(parse_word(text.substr(2), 2), 2);
}

Subset parse_subset(const std::string& text) {
    if (text.empty() || text.front() != '{') fail("expected '{'", 0);
    if (text.back() != '}') fail("expected '}'", text.empty() ? 0 : text.size() - 1);
    Subset s = 0;
    std::size_t i = 1, end = text.size() - 1;
    if (i == end) return s;
    while (true) {
        std::size_t start = i;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected integer", start);
        int e = std::stoi(text.substr(start, i - start));
        if (e < 1 || e > 32) fail("element out of range 1..32", start);
        Subset bit = Subset{1} << (e - 1);
        if (s & bit) fail("duplicate element", start);
        s |= bit;
        if (i == end) break;
        if (text[i] != ',') fail("expected ','", i);
        ++i;
    }
    return s;
}

QPoly parse_poly(const std::string& text) { return PolyScanner(text).run(); }

std::string combo_to_text(const PosetCombo& x) { return terms_to_text(x); }
std::string combo_to_text(const TensorCombo& x) { return pair_terms_to_text(x); }
std::string combo_to_text(const PermCombo& x) { return terms_to_text(x); }
std::string combo_to_text(const PermTensorCombo& x) { return pair_terms_to_text(x); }

std::string combo_to_csv(const PosetCombo& x) { return terms_to_csv(x); }
std::string combo_to_csv(const TensorCombo& x) { return pair_terms_to_csv(x); }
std::string combo_to_csv(const PermCombo& x) { return terms_to_csv(x); }
std::string combo_to_csv(const PermTensorCombo& x) { return pair_terms_to_csv(x); }

std::string combo_to_json(const PosetCombo& x) { return terms_to_json(x); }
std::string combo_to_json(const TensorCombo& x) { return pair_terms_to_json(x); }
std::string combo_to_json(const PermCombo& x) { return terms_to_json(x); }
std::string combo_to_json(const PermTensorCombo& x) { return pair_terms_to_json(x); }

PosetCombo poset_combo_from_json(const std::string& text) {
    return combo_from_json_impl<PosetCombo>(text, static_cast<const PlanePoset*>(nullptr));
}

TensorCombo tensor_combo_from_json(const std::string& text) {
    return pair_combo_from_json_impl<TensorCombo>(text, static_cast<const PlanePoset*>(nullptr));
}

PermCombo perm_combo_from_json(const std::string& text) {
    return combo_from_json_impl<PermCombo>(text, static_cast<const Permutation*>(nullptr));
}

PermTensorCombo perm_tensor_combo_from_json(const std::string& text) {
    return pair_combo_from_json_impl<PermTensorCombo>(text, static_cast<const Permutation*>(nullptr));
}

std::string gram_to_csv(const std::vector<std::vector<QPoly>>& entries,
                        const std::vector<PlanePoset>& basis) {
    std::ostringstream out;
    for (const auto& p : basis) out << "," << csv_cell(p.code().to_string());
    out << "\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out << csv_cell(basis[i].code().to_string());
        for (const auto& e : entries[i]) out << "," << csv_cell(e.to_string());
        out << "\n";
    }
    return out.str();
}

std::string gram_to_json(int degree, const std::string& pairing_name,
                         const std::vector<std::vector<QPoly>>& entries,
                         const std::vector<PlanePoset>& basis) {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& p : basis) codes.push_back(p.code().to_string());
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : entries) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& e : row) cells.push_back(e.to_string());
        rows.push_back(cells);
    }
    return nlohmann::json{{"degree", degree},
                          {"pairing", pairing_name},
                          {"basis", codes},
                          {"entries", rows}}
        .dump(2);
}

} // namespace phl
