#include "starcert/free_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starcert {

FreeAlphabetPtr FreeAlphabet::make(const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto a = std::shared_ptr<FreeAlphabet>(new FreeAlphabet());
    for (const auto& [n, ns] : pairs) {
        if (n.empty() || ns.empty()) throw std::invalid_argument("FreeAlphabet: empty letter name");
        if (n == ns) {
            a->names_.push_back(n);
            a->star_.push_back(static_cast<uint16_t>(a->names_.size() - 1));
        } else {
            a->names_.push_back(n);
            a->names_.push_back(ns);
            uint16_t i = static_cast<uint16_t>(a->names_.size() - 2);
            a->star_.push_back(static_cast<uint16_t>(i + 1));
            a->star_.push_back(i);
        }
    }
    for (size_t i = 0; i < a->names_.size(); ++i)
        for (size_t j = i + 1; j < a->names_.size(); ++j)
            if (a->names_[i] == a->names_[j]) throw std::invalid_argument("FreeAlphabet: duplicate letter");
    return a;
}

std::optional<uint16_t> FreeAlphabet::index(const std::string& name) const {
    for (size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return static_cast<uint16_t>(k);
    return std::nullopt;
}

namespace {
void check_same(const FreeAlphabetPtr& a, const FreeAlphabetPtr& b) {
    if (!a || !b || !a->same_alphabet(*b)) throw std::invalid_argument("FreeStarPoly: alphabet mismatch");
}
}  // namespace

FreeStarPoly::FreeStarPoly(FreeAlphabetPtr alphabet, const ExactScalar& c) : alphabet_(std::move(alphabet)) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

FreeStarPoly::FreeStarPoly(FreeAlphabetPtr alphabet, WordTermMap terms) : alphabet_(std::move(alphabet)) {
    for (auto& [w, c] : terms)
        if (!c.is_zero()) terms_.emplace(w, c);
}

FreeStarPoly FreeStarPoly::letter(const FreeAlphabetPtr& a, uint16_t k) {
    if (k >= a->size()) throw std::out_of_range("FreeStarPoly::letter");
    WordTermMap t;
    t.emplace(Word{k}, ExactScalar::one());
    return FreeStarPoly(a, std::move(t));
}

FreeStarPoly FreeStarPoly::word(const FreeAlphabetPtr& a, Word w) {
    WordTermMap t;
    t.emplace(std::move(w), ExactScalar::one());
    return FreeStarPoly(a, std::move(t));
}

FreeStarPoly FreeStarPoly::star() const {
    FreeStarPoly out(alphabet_);
    for (const auto& [w, c] : terms_) {
        Word ws(w.rbegin(), w.rend());
        for (auto& l : ws) l = alphabet_->star_of(l);
        out.terms_.emplace(std::move(ws), c.conj());
    }
    return out;
}

FreeStarPoly FreeStarPoly::operator-() const {
    FreeStarPoly out(alphabet_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

void FreeStarPoly::insert_term(const Word& w, const ExactScalar& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeStarPoly& FreeStarPoly::operator+=(const FreeStarPoly& o) {
    check_same(alphabet_, o.alphabet_);
    for (const auto& [w, c] : o.terms_) insert_term(w, c);
    return *this;
}

FreeStarPoly& FreeStarPoly::operator-=(const FreeStarPoly& o) {
    check_same(alphabet_, o.alphabet_);
    for (const auto& [w, c] : o.terms_) insert_term(w, -c);
    return *this;
}

FreeStarPoly FreeStarPoly::operator+(const FreeStarPoly& o) const {
    FreeStarPoly out = *this;
    out += o;
    return out;
}

FreeStarPoly FreeStarPoly::operator-(const FreeStarPoly& o) const {
    FreeStarPoly out = *this;
    out -= o;
    return out;
}

FreeStarPoly FreeStarPoly::operator*(const FreeStarPoly& o) const {
    check_same(alphabet_, o.alphabet_);
    FreeStarPoly out(alphabet_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.insert_term(w, ca * cb);
        }
    }
    return out;
}

FreeStarPoly FreeStarPoly::operator*(const ExactScalar& c) const {
    FreeStarPoly out(alphabet_);
    if (c.is_zero()) return out;
    for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
    return out;
}

bool FreeStarPoly::operator==(const FreeStarPoly& o) const {
    check_same(alphabet_, o.alphabet_);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [w, c] : terms_) {
        if (it->first != w || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

std::string FreeStarPoly::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out += " ";
        out += alphabet_->name(w[k]);
    }
    return out;
}

Word FreeStarPoly::parse_word(const FreeAlphabetPtr& a, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1" && w.empty()) continue;
        auto idx = a->index(tok);
        if (!idx) throw std::invalid_argument("FreeStarPoly: unknown letter '" + tok + "'");
        w.push_back(*idx);
    }
    return w;
}

std::string FreeStarPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        ExactScalar c = it->second;
        if (first) {
            first = false;
        } else if (c.prints_negative()) {
            out += " - ";
            c = -c;
        } else {
            out += " + ";
        }
        std::string ws = word_str(it->first);
        if (c.is_one() && !it->first.empty())
            out += ws;
        else if (it->first.empty())
            out += c.str();
        else
            out += "(" + c.str() + ")*" + ws;
    }
    return out;
}

}  // namespace starcert
