#ifndef STARCERT_FREE_POLY_HPP
#define STARCERT_FREE_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starcert/scalar.hpp"

namespace starcert {

class FreeAlphabet;
using FreeAlphabetPtr = std::shared_ptr<const FreeAlphabet>;

/// Letters of a free *-algebra; every letter has a starred partner (possibly
/// itself for self-adjoint letters).
class FreeAlphabet {
public:
    /// pairs: (name, starred name). Use name == starred name for self-adjoint
    /// letters; otherwise both letters are created as partners.
    static FreeAlphabetPtr make(const std::vector<std::pair<std::string, std::string>>& pairs);

    size_t size() const { return names_.size(); }
    const std::string& name(uint16_t k) const { return names_[k]; }
    uint16_t star_of(uint16_t k) const { return star_[k]; }
    std::optional<uint16_t> index(const std::string& name) const;
    bool same_alphabet(const FreeAlphabet& o) const { return names_ == o.names_ && star_ == o.star_; }

private:
    FreeAlphabet() = default;
    std::vector<std::string> names_;
    std::vector<uint16_t> star_;
};

using Word = std::vector<uint16_t>;

/// Length-then-lexicographic word order.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using WordTermMap = std::map<Word, ExactScalar, WordLess>;

/// Element of the free *-algebra over a FreeAlphabet: finitely many words with
/// Gaussian-rational coefficients. (uv)* = v*u* on words.
class FreeStarPoly {
public:
    FreeStarPoly() = default;
    explicit FreeStarPoly(FreeAlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
    FreeStarPoly(FreeAlphabetPtr alphabet, const ExactScalar& c);
    FreeStarPoly(FreeAlphabetPtr alphabet, WordTermMap terms);

    static FreeStarPoly letter(const FreeAlphabetPtr& a, uint16_t k);
    static FreeStarPoly word(const FreeAlphabetPtr& a, Word w);

    const FreeAlphabetPtr& alphabet() const { return alphabet_; }
    const WordTermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int64_t max_word_length() const { return terms_.empty() ? -1 : int64_t(terms_.rbegin()->first.size()); }

    FreeStarPoly star() const;
    FreeStarPoly operator-() const;
    FreeStarPoly operator+(const FreeStarPoly& o) const;
    FreeStarPoly operator-(const FreeStarPoly& o) const;
    FreeStarPoly operator*(const FreeStarPoly& o) const;
    FreeStarPoly operator*(const ExactScalar& c) const;
    FreeStarPoly& operator+=(const FreeStarPoly& o);
    FreeStarPoly& operator-=(const FreeStarPoly& o);

    bool operator==(const FreeStarPoly& o) const;
    bool operator!=(const FreeStarPoly& o) const { return !(*this == o); }

    /// Word text form: letters separated by spaces, empty word prints "1",
    /// e.g. "a b* a".
    std::string word_str(const Word& w) const;
    static Word parse_word(const FreeAlphabetPtr& a, const std::string& text);
    std::string str() const;

private:
    void insert_term(const Word& w, const ExactScalar& c);
    FreeAlphabetPtr alphabet_;
    WordTermMap terms_;
};

inline FreeStarPoly operator*(const ExactScalar& c, const FreeStarPoly& p) { return p * c; }

}  // namespace starcert

#endif
