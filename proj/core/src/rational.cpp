#include "grassbs/rational.hpp"

#include <cctype>

namespace grassbs {

Int factorial(unsigned n) {
    Int result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

std::string rat_to_string(const Rat& value) {
    return value.get_str();
}

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw FormatError("empty rational literal");
    // mpq_set_str is permissive about whitespace and leading zeros; vet the
    // shape first so "1.5" or "2e3" are rejected.
    std::size_t pos = 0;
    auto eat_signed_digits = [&]() {
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos > start;
    };
    bool ok = eat_signed_digits();
    if (ok && pos < text.size() && text[pos] == '/') {
        ++pos;
        ok = eat_signed_digits();
    }
    if (!ok || pos != text.size())
        throw FormatError("malformed rational literal: \"" + text + "\"");

    Rat value;
    if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0)
        throw FormatError("malformed rational literal: \"" + text + "\"");
    if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0)
        throw FormatError("zero denominator in rational literal: \"" + text + "\"");
    value.canonicalize();
    return value;
}

bool is_integer(const Rat& value) {
    return mpz_cmp_ui(mpq_denref(value.get_mpq_t()), 1) == 0;
}

Int to_integer(const Rat& value) {
    if (!is_integer(value)) throw std::invalid_argument("rational is not an integer: " + rat_to_string(value));
    return Int(mpq_numref(value.get_mpq_t()));
}

}  // namespace grassbs
