#include "grassbs/bott.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace grassbs {

std::string BottBundle::to_string() const {
    if (components.empty()) return "0";
    std::ostringstream os;
    bool first_component = true;
    for (const auto& component : components) {
        if (!first_component) os << "+";
        first_component = false;
        bool printed = false;
        if (component.multiplicity != 1) {
            os << component.multiplicity.get_str();
            printed = true;
        }
        if (!component.quotient_weight.empty()) {
            if (printed) os << "*";
            os << "Q[";
            for (int i = 0; i < component.quotient_weight.rows(); ++i) {
                if (i) os << ",";
                os << component.quotient_weight.row(i);
            }
            os << "]";
            printed = true;
        }
        if (component.det_power != 0 || !printed) {
            if (printed) os << "*";
            os << "O(" << -component.det_power << ")";
        }
    }
    return os.str();
}

namespace {

struct BundleParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit BundleParser(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    long parse_int() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw FormatError("bundle expression: expected integer at position " +
                                             std::to_string(start));
        return std::stol(text.substr(start, pos - start));
    }

    BottComponent parse_term() {
        BottComponent component;
        bool saw_quotient = false;
        while (true) {
            char c = peek();
            if (c == 'O') {
                ++pos;
                int m = 0;
                if (eat('(')) {
                    m = static_cast<int>(parse_int());
                    if (!eat(')')) throw FormatError("bundle expression: missing ')'");
                }
                component.det_power += -m;
            } else if (c == 'Q') {
                if (saw_quotient)
                    throw FormatError(
                        "bundle expression: at most one Q[...] factor per term (products of "
                        "quotient-side weights are out of scope)");
                saw_quotient = true;
                ++pos;
                if (!eat('[')) throw FormatError("bundle expression: expected '[' after Q");
                std::vector<int> parts;
                if (peek() != ']') {
                    parts.push_back(static_cast<int>(parse_int()));
                    while (eat(',')) parts.push_back(static_cast<int>(parse_int()));
                }
                if (!eat(']')) throw FormatError("bundle expression: missing ']'");
                try {
                    component.quotient_weight = Partition(parts);
                } catch (const std::invalid_argument& e) {
                    throw FormatError(std::string("bundle expression: bad Q weight: ") + e.what());
                }
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                long m = parse_int();
                if (m <= 0) throw FormatError("bundle expression: multiplicity must be positive");
                component.multiplicity *= m;
            } else {
                throw FormatError("bundle expression: unexpected character '" + std::string(1, c) +
                                  "'");
            }
            if (!eat('*')) break;
        }
        return component;
    }

    BottBundle parse() {
        BottBundle bundle;
        bundle.components.push_back(parse_term());
        while (eat('+')) bundle.components.push_back(parse_term());
        skip_space();
        if (pos != text.size())
            throw FormatError("bundle expression: trailing input at position " + std::to_string(pos));
        return bundle;
    }
};

}  // namespace

BottBundle parse_bundle(const std::string& text) {
    BundleParser parser(text);
    return parser.parse();
}

CohomologyTable bott_cohomology(int k, int n, const BottBundle& bundle,
                                const std::vector<IntSeq>& lambdas) {
    if (k < 1 || k > n) throw std::invalid_argument("bott_cohomology: need 1 <= k <= n");
    CohomologyTable table(k, n);
    for (const IntSeq& lambda : lambdas) {
        if (lambda.length() != k)
            throw std::invalid_argument("bott_cohomology: weight length does not match k");
        table.declare(lambda);
        for (const BottComponent& component : bundle.components) {
            if (component.quotient_weight.rows() > n - k)
                throw std::invalid_argument(
                    "bott_cohomology: quotient weight has more than n-k parts");
            // Weight (delta | lambda + a), then the dotted action of rho.
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int i = 0; i < n - k; ++i) w[static_cast<std::size_t>(i)] = component.quotient_weight.row(i);
            for (int i = 0; i < k; ++i)
                w[static_cast<std::size_t>(n - k + i)] = lambda[i] + component.det_power;
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] += n - 1 - i;

            bool repeated = false;
            int exchanged_pairs = 0;
            for (int i = 0; i < n && !repeated; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(j)]) {
                        repeated = true;
                        break;
                    }
                    if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)]) ++exchanged_pairs;
                }
            if (repeated) continue;

            std::sort(w.begin(), w.end(), std::greater<>());
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= n - 1 - i;
            Int dim = dim_gl(IntSeq(w), n) * component.multiplicity;
            table.add(exchanged_pairs, lambda, Rat(dim));
        }
    }
    return table;
}

}  // namespace grassbs
