#include "grassbs/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grassbs {

namespace {

using nlohmann::json;

Rat value_from_json(const json& v) {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
    throw FormatError("table value must be a rational string or an integer");
}

std::vector<int> int_vector(const json& doc) {
    if (!doc.is_array()) throw FormatError("expected an integer array");
    std::vector<int> out;
    for (const auto& x : doc) {
        if (!x.is_number_integer()) throw FormatError("expected an integer array");
        out.push_back(x.get<int>());
    }
    return out;
}

int require_int(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_number_integer())
        throw FormatError(std::string("missing or non-integer field \"") + field + "\"");
    return doc[field].get<int>();
}

std::string label_name(const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

OrderedJson intseq_to_json(const IntSeq& seq) {
    OrderedJson arr = OrderedJson::array();
    for (int i = 0; i < seq.length(); ++i) arr.push_back(seq[i]);
    return arr;
}

IntSeq intseq_from_json(const json& doc, int k) {
    std::vector<int> parts = int_vector(doc);
    if (static_cast<int>(parts.size()) > k)
        throw FormatError("weight has more than k parts");
    parts.resize(static_cast<std::size_t>(k), 0);
    try {
        return IntSeq(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad weight: ") + e.what());
    }
}

namespace {

OrderedJson table_core_to_json(const TableBase& table, const char* kind) {
    OrderedJson doc;
    doc["kind"] = kind;
    doc["k"] = table.k();
    doc["n"] = table.n();
    OrderedJson entries = OrderedJson::array();
    for (const auto& [key, value] : table.entries()) {
        OrderedJson e;
        e["i"] = key.i;
        e["lambda"] = intseq_to_json(key.lambda);
        e["value"] = rat_to_string(value);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

void parse_core(const json& doc, TableBase& table, const char* expected_kind) {
    if (!doc.is_object()) throw FormatError("table document must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string() ||
        doc["kind"].get<std::string>() != expected_kind)
        throw FormatError(std::string("expected kind \"") + expected_kind + "\"");
    int k = require_int(doc, "k");
    int n = require_int(doc, "n");
    if (k < 1 || k > n) throw FormatError("need 1 <= k <= n");
    table = TableBase(k, n);
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw FormatError("missing \"entries\" array");
    for (const auto& e : doc["entries"]) {
        int i = require_int(e, "i");
        if (!e.contains("lambda")) throw FormatError("entry missing \"lambda\"");
        IntSeq lambda = intseq_from_json(e["lambda"], k);
        if (!e.contains("value")) throw FormatError("entry missing \"value\"");
        Rat value = value_from_json(e["value"]);
        if (table.entries().count({i, lambda})) throw FormatError("duplicate table entry");
        table.set(i, lambda, value);
    }
}

}  // namespace

OrderedJson table_to_json(const BettiTable& table) {
    return table_core_to_json(table, "betti");
}

OrderedJson table_to_json(const RankBettiTable& table) {
    return table_core_to_json(table, "rank_betti");
}

OrderedJson table_to_json(const CohomologyTable& table) {
    OrderedJson doc = table_core_to_json(table, "cohomology");
    OrderedJson support = OrderedJson::array();
    for (const IntSeq& lambda : table.declared_support()) support.push_back(intseq_to_json(lambda));
    doc["support"] = std::move(support);
    return doc;
}

BettiTable betti_from_json(const json& doc) {
    BettiTable table;
    parse_core(doc, table, "betti");
    return table;
}

RankBettiTable rank_betti_from_json(const json& doc) {
    RankBettiTable table;
    parse_core(doc, table, "rank_betti");
    return table;
}

CohomologyTable cohomology_from_json(const json& doc) {
    CohomologyTable table;
    parse_core(doc, table, "cohomology");
    if (doc.contains("support")) {
        if (!doc["support"].is_array()) throw FormatError("\"support\" must be an array");
        for (const auto& s : doc["support"]) table.declare(intseq_from_json(s, table.k()));
    }
    int dim = table.k() * (table.n() - table.k());
    for (const auto& [key, value] : table.entries()) {
        if (key.i < 0 || key.i > dim)
            throw FormatError("cohomology degree out of range [0, " + std::to_string(dim) + "]");
        if (!table.declared(key.lambda))
            throw FormatError("cohomology entry outside the declared support");
    }
    return table;
}

AnyTable table_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw FormatError("table document must carry a string \"kind\"");
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "betti") return betti_from_json(doc);
    if (kind == "rank_betti") return rank_betti_from_json(doc);
    if (kind == "cohomology") return cohomology_from_json(doc);
    throw FormatError("unknown table kind \"" + kind + "\"");
}

std::vector<std::string> validate_table_json(const json& doc) {
    std::vector<std::string> out;
    if (!doc.is_object()) return {"table document must be a JSON object"};
    std::string kind;
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        out.push_back("missing string field \"kind\"");
    } else {
        kind = doc["kind"].get<std::string>();
        if (kind != "betti" && kind != "rank_betti" && kind != "cohomology")
            out.push_back("unknown kind \"" + kind + "\"");
    }
    int k = 0, n = 0;
    bool have_kn = true;
    try {
        k = require_int(doc, "k");
        n = require_int(doc, "n");
        if (k < 1 || k > n) {
            out.push_back("need 1 <= k <= n");
            have_kn = false;
        }
    } catch (const FormatError& e) {
        out.push_back(e.what());
        have_kn = false;
    }

    std::set<std::vector<int>> support;
    if (doc.contains("support")) {
        if (!doc["support"].is_array()) {
            out.push_back("\"support\" must be an array");
        } else if (have_kn) {
            for (const auto& s : doc["support"]) {
                try {
                    support.insert(intseq_from_json(s, k).parts());
                } catch (const FormatError& e) {
                    out.push_back(std::string("support: ") + e.what());
                }
            }
        }
    }

    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        out.push_back("missing \"entries\" array");
        return out;
    }
    std::size_t index = 0;
    for (const auto& e : doc["entries"]) {
        std::string where = "entry " + std::to_string(index++);
        if (!e.is_object()) {
            out.push_back(where + ": not an object");
            continue;
        }
        int i = 0;
        try {
            i = require_int(e, "i");
        } catch (const FormatError& err) {
            out.push_back(where + ": " + err.what());
            continue;
        }
        if (!e.contains("lambda")) {
            out.push_back(where + ": missing \"lambda\"");
            continue;
        }
        std::vector<int> raw;
        try {
            raw = int_vector(e["lambda"]);
        } catch (const FormatError& err) {
            out.push_back(where + ": " + err.what());
            continue;
        }
        bool decreasing = true;
        for (std::size_t j = 1; j < raw.size(); ++j)
            if (raw[j - 1] < raw[j]) decreasing = false;
        if (!decreasing) {
            out.push_back(where + ": weight is not weakly decreasing");
            continue;
        }
        if (have_kn && static_cast<int>(raw.size()) > k) {
            out.push_back(where + ": weight has more than k parts");
            continue;
        }
        if (have_kn) {
            raw.resize(static_cast<std::size_t>(k), 0);
            bool still = true;
            for (std::size_t j = 1; j < raw.size(); ++j)
                if (raw[j - 1] < raw[j]) still = false;
            if (!still) {
                out.push_back(where + ": weight is not weakly decreasing after zero padding");
                continue;
            }
        }
        if (!e.contains("value")) {
            out.push_back(where + ": missing \"value\"");
            continue;
        }
        Rat value;
        try {
            value = value_from_json(e["value"]);
        } catch (const FormatError& err) {
            out.push_back(where + ": " + err.what());
            continue;
        }
        if (value < 0) out.push_back(where + ": negative value");
        if (kind == "cohomology" && have_kn) {
            int dim = k * (n - k);
            if (i < 0 || i > dim)
                out.push_back(where + ": q out of range [0, " + std::to_string(dim) + "]");
            if (doc.contains("support") && !support.count(raw))
                out.push_back(where + ": entry outside declared support");
        }
    }
    return out;
}

DoubleComplex double_complex_from_json(const json& doc) {
    if (!doc.is_object()) throw FormatError("double complex document must be a JSON object");
    if (!doc.contains("poset") || !doc["poset"].is_object())
        throw FormatError("missing \"poset\" object");
    const json& poset_doc = doc["poset"];
    if (!poset_doc.contains("elements") || !poset_doc["elements"].is_array())
        throw FormatError("poset missing \"elements\" array");
    std::vector<std::string> elements;
    for (const auto& e : poset_doc["elements"]) elements.push_back(label_name(e));
    std::map<std::string, int> element_index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (element_index.count(elements[i])) throw FormatError("duplicate poset element");
        element_index[elements[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> less;
    if (poset_doc.contains("less")) {
        if (!poset_doc["less"].is_array()) throw FormatError("poset \"less\" must be an array");
        for (const auto& pair : poset_doc["less"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw FormatError("poset relation must be a pair");
            auto a = element_index.find(label_name(pair[0]));
            auto b = element_index.find(label_name(pair[1]));
            if (a == element_index.end() || b == element_index.end())
                throw FormatError("poset relation references an unknown element");
            less.push_back({a->second, b->second});
        }
    }

    DoubleComplex dc;
    try {
        dc.poset = Poset(elements, less);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad poset: ") + e.what());
    }

    if (!doc.contains("cells") || !doc["cells"].is_array())
        throw FormatError("missing \"cells\" array");
    for (const auto& c : doc["cells"]) {
        int p = require_int(c, "p");
        int q = require_int(c, "q");
        if (dc.cells.count({p, q})) throw FormatError("duplicate cell");
        DoubleComplex::Cell cell;
        if (!c.contains("basis") || !c["basis"].is_array())
            throw FormatError("cell missing \"basis\" array");
        for (const auto& b : c["basis"]) {
            if (!b.is_object() || !b.contains("label"))
                throw FormatError("basis vector missing \"label\"");
            auto it = element_index.find(label_name(b["label"]));
            if (it == element_index.end()) throw FormatError("basis label not in the poset");
            cell.labels.push_back(it->second);
        }
        dc.cells[{p, q}] = std::move(cell);
    }

    auto read_matrices = [&](const char* field, std::map<std::pair<int, int>, QMatrix>& target) {
        if (!doc.contains(field)) return;
        if (!doc[field].is_array())
            throw FormatError(std::string("\"") + field + "\" must be an array");
        for (const auto& m : doc[field]) {
            int p = require_int(m, "p");
            int q = require_int(m, "q");
            if (!m.contains("matrix") || !m["matrix"].is_array())
                throw FormatError("differential missing \"matrix\"");
            const json& rows = m["matrix"];
            int nrows = static_cast<int>(rows.size());
            int ncols = nrows > 0 ? static_cast<int>(rows[0].size()) : 0;
            QMatrix mat(nrows, ncols);
            for (int r = 0; r < nrows; ++r) {
                if (!rows[static_cast<std::size_t>(r)].is_array() ||
                    static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != ncols)
                    throw FormatError("matrix rows have inconsistent lengths");
                for (int c = 0; c < ncols; ++c)
                    mat(r, c) = value_from_json(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            }
            if (target.count({p, q})) throw FormatError("duplicate differential");
            target[{p, q}] = std::move(mat);
        }
    };
    read_matrices("dv", dc.dv);
    read_matrices("dh", dc.dh);
    return dc;
}

OrderedJson double_complex_to_json(const DoubleComplex& dc) {
    OrderedJson doc;
    OrderedJson poset;
    OrderedJson elements = OrderedJson::array();
    for (int i = 0; i < dc.poset.size(); ++i) elements.push_back(dc.poset.element(i));
    OrderedJson less = OrderedJson::array();
    for (int a = 0; a < dc.poset.size(); ++a)
        for (int b = 0; b < dc.poset.size(); ++b)
            if (dc.poset.less(a, b))
                less.push_back(OrderedJson::array({dc.poset.element(a), dc.poset.element(b)}));
    poset["elements"] = std::move(elements);
    poset["less"] = std::move(less);
    doc["poset"] = std::move(poset);

    OrderedJson cells = OrderedJson::array();
    for (const auto& [pq, cell] : dc.cells) {
        OrderedJson c;
        c["p"] = pq.first;
        c["q"] = pq.second;
        OrderedJson basis = OrderedJson::array();
        for (int label : cell.labels) {
            OrderedJson b;
            b["label"] = dc.poset.element(label);
            basis.push_back(std::move(b));
        }
        c["basis"] = std::move(basis);
        cells.push_back(std::move(c));
    }
    doc["cells"] = std::move(cells);

    auto write_matrices = [&](const std::map<std::pair<int, int>, QMatrix>& source) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& [pq, mat] : source) {
            OrderedJson m;
            m["p"] = pq.first;
            m["q"] = pq.second;
            OrderedJson rows = OrderedJson::array();
            for (int r = 0; r < mat.rows(); ++r) {
                OrderedJson row = OrderedJson::array();
                for (int c = 0; c < mat.cols(); ++c) row.push_back(rat_to_string(mat(r, c)));
                rows.push_back(std::move(row));
            }
            m["matrix"] = std::move(rows);
            arr.push_back(std::move(m));
        }
        return arr;
    };
    doc["dv"] = write_matrices(dc.dv);
    doc["dh"] = write_matrices(dc.dh);
    return doc;
}

std::vector<std::string> validate_double_complex_json(const json& doc) {
    DoubleComplex dc;
    try {
        dc = double_complex_from_json(doc);
    } catch (const FormatError& e) {
        return {e.what()};
    }
    return validate_double_complex(dc);
}

OrderedJson residuals_to_json(const std::vector<Rat>& residuals) {
    OrderedJson arr = OrderedJson::array();
    for (const Rat& r : residuals) arr.push_back(rat_to_string(r));
    return arr;
}

OrderedJson certificate_to_json(const ConvexityCertificate& certificate) {
    OrderedJson doc;
    doc["odd_sources"] = certificate.odd_sources;
    OrderedJson sources;
    for (const auto& [i, labels] : certificate.sources) {
        OrderedJson arr = OrderedJson::array();
        for (const IntSeq& lambda : labels) arr.push_back(intseq_to_json(lambda));
        sources[std::to_string(i)] = std::move(arr);
    }
    doc["sources"] = std::move(sources);
    OrderedJson neighbors;
    for (const auto& [i, labels] : certificate.neighbors) {
        OrderedJson arr = OrderedJson::array();
        for (const IntSeq& lambda : labels) arr.push_back(intseq_to_json(lambda));
        neighbors[std::to_string(i)] = std::move(arr);
    }
    doc["neighbors"] = std::move(neighbors);
    doc["lhs"] = certificate.lhs.get_str();
    doc["rhs"] = certificate.rhs.get_str();
    return doc;
}

OrderedJson membership_to_json(const MembershipResult& result) {
    OrderedJson doc;
    doc["member"] = result.member;
    doc["scale"] = result.scale.get_str();
    if (result.member) {
        OrderedJson decomposition = OrderedJson::array();
        for (const PureTableSummand& summand : result.decomposition) {
            OrderedJson s;
            s["i"] = summand.i;
            s["lambda"] = intseq_to_json(summand.lambda);
            s["mu"] = intseq_to_json(summand.mu);
            s["coefficient"] = summand.coefficient.get_str();
            decomposition.push_back(std::move(s));
        }
        doc["decomposition"] = std::move(decomposition);
    } else if (result.certificate) {
        doc["certificate"] = certificate_to_json(*result.certificate);
    }
    return doc;
}

OrderedJson grid_to_json(const PairingGrid& grid) {
    OrderedJson cells = OrderedJson::array();
    for (const auto& [key, value] : grid.cells) {
        OrderedJson c;
        c["p"] = std::get<0>(key);
        c["q"] = std::get<1>(key);
        c["lambda"] = intseq_to_json(std::get<2>(key));
        c["value"] = rat_to_string(value);
        cells.push_back(std::move(c));
    }
    OrderedJson doc;
    doc["cells"] = std::move(cells);
    return doc;
}

OrderedJson e1_pairs_to_json(const std::vector<std::pair<E1Vertex, E1Vertex>>& pairs,
                             const Poset& poset) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& [from, to] : pairs) {
        OrderedJson p;
        OrderedJson f;
        f["p"] = from.p;
        f["q"] = from.q;
        f["label"] = poset.element(from.label);
        f["copy"] = from.copy;
        OrderedJson t;
        t["p"] = to.p;
        t["q"] = to.q;
        t["label"] = poset.element(to.label);
        t["copy"] = to.copy;
        p["from"] = std::move(f);
        p["to"] = std::move(t);
        arr.push_back(std::move(p));
    }
    OrderedJson doc;
    doc["pairs"] = std::move(arr);
    return doc;
}

std::string pretty_table(const TableBase& table, const std::string& title) {
    std::vector<int> degrees = table.homological_range();
    std::vector<IntSeq> weights = table.lambda_support();

    auto weight_name = [](const IntSeq& lambda) {
        std::string s = "[";
        for (int j = 0; j < lambda.length(); ++j) {
            if (j) s += ",";
            s += std::to_string(lambda[j]);
        }
        return s + "]";
    };

    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{title};
    for (int d : degrees) header.push_back(std::to_string(d));
    grid.push_back(header);
    for (const IntSeq& lambda : weights) {
        std::vector<std::string> row{weight_name(lambda)};
        for (int d : degrees) {
            Rat v = table.get(d, lambda);
            row.push_back(v == 0 ? "-" : rat_to_string(v));
        }
        grid.push_back(row);
    }

    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            if (c) os << (c == 1 ? " | " : "  ");
            os << std::string(width[c] - grid[r][c].size(), ' ') << grid[r][c];
        }
        os << "\n";
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c == 0 ? 0 : (c == 1 ? 3 : 2));
            os << std::string(total, '-') << "\n";
        }
    }
    return os.str();
}

}  // namespace grassbs
