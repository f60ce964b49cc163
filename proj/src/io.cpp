#include "rplie/io.hpp"

#include <json.hpp>

#include <sstream>

namespace rplie::io {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Line {
    int no;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        out.push_back({no, raw.substr(b, e - b + 1)});
    }
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int parse_label(const Line& ln, const std::string& tok, char prefix) {
    if (tok.size() < 2 || tok[0] != prefix)
        throw ParseError(ln.no, 1, "expected basis label '" + std::string(1, prefix) +
                                       "<k>', got '" + tok + "'");
    for (size_t i = 1; i < tok.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError(ln.no, 1, "bad basis label '" + tok + "'");
    int k = std::stoi(tok.substr(1));
    if (k < 1) throw ParseError(ln.no, 1, "basis labels start at 1");
    return k;
}

Scalar parse_scalar(const Line& ln, const std::string& tok) {
    try {
        return Scalar::parse(tok);
    } catch (const std::exception& e) {
        throw ParseError(ln.no, 1, e.what());
    }
}

// "<coef> <label> + <coef> <label> + ..." (coefficient optional, default 1)
Vec parse_combo(const Line& ln, const std::vector<std::string>& toks, size_t from, char prefix,
                int dim) {
    Vec v(dim, Scalar(0));
    size_t i = from;
    bool expect_term = true;
    while (i < toks.size()) {
        if (!expect_term) {
            if (toks[i] != "+")
                throw ParseError(ln.no, 1, "expected '+' between terms, got '" + toks[i] + "'");
            ++i;
            expect_term = true;
            continue;
        }
        Scalar coef(1);
        if (i < toks.size() && toks[i][0] != prefix) {
            coef = parse_scalar(ln, toks[i]);
            ++i;
        }
        if (i >= toks.size()) throw ParseError(ln.no, 1, "dangling coefficient");
        int k = parse_label(ln, toks[i], prefix);
        if (k > dim) throw ParseError(ln.no, 1, "label '" + toks[i] + "' exceeds the dimension");
        v[k - 1] += coef;
        ++i;
        expect_term = false;
    }
    if (expect_term) throw ParseError(ln.no, 1, "empty right-hand side");
    return v;
}

enum class Section { None, Algebra, MetricS, BivectorS, Construction, Sl2S };

}  // namespace

Document parse(const std::string& text) {
    Document doc;
    Section sec = Section::None;
    std::vector<Line> lines = split_lines(text);

    // First pass: find dimensions so combos can be sized on the fly.
    for (const auto& ln : lines) {
        auto t = tokens(ln.text);
        if (t.size() == 3 && t[0] == "dim" && t[1] == "=") doc.dim = std::stoi(t[2]);
        if (t.size() == 3 && t[0] == "hdim" && t[1] == "=") {
            if (!doc.construction) doc.construction.emplace();
            doc.construction->hdim = std::stoi(t[2]);
        }
        if (t.size() == 3 && t[0] == "pdim" && t[1] == "=") {
            if (!doc.construction) doc.construction.emplace();
            doc.construction->pdim = std::stoi(t[2]);
        }
    }

    auto need_dim = [&](const Line& ln) -> int {
        if (!doc.dim) throw ParseError(ln.no, 1, "dim must be set before this line");
        return *doc.dim;
    };
    auto norm_pair = [](int i, int j, Scalar& sign) {
        if (i > j) {
            std::swap(i, j);
            sign = -sign;
        }
        return std::make_pair(i, j);
    };

    for (const auto& ln : lines) {
        auto t = tokens(ln.text);
        if (t.empty()) continue;
        if (t[0][0] == '[') {
            if (ln.text == "[algebra]")
                sec = Section::Algebra;
            else if (ln.text == "[metric]")
                sec = Section::MetricS;
            else if (ln.text == "[bivector]") {
                sec = Section::BivectorS;
                doc.has_bivector = true;
            } else if (ln.text == "[construction]") {
                sec = Section::Construction;
                if (!doc.construction) doc.construction.emplace();
            } else if (ln.text == "[sl2]") {
                sec = Section::Sl2S;
                if (!doc.sl2) doc.sl2.emplace();
            } else
                throw ParseError(ln.no, 1, "unknown section " + ln.text);
            continue;
        }
        switch (sec) {
            case Section::None:
                throw ParseError(ln.no, 1, "content before any section header");
            case Section::Algebra: {
                if (t[0] == "dim") break;  // handled in the first pass
                if (t[0] != "bracket")
                    throw ParseError(ln.no, 1, "expected 'bracket' or 'dim' in [algebra]");
                int n = need_dim(ln);
                if (t.size() < 5 || t[3] != "=")
                    throw ParseError(ln.no, 1, "expected 'bracket e<i> e<j> = ...'");
                int i = parse_label(ln, t[1], 'e'), j = parse_label(ln, t[2], 'e');
                if (i > n || j > n) throw ParseError(ln.no, 1, "label exceeds dim");
                if (i == j) throw ParseError(ln.no, 1, "bracket of a vector with itself");
                Vec v = parse_combo(ln, t, 4, 'e', n);
                Scalar sign(1);
                auto key = norm_pair(i, j, sign);
                if (doc.brackets.count(key))
                    throw ParseError(ln.no, 1, "antisymmetric duplicate: bracket e" +
                                                   std::to_string(key.first) + " e" +
                                                   std::to_string(key.second) +
                                                   " already specified");
                Vec sv = sign * v;
                if (!is_zero(sv)) doc.brackets.emplace(key, sv);
                break;
            }
            case Section::MetricS: {
                if (t.size() == 1 && t[0] == "identity") {
                    doc.metric_identity = true;
                    break;
                }
                if (t[0] != "row" || t.size() < 3 || t[2] != "=")
                    throw ParseError(ln.no, 1, "expected 'identity' or 'row i = ...'");
                int n = need_dim(ln);
                doc.metric_identity = false;
                int i = std::stoi(t[1]);
                if (i < 1 || i > n) throw ParseError(ln.no, 1, "metric row index out of range");
                if (int(t.size()) - 3 != n)
                    throw ParseError(ln.no, 1, "metric row must list exactly dim entries");
                for (int j = 1; j <= n; ++j) {
                    Scalar v = parse_scalar(ln, t[2 + j]);
                    auto key = std::make_pair(std::min(i, j), std::max(i, j));
                    auto it = doc.metric_entries.find(key);
                    if (it != doc.metric_entries.end()) {
                        if (!(it->second == v))
                            throw ParseError(ln.no, 1, "metric entry (" + std::to_string(i) +
                                                           "," + std::to_string(j) +
                                                           ") conflicts with its mirror");
                    } else {
                        doc.metric_entries.emplace(key, v);
                    }
                }
                break;
            }
            case Section::BivectorS: {
                if (t[0] != "r" || t.size() != 5 || t[3] != "=")
                    throw ParseError(ln.no, 1, "expected 'r e<i> e<j> = <scalar>'");
                int n = need_dim(ln);
                int i = parse_label(ln, t[1], 'e'), j = parse_label(ln, t[2], 'e');
                if (i > n || j > n) throw ParseError(ln.no, 1, "label exceeds dim");
                if (i == j) throw ParseError(ln.no, 1, "bivector entry on the diagonal");
                Scalar v = parse_scalar(ln, t[4]);
                Scalar sign(1);
                auto key = norm_pair(i, j, sign);
                if (doc.bivector_entries.count(key))
                    throw ParseError(ln.no, 1, "antisymmetric duplicate bivector entry");
                Scalar sv = sign * v;
                if (!sv.is_zero()) doc.bivector_entries.emplace(key, sv);
                break;
            }
            case Section::Construction: {
                ConstructionDoc& c = *doc.construction;
                if (t[0] == "hdim" || t[0] == "pdim") break;
                auto need_dims = [&]() {
                    if (c.hdim <= 0 || c.pdim <= 0)
                        throw ParseError(ln.no, 1, "hdim and pdim must be set first");
                };
                if (t[0] == "hbracket" || t[0] == "pbracket") {
                    need_dims();
                    bool hside = t[0] == "hbracket";
                    char prefix = hside ? 'e' : 'a';
                    int dim = hside ? c.hdim : c.pdim;
                    if (t.size() < 5 || t[3] != "=") throw ParseError(ln.no, 1, "bad bracket line");
                    int i = parse_label(ln, t[1], prefix), j = parse_label(ln, t[2], prefix);
                    if (i > dim || j > dim || i == j)
                        throw ParseError(ln.no, 1, "bad bracket indices");
                    Vec v = parse_combo(ln, t, 4, prefix, dim);
                    Scalar sign(1);
                    auto key = norm_pair(i, j, sign);
                    auto& table = hside ? c.hbrackets : c.pbrackets;
                    if (table.count(key)) throw ParseError(ln.no, 1, "antisymmetric duplicate");
                    Vec sv = sign * v;
                    if (!is_zero(sv)) table.emplace(key, sv);
                    break;
                }
                if (t[0] == "hmetric" || t[0] == "pmetric") {
                    need_dims();
                    bool hside = t[0] == "hmetric";
                    int dim = hside ? c.hdim : c.pdim;
                    bool& ident = hside ? c.hmetric_identity : c.pmetric_identity;
                    auto& entries = hside ? c.hmetric_entries : c.pmetric_entries;
                    if (t.size() == 2 && t[1] == "identity") {
                        ident = true;
                        break;
                    }
                    if (t.size() < 4 || t[1] != "row" || t[3] != "=")
                        throw ParseError(ln.no, 1, "expected '(h|p)metric identity' or row form");
                    ident = false;
                    int i = std::stoi(t[2]);
                    if (i < 1 || i > dim) throw ParseError(ln.no, 1, "metric row out of range");
                    if (int(t.size()) - 4 != dim)
                        throw ParseError(ln.no, 1, "metric row must list exactly dim entries");
                    for (int j = 1; j <= dim; ++j) {
                        Scalar v = parse_scalar(ln, t[3 + j]);
                        auto key = std::make_pair(std::min(i, j), std::max(i, j));
                        auto it = entries.find(key);
                        if (it != entries.end()) {
                            if (!(it->second == v))
                                throw ParseError(ln.no, 1, "metric entry conflicts with mirror");
                        } else {
                            entries.emplace(key, v);
                        }
                    }
                    break;
                }
                if (t[0] == "omega") {
                    need_dims();
                    if (t.size() != 5 || t[3] != "=")
                        throw ParseError(ln.no, 1, "expected 'omega e<i> e<j> = <scalar>'");
                    int i = parse_label(ln, t[1], 'e'), j = parse_label(ln, t[2], 'e');
                    if (i > c.hdim || j > c.hdim || i == j)
                        throw ParseError(ln.no, 1, "bad omega indices");
                    Scalar v = parse_scalar(ln, t[4]);
                    Scalar sign(1);
                    auto key = norm_pair(i, j, sign);
                    if (c.omega_entries.count(key))
                        throw ParseError(ln.no, 1, "antisymmetric duplicate omega entry");
                    Scalar sv = sign * v;
                    if (!sv.is_zero()) c.omega_entries.emplace(key, sv);
                    break;
                }
                if (t[0] == "mu") {
                    need_dims();
                    if (t.size() < 5 || t[3] != "=") throw ParseError(ln.no, 1, "bad mu line");
                    int i = parse_label(ln, t[1], 'a'), j = parse_label(ln, t[2], 'a');
                    if (i > c.pdim || j > c.pdim || i == j)
                        throw ParseError(ln.no, 1, "bad mu indices");
                    Vec v = parse_combo(ln, t, 4, 'e', c.hdim);
                    Scalar sign(1);
                    auto key = norm_pair(i, j, sign);
                    if (c.mu_entries.count(key))
                        throw ParseError(ln.no, 1, "antisymmetric duplicate mu entry");
                    Vec sv = sign * v;
                    if (!is_zero(sv)) c.mu_entries.emplace(key, sv);
                    break;
                }
                if (t[0] == "phip" || t[0] == "phih") {
                    need_dims();
                    bool pside = t[0] == "phip";
                    char prefix = pside ? 'a' : 'e';
                    int count = pside ? c.pdim : c.hdim;
                    int size = pside ? c.hdim : c.pdim;
                    if (t.size() < 5 || t[2] != "row" || t[4] != "=")
                        throw ParseError(ln.no, 1,
                                         "expected 'phi(p|h) <label> row <r> = entries'");
                    int idx = parse_label(ln, t[1], prefix);
                    if (idx > count) throw ParseError(ln.no, 1, "phi index out of range");
                    int row = std::stoi(t[3]);
                    if (row < 1 || row > size) throw ParseError(ln.no, 1, "phi row out of range");
                    if (int(t.size()) - 5 != size)
                        throw ParseError(ln.no, 1, "phi row must list exactly " +
                                                       std::to_string(size) + " entries");
                    auto& table = pside ? c.phip : c.phih;
                    auto it = table.find(idx - 1);
                    if (it == table.end())
                        it = table.emplace(idx - 1, Mat(size, size)).first;
                    for (int j = 0; j < size; ++j)
                        it->second.at(row - 1, j) = parse_scalar(ln, t[5 + j]);
                    break;
                }
                throw ParseError(ln.no, 1, "unknown directive '" + t[0] + "' in [construction]");
            }
            case Section::Sl2S: {
                if (t[0] != "gen" || t.size() != 6 || t[1] != "=")
                    throw ParseError(ln.no, 1, "expected 'gen = m11 m12 m21 m22'");
                Mat m(2, 2);
                m.at(0, 0) = parse_scalar(ln, t[2]);
                m.at(0, 1) = parse_scalar(ln, t[3]);
                m.at(1, 0) = parse_scalar(ln, t[4]);
                m.at(1, 1) = parse_scalar(ln, t[5]);
                doc.sl2->gens.push_back(m);
                break;
            }
        }
    }
    if (doc.dim && *doc.dim <= 0) throw ParseError(1, 1, "dim must be positive");
    return doc;
}

namespace {

std::string combo_str(const Vec& v, char prefix) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += v[k].str() + " " + std::string(1, prefix) + std::to_string(k + 1);
    }
    return out;
}

void serialize_metric(std::ostringstream& os, const std::string& keyword, bool ident,
                      const std::map<std::pair<int, int>, Scalar>& entries, int dim) {
    if (ident) {
        os << keyword << (keyword == "hmetric" || keyword == "pmetric" ? " identity\n"
                                                                       : "identity\n");
        return;
    }
    for (int i = 1; i <= dim; ++i) {
        os << keyword << (keyword.empty() ? "row " : " row ");
        os << i << " =";
        for (int j = 1; j <= dim; ++j) {
            auto it = entries.find({std::min(i, j), std::max(i, j)});
            os << " " << (it == entries.end() ? Scalar(0).str() : it->second.str());
        }
        os << "\n";
    }
}

}  // namespace

std::string serialize(const Document& doc) {
    std::ostringstream os;
    if (doc.dim) {
        os << "[algebra]\n";
        os << "dim = " << *doc.dim << "\n";
        for (const auto& [key, v] : doc.brackets)
            os << "bracket e" << key.first << " e" << key.second << " = " << combo_str(v, 'e')
               << "\n";
        os << "[metric]\n";
        if (doc.metric_identity) {
            os << "identity\n";
        } else {
            for (int i = 1; i <= *doc.dim; ++i) {
                os << "row " << i << " =";
                for (int j = 1; j <= *doc.dim; ++j) {
                    auto it = doc.metric_entries.find({std::min(i, j), std::max(i, j)});
                    os << " " << (it == doc.metric_entries.end() ? Scalar(0).str()
                                                                 : it->second.str());
                }
                os << "\n";
            }
        }
        if (doc.has_bivector) {
            os << "[bivector]\n";
            for (const auto& [key, v] : doc.bivector_entries)
                os << "r e" << key.first << " e" << key.second << " = " << v.str() << "\n";
        }
    }
    if (doc.construction) {
        const ConstructionDoc& c = *doc.construction;
        os << "[construction]\n";
        os << "hdim = " << c.hdim << "\n";
        os << "pdim = " << c.pdim << "\n";
        for (const auto& [key, v] : c.hbrackets)
            os << "hbracket e" << key.first << " e" << key.second << " = " << combo_str(v, 'e')
               << "\n";
        for (const auto& [key, v] : c.pbrackets)
            os << "pbracket a" << key.first << " a" << key.second << " = " << combo_str(v, 'a')
               << "\n";
        if (c.hmetric_identity)
            os << "hmetric identity\n";
        else
            serialize_metric(os, "hmetric", false, c.hmetric_entries, c.hdim);
        if (c.pmetric_identity)
            os << "pmetric identity\n";
        else
            serialize_metric(os, "pmetric", false, c.pmetric_entries, c.pdim);
        for (const auto& [key, v] : c.omega_entries)
            os << "omega e" << key.first << " e" << key.second << " = " << v.str() << "\n";
        for (const auto& [key, v] : c.mu_entries)
            os << "mu a" << key.first << " a" << key.second << " = " << combo_str(v, 'e') << "\n";
        for (const auto& [idx, m] : c.phip)
            for (int r = 0; r < m.rows(); ++r) {
                os << "phip a" << idx + 1 << " row " << r + 1 << " =";
                for (int j = 0; j < m.cols(); ++j) os << " " << m.at(r, j).str();
                os << "\n";
            }
        for (const auto& [idx, m] : c.phih)
            for (int r = 0; r < m.rows(); ++r) {
                os << "phih e" << idx + 1 << " row " << r + 1 << " =";
                for (int j = 0; j < m.cols(); ++j) os << " " << m.at(r, j).str();
                os << "\n";
            }
    }
    if (doc.sl2) {
        os << "[sl2]\n";
        for (const auto& m : doc.sl2->gens)
            os << "gen = " << m.at(0, 0).str() << " " << m.at(0, 1).str() << " "
               << m.at(1, 0).str() << " " << m.at(1, 1).str() << "\n";
    }
    return os.str();
}

LieAlgebra document_algebra(const Document& doc) {
    if (!doc.dim) throw std::invalid_argument("document has no [algebra] dim");
    LieAlgebra g(*doc.dim);
    for (const auto& [key, v] : doc.brackets) g.set_bracket(key.first - 1, key.second - 1, v);
    return g;
}

namespace {
Mat metric_matrix(bool ident, const std::map<std::pair<int, int>, Scalar>& entries, int n) {
    if (ident) return Mat::identity(n);
    Mat m(n, n);
    for (const auto& [key, v] : entries) {
        m.at(key.first - 1, key.second - 1) = v;
        m.at(key.second - 1, key.first - 1) = v;
    }
    return m;
}
}  // namespace

Metric document_metric(const Document& doc) {
    if (!doc.dim) throw std::invalid_argument("document has no [algebra] dim");
    return Metric(metric_matrix(doc.metric_identity, doc.metric_entries, *doc.dim));
}

Bivector document_bivector(const Document& doc) {
    if (!doc.dim) throw std::invalid_argument("document has no [algebra] dim");
    Bivector r(*doc.dim);
    for (const auto& [key, v] : doc.bivector_entries) r.set(key.first - 1, key.second - 1, v);
    return r;
}

ConstructionData document_construction(const Document& doc) {
    if (!doc.construction) throw std::invalid_argument("document has no [construction] block");
    const ConstructionDoc& c = *doc.construction;
    if (c.hdim <= 0 || c.pdim <= 0)
        throw std::invalid_argument("construction block needs hdim and pdim");
    LieAlgebra h(c.hdim);
    for (const auto& [key, v] : c.hbrackets) h.set_bracket(key.first - 1, key.second - 1, v);
    LieAlgebra p(c.pdim);
    for (const auto& [key, v] : c.pbrackets) p.set_bracket(key.first - 1, key.second - 1, v);
    Bivector omega(c.hdim);
    for (const auto& [key, v] : c.omega_entries) omega.set(key.first - 1, key.second - 1, v);
    ConstructionData d = ConstructionData::zero(
        h, Metric(metric_matrix(c.hmetric_identity, c.hmetric_entries, c.hdim)), omega, c.pdim,
        Metric(metric_matrix(c.pmetric_identity, c.pmetric_entries, c.pdim)));
    d.p = p;
    for (const auto& [key, v] : c.mu_entries) d.set_mu(key.first - 1, key.second - 1, v);
    for (const auto& [idx, m] : c.phip) d.phi_p[idx] = m;
    for (const auto& [idx, m] : c.phih) d.phi_h[idx] = m;
    return d;
}

Sl2Subalgebra document_sl2(const Document& doc) {
    if (!doc.sl2 || doc.sl2->gens.size() != 2)
        throw std::invalid_argument("document needs an [sl2] block with exactly two generators");
    return Sl2Subalgebra(doc.sl2->gens[0], doc.sl2->gens[1]);
}

Document document_from_triple(const AssembledTriple& t) {
    Document doc;
    int n = t.algebra.dim();
    doc.dim = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec v(n);
            for (int k = 0; k < n; ++k) v[k] = t.algebra.c(i, j, k);
            if (!is_zero(v)) doc.brackets.emplace(std::make_pair(i + 1, j + 1), v);
        }
    if (t.rho.matrix() == Mat::identity(n)) {
        doc.metric_identity = true;
    } else {
        doc.metric_identity = false;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                doc.metric_entries.emplace(std::make_pair(i + 1, j + 1), t.rho.matrix().at(i, j));
    }
    doc.has_bivector = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!t.r.at(i, j).is_zero())
                doc.bivector_entries.emplace(std::make_pair(i + 1, j + 1), t.r.at(i, j));
    return doc;
}

namespace {

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["condition"] = w.condition;
    for (const auto& [k, v] : w.fields) j[k] = v;
    return j;
}

ordered_json matrix_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

ordered_json header(const char* command) {
    ordered_json j;
    j["schema"] = "rplie-report/1";
    j["mode"] = session_kind() == ScalarKind::Rational ? "rational" : "float";
    j["command"] = command;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_rp_report(const RPReport& rep) {
    ordered_json j = header("check");
    j["verdict"] = rep.verdict;
    ordered_json ch;
    ch["direct"] = rep.direct.ok;
    ch["c"] = rep.kernel_conditions.all();
    if (rep.kahler_characterization.applicable)
        ch["main"] = rep.kahler_characterization.all();
    else
        ch["main"] = "not applicable";
    if (rep.biinvariant)
        ch["biinvariant"] = *rep.biinvariant;
    else
        ch["biinvariant"] = "not applicable";
    j["characterizations"] = ch;
    ordered_json cond;
    cond["c1"] = rep.kernel_conditions.c1;
    cond["c2"] = rep.kernel_conditions.c2;
    cond["c3"] = rep.kernel_conditions.c3;
    if (rep.kahler_characterization.applicable) {
        cond["kahler_sub"] = rep.kahler_characterization.kahler_sub;
        cond["perp_skew"] = rep.kahler_characterization.perp_skew;
        cond["s_perp_sp"] = rep.kahler_characterization.s_perp_sp;
    }
    cond["symplectic_subalgebra"] = rep.symplectic_subalgebra.is_subalgebra;
    cond["delta_omega_zero"] = rep.symplectic_subalgebra.delta_omega_zero;
    j["conditions"] = cond;
    j["dim"] = rep.dim;
    j["rank"] = rep.rank;
    if (!rep.verdict && rep.witness) {
        j["failed"] = rep.witness->condition;
        ordered_json w;
        for (const auto& [k, v] : rep.witness->fields) w[k] = v;
        j["witness"] = w;
    }
    if (rep.inconclusive) j["inconclusive"] = "float-mode disagreement";
    return dump(j);
}

std::string emit_catalog_report(const std::vector<FamilyReport>& rows, int samples,
                                uint64_t seed) {
    ordered_json j = header("catalog-verify");
    j["samples"] = samples;
    j["seed"] = seed;
    ordered_json arr = ordered_json::array();
    ordered_json discrepancies = ordered_json::array();
    bool all = true;
    for (const auto& r : rows) {
        ordered_json row;
        row["id"] = r.id;
        row["samples"] = r.samples;
        row["verbatim_passed"] = r.verbatim_passed;
        if (r.has_correction) row["corrected_passed"] = r.corrected_passed;
        row["used_correction"] = r.used_correction;
        row["all_passed"] = r.all_passed;
        if (r.partial) row["partial"] = true;
        if (!r.failures.empty()) {
            ordered_json fails = ordered_json::array();
            for (const auto& fl : r.failures) {
                ordered_json e;
                e["sample"] = fl.sample;
                e["condition"] = fl.condition;
                fails.push_back(e);
            }
            row["failures"] = fails;
        }
        arr.push_back(row);
        if (r.used_correction) {
            ordered_json d;
            d["id"] = r.id;
            d["correction"] = r.correction_note;
            discrepancies.push_back(d);
        }
        all = all && r.all_passed;
    }
    j["rows"] = arr;
    j["discrepancies"] = discrepancies;
    j["all_pass"] = all;
    return dump(j);
}

std::string emit_decomposition(const Decomposition& d) {
    ordered_json j = header("decompose");
    j["dim"] = d.dim;
    j["rank"] = d.rank();
    j["kernel_basis"] = matrix_json(d.kernel_basis);
    j["kernel_perp_basis"] = matrix_json(d.kernel_perp_basis);
    j["image_basis"] = matrix_json(d.image_basis);
    j["image_perp_basis"] = matrix_json(d.image_perp_basis);
    j["omega"] = matrix_json(d.omega);
    j["tau"] = matrix_json(d.tau);
    j["j_operator"] = matrix_json(d.j_operator);
    return dump(j);
}

std::string emit_levi_civita(const LieAlgebra& g, const Metric& rho,
                             const LeviCivitaProduct& a) {
    ordered_json j = header("levi-civita");
    j["dim"] = g.dim();
    ordered_json prods = ordered_json::array();
    for (int i = 0; i < g.dim(); ++i)
        prods.push_back(matrix_json(a.operator_of(g.basis_vector(i))));
    j["operators"] = prods;
    j["torsion_identity"] = has_torsion_identity(g, a);
    j["metric_identity"] = has_metric_identity(rho, a);
    j["flat"] = is_flat(g, a);
    return dump(j);
}

std::string emit_flat_kahler(const FlatSplitReport& split, const Bivector* omega,
                             bool kahler_ok) {
    ordered_json j = header("flat-kahler");
    j["flat"] = split.flat;
    j["derived_ideal_basis"] = matrix_json(split.derived_basis);
    j["orthocomplement_basis"] = matrix_json(split.complement_basis);
    if (omega) {
        j["omega"] = matrix_json(omega->matrix());
        j["kahler_check"] = kahler_ok;
    }
    return dump(j);
}

std::string emit_sl2(const Sl2Classification& c) {
    ordered_json j = header("sl2-classify");
    switch (c.kind) {
        case Sl2Class::UpperTriangular: j["class"] = "g1"; break;
        case Sl2Class::LowerTriangular: j["class"] = "g2"; break;
        case Sl2Class::Family:
            j["class"] = "g_x";
            j["x"] = c.x->str();
            break;
        case Sl2Class::NotSubalgebra: j["class"] = "not a subalgebra"; break;
    }
    return dump(j);
}

std::string emit_construct(const EqproReport& eqpro, const RPReport* rp,
                           const AssembledTriple* t) {
    ordered_json j = header("construct");
    ordered_json eq = ordered_json::array();
    for (int i = 0; i < 6; ++i) eq.push_back(eqpro.eq[i]);
    j["compatibility_equations"] = eq;
    if (!eqpro.all()) j["first_failure"] = eqpro.first_failure;
    if (t) {
        Document doc = document_from_triple(*t);
        j["assembled"] = serialize(doc);
    }
    if (rp) {
        j["riemann_poisson"] = rp->verdict;
        j["rank"] = rp->rank;
    }
    return dump(j);
}

}  // namespace rplie::io
