#include "gendo/io.hpp"

#include "gendo/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gendo {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

Vec vec_from(const json& j, std::size_t len, const Field& f, const char* what)
{
    if (!j.is_array() || j.size() != len) bad(std::string(what) + ": expected a vector of length " + std::to_string(len));
    Vec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (!j[i].is_number_integer()) bad(std::string(what) + ": non-integer entry");
        auto x = j[i].get<long long>();
        if (x < 0 || x >= static_cast<long long>(f.order())) bad(std::string(what) + ": entry out of range");
        v[i] = static_cast<Elem>(x);
    }
    return v;
}

json matrix_rows(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

}  // namespace

json algebra_to_json(const BasedAlgebra& a)
{
    const auto& p = a.presentation();
    json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = p.name;
    j["field"] = p.field.name();
    j["basis"] = p.basis_labels;
    j["mult"] = p.mult;
    j["unit"] = p.unit;
    j["idempotents"] = p.idempotents;
    j["radical_generators"] = p.radical_generators;
    return j;
}

AlgebraPtr algebra_from_json(const json& j)
{
    try {
        if (j.value("schema_version", 0) != kSchemaVersion) bad("unsupported schema_version");
        AlgebraPresentation p;
        p.field = Field::parse(j.at("field").get<std::string>());
        p.name = j.value("name", std::string("algebra"));
        p.basis_labels = j.at("basis").get<std::vector<std::string>>();
        const std::size_t n = p.basis_labels.size();
        const auto& mult = j.at("mult");
        if (!mult.is_array() || mult.size() != n) bad("mult: expected " + std::to_string(n) + " rows");
        p.mult.assign(n, std::vector<Vec>(n));
        for (std::size_t a = 0; a < n; ++a) {
            if (!mult[a].is_array() || mult[a].size() != n) bad("mult: ragged row");
            for (std::size_t b = 0; b < n; ++b) p.mult[a][b] = vec_from(mult[a][b], n, p.field, "mult");
        }
        p.unit = vec_from(j.at("unit"), n, p.field, "unit");
        for (const auto& e : j.at("idempotents")) p.idempotents.push_back(vec_from(e, n, p.field, "idempotents"));
        for (const auto& r : j.at("radical_generators"))
            p.radical_generators.push_back(vec_from(r, n, p.field, "radical_generators"));
        return validate(std::move(p));
    } catch (const json::exception& e) {
        bad(std::string("algebra JSON: ") + e.what());
    }
}

json module_to_json(const RightModule& m)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["algebra_ref"] = m.alg->name();
    j["dim"] = m.dim();
    json act = json::array();
    for (std::size_t b = 0; b < m.alg->dim(); ++b) act.push_back(matrix_rows(m.full_action(b)));
    j["action"] = act;
    return j;
}

RightModule module_from_json(const AlgebraPtr& a, const json& j)
{
    try {
        if (j.value("schema_version", 0) != kSchemaVersion) bad("unsupported schema_version");
        const std::size_t d = j.at("dim").get<std::size_t>();
        const auto& act = j.at("action");
        if (!act.is_array() || act.size() != a->dim()) bad("action: expected one matrix per basis element");
        std::vector<Matrix> mats;
        for (const auto& m : act) {
            if (!m.is_array() || m.size() != d) bad("action: expected " + std::to_string(d) + " rows");
            std::vector<std::vector<Elem>> rows;
            for (const auto& r : m) rows.push_back(vec_from(r, d, a->field(), "action"));
            mats.push_back(d == 0 ? Matrix(a->field(), 0, 0) : Matrix::from_rows(a->field(), rows));
        }
        return module_from_actions(a, d, mats);
    } catch (const json::exception& e) {
        bad(std::string("module JSON: ") + e.what());
    }
}

json dim_to_json(const HomologicalDim& d, std::size_t cutoff)
{
    json j;
    switch (d.kind) {
    case HomologicalDim::Kind::Finite:
        j["kind"] = "finite";
        j["value"] = d.value;
        break;
    case HomologicalDim::Kind::Infinite:
        j["kind"] = "infinite";
        if (d.certificate) j["certificate"] = d.certificate->describe();
        break;
    case HomologicalDim::Kind::AtLeast:
        j["kind"] = "unknown";
        j["at_least"] = d.value;
        j["cutoff"] = cutoff;
        break;
    case HomologicalDim::Kind::ZeroModule: j["kind"] = "zero_module"; break;
    }
    return j;
}

json verdict_to_json(const GpVerdict& v)
{
    json j;
    switch (v.kind) {
    case GpVerdict::Kind::Yes:
        j["verdict"] = "yes";
        if (v.certificate) j["certificate"] = v.certificate->describe();
        if (v.tr_certificate) j["tr_certificate"] = v.tr_certificate->describe();
        break;
    case GpVerdict::Kind::No:
        j["verdict"] = "no";
        j["condition"] = v.condition;
        j["degree"] = v.degree;
        break;
    case GpVerdict::Kind::Unknown:
        j["verdict"] = "unknown";
        j["cutoff"] = v.degree;
        break;
    }
    return j;
}

namespace {

class SpecParser {
public:
    SpecParser(const AlgebraPtr& a, std::string text, const std::optional<KupischSeries>& s)
        : a_(a), series_(s), full_(text)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) t_.push_back(c);
    }

    RightModule run()
    {
        auto m = expr();
        if (pos_ != t_.size()) fail("trailing input");
        return m;
    }

private:
    const AlgebraPtr& a_;
    const std::optional<KupischSeries>& series_;
    std::string full_, t_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        bad("module spec '" + full_ + "': " + what + " at position " + std::to_string(pos_));
    }
    bool eat(const std::string& w)
    {
        if (t_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }
    void expect(char c)
    {
        if (pos_ >= t_.size() || t_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::optional<std::size_t> number()
    {
        std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return std::stoul(t_.substr(start, pos_ - start));
    }
    std::size_t vertex()
    {
        auto v = number();
        if (!v) fail("expected a vertex index");
        if (*v >= a_->num_vertices()) fail("vertex out of range");
        return *v;
    }
    RightModule inner()
    {
        expect('(');
        auto m = expr();
        expect(')');
        return m;
    }

    RightModule expr()
    {
        if (eat("tauinv")) return tau_inv(inner());
        if (eat("tau")) return tau(inner());
        if (eat("cosyz")) {
            auto k = number().value_or(1);
            return cosyzygy(inner(), k);
        }
        if (eat("syz")) {
            auto k = number().value_or(1);
            return syzygy(inner(), k);
        }
        if (eat("rad")) {
            auto k = number().value_or(1);
            auto m = inner();
            for (std::size_t i = 0; i < k; ++i) m = structure(m).radical.module;
            return m;
        }
        if (eat("DA")) return direct_sum(a_, injectives(a_));
        if (eat("A")) return regular_module(a_);
        if (eat("P")) return projective_module(a_, vertex());
        if (eat("I")) return injective_module(a_, vertex());
        if (eat("S")) return simple_module(a_, vertex());
        if (eat("M(")) {
            auto u = number();
            expect(',');
            auto v = number();
            expect(')');
            if (!u || !v) fail("expected two field element codes");
            if (*u >= a_->field().order() || *v >= a_->field().order()) fail("field element out of range");
            if (a_->num_vertices() != 1) fail("M(u,v) needs a local algebra");
            return local_cyclic_quotient(a_, static_cast<Elem>(*u), static_cast<Elem>(*v));
        }
        if (pos_ < t_.size() && (t_[pos_] == '(' || t_[pos_] == '[')) {
            const char close = t_[pos_] == '(' ? ')' : ']';
            ++pos_;
            if (!series_) fail("(i,k) needs a Kupisch series");
            auto i = number();
            expect(',');
            auto k = number();
            expect(close);
            NakAlgebra nak(*series_);
            if (!i || !k || *i >= nak.n() || *k > nak.c(*i)) fail("no such uniserial module");
            return to_module(a_, nak, {*i, *k});
        }
        fail("unknown module expression");
    }
};

}  // namespace

RightModule parse_module_spec(const AlgebraPtr& a, const std::string& spec, const std::optional<KupischSeries>& series)
{
    return SpecParser(a, spec, series).run();
}

std::vector<std::size_t> parse_series(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            auto v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            bad("cannot parse Kupisch series '" + text + "'");
        }
    }
    if (out.empty()) bad("empty Kupisch series");
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace gendo
