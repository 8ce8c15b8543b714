#include "codedesign/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

#include "codedesign/common.hpp"

namespace codedesign {
namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field: ") + key);
    return j.at(key);
}

std::int64_t need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field must be an integer: ") +
                                    key);
    return v.get<std::int64_t>();
}

std::uint64_t need_uint(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer() ||
        (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw std::invalid_argument(
            std::string("field must be a nonnegative integer: ") + key);
    return v.get<std::uint64_t>();
}

const Json& need_array(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_array())
        throw std::invalid_argument(std::string("field must be an array: ") +
                                    key);
    return v;
}

void check_schema(const Json& j) {
    if (need_int(j, "schema_version") != kSchemaVersion)
        throw std::invalid_argument("unsupported schema_version");
}

std::vector<int> int_list(const Json& arr, const char* key) {
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_number_integer())
            throw std::invalid_argument(
                std::string("entries must be integers: ") + key);
        out.push_back(e.get<int>());
    }
    return out;
}

Json set_to_json(const IndexSet& s) {
    Json arr = Json::array();
    for (int e : s.elements()) arr.push_back(e);
    return arr;
}

Json matrix_to_json(const FieldMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).v);
        rows.push_back(std::move(row));
    }
    return rows;
}

FieldMatrix matrix_from_json(const FieldContext& F, const Json& j,
                             std::size_t rows, std::size_t cols,
                             const char* key) {
    if (!j.is_array() || j.size() != rows)
        throw std::invalid_argument(std::string("matrix has wrong shape: ") +
                                    key);
    FieldMatrix m(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument(
                std::string("matrix has wrong shape: ") + key);
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& e = row.at(c);
            if (!e.is_number_integer() || e.get<std::uint64_t>() >= F.q())
                throw std::invalid_argument(
                    std::string("matrix entry out of range: ") + key);
            m.at(i, c) = FieldElement{e.get<std::uint64_t>()};
        }
    }
    return m;
}

}  // namespace

Json instance_to_json(const ConstraintInstance& inst) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = inst.n;
    j["k"] = inst.k;
    Json sets = Json::array();
    for (const auto& s : inst.sets) sets.push_back(set_to_json(s));
    j["zero_sets"] = std::move(sets);
    return j;
}

ConstraintInstance instance_from_json(const Json& j) {
    check_schema(j);
    ConstraintInstance inst;
    inst.n = static_cast<int>(need_int(j, "n"));
    inst.k = static_cast<int>(need_int(j, "k"));
    const Json& sets = need_array(j, "zero_sets");
    if (inst.n < 1 || inst.k < 1)
        throw std::invalid_argument("n and k must be positive");
    for (const auto& s : sets) {
        if (!s.is_array())
            throw std::invalid_argument("zero_sets entries must be arrays");
        inst.sets.push_back(
            IndexSet::from_indices(inst.n, int_list(s, "zero_sets")));
    }
    inst.validate();
    return inst;
}

Json general_to_json(const GeneralInstance& inst) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = inst.n;
    Json blocks = Json::array();
    for (const auto& row : inst.rows) {
        Json b;
        b["set"] = set_to_json(row.set);
        b["r"] = row.multiplicity;
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

GeneralInstance general_from_json(const Json& j) {
    check_schema(j);
    GeneralInstance inst;
    inst.n = static_cast<int>(need_int(j, "n"));
    if (inst.n < 0) throw std::invalid_argument("n must be nonnegative");
    const Json& blocks = need_array(j, "blocks");
    inst.k = 0;
    for (const auto& b : blocks) {
        WeightedSet row{IndexSet(inst.n), static_cast<int>(need_int(b, "r"))};
        row.set = IndexSet::from_indices(inst.n,
                                         int_list(need_array(b, "set"), "set"));
        if (row.multiplicity < 1)
            throw std::invalid_argument("block multiplicities must be >= 1");
        inst.k += row.multiplicity;
        inst.rows.push_back(std::move(row));
    }
    inst.validate();
    return inst;
}

bool has_general_blocks(const Json& j) {
    return j.is_object() && j.contains("blocks");
}

Json design_to_json(const CodeDesign& d) {
    const FieldContext& F = *d.field;
    Json j = instance_to_json(d.instance);
    j["q"] = F.q();
    j["p"] = F.p();
    j["m"] = F.m();
    Json mod = Json::array();
    for (std::uint64_t c : F.modulus()) mod.push_back(c);
    j["modulus"] = std::move(mod);
    j["ell"] = d.ell;
    j["d"] = d.distance;
    Json alphas = Json::array();
    Json evals = Json::array();
    for (const auto& a : d.alpha) {
        alphas.push_back(a.v);
        evals.push_back(F.neg(a).v);
    }
    j["alphas"] = std::move(alphas);
    j["eval_points"] = std::move(evals);
    Json ext = Json::array();
    for (const auto& s : d.extended) ext.push_back(set_to_json(s));
    j["extended_sets"] = std::move(ext);
    j["T"] = matrix_to_json(d.t_full);
    j["G"] = matrix_to_json(d.generator);
    return j;
}

DesignFileData design_from_json(const Json& j) {
    ConstraintInstance inst = instance_from_json(j);
    const int n = inst.n;

    std::uint64_t p = need_uint(j, "p");
    unsigned m = static_cast<unsigned>(need_uint(j, "m"));
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    auto field = std::make_shared<FieldContext>(
        m == 1 ? FieldContext::prime_field(p)
               : FieldContext::extension_field(p, m));
    if (field->q() != need_uint(j, "q"))
        throw MismatchError("q does not equal p^m");
    const Json& mod = need_array(j, "modulus");
    const auto& expect = field->modulus();
    bool mod_ok = mod.size() == expect.size();
    for (std::size_t i = 0; mod_ok && i < expect.size(); ++i)
        mod_ok = mod.at(i).is_number_integer() &&
                 mod.at(i).get<std::uint64_t>() == expect[i];
    if (!mod_ok)
        throw MismatchError("modulus does not match the canonical choice");

    int ell = static_cast<int>(need_int(j, "ell"));
    int d = static_cast<int>(need_int(j, "d"));
    if (ell < inst.k || d != n + 1 - ell || d < 1)
        throw MismatchError("ell and d are inconsistent with the instance");

    const Json& ext = need_array(j, "extended_sets");
    if (ext.size() != static_cast<std::size_t>(ell))
        throw MismatchError("extended_sets must hold ell sets");
    std::vector<IndexSet> extended;
    for (const auto& s : ext) {
        if (!s.is_array())
            throw std::invalid_argument("extended_sets entries must be arrays");
        extended.push_back(
            IndexSet::from_indices(n, int_list(s, "extended_sets")));
        if (extended.back().size() != static_cast<std::size_t>(ell - 1))
            throw MismatchError("extended sets must have size ell - 1");
    }

    const Json& alphas = need_array(j, "alphas");
    const Json& evals = need_array(j, "eval_points");
    if (alphas.size() != static_cast<std::size_t>(n) ||
        evals.size() != alphas.size())
        throw std::invalid_argument("alphas and eval_points must have n entries");
    std::vector<FieldElement> alpha;
    alpha.reserve(n);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const Json& a = alphas.at(i);
        if (!a.is_number_integer() || a.get<std::uint64_t>() >= field->q())
            throw std::invalid_argument("alpha entry out of range");
        alpha.push_back(FieldElement{a.get<std::uint64_t>()});
        const Json& e = evals.at(i);
        if (!e.is_number_integer() ||
            e.get<std::uint64_t>() != field->neg(alpha.back()).v)
            throw MismatchError("eval_points must be the negated alphas");
    }

    FieldMatrix t =
        matrix_from_json(*field, need(j, "T"), ell, ell, "T");
    FieldMatrix g =
        matrix_from_json(*field, need(j, "G"), inst.k, n, "G");
    return DesignFileData{std::move(inst), std::move(field),
                          ell,             d,
                          std::move(extended), std::move(alpha),
                          std::move(t),    std::move(g)};
}

CodeDesign to_design(const DesignFileData& data) {
    auto t_inv = data.t_full.inverse();
    if (!t_inv)
        throw MismatchError("stored coefficient matrix is singular");
    const FieldContext& F = *data.field;
    std::vector<FieldElement> beta(data.alpha.size());
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = F.neg(data.alpha[i]);
    FieldMatrix generator_full = data.t_full.mul(
        FieldMatrix::vandermonde(F, data.ell, beta));
    return CodeDesign{data.instance,
                      DesignOptions{},
                      data.field,
                      data.ell,
                      data.distance,
                      data.extended,
                      data.alpha,
                      data.t_full,
                      std::move(*t_inv),
                      std::move(generator_full),
                      data.generator};
}

std::string to_canonical_string(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_canonical_string(j);
    if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace codedesign
