#include "cayley/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley::json_io {

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Arbitrary-precision integer to JSON: a number when it fits a 64-bit
// signed value, a decimal string beyond that.
json int_to_json(const mpz_class& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

mpz_class int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class n;
        if (mpz_set_str(n.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
            throw Error(std::string(what) + ": invalid integer literal \"" +
                        j.get<std::string>() + "\"");
        return n;
    }
    throw Error(std::string(what) + ": expected an integer or a decimal string");
}

const json& require(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw Error(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

} // namespace

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error("invalid rational literal \"" + text + "\"");
    if (sgn(mpq_class(q.get_den())) == 0)
        throw Error("zero denominator in rational literal \"" + text + "\"");
    q.canonicalize();
    return q;
}

json cyc_to_json(const CycNum& z) {
    json arr = json::array();
    for (int k = 0; k < 4; ++k) arr.push_back(rat_str(z.coeff(k)));
    return arr;
}

CycNum cyc_from_json(const json& j) {
    if (j.is_number_integer()) return CycNum(mpq_class(j.get<long>()));
    if (j.is_string()) return CycNum(parse_rational(j.get<std::string>()));
    if (j.is_array() && j.size() == 4) {
        mpq_class c[4];
        for (int k = 0; k < 4; ++k) {
            const json& e = j.at(static_cast<std::size_t>(k));
            if (e.is_number_integer()) c[k] = mpq_class(e.get<long>());
            else if (e.is_string()) c[k] = parse_rational(e.get<std::string>());
            else throw Error("coefficient: expected rational strings or integers");
        }
        return CycNum(c[0], c[1], c[2], c[3]);
    }
    throw Error("coefficient: expected an integer, a rational string, or an array of "
                "4 power-basis coordinates");
}

json kform_to_json(const KForm& f) {
    json out;
    out["dim"] = f.dim();
    out["degree"] = f.degree();
    json terms = json::array();
    for (const auto& [idx, c] : f.terms()) {
        json term;
        term["idx"] = idx.indices();
        term["coeff"] = cyc_to_json(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

KForm kform_from_json(const json& j) {
    int dim = require(j, "dim", "k-form").get<int>();
    int degree = require(j, "degree", "k-form").get<int>();
    KForm f(dim, degree);
    for (const json& term : require(j, "terms", "k-form")) {
        std::vector<int> idx = require(term, "idx", "k-form term").get<std::vector<int>>();
        f.add_term(MultiIndex(idx, dim), cyc_from_json(require(term, "coeff", "k-form term")));
    }
    return f;
}

json two_form_to_json(const spin7::TwoForm8& f) {
    json out;
    if (f.lie_valued()) out["matDim"] = f.mat_dim;
    json terms = json::array();
    for (int t = 0; t < spin7::kPairCount; ++t) {
        const CycMatrix& m = f.coeffs[static_cast<std::size_t>(t)];
        if (m.is_zero()) continue;
        const auto& [a, b] = spin7::pair_at(t);
        json term;
        term["idx"] = json::array({a, b});
        if (f.lie_valued()) {
            json rows = json::array();
            for (int i = 0; i < f.mat_dim; ++i) {
                json row = json::array();
                for (int k = 0; k < f.mat_dim; ++k) row.push_back(cyc_to_json(m(i, k)));
                rows.push_back(std::move(row));
            }
            term["matrix"] = std::move(rows);
        } else {
            term["coeff"] = cyc_to_json(m(0, 0));
        }
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

spin7::TwoForm8 two_form_from_json(const json& j) {
    if (!j.is_object()) throw Error("2-form: expected a JSON object");
    int mat_dim = 1;
    if (j.contains("matDim")) mat_dim = j.at("matDim").get<int>();
    if (mat_dim < 1) throw Error("2-form: matDim must be positive");
    spin7::TwoForm8 f = spin7::TwoForm8::zero(mat_dim);
    for (const json& term : require(j, "terms", "2-form")) {
        const json& idx = require(term, "idx", "2-form term");
        if (!idx.is_array() || idx.size() != 2)
            throw Error("2-form term: \"idx\" must be a pair [a, b]");
        int a = idx.at(0).get<int>(), b = idx.at(1).get<int>();
        if (a < 1 || b <= a || b > spin7::kVectorDim)
            throw Error("2-form term: index pair must satisfy 1 <= a < b <= 8");
        CycMatrix& slot = f.coeffs[static_cast<std::size_t>(spin7::pair_rank(a, b))];
        if (term.contains("matrix")) {
            const json& rows = term.at("matrix");
            if (static_cast<int>(rows.size()) != mat_dim)
                throw Error("2-form term: matrix does not match matDim");
            for (int i = 0; i < mat_dim; ++i) {
                const json& row = rows.at(static_cast<std::size_t>(i));
                if (static_cast<int>(row.size()) != mat_dim)
                    throw Error("2-form term: matrix row length does not match matDim");
                for (int k = 0; k < mat_dim; ++k)
                    slot(i, k) += cyc_from_json(row.at(static_cast<std::size_t>(k)));
            }
        } else if (term.contains("coeff")) {
            if (mat_dim != 1)
                throw Error("2-form term: scalar \"coeff\" inside a matrix-valued form");
            slot(0, 0) += cyc_from_json(term.at("coeff"));
        } else {
            throw Error("2-form term: expected \"coeff\" or \"matrix\"");
        }
    }
    f.validate();
    return f;
}

json complex_to_json(const cellcoh::CochainComplex& c) {
    json out;
    out["ranks"] = c.ranks;
    json deltas = json::array();
    for (const IntMatrix& d : c.deltas) {
        json rows = json::array();
        for (int i = 0; i < d.rows(); ++i) {
            json row = json::array();
            for (int k = 0; k < d.cols(); ++k) row.push_back(int_to_json(d(i, k)));
            rows.push_back(std::move(row));
        }
        deltas.push_back(std::move(rows));
    }
    out["deltas"] = std::move(deltas);
    return out;
}

cellcoh::CochainComplex complex_from_json(const json& j) {
    cellcoh::CochainComplex c;
    c.ranks = require(j, "ranks", "complex").get<std::vector<int>>();
    if (c.ranks.empty()) throw Error("complex: \"ranks\" must be nonempty");
    const json& deltas = require(j, "deltas", "complex");
    if (deltas.size() + 1 != c.ranks.size())
        throw Error("complex: expected " + std::to_string(c.ranks.size() - 1) +
                    " coboundary matrices, got " + std::to_string(deltas.size()));
    for (std::size_t k = 0; k + 1 < c.ranks.size(); ++k) {
        int rows = c.ranks[k + 1], cols = c.ranks[k];
        const json& dj = deltas.at(k);
        if (!dj.is_array() || static_cast<int>(dj.size()) != rows)
            throw Error("complex: delta^" + std::to_string(k) + " must have " +
                        std::to_string(rows) + " rows");
        IntMatrix d(rows, cols);
        for (int i = 0; i < rows; ++i) {
            const json& row = dj.at(static_cast<std::size_t>(i));
            if (!row.is_array() || static_cast<int>(row.size()) != cols)
                throw Error("complex: delta^" + std::to_string(k) + " row " +
                            std::to_string(i) + " must have " + std::to_string(cols) +
                            " entries");
            for (int t = 0; t < cols; ++t)
                d(i, t) = int_from_json(row.at(static_cast<std::size_t>(t)), "complex entry");
        }
        c.deltas.push_back(std::move(d));
    }
    c.validate();
    return c;
}

json coh_group_to_json(const cellcoh::CohGroup& g) {
    json out;
    out["betti"] = g.betti;
    json torsion = json::array();
    for (const mpz_class& d : g.torsion) torsion.push_back(d.get_str());
    out["torsion"] = std::move(torsion);
    out["pretty"] = g.str();
    return out;
}

json verdict_to_json(const cellcoh::OrientabilityVerdict& v) {
    json out;
    out["h3"] = coh_group_to_json(v.h3);
    out["criterionHolds"] = v.criterion_holds;
    out["reason"] = v.reason;
    return out;
}

json report_to_json(const verify::RunReport& r, bool with_timings) {
    json out;
    out["check"] = r.check;
    out["population"] = r.population;
    out["violations"] = r.violations;
    out["seed"] = r.seed;
    if (with_timings) out["elapsedMs"] = r.elapsed_ms;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        // e.what() carries the byte position of the failure.
        throw Error("parse error in \"" + path + "\": " + e.what());
    }
}

} // namespace cayley::json_io
