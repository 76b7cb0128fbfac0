#include "minmod/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace minmod {

namespace {

using nlohmann::json;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%') continue;
        return line;
    }
    throw Error(ErrorCode::InvalidInput, "unexpected end of MatrixMarket data");
}

} // namespace

DenseMatrix read_matrix_market(std::istream& in) {
    std::string banner;
    if (!std::getline(in, banner) || banner.rfind("%%MatrixMarket", 0) != 0)
        throw Error(ErrorCode::InvalidInput, "missing MatrixMarket banner");

    std::istringstream hs(banner);
    std::string tag, object, format, field, symmetry;
    hs >> tag >> object >> format >> field >> symmetry;
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = symmetry.empty() ? "general" : lower(symmetry);

    if (object != "matrix")
        throw Error(ErrorCode::InvalidInput, "unsupported MatrixMarket object: " + object);
    const bool coordinate = format == "coordinate";
    if (!coordinate && format != "array")
        throw Error(ErrorCode::InvalidInput, "unsupported MatrixMarket format: " + format);
    const bool complex_field = field == "complex";
    if (!complex_field && field != "real" && field != "integer")
        throw Error(ErrorCode::InvalidInput, "unsupported MatrixMarket field: " + field);
    const bool symmetric = symmetry == "symmetric";
    const bool hermitian = symmetry == "hermitian";
    const bool skew = symmetry == "skew-symmetric";
    if (!symmetric && !hermitian && !skew && symmetry != "general")
        throw Error(ErrorCode::InvalidInput, "unsupported MatrixMarket symmetry: " + symmetry);

    std::istringstream sizes(next_data_line(in));
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (coordinate) {
        if (!(sizes >> rows >> cols >> nnz))
            throw Error(ErrorCode::InvalidInput, "bad MatrixMarket size line");
    } else {
        if (!(sizes >> rows >> cols))
            throw Error(ErrorCode::InvalidInput, "bad MatrixMarket size line");
    }
    if (rows == 0 || cols == 0)
        throw Error(ErrorCode::InvalidInput, "MatrixMarket dimensions must be positive");

    DenseMatrix A(rows, cols);
    const auto mirror = [&](std::size_t i, std::size_t j, Complex v) {
        A(i, j) = v;
        if (i != j) {
            if (symmetric) A(j, i) = v;
            if (hermitian) A(j, i) = std::conj(v);
            if (skew) A(j, i) = -v;
        }
    };

    if (coordinate) {
        for (std::size_t e = 0; e < nnz; ++e) {
            std::istringstream ls(next_data_line(in));
            std::size_t i = 0, j = 0;
            double re = 0.0, im = 0.0;
            if (!(ls >> i >> j >> re)) throw Error(ErrorCode::InvalidInput, "bad coordinate entry");
            if (complex_field && !(ls >> im))
                throw Error(ErrorCode::InvalidInput, "bad complex coordinate entry");
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw Error(ErrorCode::InvalidInput, "coordinate entry out of range");
            mirror(i - 1, j - 1, Complex{re, im});
        }
    } else {
        // Array data runs down columns; symmetric variants list the lower triangle.
        const bool general = !(symmetric || hermitian || skew);
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t i = general ? 0 : j; i < rows; ++i) {
                std::istringstream ls(next_data_line(in));
                double re = 0.0, im = 0.0;
                if (!(ls >> re)) throw Error(ErrorCode::InvalidInput, "bad array entry");
                if (complex_field && !(ls >> im))
                    throw Error(ErrorCode::InvalidInput, "bad complex array entry");
                mirror(i, j, Complex{re, im});
            }
        }
    }
    if (!A.is_finite()) throw Error(ErrorCode::InvalidInput, "matrix has non-finite entries");
    return A;
}

void write_matrix_market(std::ostream& out, const DenseMatrix& A) {
    bool complex_entries = false;
    for (const Complex& z : A.entries())
        if (z.imag() != 0.0) complex_entries = true;

    out << "%%MatrixMarket matrix array " << (complex_entries ? "complex" : "real")
        << " general\n";
    out << A.rows() << " " << A.cols() << "\n";
    char buf[96];
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) {
            const Complex z = A(i, j);
            if (complex_entries)
                std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
            else
                std::snprintf(buf, sizeof buf, "%.17g\n", z.real());
            out << buf;
        }
}

DenseMatrix read_csv_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::vector<double> row;
        double v = 0.0;
        while (ls >> v) row.push_back(v);
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error(ErrorCode::InvalidInput, "ragged CSV rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(ErrorCode::InvalidInput, "empty CSV matrix");

    DenseMatrix A(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) A(i, j) = Complex{rows[i][j], 0.0};
    if (!A.is_finite()) throw Error(ErrorCode::InvalidInput, "matrix has non-finite entries");
    return A;
}

DenseMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    const std::string low = lower(path);
    if (low.size() >= 4 && low.substr(low.size() - 4) == ".csv") return read_csv_matrix(in);
    if ((low.size() >= 4 && low.substr(low.size() - 4) == ".mtx") ||
        (low.size() >= 3 && low.substr(low.size() - 3) == ".mm"))
        return read_matrix_market(in);
    // Sniff the banner.
    if (in.peek() == '%') return read_matrix_market(in);
    return read_csv_matrix(in);
}

SpectrumSpec spectrum_from_json(const json& j) {
    SpectrumSpec s;
    s.positive = j.value("positive", false);

    for (const json& ja : j.value("atoms", json::array())) {
        Atom a;
        a.value = ja.at("value").get<double>();
        const json& m = ja.at("mult");
        if (m.is_string()) {
            if (m.get<std::string>() != "inf")
                throw Error(ErrorCode::InvalidInput, "atom multiplicity must be an integer or \"inf\"");
            a.infinite = true;
            a.mult = 0;
        } else {
            const std::int64_t count = m.get<std::int64_t>();
            if (count <= 0) throw Error(ErrorCode::InvalidInput, "atom multiplicity must be positive");
            a.mult = std::uint64_t(count);
        }
        s.atoms.push_back(a);
    }

    for (const json& jt : j.value("tails", json::array())) {
        const std::string kind = jt.at("kind").get<std::string>();
        const double a = jt.value("a", 0.0);
        const double c = jt.at("c").get<double>();
        const bool inverted = jt.value("inverted", false);
        const json& jl = jt.at("limit");

        TailDescriptor t;
        if (kind == "inc_unbounded") {
            if (inverted)
                throw Error(ErrorCode::InvalidInput, "a reciprocal tail cannot be unbounded");
            if (!jl.is_null())
                throw Error(ErrorCode::InvalidInput, "inc_unbounded tails take a null limit");
            t = make_increasing_unbounded(a, c);
        } else if (kind == "inc_to") {
            if (jl.is_null()) throw Error(ErrorCode::InvalidInput, "inc_to tails need a limit");
            const double limit = jl.get<double>();
            if (!inverted) {
                t = make_increasing_to(limit, c);
            } else {
                // 1/(a + ... ) increasing: the base decreases to a positive limit.
                t = TailDescriptor{TailKind::IncreasingTo, 1.0 / a, TailForm::LimitPlus, a, c, true};
                if (*t.limit != limit)
                    throw Error(ErrorCode::InvalidInput, "tail limit does not match its generator");
            }
        } else if (kind == "dec_to") {
            if (jl.is_null()) throw Error(ErrorCode::InvalidInput, "dec_to tails need a limit");
            const double limit = jl.get<double>();
            if (!inverted) {
                t = make_decreasing_to(limit, c);
            } else if (limit == 0.0) {
                t = make_reciprocal_affine(a, c);
            } else {
                t = TailDescriptor{TailKind::DecreasingTo, 1.0 / a, TailForm::LimitMinus, a, c, true};
                if (*t.limit != limit)
                    throw Error(ErrorCode::InvalidInput, "tail limit does not match its generator");
            }
        } else {
            throw Error(ErrorCode::InvalidInput, "unknown tail kind: " + kind);
        }
        s.tails.push_back(t);
    }
    return s;
}

nlohmann::json spectrum_to_json(const SpectrumSpec& s) {
    json j;
    j["positive"] = s.positive;
    j["atoms"] = json::array();
    for (const Atom& a : s.atoms) {
        json ja;
        ja["value"] = a.actual();
        if (a.infinite)
            ja["mult"] = "inf";
        else
            ja["mult"] = a.mult;
        j["atoms"].push_back(ja);
    }
    j["tails"] = json::array();
    for (const TailDescriptor& t : s.tails) {
        json jt;
        switch (t.kind) {
            case TailKind::IncreasingUnbounded: jt["kind"] = "inc_unbounded"; break;
            case TailKind::IncreasingTo: jt["kind"] = "inc_to"; break;
            case TailKind::DecreasingTo: jt["kind"] = "dec_to"; break;
        }
        if (t.limit)
            jt["limit"] = *t.limit;
        else
            jt["limit"] = nullptr;
        jt["a"] = (t.inverted || t.form == TailForm::Affine) ? t.p : 0.0;
        jt["c"] = t.c;
        jt["inverted"] = t.inverted;
        j["tails"].push_back(jt);
    }
    return j;
}

SpectrumSpec read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("bad JSON: ") + e.what());
    }
    return spectrum_from_json(j);
}

namespace {

CoefficientSpec coefficient_from_json(const json& j) {
    if (j.contains("const")) return CoefficientSpec{{j.at("const").get<double>()}};
    if (j.contains("poly")) {
        CoefficientSpec c;
        for (const json& v : j.at("poly")) c.poly.push_back(v.get<double>());
        if (c.poly.empty()) throw Error(ErrorCode::InvalidInput, "empty polynomial coefficient");
        return c;
    }
    throw Error(ErrorCode::InvalidInput, "coefficient must be {\"const\":r} or {\"poly\":[...]}");
}

} // namespace

SLProblem problem_from_json(const json& j) {
    const auto robin = [&](const char* key) {
        const json& r = j.at(key);
        if (!r.is_array() || r.size() != 2)
            throw Error(ErrorCode::InvalidInput, std::string(key) + " must be [beta, gamma]");
        return std::pair<double, double>{r[0].get<double>(), r[1].get<double>()};
    };
    const std::int64_t n = j.at("n").get<std::int64_t>();
    if (n < 16) throw Error(ErrorCode::InvalidInput, "grid must have at least 16 points");
    return make_problem(coefficient_from_json(j.at("p")), coefficient_from_json(j.at("q")),
                        coefficient_from_json(j.at("w")), j.at("a").get<double>(),
                        j.at("b").get<double>(), robin("robin_left"), robin("robin_right"),
                        std::size_t(n));
}

SLProblem read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("bad JSON: ") + e.what());
    }
    return problem_from_json(j);
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace minmod
