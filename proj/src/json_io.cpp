#include "ucoh/json_io.hpp"

#include <fstream>

#include "ucoh/errors.hpp"

namespace ucoh {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Eigen::Index positive_int(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() <= 0) fail(std::string("field \"") + key + "\" must be a positive integer");
    return static_cast<Eigen::Index>(v.get<long long>());
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail("complex scalar must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

ComplexVector vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) fail("vector must be a nonempty array");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const Eigen::Index rows = positive_int(j, "rows");
    const Eigen::Index cols = positive_int(j, "cols");
    const json& data = field(j, "data");
    if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows) fail("matrix data must have \"rows\" rows");
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json& row = data[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail("matrix row has the wrong length");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

json symplectic_to_json(const SymplecticElement& r) {
    return {{"dim", r.dim()}, {"U", matrix_to_json(r.U())}, {"V", matrix_to_json(r.V())}};
}

SymplecticElement symplectic_from_json(const json& j, double tol) {
    const Eigen::Index d = positive_int(j, "dim");
    ComplexMatrix u = matrix_from_json(field(j, "U"));
    ComplexMatrix v = matrix_from_json(field(j, "V"));
    if (u.rows() != d || v.rows() != d) fail("symplectic: \"dim\" disagrees with the matrices");
    return make_symplectic(std::move(u), std::move(v), tol);
}

json point_to_json(const SiegelPoint& z) { return {{"dim", z.dim()}, {"Z", matrix_to_json(z.Z())}}; }

SiegelPoint point_from_json(const json& j) {
    const Eigen::Index d = positive_int(j, "dim");
    ComplexMatrix z = matrix_from_json(field(j, "Z"));
    if (z.rows() != d) fail("point: \"dim\" disagrees with Z");
    return make_point(std::move(z));
}

json state_to_json(const UltracoherentState& x) {
    return {{"dim", x.dim()},
            {"Z", matrix_to_json(x.Z())},
            {"f", vector_to_json(x.f)},
            {"log_amp", json::array({x.log_amp.re, x.log_amp.im})}};
}

UltracoherentState state_from_json(const json& j) {
    const Eigen::Index d = positive_int(j, "dim");
    ComplexMatrix z = matrix_from_json(field(j, "Z"));
    ComplexVector f = vector_from_json(field(j, "f"));
    if (z.rows() != d || f.size() != d) fail("state: \"dim\" disagrees with Z or f");
    LogComplex amp;
    if (j.contains("log_amp")) {
        const cplx l = complex_from_json(j.at("log_amp"));
        amp = {l.real(), l.imag()};
    }
    return make_state(make_point(std::move(z)), std::move(f), amp);
}

json takagi_to_json(const TakagiFactors& t) {
    return {{"F", matrix_to_json(t.F)}, {"alphas", std::vector<double>(t.alphas.data(), t.alphas.data() + t.alphas.size())}};
}

json tensor_to_json(const FockTensor& f) {
    json entries = json::array();
    const FockBasis& b = f.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        const cplx c = f.coeffs()(static_cast<Eigen::Index>(i));
        if (c == cplx{}) continue;
        const auto m = b.index(i);
        entries.push_back(json::array({std::vector<int>(m.begin(), m.end()), complex_to_json(c)}));
    }
    return {{"dim", f.dim()}, {"cutoff", f.cutoff()}, {"entries", std::move(entries)}};
}

RealVector spectrum_from_json(const json& j) {
    const json& arr = j.is_object() ? field(j, "m") : j;
    if (!arr.is_array() || arr.empty()) fail("spectrum must be a nonempty array");
    RealVector m(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) fail("spectrum entries must be numbers");
        m(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
        if (m(static_cast<Eigen::Index>(i)) < 0) fail("spectrum entries must be nonnegative");
    }
    return m;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path.string() + ": " + e.what());
    }
}

}  // namespace ucoh
