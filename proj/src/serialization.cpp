#include "tsallisq/serialization.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace tsq {

std::string format_sig(double v, int digits) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

double round_sig(double v, int digits) {
    if (!std::isfinite(v)) return v;
    const std::string s = format_sig(v, digits);
    double out = v;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rrow.push_back(round_sig(m(i, j).real()));
            irow.push_back(round_sig(m(i, j).imag()));
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const json& j, const char* what) {
    if (!j.contains("re") || !j.contains("im"))
        throw validation_error(std::string(what) + " needs \"re\" and \"im\" blocks");
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (!re.is_array() || re.empty() || !re.front().is_array())
        throw validation_error(std::string(what) + ": \"re\" must be a nested array");
    const std::size_t rows = re.size(), cols = re.front().size();
    if (im.size() != rows)
        throw validation_error(std::string(what) + ": \"re\" and \"im\" shapes disagree");
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (re.at(i).size() != cols || im.at(i).size() != cols)
            throw validation_error(std::string(what) + ": ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                std::complex<double>(re.at(i).at(k).get<double>(), im.at(i).at(k).get<double>());
    }
    return m;
}

std::vector<double> vector_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw validation_error(std::string(what) + " must be a non-empty array");
    std::vector<double> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(e.get<double>());
    return v;
}

}  // namespace

json state_to_json(const BipartiteState& s) {
    json out = matrix_to_json(s.matrix());
    out["dA"] = s.dim_a();
    out["dB"] = s.dim_b();
    return out;
}

BipartiteState state_from_json(const json& j) {
    if (!j.contains("dA") || !j.contains("dB"))
        throw validation_error("state file needs \"dA\" and \"dB\"");
    const auto da = j.at("dA").get<Eigen::Index>();
    const auto db = j.at("dB").get<Eigen::Index>();
    Matrix m = matrix_from_json(j, "state file");
    return BipartiteState(da, db, DensityMatrix::validate(m));
}

json ensemble_to_json(const SeparableEnsemble& e) {
    json weights = json::array(), pa = json::array(), pb = json::array();
    for (double w : e.weights()) weights.push_back(round_sig(w));
    for (const auto& p : e.dists_a()) {
        json row = json::array();
        for (double v : p.probs()) row.push_back(round_sig(v));
        pa.push_back(std::move(row));
    }
    for (const auto& p : e.dists_b()) {
        json row = json::array();
        for (double v : p.probs()) row.push_back(round_sig(v));
        pb.push_back(std::move(row));
    }
    json out{{"dA", e.dim_a()},
             {"dB", e.dim_b()},
             {"weights", std::move(weights)},
             {"p_a", std::move(pa)},
             {"p_b", std::move(pb)}};
    const bool id_a = e.basis_a().isIdentity(0.0);
    const bool id_b = e.basis_b().isIdentity(0.0);
    if (!id_a) out["basis_a"] = matrix_to_json(e.basis_a());
    if (!id_b) out["basis_b"] = matrix_to_json(e.basis_b());
    return out;
}

SeparableEnsemble ensemble_from_json(const json& j) {
    for (const char* key : {"weights", "p_a", "p_b"})
        if (!j.contains(key))
            throw validation_error(std::string("ensemble file needs \"") + key + "\"");
    std::vector<double> weights = vector_from_json(j.at("weights"), "ensemble weights");
    auto dists = [](const json& arr, const char* what) {
        if (!arr.is_array() || arr.empty())
            throw validation_error(std::string(what) + " must be a non-empty array");
        std::vector<ProbDist> out;
        out.reserve(arr.size());
        for (const auto& row : arr) out.emplace_back(vector_from_json(row, what));
        return out;
    };
    std::vector<ProbDist> pa = dists(j.at("p_a"), "ensemble p_a");
    std::vector<ProbDist> pb = dists(j.at("p_b"), "ensemble p_b");
    if (j.contains("basis_a") || j.contains("basis_b")) {
        const Eigen::Index da = static_cast<Eigen::Index>(pa.front().size());
        const Eigen::Index db = static_cast<Eigen::Index>(pb.front().size());
        Matrix ua = j.contains("basis_a") ? matrix_from_json(j.at("basis_a"), "ensemble basis_a")
                                          : Matrix(Matrix::Identity(da, da));
        Matrix ub = j.contains("basis_b") ? matrix_from_json(j.at("basis_b"), "ensemble basis_b")
                                          : Matrix(Matrix::Identity(db, db));
        return SeparableEnsemble(std::move(weights), std::move(pa), std::move(pb), std::move(ua),
                                 std::move(ub));
    }
    return SeparableEnsemble(std::move(weights), std::move(pa), std::move(pb));
}

ProbDist dist_from_json(const json& j) {
    return ProbDist(vector_from_json(j, "probability distribution"));
}

JointDist joint_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw validation_error("joint distribution must be a non-empty nested array");
    std::vector<std::vector<double>> table;
    table.reserve(j.size());
    for (const auto& row : j) table.push_back(vector_from_json(row, "joint distribution row"));
    return JointDist(table);
}

json to_json(const ConditionalEntropyReport& r) {
    return json{{"q", round_sig(r.q)},
                {"value", round_sig(r.value)},
                {"conditioned_on", to_string(r.conditioned_on)},
                {"s_joint", round_sig(r.s_joint)},
                {"s_marginal", round_sig(r.s_marginal)}};
}

json to_json(const PptVerdict& v) {
    return json{{"min_eigenvalue", round_sig(v.min_eigenvalue)}, {"positive", v.positive}};
}

json to_json(const ThresholdPoint& p) {
    return json{{"q", round_sig(p.q)},
                {"x_star", round_sig(p.x_star)},
                {"solver_residual", round_sig(p.solver_residual)}};
}

json to_json(const CriterionTable& t) {
    return json{{"bell_bound", round_sig(t.bell_bound)},
                {"von_neumann_zero", round_sig(t.von_neumann_zero)},
                {"q_infinity_limit", round_sig(t.q_infinity_limit)},
                {"ppt_threshold", round_sig(t.ppt_threshold)}};
}

json to_json(const AxiomReport& r) {
    return json{{"axiom_id", to_string(r.id)},
                {"label", r.label},
                {"q", round_sig(r.q)},
                {"trials", r.trials},
                {"max_violation", round_sig(r.max_violation)},
                {"tolerance", round_sig(r.tolerance)},
                {"passed", r.passed}};
}

json to_json(const PositivitySummary& s) {
    json out{{"n_samples", s.n_samples},
             {"seed", s.seed},
             {"q_grid", json::array()},
             {"min_value", round_sig(s.min_value)},
             {"violations", s.violations}};
    for (double q : s.q_grid) out["q_grid"].push_back(round_sig(q));
    if (s.control_value) out["control_value"] = round_sig(*s.control_value);
    return out;
}

}  // namespace tsq
