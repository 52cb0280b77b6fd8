// Pipelines and reporting. One analyze() call produces a machine report
// (ordered JSON, stable key order, exact fraction strings) and a human
// summary. Reports are byte-identical across reruns of the same
// (file, seed, version) triple.

#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lightlike/model_io.hpp"
#include "lightlike/version.hpp"

namespace lightlike {

namespace report_detail {

inline std::string rat_str(const Rational& r) { return r.to_string(); }

inline Json vec_json(const Vec<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

inline Json matrix_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
Json char_poly_json(const CharPoly<T>& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs) a.push_back(ScalarOps<T>::str(c));
    return a;
}

template <typename T>
Json osserman_json(const OssermanReport<T>& rep) {
    Json out = Json::object();
    out["verdict"] = rep.verdict;
    out["char_poly"] = char_poly_json(rep.reference);
    out["frame"] = rep.frame;
    out["seed"] = rep.seed;
    Json signs = Json::array();
    for (const auto& blk : rep.signs) {
        Json b = Json::object();
        b["sign"] = blk.sign;
        b["skipped"] = blk.skipped;
        if (!blk.skipped) {
            b["samples"] = blk.sample_count;
            b["agreed"] = blk.agreed;
            if (blk.mismatch_index) {
                b["mismatch_sample"] = *blk.mismatch_index;
                b["mismatch_char_poly"] = char_poly_json(blk.polys[*blk.mismatch_index]);
            }
        }
        signs.push_back(std::move(b));
    }
    out["signs"] = std::move(signs);
    return out;
}

inline Json frame_json(const AdaptedFrame<Rational>& f) {
    Json out = Json::object();
    out["descriptor"] = f.descriptor();
    out["radical_rank"] = f.radical_rank();
    Json rad = Json::array(), scr = Json::array(), etas = Json::array();
    for (std::size_t i = 0; i < f.radical_rank(); ++i) {
        rad.push_back(vec_json(f.radical_vector(i)));
        etas.push_back(vec_json(f.eta(i)));
    }
    for (std::size_t k = 0; k < f.screen_dim(); ++k) scr.push_back(vec_json(f.screen_vector(k)));
    out["radical"] = std::move(rad);
    out["screen"] = std::move(scr);
    out["eta"] = std::move(etas);
    return out;
}

inline Json symmetry_check_json(const SymmetryCheck& c) {
    Json out = Json::object();
    switch (c.status) {
        case SymmetryStatus::Unverified: out["status"] = "unverified"; break;
        case SymmetryStatus::Verified: out["status"] = "verified"; break;
        case SymmetryStatus::Violated: out["status"] = "violated"; break;
    }
    if (c.witness) {
        out["witness"] = {c.witness->index[0], c.witness->index[1], c.witness->index[2],
                          c.witness->index[3]};
        out["relation"] = c.witness->relation;
    }
    return out;
}

template <typename T>
Json einstein_json(const EinsteinResult<T>& e) {
    Json out = Json::object();
    if (e.lambda)
        out["lambda"] = ScalarOps<T>::str(*e.lambda);
    else
        out["lambda"] = nullptr;
    if (e.witness) out["witness"] = {e.witness->first, e.witness->second};
    return out;
}

inline OssermanOptions osserman_options(const RunOptions& opt) {
    OssermanOptions o;
    o.samples_per_sign = opt.samples;
    o.seed = opt.seed;
    return o;
}

// Osserman run in the requested arithmetic mode. Frames and oracles always
// stay exact; float mode only converts the sampling-based test itself.
inline Json run_osserman(const CurvatureTensor<Rational>& r, const DegenerateForm<Rational>& g,
                         const AdaptedFrame<Rational>& frame, const AssociatedMetric<Rational>& am,
                         const RunOptions& opt, bool* verdict_out = nullptr) {
    if (opt.mode == ArithmeticMode::Exact) {
        OssermanReport<Rational> rep = osserman_test(r, g, frame, am, osserman_options(opt));
        if (verdict_out) *verdict_out = rep.verdict;
        return osserman_json(rep);
    }
    CurvatureTensor<double> rd = to_double(r);
    AssociatedMetric<double> amd = to_double(am);
    OssermanReport<double> rep =
        osserman_test(rd, to_double(g.gram()), to_double(frame.basis_inverse()), amd,
                      osserman_options(opt), frame.descriptor());
    if (verdict_out) *verdict_out = rep.verdict;
    return osserman_json(rep);
}

inline Json gfh_point_report(const GfhModel& model, const RunOptions& opt) {
    Json out = Json::object();
    out["point"] = vec_json(model.point);

    DegenerateForm<Rational> g = metric_matrix(model);
    if (!(g.gram() == metric_matrix_embedding(model)))
        throw RouteMismatchError("gfh metric: coordinate Gram != embedding pullback");
    out["metric_oracle"] = "agree";
    out["radical_rank"] = g.radical_rank();
    out["classification"] = to_string(classify(model.dim(), 2, g.radical_rank()));

    AdaptedFrame<Rational> frame = adapted_frame(model, g);
    AssociatedMetric<Rational> am = associated_metric(g, frame);
    out["frame"] = frame_json(frame);

    CurvatureTensor<Rational> r = curvature(model);  // throws on route mismatch
    out["curvature_routes"] = "agree";
    out["symmetries"] = symmetry_check_json(r.symmetry());

    bool verdict = false;
    out["osserman"] = run_osserman(r, g, frame, am, opt, &verdict);

    Matrix<Rational> ric = ricci(r, frame, am);
    out["ricci_symmetric"] = ric.is_symmetric();
    out["einstein"] = einstein_json(einstein_check(ric, am.metric_frame));

    // trace identity spot checks on sampled unit-like directions
    bool trace_ok = true;
    DirectionSamples<Rational> dirs = sample_unit_directions(g.gram(), +1, 4, opt.seed ^ 0xabcdULL);
    for (const auto& [x, q] : dirs.samples) {
        Vec<Rational> xf = frame.to_frame(x);
        if (!(trace_identity_residual(r, frame, am, xf) == Rational(0))) trace_ok = false;
    }
    out["trace_identity_zero"] = trace_ok;
    return out;
}

inline Json hypersurface_json(const SymmetryReport& rep) {
    Json out = Json::object();
    out["m"] = rep.m;
    out["c"] = rep.c.to_string();
    out["totally_geodesic"] = rep.totally_geodesic;
    out["umbilical_rho"] = rep.umbilical_rho ? Json(rep.umbilical_rho->to_string()) : Json(nullptr);
    out["screen_umbilical_lambda"] =
        rep.screen_umbilical_lambda ? Json(rep.screen_umbilical_lambda->to_string()) : Json(nullptr);
    Json conf = Json::object();
    switch (rep.screen_conformal.status) {
        case ConformalStatus::Proportional: conf["status"] = "proportional"; break;
        case ConformalStatus::NotProportional: conf["status"] = "not-proportional"; break;
        case ConformalStatus::Indeterminate: conf["status"] = "indeterminate"; break;
    }
    if (rep.screen_conformal.phi) conf["phi"] = rep.screen_conformal.phi->to_string();
    if (rep.screen_conformal.witness)
        conf["witness"] = {rep.screen_conformal.witness->first, rep.screen_conformal.witness->second};
    out["screen_conformal"] = std::move(conf);
    out["osserman_constraint"] = rep.osserman_constraint;
    if (rep.osserman_constraint_witness) out["osserman_constraint_witness"] = *rep.osserman_constraint_witness;
    out["a_n_xi_nonnull"] = rep.a_n_xi_nonnull;
    out["einstein"] = einstein_json(rep.einstein);
    out["curvature_symmetries"] = symmetry_check_json(rep.curvature_symmetries);
    out["locally_symmetric"] = rep.locally_symmetric;
    if (rep.local_symmetry_witness) {
        const auto& w = *rep.local_symmetry_witness;
        out["local_symmetry_witness"] = {w[0], w[1], w[2]};
    }
    out["semi_symmetric"] = rep.semi_symmetric;
    if (rep.semi_symmetry_witness) {
        const auto& w = *rep.semi_symmetry_witness;
        out["semi_symmetry_witness"] = {w[0], w[1], w[2], w[3], w[4], w[5]};
    }
    out["ricci_semi_symmetric"] = rep.ricci_semi_symmetric;
    if (rep.ricci_semi_symmetry_witness) {
        const auto& w = *rep.ricci_semi_symmetry_witness;
        out["ricci_semi_symmetry_witness"] = {w[0], w[1], w[2], w[3]};
    }
    return out;
}

}  // namespace report_detail

struct RunReport {
    Json machine;
    std::string human;
};

inline std::string render_human(const Json& machine);

inline RunReport analyze(const ModelFile& mf) {
    using namespace report_detail;
    Json out = Json::object();
    out["toolkit"] = {{"name", toolkit_name}, {"version", toolkit_version}};
    out["kind"] = mf.kind;
    out["options"] = {{"samples", mf.options.samples},
                      {"seed", mf.options.seed},
                      {"mode", mf.options.mode == ArithmeticMode::Exact ? "exact" : "float"}};

    if (const auto* gin = std::get_if<GfhInput>(&mf.input)) {
        out["p"] = gin->model.p;
        Json pts = Json::array();
        for (const auto& point : gin->points) {
            GfhModel m = gin->model;
            m.point = point;
            pts.push_back(gfh_point_report(m, mf.options));
        }
        out["points"] = std::move(pts);
    } else if (const auto* hin = std::get_if<HypersurfaceInput>(&mf.input)) {
        const HypersurfacePoint& h = hin->data;
        out["classification"] = to_string(classify(h.dim(), 1, 1));
        out["radical_rank"] = 1;
        out["xi"] = vec_json(h.xi);
        out["eta"] = vec_json(h.eta);
        out["symmetry_report"] = hypersurface_json(symmetry_report(h));
    } else {
        const auto& rin = std::get<RawMetricInput>(mf.input);
        DegenerateForm<Rational> g(rin.gram);
        out["dim"] = g.dim();
        out["codim"] = rin.codim;
        out["radical_rank"] = g.radical_rank();
        out["classification"] = to_string(classify(g.dim(), rin.codim, g.radical_rank()));
        AdaptedFrame<Rational> frame = [&] {
            try {
                return build_adapted_frame(g, rin.codim, rin.frame);
            } catch (const std::invalid_argument& e) {
                throw ParseError("$.frame", e.what());
            }
        }();
        AssociatedMetric<Rational> am = associated_metric(g, frame);
        out["frame"] = frame_json(frame);
        out["g_tilde"] = {{"frame_gram", matrix_json(am.gram_tilde)},
                          {"inverse", matrix_json(am.inverse)}};
        if (rin.curvature) {
            if (rin.curvature->dim() != g.dim())
                throw ParseError("$.curvature", "dimension does not match the Gram matrix");
            CurvatureTensor<Rational> r = rin.curvature->transformed(frame.basis());
            SymmetryCheck chk = check_curvature_symmetries(r);
            out["symmetries"] = symmetry_check_json(chk);
            if (chk.status == SymmetryStatus::Verified) {
                bool verdict = false;
                out["osserman"] = run_osserman(r, g, frame, am, mf.options, &verdict);
            } else {
                out["osserman"] = {{"verdict", nullptr},
                                   {"skipped", "curvature tensor is not algebraic"}};
            }
        }
    }

    RunReport rep;
    rep.machine = std::move(out);
    rep.human = render_human(rep.machine);
    return rep;
}

inline std::string render_human(const Json& m) {
    std::ostringstream os;
    os << m["toolkit"]["name"].get<std::string>() << " "
       << m["toolkit"]["version"].get<std::string>() << " | kind=" << m["kind"].get<std::string>()
       << " | mode=" << m["options"]["mode"].get<std::string>()
       << " | seed=" << m["options"]["seed"] << "\n";
    auto yn = [](const Json& b) { return b.get<bool>() ? "yes" : "no"; };
    if (m["kind"] == "gfh") {
        os << "p=" << m["p"] << ", " << m["points"].size() << " point(s)\n";
        for (const auto& pt : m["points"]) {
            os << "- point " << pt["point"].dump() << "\n";
            os << "  classification: " << pt["classification"].get<std::string>()
               << " (radical rank " << pt["radical_rank"] << ")\n";
            os << "  metric embedding oracle: " << pt["metric_oracle"].get<std::string>()
               << "; curvature routes: " << pt["curvature_routes"].get<std::string>()
               << "; symmetries: " << pt["symmetries"]["status"].get<std::string>() << "\n";
            const auto& oss = pt["osserman"];
            os << "  osserman: " << (oss["verdict"].get<bool>() ? "true" : "false")
               << ", char poly coeffs " << oss["char_poly"].dump() << "\n";
            os << "  ricci symmetric: " << yn(pt["ricci_symmetric"])
               << "; trace identity: " << (pt["trace_identity_zero"].get<bool>() ? "0" : "NONZERO")
               << "; einstein lambda: " << pt["einstein"]["lambda"].dump() << "\n";
        }
    } else if (m["kind"] == "hypersurface") {
        const auto& r = m["symmetry_report"];
        os << "lightlike hypersurface, m=" << r["m"] << ", c=" << r["c"].get<std::string>()
           << ", classification " << m["classification"].get<std::string>() << "\n";
        os << "  totally geodesic: " << yn(r["totally_geodesic"])
           << "; umbilical rho: " << r["umbilical_rho"].dump()
           << "; screen umbilical lambda: " << r["screen_umbilical_lambda"].dump() << "\n";
        os << "  screen conformal: " << r["screen_conformal"]["status"].get<std::string>()
           << "; osserman constraint: " << yn(r["osserman_constraint"])
           << "; A_N xi non-null: " << yn(r["a_n_xi_nonnull"]) << "\n";
        os << "  einstein lambda: " << r["einstein"]["lambda"].dump()
           << "; curvature symmetries: "
           << r["curvature_symmetries"]["status"].get<std::string>() << "\n";
        os << "  locally symmetric: " << yn(r["locally_symmetric"])
           << "; semi-symmetric: " << yn(r["semi_symmetric"])
           << "; ricci semi-symmetric: " << yn(r["ricci_semi_symmetric"]) << "\n";
    } else {
        os << "raw metric, dim=" << m["dim"] << ", codim=" << m["codim"] << "\n";
        os << "  classification: " << m["classification"].get<std::string>() << " (radical rank "
           << m["radical_rank"] << ")\n";
        os << "  frame: " << m["frame"]["descriptor"].get<std::string>()
           << "; g~ frame Gram emitted\n";
        if (m.contains("symmetries"))
            os << "  symmetries: " << m["symmetries"]["status"].get<std::string>() << "\n";
        if (m.contains("osserman") && m["osserman"].contains("verdict") &&
            m["osserman"]["verdict"].is_boolean())
            os << "  osserman: " << (m["osserman"]["verdict"].get<bool>() ? "true" : "false")
               << "\n";
    }
    return os.str();
}

inline std::string serialize_report(const RunReport& rep) { return rep.machine.dump(2) + "\n"; }

}  // namespace lightlike
