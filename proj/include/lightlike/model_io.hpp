// JSON model files: schema validation with field paths in every error.
// Rationals are exact throughout: either a plain integer or {"num": n,
// "den": d}. See docs/formats.md for the grammar.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lightlike/curvature.hpp"
#include "lightlike/degenerate.hpp"
#include "lightlike/gfh.hpp"
#include "lightlike/hypersurface.hpp"
#include "lightlike/polynomial.hpp"

namespace lightlike {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

enum class ArithmeticMode { Exact, Float };

struct RunOptions {
    std::size_t samples = 64;
    std::uint64_t seed = 0x0dde5ca1eULL;
    ArithmeticMode mode = ArithmeticMode::Exact;
};

struct GfhInput {
    GfhModel model;                  // point field unused; see points
    std::vector<Vec<Rational>> points;
};

struct HypersurfaceInput {
    HypersurfacePoint data;
};

struct RawMetricInput {
    Matrix<Rational> gram;
    std::size_t codim = 1;
    std::optional<FrameHint<Rational>> frame;
    std::optional<CurvatureTensor<Rational>> curvature;  // working-basis components
};

struct ModelFile {
    std::string kind;
    std::variant<GfhInput, HypersurfaceInput, RawMetricInput> input;
    RunOptions options;
};

namespace io_detail {

inline const Json& expect(const Json& j, const std::string& path, const char* key) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing required field");
    return *it;
}

inline Rational parse_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_object()) {
        const Json& num = expect(j, path, "num");
        const Json& den = expect(j, path, "den");
        if (!num.is_number_integer()) throw ParseError(path + ".num", "expected an integer");
        if (!den.is_number_integer()) throw ParseError(path + ".den", "expected an integer");
        long long d = den.get<long long>();
        if (d == 0) throw ParseError(path + ".den", "denominator must be nonzero");
        return Rational(num.get<long long>(), d);
    }
    throw ParseError(path, "expected an integer or {num, den}");
}

inline Vec<Rational> parse_vector(const Json& j, const std::string& path, std::size_t len) {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    if (j.size() != len)
        throw ParseError(path, "expected " + std::to_string(len) + " entries, got " +
                                   std::to_string(j.size()));
    Vec<Rational> v(len);
    for (std::size_t i = 0; i < len; ++i)
        v[i] = parse_rational(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

inline Matrix<Rational> parse_matrix(const Json& j, const std::string& path, std::size_t rows,
                                     std::size_t cols) {
    if (!j.is_array()) throw ParseError(path, "expected an array of rows");
    if (j.size() != rows)
        throw ParseError(path, "expected " + std::to_string(rows) + " rows, got " +
                                   std::to_string(j.size()));
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec<Rational> row = parse_vector(j[i], path + "[" + std::to_string(i) + "]", cols);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
    }
    return m;
}

inline Polynomial parse_polynomial(const Json& j, const std::string& path, std::size_t p) {
    if (!j.is_array()) throw ParseError(path, "expected an array of monomial terms");
    Polynomial poly(p);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string tp = path + "[" + std::to_string(t) + "]";
        const Json& term = j[t];
        if (!term.is_object()) throw ParseError(tp, "expected {exponents, num, den}");
        const Json& ej = expect(term, tp, "exponents");
        if (!ej.is_array() || ej.size() != p)
            throw ParseError(tp + ".exponents", "expected " + std::to_string(p) + " exponents");
        Polynomial::Exponents e(p);
        for (std::size_t i = 0; i < p; ++i) {
            if (!ej[i].is_number_integer() || ej[i].get<long long>() < 0)
                throw ParseError(tp + ".exponents[" + std::to_string(i) + "]",
                                 "expected a nonnegative integer");
            e[i] = (std::uint32_t)ej[i].get<long long>();
        }
        poly.add_term(std::move(e), parse_rational(term, tp));
    }
    return poly;
}

inline std::size_t parse_count(const Json& j, const std::string& path, long long lo,
                               long long hi) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    long long v = j.get<long long>();
    if (v < lo || v > hi)
        throw ParseError(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) +
                                   ", " + std::to_string(hi) + "]");
    return (std::size_t)v;
}

inline RunOptions parse_options(const Json& j, const std::string& path) {
    RunOptions opt;
    if (j.is_null()) return opt;
    if (!j.is_object()) throw ParseError(path, "expected an object");
    if (j.contains("samples")) opt.samples = parse_count(j["samples"], path + ".samples", 1, 100000);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
            throw ParseError(path + ".seed", "expected an integer");
        opt.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("mode")) {
        std::string m = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
        if (m == "exact")
            opt.mode = ArithmeticMode::Exact;
        else if (m == "float")
            opt.mode = ArithmeticMode::Float;
        else
            throw ParseError(path + ".mode", "expected \"exact\" or \"float\"");
    }
    return opt;
}

}  // namespace io_detail

inline ModelFile parse_model_file(const Json& j) {
    using namespace io_detail;
    ModelFile out;
    const Json& kind = expect(j, "$", "kind");
    if (!kind.is_string()) throw ParseError("$.kind", "expected a string");
    out.kind = kind.get<std::string>();
    out.options = parse_options(j.contains("options") ? j["options"] : Json(), "$.options");

    if (out.kind == "gfh") {
        GfhInput in;
        std::size_t p = parse_count(expect(j, "$", "p"), "$.p", 1, 16);
        Polynomial f = parse_polynomial(expect(j, "$", "f"), "$.f", p);
        Polynomial h = parse_polynomial(expect(j, "$", "h"), "$.h", p);
        const Json& pts = expect(j, "$", "points");
        if (!pts.is_array() || pts.empty()) throw ParseError("$.points", "expected a nonempty array");
        for (std::size_t k = 0; k < pts.size(); ++k)
            in.points.push_back(
                parse_vector(pts[k], "$.points[" + std::to_string(k) + "]", 2 * p + 2));
        in.model = make_gfh(p, std::move(f), std::move(h), in.points.front());
        out.input = std::move(in);
    } else if (out.kind == "hypersurface") {
        HypersurfaceInput in;
        std::size_t m = parse_count(expect(j, "$", "m"), "$.m", 1, 6);
        in.data.m = m;
        in.data.c = parse_rational(expect(j, "$", "c"), "$.c");
        in.data.g = parse_matrix(expect(j, "$", "g"), "$.g", m + 1, m + 1);
        in.data.B = parse_matrix(expect(j, "$", "B"), "$.B", m + 1, m + 1);
        in.data.A = parse_matrix(expect(j, "$", "A_N"), "$.A_N", m + 1, m + 1);
        if (!in.data.g.is_symmetric()) throw ParseError("$.g", "must be symmetric");
        auto radical = null_space(in.data.g);
        if (radical.size() != 1)
            throw ParseError("$.g", "must have radical rank exactly 1, got " +
                                        std::to_string(radical.size()));
        if (j.contains("xi"))
            in.data.xi = parse_vector(j["xi"], "$.xi", m + 1);
        else
            in.data.xi = radical.front();
        if (j.contains("eta")) {
            in.data.eta = parse_vector(j["eta"], "$.eta", m + 1);
        } else {
            // default eta: dual covector of xi over the greedy screen
            DegenerateForm<Rational> g(in.data.g);
            FrameHint<Rational> hint;
            hint.radical = {in.data.xi};
            AdaptedFrame<Rational> probe = build_adapted_frame(g, 1);
            for (std::size_t k = 0; k < probe.screen_dim(); ++k)
                hint.screen.push_back(probe.screen_vector(k));
            AdaptedFrame<Rational> frame =
                build_adapted_frame(g, 1, std::optional<FrameHint<Rational>>(hint));
            in.data.eta = frame.eta(0);
        }
        try {
            in.data.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError("$", e.what());
        }
        out.input = std::move(in);
    } else if (out.kind == "raw-metric") {
        RawMetricInput in;
        const Json& gj = expect(j, "$", "gram");
        if (!gj.is_array() || gj.empty()) throw ParseError("$.gram", "expected a nonempty array");
        std::size_t dim = gj.size();
        in.gram = parse_matrix(gj, "$.gram", dim, dim);
        if (!in.gram.is_symmetric()) throw ParseError("$.gram", "must be symmetric");
        if (j.contains("codim")) in.codim = parse_count(j["codim"], "$.codim", 1, 64);
        if (j.contains("frame")) {
            const Json& fj = j["frame"];
            FrameHint<Rational> hint;
            const Json& rad = expect(fj, "$.frame", "radical");
            if (!rad.is_array()) throw ParseError("$.frame.radical", "expected an array");
            for (std::size_t k = 0; k < rad.size(); ++k)
                hint.radical.push_back(
                    parse_vector(rad[k], "$.frame.radical[" + std::to_string(k) + "]", dim));
            const Json& scr = expect(fj, "$.frame", "screen");
            if (!scr.is_array()) throw ParseError("$.frame.screen", "expected an array");
            for (std::size_t k = 0; k < scr.size(); ++k)
                hint.screen.push_back(
                    parse_vector(scr[k], "$.frame.screen[" + std::to_string(k) + "]", dim));
            if (fj.contains("eta")) {
                std::vector<Vec<Rational>> etas;
                const Json& ej = fj["eta"];
                if (!ej.is_array()) throw ParseError("$.frame.eta", "expected an array");
                for (std::size_t k = 0; k < ej.size(); ++k)
                    etas.push_back(
                        parse_vector(ej[k], "$.frame.eta[" + std::to_string(k) + "]", dim));
                hint.etas = std::move(etas);
            }
            in.frame = std::move(hint);
        }
        if (j.contains("curvature")) {
            const Json& cj = j["curvature"];
            CurvatureTensor<Rational> r(dim);
            auto idx_path = [](const std::string& base, std::size_t i) {
                return base + "[" + std::to_string(i) + "]";
            };
            if (!cj.is_array() || cj.size() != dim)
                throw ParseError("$.curvature", "expected " + std::to_string(dim) + " blocks");
            for (std::size_t a = 0; a < dim; ++a) {
                const Json& ja = cj[a];
                std::string pa = idx_path("$.curvature", a);
                if (!ja.is_array() || ja.size() != dim) throw ParseError(pa, "bad arity");
                for (std::size_t b = 0; b < dim; ++b) {
                    const Json& jb = ja[b];
                    std::string pb = idx_path(pa, b);
                    if (!jb.is_array() || jb.size() != dim) throw ParseError(pb, "bad arity");
                    for (std::size_t c = 0; c < dim; ++c) {
                        const Json& jc = jb[c];
                        std::string pc = idx_path(pb, c);
                        if (!jc.is_array() || jc.size() != dim) throw ParseError(pc, "bad arity");
                        for (std::size_t d = 0; d < dim; ++d)
                            r.at(a, b, c, d) = parse_rational(jc[d], idx_path(pc, d));
                    }
                }
            }
            in.curvature = std::move(r);
        }
        out.input = std::move(in);
    } else {
        throw ParseError("$.kind", "expected \"gfh\", \"hypersurface\" or \"raw-metric\"");
    }
    return out;
}

inline ModelFile parse_model_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("$", std::string("not valid JSON: ") + e.what());
    }
    return parse_model_file(j);
}

}  // namespace lightlike
