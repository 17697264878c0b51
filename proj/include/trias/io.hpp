#pragma once

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "algebra.hpp"
#include "version.hpp"

namespace trias {

using Json = nlohmann::ordered_json;

// ---- scalars ----
// Q(i) scalars serialize as ["re", "im"] with reduced rational component
// strings; F_p scalars as bare integers.

inline Json scalar_to_json(const GaussRat& c) { return Json::array({c.re.str(), c.im.str()}); }

inline Json scalar_to_json(const FpElem& c) { return Json(static_cast<long long>(c.v)); }

inline GaussRat qi_scalar_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2 || !j[0].is_string() || !j[1].is_string())
            throw InputError("Q(i) scalar must be a [\"re\", \"im\"] pair of rational strings");
        return GaussRat(Rational::parse(j[0].get<std::string>()),
                        Rational::parse(j[1].get<std::string>()));
    }
    if (j.is_string()) return GaussRat(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return GaussRat(static_cast<long>(j.get<long long>()));
    throw InputError("Q(i) scalar must be a string, integer, or [\"re\", \"im\"] pair");
}

inline FpElem fp_scalar_from_json(const Json& j, uint32_t p) {
    if (!j.is_number_integer()) throw InputError("F_p scalar must be a bare integer");
    return FpElem::of(static_cast<long>(j.get<long long>()), p);
}

// ---- field descriptor ----

inline Json field_to_json(const FieldDescriptor& fd) {
    Json j;
    if (fd.kind == FieldKind::Qi) {
        j["kind"] = "Qi";
    } else {
        j["kind"] = "Fp";
        j["p"] = fd.p;
    }
    return j;
}

inline FieldDescriptor field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("field must be an object with a \"kind\" of \"Qi\" or \"Fp\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "Qi") return FieldDescriptor::qi();
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw InputError("field of kind \"Fp\" needs an integer \"p\"");
        return FieldDescriptor::fp(static_cast<uint32_t>(j["p"].get<long long>()));
    }
    throw InputError("unknown field kind \"" + kind + "\"");
}

// ---- matrices ----

template <class K>
Json matrix_to_json(const Mat<K>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(scalar_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---- algebras ----

template <class K>
Json table_to_json(const StructureConstants<K>& sc, OpKind op) {
    Json ti = Json::array();
    for (size_t i = 0; i < sc.dim; ++i) {
        Json tj = Json::array();
        for (size_t j = 0; j < sc.dim; ++j) {
            Json tk = Json::array();
            for (size_t k = 0; k < sc.dim; ++k) tk.push_back(scalar_to_json(sc.c[(size_t)op][i][j][k]));
            tj.push_back(std::move(tk));
        }
        ti.push_back(std::move(tj));
    }
    return ti;
}

template <class K>
Json algebra_to_json(const Trialgebra<K>& A) {
    Json j;
    j["dim"] = A.dim();
    j["field"] = field_to_json(A.field());
    if (A.name) j["name"] = *A.name;
    if (A.provenance) {
        Json prov;
        prov["class"] = A.provenance->klass;
        Json params = Json::object();
        for (const auto& kv : A.provenance->params) params[kv.first] = kv.second;
        prov["params"] = std::move(params);
        j["provenance"] = std::move(prov);
    }
    Json ops;
    ops["vdash"] = table_to_json(A.constants, OpKind::Vdash);
    ops["dashv"] = table_to_json(A.constants, OpKind::Dashv);
    ops["perp"] = table_to_json(A.constants, OpKind::Perp);
    j["ops"] = std::move(ops);
    return j;
}

namespace detail_io {

template <class K, class ScalarFn>
void read_table(const Json& t, StructureConstants<K>& sc, OpKind op, size_t n,
                const std::string& opname, ScalarFn scalar) {
    if (!t.is_array() || t.size() != n)
        throw InputError("op \"" + opname + "\" must be a " + std::to_string(n) + "-row table");
    for (size_t i = 0; i < n; ++i) {
        if (!t[i].is_array() || t[i].size() != n)
            throw InputError("op \"" + opname + "\" row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
        for (size_t j = 0; j < n; ++j) {
            if (!t[i][j].is_array() || t[i][j].size() != n)
                throw InputError("op \"" + opname + "\" cell (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be a length-" + std::to_string(n) +
                                 " coefficient vector");
            for (size_t k = 0; k < n; ++k) sc.c[(size_t)op][i][j][k] = scalar(t[i][j][k]);
        }
    }
}

template <class K, class ScalarFn>
Trialgebra<K> algebra_from_json_impl(const Json& j, FieldDescriptor fd, const K& zero,
                                     ScalarFn scalar) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() ||
        j["dim"].get<long long>() < 1)
        throw InputError("algebra file needs a positive integer \"dim\"");
    size_t n = static_cast<size_t>(j["dim"].get<long long>());
    StructureConstants<K> sc(n, fd, zero);
    if (j.contains("ops")) {
        const Json& ops = j["ops"];
        if (!ops.is_object()) throw InputError("\"ops\" must be an object");
        for (auto it = ops.begin(); it != ops.end(); ++it) {
            OpKind op;
            if (it.key() == "vdash") op = OpKind::Vdash;
            else if (it.key() == "dashv") op = OpKind::Dashv;
            else if (it.key() == "perp") op = OpKind::Perp;
            else throw InputError("unknown op \"" + it.key() + "\" (expected vdash, dashv, perp)");
            read_table(it.value(), sc, op, n, it.key(), scalar);
        }
    }
    Trialgebra<K> A{std::nullopt, std::move(sc), std::nullopt};
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
        A.name = j["name"].get<std::string>();
    }
    if (j.contains("provenance")) {
        const Json& prov = j["provenance"];
        if (!prov.is_object() || !prov.contains("class") || !prov["class"].is_string())
            throw InputError("\"provenance\" must be an object with a \"class\" string");
        Provenance pv;
        pv.klass = prov["class"].get<std::string>();
        if (prov.contains("params")) {
            if (!prov["params"].is_object())
                throw InputError("\"provenance.params\" must be an object");
            for (auto it = prov["params"].begin(); it != prov["params"].end(); ++it) {
                if (!it.value().is_string())
                    throw InputError("provenance parameter \"" + it.key() + "\" must be a string");
                pv.params[it.key()] = it.value().get<std::string>();
            }
        }
        A.provenance = std::move(pv);
    }
    return A;
}

}  // namespace detail_io

inline FieldDescriptor algebra_field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field"))
        throw InputError("algebra file needs a \"field\" object");
    return field_from_json(j["field"]);
}

inline Trialgebra<GaussRat> qi_algebra_from_json(const Json& j) {
    return detail_io::algebra_from_json_impl<GaussRat>(
        j, FieldDescriptor::qi(), GaussRat(),
        [](const Json& s) { return qi_scalar_from_json(s); });
}

inline Trialgebra<FpElem> fp_algebra_from_json(const Json& j, uint32_t p) {
    return detail_io::algebra_from_json_impl<FpElem>(
        j, FieldDescriptor::fp(p), FpElem::of(0, p),
        [p](const Json& s) { return fp_scalar_from_json(s, p); });
}

// ---- files ----

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

// ---- report envelope ----

inline std::string iso8601_utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline Json report_envelope(const std::string& command, Json payload, Json findings,
                            int exit_code) {
    Json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["timestamp"] = iso8601_utc_now();
    j["payload"] = std::move(payload);
    j["findings"] = std::move(findings);
    j["exit"] = exit_code;
    return j;
}

}  // namespace trias
